// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The stoplemma Authors

// stoplemma: stop-lemma induction toolkit for Hindi corpora.
//
//   stoplemma freq     --corpus ID=DIR ... --lexicon LEX --out DIR
//   stoplemma induce   --corpus ID=DIR ... --stoplist FILE ... --lexicon LEX --out DIR
//   stoplemma overlap  (--corpus ID=DIR | --ranked ID=FILE) ... --k 10 --out DIR
//   stoplemma posstats (--corpus ID=DIR | --ranked ID=FILE) ... --pos-lexicon FILE --out DIR
//   stoplemma assess   --mapping FILE --stop-lemmas FILE --lexicon LEX --out DIR
//
// Exit codes: 0 success, 1 input/validation error, 2 computation error.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "stoplemma/pipeline.hpp"

namespace {

using stoplemma::cli::RunConfig;

constexpr int kExitInput = 1;
constexpr int kExitComputation = 2;

std::pair<std::string, std::string> split_assignment(const std::string& spec,
                                                     const std::string& flag) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size()) {
    throw stoplemma::InputError(flag + " expects ID=VALUE, got '" + spec + "'");
  }
  return {spec.substr(0, eq), spec.substr(eq + 1)};
}

std::size_t parse_k(const std::string& text, const std::string& flag) {
  if (text == "all" || text == "inf") return stoplemma::kAllItems;
  try {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used != text.size() || v < 1) throw std::invalid_argument(text);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw stoplemma::InputError(flag + " expects a positive integer or 'all', got '" + text + "'");
  }
}

struct RawOptions {
  std::vector<std::string> corpus, domain, corpus_lexicon, ranked;
  std::string k_a = "100", k_b = "100", k = "10", depth = "all";
  std::string item = "lemma", rank_variable = "rank";
  std::vector<std::string> formats = {"tsv", "json"};
  bool keep_symbols = false, keep_latin_words = false, keep_latin_numbers = false;
};

void resolve(const RawOptions& raw, RunConfig& cfg) {
  std::map<std::string, std::string> domains, lexicons;
  for (const auto& d : raw.domain) domains.insert(split_assignment(d, "--domain"));
  for (const auto& l : raw.corpus_lexicon) lexicons.insert(split_assignment(l, "--corpus-lexicon"));
  for (const auto& c : raw.corpus) {
    auto [id, path] = split_assignment(c, "--corpus");
    stoplemma::cli::CorpusSpec spec{id, path, "", ""};
    if (auto it = domains.find(id); it != domains.end()) spec.domain_label = it->second;
    if (auto it = lexicons.find(id); it != lexicons.end()) spec.lexicon_path = it->second;
    cfg.corpora.push_back(std::move(spec));
  }
  for (const auto& r : raw.ranked) {
    auto [id, path] = split_assignment(r, "--ranked");
    cfg.ranked.push_back({id, path});
  }
  cfg.k_a = parse_k(raw.k_a, "--k-a");
  cfg.k_b = parse_k(raw.k_b, "--k-b");
  cfg.k_overlap = parse_k(raw.k, "--k");
  cfg.depth = parse_k(raw.depth, "--depth");
  cfg.item_kind = raw.item == "word" ? stoplemma::ItemKind::word : stoplemma::ItemKind::lemma;
  cfg.rank_variable = raw.rank_variable == "frequency" ? stoplemma::RankVariable::frequency
                                                       : stoplemma::RankVariable::rank;
  cfg.policy.drop_symbols = !raw.keep_symbols;
  cfg.policy.drop_latin_words = !raw.keep_latin_words;
  cfg.policy.drop_latin_numbers = !raw.keep_latin_numbers;
  cfg.write_tsv = cfg.write_json = false;
  for (const auto& f : raw.formats) {
    if (f == "tsv") cfg.write_tsv = true;
    if (f == "json") cfg.write_json = true;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stop-lemma induction toolkit for Hindi (Devanagari) corpora"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from a config file; command-line flags win");

  RunConfig cfg;
  RawOptions raw;
  std::string out_dir;

  app.add_option("--corpus", raw.corpus, "Corpus directory of .txt files, as ID=DIR (repeatable)");
  app.add_option("--domain", raw.domain, "Domain label for a corpus, as ID=LABEL");
  app.add_option("--corpus-lexicon", raw.corpus_lexicon,
                 "Per-corpus lemma lexicon, as ID=FILE (overrides --lexicon)");
  app.add_option("--lexicon", cfg.lexicon_path,
                 "Lemma lexicon TSV (surface<TAB>lemma); without it words are their own lemmas");
  app.add_option("--stoplist", cfg.stoplists, "Public stop word list file (repeatable)");
  app.add_option("--ranked", raw.ranked,
                 "Precomputed ranking (item or item<TAB>count per line), as ID=FILE");
  app.add_option("--pos-lexicon", cfg.pos_lexicon_path, "POS lexicon TSV (item<TAB>tag)");
  app.add_option("--mapping", cfg.mapping_path, "Translation mapping TSV for assess");
  app.add_option("--stop-lemmas", cfg.stop_lemmas_path, "Stop-lemma list to assess");
  app.add_option("--k-a", raw.k_a, "Top entries taken from each stop word list")->capture_default_str();
  app.add_option("--k-b", raw.k_b, "Top lemmas taken from each corpus ('all' for every lemma)")
      ->capture_default_str();
  app.add_option("--k", raw.k, "Top-k depth for overlap")->capture_default_str();
  app.add_option("--depth", raw.depth, "Ranks analysed per source in posstats")
      ->capture_default_str();
  app.add_option("--item", raw.item, "Ranking unit for corpus sources")
      ->check(CLI::IsMember({"word", "lemma"}))
      ->capture_default_str();
  app.add_option("--rank-variable", raw.rank_variable, "Correlate against rank or raw frequency")
      ->check(CLI::IsMember({"rank", "frequency"}))
      ->capture_default_str();
  app.add_option("--threshold", cfg.threshold, "|mean r| above which POS is deemed related")
      ->capture_default_str();
  app.add_flag("--keep-symbols", raw.keep_symbols, "Keep punctuation and symbol tokens");
  app.add_flag("--keep-latin-words", raw.keep_latin_words, "Keep Latin-script word tokens");
  app.add_flag("--keep-latin-numbers", raw.keep_latin_numbers, "Keep Latin-digit numbers");
  app.add_flag("--drop-devanagari-digits", cfg.policy.drop_devanagari_digits,
               "Drop Devanagari-digit numbers");
  app.add_flag("--warn-oov", cfg.warn_oov, "Report lexicon out-of-vocabulary rates");
  app.add_option("--format", raw.formats, "Output formats")
      ->check(CLI::IsMember({"tsv", "json"}))
      ->capture_default_str();
  app.add_option("--threads", cfg.threads, "Counting threads (0 = all cores)")
      ->capture_default_str();
  app.add_option("--out", out_dir, "Output directory");

  using Command = stoplemma::cli::Outputs (*)(const RunConfig&);
  const std::vector<std::tuple<std::string, std::string, Command>> commands = {
      {"freq", "Word and lemma frequency tables plus per-corpus statistics",
       stoplemma::cli::cmd_freq},
      {"induce", "Induce the stop-lemma list (Set A intersect Set B)", stoplemma::cli::cmd_induce},
      {"overlap", "Top-k overlap counts across sources", stoplemma::cli::cmd_overlap},
      {"posstats", "Point-biserial correlation of POS groups with rank",
       stoplemma::cli::cmd_posstats},
      {"assess", "Coverage of a translated external stop word list", stoplemma::cli::cmd_assess},
  };
  std::map<CLI::App*, Command> dispatch;
  for (const auto& [name, help, fn] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    dispatch[sub] = fn;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitInput;
  }

  try {
    resolve(raw, cfg);
    cfg.output_dir = out_dir;
    if (out_dir.empty()) throw stoplemma::InputError("--out is required");
    Command fn = nullptr;
    for (const auto& [sub, f] : dispatch) {
      if (sub->parsed()) fn = f;
    }
    const stoplemma::cli::Outputs outputs = fn(cfg);
    stoplemma::cli::write_outputs(cfg.output_dir, outputs);
    for (const auto& note : outputs.notes) std::cout << note << '\n';
    for (const auto& [name, _] : outputs.files) {
      std::cout << "wrote " << (cfg.output_dir / name).string() << '\n';
    }
    return 0;
  } catch (const stoplemma::ComputationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitComputation;
  } catch (const stoplemma::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitComputation;
  }
}
