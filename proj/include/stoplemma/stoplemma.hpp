// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The stoplemma Authors

#pragma once

#include "stoplemma/assess.hpp"
#include "stoplemma/corpus.hpp"
#include "stoplemma/error.hpp"
#include "stoplemma/freq.hpp"
#include "stoplemma/induce.hpp"
#include "stoplemma/lemma.hpp"
#include "stoplemma/normalize.hpp"
#include "stoplemma/report.hpp"
#include "stoplemma/stats.hpp"
#include "stoplemma/text_io.hpp"
