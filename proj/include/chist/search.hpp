// Copyright 2026 The chist authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>

#include "chist/retrodiction.hpp"

namespace chist {

struct SearchConfig {
    std::size_t dim = 3;
    std::size_t trials = 1000;
    std::uint64_t seed = 0;
    double min_final_prob = 1e-6;
    double tol = 1e-10;
};

/// A verified instance of contradictory certain retrodictions: two consistent
/// two-time frameworks over the same |i> and final property whose certainly
/// retrodicted intermediate properties are orthogonal.
struct FoundInstance {
    StateVector i, f, m_a, m_b;
    ConsistencyReport consistency_a, consistency_b;
    double conditional_a = 0.0, conditional_b = 0.0;  // P(P^1_1 | P^2_1)
    PairClassification classification;
};

/// A trial either yields a verified instance or names why it was rejected.
using TrialOutcome = std::variant<FoundInstance, std::string>;

/// One deterministic trial: |i>, |m_a> _|_ |m_b> are drawn from the stream
/// keyed by (seed, trial_index); |f> is then sampled in the subspace that
/// makes both frameworks decohere by construction, and the full verification
/// pipeline (consistency, certainty, contradictoriness) is run.
TrialOutcome sample_instance(const SearchConfig& cfg, std::size_t trial_index);

struct SearchSummary {
    SearchConfig config;
    std::size_t found = 0;
    std::map<std::string, std::size_t> rejected_by_reason;
    std::optional<FoundInstance> first_instance;
};

/// Runs all trials. Deterministic given the config; trial streams are
/// independent so evaluation order cannot change the summary.
SearchSummary run_search(const SearchConfig& cfg);

}  // namespace chist
