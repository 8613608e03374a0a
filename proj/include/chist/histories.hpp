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
#include <optional>
#include <string>
#include <vector>

#include "chist/hilbert.hpp"

namespace chist {

/// Initial state plus one projective decomposition per time step.
/// Times are ordinal; inter-step unitaries default to the identity.
struct HistoryFramework {
    StateVector initial;             // normalized on construction
    std::vector<Decomposition> steps;
    std::vector<CMatrix> evolutions;  // empty, or one per step
    std::string label;

    std::size_t dim() const { return initial.dim(); }
    std::size_t num_steps() const { return steps.size(); }
};

HistoryFramework make_framework(StateVector initial,
                                std::vector<Decomposition> steps,
                                std::vector<CMatrix> evolutions = {},
                                std::string label = "");

/// One history: the projector index chosen at each step.
using HistoryPath = std::vector<int>;

struct DecoherenceMatrix {
    CMatrix entries;                 // indexed by path pairs
    std::vector<HistoryPath> paths;  // lexicographic enumeration order
};

struct ConsistencyReport {
    bool consistent = false;        // medium decoherence verdict
    bool weakly_consistent = false; // real parts only
    double max_offdiag = 0.0;
    double max_offdiag_real = 0.0;
    HistoryPath worst_a, worst_b;   // witness pair for max_offdiag
};

struct TreeNode {
    HistoryPath prefix;
    double probability = 0.0;       // marginal of this prefix
    double conditional = 0.0;       // given the parent prefix
    bool conditional_defined = true;
};

struct ProbabilityTree {
    std::vector<std::vector<TreeNode>> levels;  // levels[t]: all prefixes of length t+1

    const TreeNode& node(const HistoryPath& prefix) const;
};

struct Event {
    int step = 0;
    int branch = 0;
    friend bool operator==(const Event&, const Event&) = default;
};

/// Number of histories (product of branch counts); > 4096 is rejected upstream.
std::size_t path_count(const HistoryFramework& fw);

std::vector<HistoryPath> enumerate_paths(const HistoryFramework& fw);

/// C_alpha |i> : evolution then chosen projector, applied in time order.
CVector chain_vector(const HistoryFramework& fw, const HistoryPath& path);

/// D(alpha, alpha') = <chain(alpha'), chain(alpha)>. Hermitian, unit trace.
DecoherenceMatrix decoherence_matrix(const HistoryFramework& fw);

/// Medium decoherence: every off-diagonal entry of D below
/// tol * max(1, ||D||_F). The weak (real-part) verdict rides along.
ConsistencyReport check_consistency(const HistoryFramework& fw, double tol = 1e-10);

/// Branch and conditional probabilities per step; requires consistency.
/// Conditionals under a parent with probability < 1e-12 are marked undefined.
ProbabilityTree probability_tree(const HistoryFramework& fw, double tol = 1e-10);

/// P(target | given) by marginalizing branch probabilities over paths.
/// Supports retrodiction (target before given) and prediction alike.
/// Throws UndefinedConditional when P(given) is numerically zero and
/// InconsistencyError when the framework fails the consistency check.
double conditional_probability(const HistoryFramework& fw, Event given, Event target,
                               double tol = 1e-10);

/// P(event) by marginalization. Does not require consistency (used to report
/// vanishing branch probabilities for excluded parameter limits).
double event_probability(const HistoryFramework& fw, Event event);

}  // namespace chist
