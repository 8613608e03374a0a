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

#include <string>
#include <vector>

#include "chist/histories.hpp"

namespace chist {

/// An earlier property inferred with probability 1 from a later one.
struct CertainRetrodiction {
    std::string framework_label;
    Event given;     // ascertained event (final step)
    Event inferred;  // earlier event, conditional probability ~ 1
    double probability = 0.0;
};

enum class PairKind {
    Identical,
    Compatible,                 // commuting, distinct, non-orthogonal
    Incompatible,               // non-commuting (non-orthogonal subspaces)
    Contradictory,              // orthogonal subspaces
    ExhaustivelyContradictory,  // orthogonal and jointly exhaustive
};

const char* to_string(PairKind k);

struct PairClassification {
    PairKind kind = PairKind::Compatible;
    double overlap_norm = 0.0;     // ||Q_A Q_B||_F
    double commutator_norm = 0.0;  // ||[Q_A, Q_B]||_F
};

/// Classify two property projectors by the Frobenius norms of their product,
/// difference, commutator and co-complement.
PairClassification classify_pair(const Projector& qa, const Projector& qb,
                                 double tol = 1e-9);

/// All (final-step given, earlier inferred) pairs whose conditional
/// probability is >= 1 - tol_certain. Requires a consistent framework.
std::vector<CertainRetrodiction> find_certain_retrodictions(const HistoryFramework& fw,
                                                            double tol_certain = 1e-9);

struct ClassifiedPair {
    std::size_t framework_a = 0, framework_b = 0;  // indices into the input list
    CertainRetrodiction retro_a, retro_b;
    PairClassification classification;
};

/// Certain retrodictions of several frameworks at one shared ascertained
/// event, with every cross pair of inferred properties classified.
struct RetrodictionReport {
    Event shared_given;
    std::vector<std::vector<CertainRetrodiction>> per_framework;
    std::vector<ClassifiedPair> pairs;
};

/// Frameworks must share the initial state (up to phase) and the projector at
/// the shared given event, and must all be consistent.
RetrodictionReport cross_framework_report(const std::vector<HistoryFramework>& fws,
                                          Event shared_given, double tol = 1e-9);

}  // namespace chist
