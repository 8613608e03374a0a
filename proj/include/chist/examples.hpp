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

/// The two-dimensional two-time example: initial state |s_z=+1/2>, final
/// property onto |s_x=+1/2>, and the two intermediate choices that make the
/// set consistent (m = i, respectively m = f).
struct GriffithsPair {
    HistoryFramework s_i;  // intermediate state = initial state
    HistoryFramework s_f;  // intermediate state = final state
};

GriffithsPair griffiths_frameworks();

/// The spin-1 construction: a pair of unit vectors (n, m) tied together by
/// m = (a n_x, a n_y, -b n_z) with a, b positive reals on the solution curve
/// n_z^2 = (b^2 - 1) / (b^2 (b^2 + 3)).
struct Spin1FamilyParams {
    UnitVector3 n, m;
    double a = 0.0, b = 0.0;
    double b_sq = 0.0;
    double alpha = 0.0;  // P(P^1_1) = (1 - b^2 n_z^2) / 2
    double beta = 0.0;   // P(P^2_1) = n_z^2
    double gamma = 0.0;  // beta / alpha
};

/// The two admissible b^2 values for a given n_z^2 in (0, 1/9).
struct BRoots {
    double b_sq_minus = 0.0;
    double b_sq_plus = 0.0;
};

/// Solves n_z^2 b^4 + (3 n_z^2 - 1) b^2 + 1 = 0. Throws DomainError outside
/// the open interval (0, 1/9); the boundary 1/9 is a double root and is
/// rejected too.
BRoots solve_b_squared(double nz_sq);

enum class Root { Minus, Plus };

struct Spin1Family {
    HistoryFramework s_plus;   // intermediate state m_+
    HistoryFramework s_minus;  // intermediate state m_-
    Spin1FamilyParams params;
    // Raw (non-normalized) closed-form vectors, middle component 1.
    StateVector f, m_plus, m_minus;
};

/// Builds the pair of consistent frameworks for the given n_z^2, root choice
/// and azimuth of n. n_z is taken positive.
Spin1Family spin1_family(double nz_sq, Root root, double azimuth = 0.0);

/// Demonstration that the excluded parameter limits (b = 1, n_z = 0 and
/// b -> inf, b n_z -> 1) kill the probability of the final property, making
/// the retrodiction conditional undefined. Uses n_z = 1e-8 surrogates.
struct ExcludedChoiceDemo {
    std::string description;
    double nz = 0.0;
    double b_sq = 0.0;
    double p_final = 0.0;            // P(P^2_1)
    bool conditional_defined = true; // conditioning on P^2_1
};

std::vector<ExcludedChoiceDemo> excluded_choices_report();

}  // namespace chist
