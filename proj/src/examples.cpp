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

#include "chist/examples.hpp"

#include <cmath>
#include <utility>

namespace chist {

GriffithsPair griffiths_frameworks() {
    const StateVector zplus = spin_half_eigenstate(make_unit_vector(0, 0, 1), +1);
    const StateVector xplus = spin_half_eigenstate(make_unit_vector(1, 0, 0), +1);

    StateVector i = make_state(zplus.v, "i:sz=+1/2");
    StateVector f = make_state(xplus.v, "f:sx=+1/2");

    auto two_time = [&](const StateVector& mid, std::string label) {
        std::vector<Decomposition> steps;
        steps.push_back(dichotomy(projector_from_vector(mid)));
        steps.push_back(dichotomy(projector_from_vector(f)));
        return make_framework(i, std::move(steps), {}, std::move(label));
    };

    GriffithsPair pair{two_time(i, "S_i"), two_time(f, "S_f")};
    return pair;
}

BRoots solve_b_squared(double nz_sq) {
    constexpr double kUpper = 1.0 / 9.0;
    if (!(nz_sq > 0.0) || !(nz_sq < kUpper)) {
        if (nz_sq == kUpper)
            throw DomainError("solve_b_squared: n_z^2 = 1/9 is the double-root boundary; "
                              "admissible interval is the open (0, 1/9)");
        throw DomainError("solve_b_squared: n_z^2 must lie strictly in (0, 1/9)");
    }
    const double x = nz_sq;
    const double disc = (9.0 * x - 1.0) * (x - 1.0);
    // The larger root is cancellation-free; the smaller comes from the
    // product of roots, 1/x.
    const double plus = ((1.0 - 3.0 * x) + std::sqrt(disc)) / (2.0 * x);
    const double minus = 1.0 / (x * plus);
    return BRoots{minus, plus};
}

namespace {

// Eq-style closed-form column for s_n = 0 (middle component 1).
CVector spin1_zero_column(const UnitVector3& n) {
    const double r = 1.0 / std::sqrt(2.0);
    CVector v(3);
    v[0] = -r * Complex(n.x, -n.y) / n.z;
    v[1] = 1.0;
    v[2] = r * Complex(n.x, n.y) / n.z;
    return v;
}

// Closed-form column for s_m = +-1 with explicitly supplied denominators
// 1 -+ m_z (the stable forms matter near m_z = -1).
CVector spin1_pm_column(double mx, double my, int sgn, double one_minus_mz,
                        double one_plus_mz) {
    const double r = 1.0 / std::sqrt(2.0);
    const double s = static_cast<double>(sgn);
    CVector v(3);
    v[0] = s * r * Complex(mx, -my) / (sgn > 0 ? one_minus_mz : one_plus_mz);
    v[1] = 1.0;
    v[2] = s * r * Complex(mx, my) / (sgn > 0 ? one_plus_mz : one_minus_mz);
    return v;
}

}  // namespace

Spin1Family spin1_family(double nz_sq, Root root, double azimuth) {
    const BRoots roots = solve_b_squared(nz_sq);
    const double b_sq = (root == Root::Minus) ? roots.b_sq_minus : roots.b_sq_plus;
    const double b = std::sqrt(b_sq);

    const double x = nz_sq;
    const double nz = std::sqrt(x);
    const UnitVector3 n = unit_vector_from_z(nz, azimuth);

    // On the solution curve 1 - b^2 n_z^2 = 4 / (b^2 + 3); this form stays
    // accurate when b^2 n_z^2 approaches 1.
    const double one_minus_b2nz2 = 4.0 / (b_sq + 3.0);
    const double a_sq = one_minus_b2nz2 / (1.0 - x);
    const double a = std::sqrt(a_sq);
    const double bnz = b * nz;

    const double mx = a * n.x, my = a * n.y, mz = -bnz;
    const UnitVector3 m = make_unit_vector(mx, my, mz);

    const double one_minus_mz = 1.0 + bnz;
    const double one_plus_mz = one_minus_b2nz2 / (1.0 + bnz);  // = 1 - b n_z

    Spin1FamilyParams params;
    params.n = n;
    params.m = m;
    params.a = a;
    params.b = b;
    params.b_sq = b_sq;
    params.alpha = 0.5 * one_minus_b2nz2;
    params.beta = x;
    params.gamma = params.beta / params.alpha;

    StateVector i = make_state(CVector{0.0, 1.0, 0.0}, "i:sz=0");
    StateVector f = make_state(spin1_zero_column(n), "f:sn=0");
    StateVector m_plus =
        make_state(spin1_pm_column(mx, my, +1, one_minus_mz, one_plus_mz), "sm=+1");
    StateVector m_minus =
        make_state(spin1_pm_column(mx, my, -1, one_minus_mz, one_plus_mz), "sm=-1");

    auto two_time = [&](const StateVector& mid, std::string label) {
        std::vector<Decomposition> steps;
        steps.push_back(dichotomy(projector_from_vector(mid)));
        steps.push_back(dichotomy(projector_from_vector(f)));
        return make_framework(i, std::move(steps), {}, std::move(label));
    };

    Spin1Family fam{two_time(m_plus, "S_+"), two_time(m_minus, "S_-"), params,
                    std::move(f), std::move(m_plus), std::move(m_minus)};
    return fam;
}

std::vector<ExcludedChoiceDemo> excluded_choices_report() {
    // Surrogate n_z = 1e-8 for the two excluded solution-curve limits.
    const double nz = 1e-8;
    const double nz_sq = nz * nz;
    std::vector<ExcludedChoiceDemo> out;
    const Root roots[2] = {Root::Minus, Root::Plus};
    const char* descriptions[2] = {
        "limit b = 1, n_z = 0 (m_z = 0): final property P^2_1 loses all probability",
        "limit b -> inf, b n_z -> 1 (m_z = -1): final property P^2_1 loses all probability",
    };
    for (int k = 0; k < 2; ++k) {
        const Spin1Family fam = spin1_family(nz_sq, roots[k]);
        ExcludedChoiceDemo demo;
        demo.description = descriptions[k];
        demo.nz = nz;
        demo.b_sq = fam.params.b_sq;
        demo.p_final = event_probability(fam.s_plus, Event{1, 0});
        try {
            conditional_probability(fam.s_plus, Event{1, 0}, Event{0, 0});
            demo.conditional_defined = true;
        } catch (const UndefinedConditional&) {
            demo.conditional_defined = false;
        }
        out.push_back(std::move(demo));
    }
    return out;
}

}  // namespace chist
