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

#include "chist/search.hpp"

#include <cmath>
#include <random>

namespace chist {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Per-trial stream: mixing (seed, trial) keeps trials independent, so a
// parallel evaluation order cannot change any result.
std::mt19937_64 trial_rng(std::uint64_t seed, std::size_t trial) {
    return std::mt19937_64(splitmix64(seed ^ splitmix64(trial)));
}

CVector random_vector(std::mt19937_64& rng, std::size_t dim) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    CVector v(dim);
    for (Complex& z : v) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        z = Complex(re, im);
    }
    return v;
}

// w = <m|m> |i> - <m|i> |m>; a final state f decoheres the two-time
// framework with intermediate m exactly when <f|w> = 0.
CVector decoherence_normal(const CVector& i, const CVector& m) {
    const Complex mm = inner(m, m);
    const Complex mi = inner(m, i);
    CVector w(i.size());
    for (std::size_t k = 0; k < i.size(); ++k) w[k] = mm * i[k] - mi * m[k];
    return w;
}

HistoryFramework two_time(const StateVector& i, const StateVector& mid,
                          const StateVector& fin, std::string label) {
    std::vector<Decomposition> steps;
    steps.push_back(dichotomy(projector_from_vector(mid)));
    steps.push_back(dichotomy(projector_from_vector(fin)));
    return make_framework(i, std::move(steps), {}, std::move(label));
}

double normalized_overlap_sq(const CVector& u, const CVector& v) {
    return std::norm(inner(u, v)) / (inner(u, u).real() * inner(v, v).real());
}

}  // namespace

TrialOutcome sample_instance(const SearchConfig& cfg, std::size_t trial_index) {
    if (cfg.dim < 2 || cfg.dim > 16) throw DomainError("sample_instance: dim must be in [2,16]");
    std::mt19937_64 rng = trial_rng(cfg.seed, trial_index);

    const CVector i = random_vector(rng, cfg.dim);
    const CVector m_a = random_vector(rng, cfg.dim);
    CVector m_b = random_vector(rng, cfg.dim);
    // Force m_b orthogonal to m_a.
    const Complex c = inner(m_a, m_b) / inner(m_a, m_a);
    for (std::size_t k = 0; k < cfg.dim; ++k) m_b[k] -= c * m_a[k];
    if (norm(m_b) < 1e-8) return std::string("degenerate-draw");

    if (normalized_overlap_sq(m_a, i) < cfg.min_final_prob ||
        normalized_overlap_sq(m_b, i) < cfg.min_final_prob)
        return std::string("zero-branch");

    const CVector w_a = decoherence_normal(i, m_a);
    const CVector w_b = decoherence_normal(i, m_b);
    const std::vector<CVector> comp =
        orthogonal_complement({w_a, w_b}, cfg.dim, 1e-10);
    if (comp.empty()) return std::string("complement-empty");

    // Random combination of the complement basis.
    CVector f(cfg.dim);
    const CVector coeff = random_vector(rng, comp.size());
    for (std::size_t j = 0; j < comp.size(); ++j)
        for (std::size_t k = 0; k < cfg.dim; ++k) f[k] += coeff[j] * comp[j][k];
    if (norm(f) < 1e-10) return std::string("degenerate-draw");
    if (normalized_overlap_sq(f, i) < cfg.min_final_prob)
        return std::string("small-final-prob");

    FoundInstance inst;
    inst.i = make_state(i, "i");
    inst.f = make_state(f, "f");
    inst.m_a = make_state(m_a, "m_A");
    inst.m_b = make_state(m_b, "m_B");

    const HistoryFramework fw_a = two_time(inst.i, inst.m_a, inst.f, "F_A");
    const HistoryFramework fw_b = two_time(inst.i, inst.m_b, inst.f, "F_B");
    inst.consistency_a = check_consistency(fw_a, cfg.tol);
    inst.consistency_b = check_consistency(fw_b, cfg.tol);
    if (!inst.consistency_a.consistent || !inst.consistency_b.consistent)
        return std::string("inconsistent");

    try {
        inst.conditional_a = conditional_probability(fw_a, Event{1, 0}, Event{0, 0});
        inst.conditional_b = conditional_probability(fw_b, Event{1, 0}, Event{0, 0});
    } catch (const UndefinedConditional&) {
        return std::string("small-final-prob");
    }
    if (inst.conditional_a < 1.0 - 1e-9 || inst.conditional_b < 1.0 - 1e-9)
        return std::string("not-certain");

    inst.classification =
        classify_pair(projector_from_vector(inst.m_a), projector_from_vector(inst.m_b));
    if (inst.classification.kind != PairKind::Contradictory &&
        inst.classification.kind != PairKind::ExhaustivelyContradictory)
        return std::string("not-contradictory");

    return inst;
}

SearchSummary run_search(const SearchConfig& cfg) {
    if (cfg.trials < 1) throw DomainError("run_search: trials must be >= 1");
    SearchSummary summary;
    summary.config = cfg;
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        TrialOutcome outcome = sample_instance(cfg, t);
        if (std::holds_alternative<FoundInstance>(outcome)) {
            ++summary.found;
            if (!summary.first_instance)
                summary.first_instance = std::get<FoundInstance>(std::move(outcome));
        } else {
            ++summary.rejected_by_reason[std::get<std::string>(outcome)];
        }
    }
    return summary;
}

}  // namespace chist
