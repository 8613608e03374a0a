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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "chist/examples.hpp"
#include "chist/search.hpp"

using namespace chist;

namespace {

HistoryFramework two_time(const StateVector& i, const StateVector& m,
                          const StateVector& f, std::string label) {
    std::vector<Decomposition> steps;
    steps.push_back(dichotomy(projector_from_vector(m)));
    steps.push_back(dichotomy(projector_from_vector(f)));
    return make_framework(i, std::move(steps), {}, std::move(label));
}

}  // namespace

TEST_CASE("run_search: d=3 finds verified instances") {
    SearchConfig cfg;
    cfg.dim = 3;
    cfg.trials = 1000;
    cfg.seed = 7;
    const SearchSummary summary = run_search(cfg);
    CHECK(summary.found >= 1);
    REQUIRE(summary.first_instance.has_value());

    // independent re-verification of the reported instance
    const FoundInstance& fi = *summary.first_instance;
    const HistoryFramework fa = two_time(fi.i, fi.m_a, fi.f, "A");
    const HistoryFramework fb = two_time(fi.i, fi.m_b, fi.f, "B");
    CHECK(check_consistency(fa, cfg.tol).consistent);
    CHECK(check_consistency(fb, cfg.tol).consistent);
    CHECK(conditional_probability(fa, {1, 0}, {0, 0}) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(conditional_probability(fb, {1, 0}, {0, 0}) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(std::abs(inner(fi.m_a.v, fi.m_b.v)) <
          1e-10 * norm(fi.m_a.v) * norm(fi.m_b.v));
    CHECK(fi.classification.kind == PairKind::Contradictory);
}

TEST_CASE("run_search: d=2 finds nothing (empirical dimension scan)") {
    SearchConfig cfg;
    cfg.dim = 2;
    cfg.trials = 100000;
    cfg.seed = 11;
    const SearchSummary summary = run_search(cfg);
    CHECK(summary.found == 0);
    // the generic rejection is an empty orthogonal complement
    CHECK(summary.rejected_by_reason.count("complement-empty") == 1);
}

TEST_CASE("run_search: over-restrictive final-probability filter finds nothing") {
    SearchConfig cfg;
    cfg.dim = 3;
    cfg.trials = 500;
    cfg.seed = 3;
    cfg.min_final_prob = 0.999;
    const SearchSummary summary = run_search(cfg);
    CHECK(summary.found == 0);
}

TEST_CASE("sample_instance: construction residual is tiny on acceptance") {
    SearchConfig cfg;
    cfg.dim = 3;
    cfg.trials = 200;
    cfg.seed = 42;
    int accepted = 0;
    for (std::size_t t = 0; t < cfg.trials && accepted < 10; ++t) {
        const TrialOutcome out = sample_instance(cfg, t);
        if (!std::holds_alternative<FoundInstance>(out)) continue;
        ++accepted;
        const FoundInstance& fi = std::get<FoundInstance>(out);
        for (const StateVector* m : {&fi.m_a, &fi.m_b}) {
            // scalar decoherence residual normalized to the vector scales
            const Complex r = inner(fi.f.v, fi.i.v) * inner(m->v, m->v) -
                              inner(fi.f.v, m->v) * inner(m->v, fi.i.v);
            CHECK(std::abs(r) <
                  1e-10 * norm(fi.f.v) * norm(fi.i.v) * inner(m->v, m->v).real());
        }
    }
    CHECK(accepted >= 1);
}

TEST_CASE("determinism: identical configs give identical summaries") {
    SearchConfig cfg;
    cfg.dim = 3;
    cfg.trials = 300;
    cfg.seed = 99;
    const SearchSummary a = run_search(cfg);
    const SearchSummary b = run_search(cfg);
    CHECK(a.found == b.found);
    CHECK(a.rejected_by_reason == b.rejected_by_reason);
    REQUIRE(a.first_instance.has_value() == b.first_instance.has_value());
    if (a.first_instance) {
        for (std::size_t k = 0; k < a.first_instance->i.v.size(); ++k) {
            CHECK(a.first_instance->i.v[k] == b.first_instance->i.v[k]);
            CHECK(a.first_instance->f.v[k] == b.first_instance->f.v[k]);
        }
    }
}

TEST_CASE("injected known-good instances always pass the verification pipeline") {
    // the spin-1 family provides known-good (i, m, f) triples; run them
    // through the same checks the search applies
    for (double x : {0.01, 0.05, 0.1}) {
        const Spin1Family fam = spin1_family(x, Root::Minus, 0.9);
        CHECK(check_consistency(fam.s_plus).consistent);
        CHECK(check_consistency(fam.s_minus).consistent);
        CHECK(conditional_probability(fam.s_plus, {1, 0}, {0, 0}) ==
              doctest::Approx(1.0).epsilon(1e-9));
        CHECK(classify_pair(projector_from_vector(fam.m_plus),
                            projector_from_vector(fam.m_minus))
                  .kind == PairKind::Contradictory);
    }
}

TEST_CASE("sample_instance: bad dimensions rejected") {
    SearchConfig cfg;
    cfg.dim = 1;
    CHECK_THROWS_AS(sample_instance(cfg, 0), DomainError);
    cfg.dim = 17;
    CHECK_THROWS_AS(sample_instance(cfg, 0), DomainError);
}
