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
#include "chist/framework_io.hpp"

using namespace chist;
using nlohmann::json;

namespace {

// analysis fingerprint: every probability-tree number plus the consistency
// residual, for round-trip comparisons
std::vector<double> analysis_numbers(const HistoryFramework& fw) {
    std::vector<double> out;
    out.push_back(check_consistency(fw).max_offdiag);
    const ProbabilityTree tree = probability_tree(fw);
    for (const auto& level : tree.levels)
        for (const TreeNode& n : level) {
            out.push_back(n.probability);
            out.push_back(n.conditional_defined ? n.conditional : -1.0);
        }
    return out;
}

}  // namespace

TEST_CASE("round-trip preserves every built-in example's analysis") {
    const GriffithsPair gp = griffiths_frameworks();
    const Spin1Family fam = spin1_family(0.05, Root::Minus, 0.3);
    const Spin1Family fam2 = spin1_family(0.02, Root::Plus, 1.1);
    for (const HistoryFramework* fw :
         {&gp.s_i, &gp.s_f, &fam.s_plus, &fam.s_minus, &fam2.s_plus, &fam2.s_minus}) {
        const json j = framework_to_json(*fw);
        const HistoryFramework back = framework_from_json(j);
        CHECK(back.dim() == fw->dim());
        CHECK(back.label == fw->label);
        const auto a = analysis_numbers(*fw);
        const auto b = analysis_numbers(back);
        REQUIRE(a.size() == b.size());
        for (std::size_t k = 0; k < a.size(); ++k)
            CHECK(std::abs(a[k] - b[k]) < 1e-12);
        // serialized matrices survive a second round bit-exactly
        CHECK(framework_to_json(back) == j);
    }
}

TEST_CASE("generating_vector projectors accepted and completed") {
    const double r = 1.0 / std::sqrt(2.0);
    json j;
    j["dim"] = 2;
    j["label"] = "from-vectors";
    j["initial"] = json::array({{1.0, 0.0}, {0.0, 0.0}});
    j["steps"] = json::array();
    json step1, step2;
    step1["projectors"] = json::array(
        {{{"generating_vector", {{1.0, 0.0}, {0.0, 0.0}}}},
         {{"generating_vector", {{0.0, 0.0}, {1.0, 0.0}}}}});
    step2["projectors"] = json::array(
        {{{"generating_vector", {{r, 0.0}, {r, 0.0}}}},
         {{"generating_vector", {{r, 0.0}, {-r, 0.0}}}}});
    j["steps"].push_back(step1);
    j["steps"].push_back(step2);
    const HistoryFramework fw = framework_from_json(j);
    CHECK(fw.num_steps() == 2);
    CHECK(check_consistency(fw).consistent);
}

TEST_CASE("incomplete decomposition names the offending step") {
    json j;
    j["dim"] = 2;
    j["initial"] = json::array({{1.0, 0.0}, {0.0, 0.0}});
    json step1, step2;
    step1["projectors"] = json::array(
        {{{"generating_vector", {{1.0, 0.0}, {0.0, 0.0}}}},
         {{"generating_vector", {{0.0, 0.0}, {1.0, 0.0}}}}});
    // step 2 misses the complement
    step2["projectors"] =
        json::array({{{"generating_vector", {{1.0, 0.0}, {0.0, 0.0}}}}});
    j["steps"] = json::array({step1, step2});
    try {
        framework_from_json(j);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("step 2") != std::string::npos);
    }
}

TEST_CASE("malformed inputs rejected with ParseError") {
    CHECK_THROWS_AS(framework_from_json(json::object()), ParseError);
    json j;
    j["dim"] = 2;
    j["initial"] = json::array({{1.0, 0.0}});  // wrong length
    j["steps"] = json::array();
    CHECK_THROWS_AS(framework_from_json(j), ParseError);
    CHECK_THROWS_AS(load_framework("/nonexistent/file.json"), ParseError);
}

TEST_CASE("file save/load round-trip") {
    const GriffithsPair gp = griffiths_frameworks();
    const std::string path = "test_io_s_i.json";
    save_framework(gp.s_i, path);
    const HistoryFramework back = load_framework(path);
    CHECK(back.label == gp.s_i.label);
    CHECK(check_consistency(back).consistent);
    std::remove(path.c_str());
}
