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

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "chist/examples.hpp"
#include "chist/framework_io.hpp"
#include "chist/retrodiction.hpp"
#include "chist/search.hpp"

namespace {

using namespace chist;
using nlohmann::json;

std::string fmt_g(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string fmt_num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

// Probabilities print the way the diagrams write them: exact small rationals
// as fractions, everything else as decimals.
std::string fmt_prob(double p) {
    for (int num = 0; num <= 4; ++num)
        for (int den = 1; den <= 4; ++den)
            if (std::abs(p - static_cast<double>(num) / den) < 1e-12) {
                if (num % den == 0) return std::to_string(num / den);
                return std::to_string(num) + "/" + std::to_string(den);
            }
    return fmt_num(p);
}

std::string branch_name(const HistoryFramework& fw, int step, int branch) {
    const std::string& lbl = fw.steps[step].projectors[branch].label;
    std::string name = "P" + std::to_string(step + 1) + "_" + std::to_string(branch + 1);
    if (!lbl.empty()) name += " " + lbl;
    return name;
}

void print_tree(const HistoryFramework& fw, const ProbabilityTree& tree) {
    std::cout << "|i> " << fw.initial.label << "\n";
    // One line per branch, indentation per step, conditional on the edge;
    // depth-first so each fan reads like the diagrams.
    auto recurse = [&](auto&& self, const HistoryPath& prefix) -> void {
        if (prefix.size() == tree.levels.size()) return;
        for (const TreeNode& n : tree.levels[prefix.size()]) {
            if (!std::equal(prefix.begin(), prefix.end(), n.prefix.begin())) continue;
            std::string indent(2 + 4 * prefix.size(), ' ');
            const std::string cond =
                n.conditional_defined ? fmt_prob(n.conditional) : "undef";
            std::cout << indent << "--[" << cond << "]-- "
                      << branch_name(fw, static_cast<int>(prefix.size()), n.prefix.back())
                      << "   (p = " << fmt_prob(n.probability) << ")\n";
            self(self, n.prefix);
        }
    };
    recurse(recurse, {});
}

void print_consistency(const HistoryFramework& fw, const ConsistencyReport& rep) {
    std::cout << fw.label << ": "
              << (rep.consistent ? "CONSISTENT" : "NOT CONSISTENT")
              << " (max off-diagonal " << fmt_num(rep.max_offdiag) << ", weak "
              << (rep.weakly_consistent ? "yes" : "no") << ")\n";
    if (!rep.consistent) {
        std::cout << "  worst pair: (";
        for (std::size_t k = 0; k < rep.worst_a.size(); ++k)
            std::cout << (k ? "," : "") << rep.worst_a[k];
        std::cout << ") vs (";
        for (std::size_t k = 0; k < rep.worst_b.size(); ++k)
            std::cout << (k ? "," : "") << rep.worst_b[k];
        std::cout << ")\n";
    }
}

void print_retrodictions(const RetrodictionReport& report,
                         const std::vector<HistoryFramework>& fws) {
    for (std::size_t k = 0; k < fws.size(); ++k) {
        for (const CertainRetrodiction& r : report.per_framework[k])
            std::cout << fws[k].label << ": given " << branch_name(fws[k], r.given.step, r.given.branch)
                      << " retrodicts " << branch_name(fws[k], r.inferred.step, r.inferred.branch)
                      << " with certainty (p = " << fmt_prob(r.probability) << ")\n";
        if (report.per_framework[k].empty())
            std::cout << fws[k].label << ": no certain retrodictions at the shared event\n";
    }
    for (const ClassifiedPair& pair : report.pairs) {
        const char* qualifier = "";
        switch (pair.classification.kind) {
            case PairKind::Incompatible: qualifier = " (non-orthogonal)"; break;
            case PairKind::Contradictory: qualifier = " (orthogonal)"; break;
            case PairKind::ExhaustivelyContradictory: qualifier = " (orthogonal, exhaustive)"; break;
            default: break;
        }
        std::cout << "classification " << fws[pair.framework_a].label << " vs "
                  << fws[pair.framework_b].label << ": "
                  << to_string(pair.classification.kind) << qualifier
                  << "  [overlap " << fmt_num(pair.classification.overlap_norm)
                  << ", commutator " << fmt_num(pair.classification.commutator_norm) << "]\n";
    }
}

json tree_to_json(const ProbabilityTree& tree) {
    json out = json::array();
    for (const auto& level : tree.levels) {
        json jl = json::array();
        for (const TreeNode& n : level) {
            json jn;
            jn["prefix"] = n.prefix;
            jn["probability"] = n.probability;
            if (n.conditional_defined)
                jn["conditional"] = n.conditional;
            else
                jn["conditional"] = nullptr;
            jl.push_back(std::move(jn));
        }
        out.push_back(std::move(jl));
    }
    return out;
}

json state_to_json(const StateVector& s) {
    json amps = json::array();
    for (const Complex& z : s.v) amps.push_back(json::array({z.real(), z.imag()}));
    return json{{"label", s.label}, {"amplitudes", std::move(amps)}};
}

int cmd_griffiths(const std::string& dump_dir) {
    const GriffithsPair pair = griffiths_frameworks();
    const std::vector<HistoryFramework> fws = {pair.s_i, pair.s_f};
    for (const HistoryFramework& fw : fws) {
        const ConsistencyReport rep = check_consistency(fw);
        print_consistency(fw, rep);
        print_tree(fw, probability_tree(fw));
        std::cout << "\n";
    }
    const RetrodictionReport report = cross_framework_report(fws, Event{1, 0});
    print_retrodictions(report, fws);
    if (!dump_dir.empty()) {
        save_framework(pair.s_i, dump_dir + "/s_i.json");
        save_framework(pair.s_f, dump_dir + "/s_f.json");
        std::cout << "frameworks written to " << dump_dir << "\n";
    }
    return 0;
}

int cmd_spin1(double nz2, const std::string& root_name, double azimuth, bool as_json,
              const std::string& dump_dir) {
    Spin1Family fam;
    try {
        fam = spin1_family(nz2, root_name == "plus" ? Root::Plus : Root::Minus, azimuth);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "; admissible interval is (0, 1/9)\n";
        return 2;
    }
    const std::vector<HistoryFramework> fws = {fam.s_plus, fam.s_minus};
    const RetrodictionReport report = cross_framework_report(fws, Event{1, 0});

    if (as_json) {
        json j;
        j["params"] = {{"n", {fam.params.n.x, fam.params.n.y, fam.params.n.z}},
                       {"m", {fam.params.m.x, fam.params.m.y, fam.params.m.z}},
                       {"a", fam.params.a},
                       {"b", fam.params.b},
                       {"b_sq", fam.params.b_sq},
                       {"alpha", fam.params.alpha},
                       {"beta", fam.params.beta},
                       {"gamma", fam.params.gamma}};
        for (const HistoryFramework& fw : fws) {
            const ConsistencyReport rep = check_consistency(fw);
            json jf;
            jf["label"] = fw.label;
            jf["consistent"] = rep.consistent;
            jf["max_offdiag"] = rep.max_offdiag;
            jf["tree"] = tree_to_json(probability_tree(fw));
            j["frameworks"].push_back(std::move(jf));
        }
        json jp = json::array();
        for (const ClassifiedPair& pair : report.pairs)
            jp.push_back({{"kind", to_string(pair.classification.kind)},
                          {"overlap_norm", pair.classification.overlap_norm},
                          {"commutator_norm", pair.classification.commutator_norm}});
        j["classifications"] = std::move(jp);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "a = " << fmt_num(fam.params.a) << ", b = " << fmt_num(fam.params.b)
                  << " (b^2 = " << fmt_num(fam.params.b_sq) << ")\n"
                  << "alpha = " << fmt_num(fam.params.alpha)
                  << ", beta = " << fmt_num(fam.params.beta)
                  << ", gamma = " << fmt_num(fam.params.gamma) << "\n\n";
        for (const HistoryFramework& fw : fws) {
            print_consistency(fw, check_consistency(fw));
            print_tree(fw, probability_tree(fw));
            std::cout << "\n";
        }
        print_retrodictions(report, fws);
    }
    if (!dump_dir.empty()) {
        save_framework(fam.s_plus, dump_dir + "/s_plus.json");
        save_framework(fam.s_minus, dump_dir + "/s_minus.json");
        std::cout << "frameworks written to " << dump_dir << "\n";
    }
    return 0;
}

int cmd_check(const std::string& path, double tol) {
    HistoryFramework fw;
    try {
        fw = load_framework(path);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    const ConsistencyReport rep = check_consistency(fw, tol);
    print_consistency(fw, rep);
    return rep.consistent ? 0 : 1;
}

int cmd_tree(const std::string& path, double tol) {
    HistoryFramework fw;
    try {
        fw = load_framework(path);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    try {
        print_tree(fw, probability_tree(fw, tol));
    } catch (const InconsistencyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

int cmd_search(std::size_t dim, std::size_t trials, std::uint64_t seed,
               double min_final_prob, double tol, bool as_json) {
    SearchConfig cfg;
    cfg.dim = dim;
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.min_final_prob = min_final_prob;
    cfg.tol = tol;
    const SearchSummary summary = run_search(cfg);

    if (as_json) {
        json j;
        j["config"] = {{"dim", cfg.dim},
                       {"trials", cfg.trials},
                       {"seed", cfg.seed},
                       {"min_final_prob", cfg.min_final_prob},
                       {"tol", cfg.tol}};
        j["found"] = summary.found;
        j["rejected_by_reason"] = summary.rejected_by_reason;
        if (summary.first_instance) {
            const FoundInstance& fi = *summary.first_instance;
            j["first_instance"] = {{"i", state_to_json(fi.i)},
                                   {"f", state_to_json(fi.f)},
                                   {"m_a", state_to_json(fi.m_a)},
                                   {"m_b", state_to_json(fi.m_b)},
                                   {"max_offdiag_a", fi.consistency_a.max_offdiag},
                                   {"max_offdiag_b", fi.consistency_b.max_offdiag},
                                   {"conditional_a", fi.conditional_a},
                                   {"conditional_b", fi.conditional_b},
                                   {"classification", to_string(fi.classification.kind)}};
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "dim: " << cfg.dim << "  trials: " << cfg.trials
                  << "  seed: " << cfg.seed << "\n"
                  << "found: " << summary.found << "\n";
        for (const auto& [reason, count] : summary.rejected_by_reason)
            std::cout << "rejected (" << reason << "): " << count << "\n";
        if (summary.first_instance) {
            const FoundInstance& fi = *summary.first_instance;
            auto dump_state = [](const char* name, const StateVector& s) {
                std::cout << "  " << name << " =";
                for (const Complex& z : s.v)
                    std::cout << " (" << fmt_g(z.real()) << ", " << fmt_g(z.imag()) << ")";
                std::cout << "\n";
            };
            std::cout << "first instance (fully verified):\n";
            dump_state("i  ", fi.i);
            dump_state("f  ", fi.f);
            dump_state("m_A", fi.m_a);
            dump_state("m_B", fi.m_b);
            std::cout << "  max off-diagonal: " << fmt_g(fi.consistency_a.max_offdiag)
                      << " / " << fmt_g(fi.consistency_b.max_offdiag) << "\n"
                      << "  retrodiction conditionals: " << fmt_g(fi.conditional_a) << " / "
                      << fmt_g(fi.conditional_b) << "\n"
                      << "  classification: " << to_string(fi.classification.kind) << "\n";
        }
    }
    return 0;
}

int cmd_classify(const std::string& path_a, const std::string& path_b, int step, int branch) {
    std::vector<HistoryFramework> fws;
    try {
        fws.push_back(load_framework(path_a));
        fws.push_back(load_framework(path_b));
        if (step < 0) step = static_cast<int>(fws.front().num_steps()) - 1;
        const RetrodictionReport report =
            cross_framework_report(fws, Event{step, branch});
        print_retrodictions(report, fws);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"consistent-histories engine: frameworks, decoherence, retrodictions"};
    app.require_subcommand(1);

    auto* sc_griffiths =
        app.add_subcommand("griffiths", "reproduce the spin-1/2 pair of consistent sets");
    std::string dump_dir;
    sc_griffiths->add_option("--dump", dump_dir, "directory to write framework files to");

    auto* sc_spin1 = app.add_subcommand("spin1", "build the spin-1 family S_+ / S_-");
    double nz2 = 0.05, azimuth = 0.0;
    std::string root_name = "minus";
    bool spin1_json = false;
    std::string spin1_dump;
    sc_spin1->add_option("--nz2", nz2, "n_z^2, strictly inside (0, 1/9)")->required();
    sc_spin1->add_option("--root", root_name, "which b^2 root")
        ->check(CLI::IsMember({"minus", "plus"}));
    sc_spin1->add_option("--azimuth", azimuth, "azimuth of n (radians)");
    sc_spin1->add_flag("--json", spin1_json, "machine-readable output");
    sc_spin1->add_option("--dump", spin1_dump, "directory to write framework files to");

    auto* sc_check = app.add_subcommand("check", "consistency-check a framework file");
    std::string check_path;
    double check_tol = 1e-10;
    sc_check->add_option("path", check_path, "framework file")->required();
    sc_check->add_option("--tol", check_tol, "consistency tolerance");

    auto* sc_tree = app.add_subcommand("tree", "probability tree of a framework file");
    std::string tree_path;
    double tree_tol = 1e-10;
    sc_tree->add_option("path", tree_path, "framework file")->required();
    sc_tree->add_option("--tol", tree_tol, "consistency tolerance");

    auto* sc_search =
        app.add_subcommand("search", "randomized search for contradictory retrodictions");
    std::size_t dim = 3, trials = 1000;
    std::uint64_t seed = 0;
    double min_final_prob = 1e-6, search_tol = 1e-10;
    bool search_json = false;
    sc_search->add_option("--dim", dim, "Hilbert space dimension")
        ->check(CLI::Range(std::size_t{2}, std::size_t{16}));
    sc_search->add_option("--trials", trials, "number of trials")->check(CLI::PositiveNumber);
    sc_search->add_option("--seed", seed, "random seed");
    sc_search->add_option("--min-final-prob", min_final_prob,
                          "minimum normalized |<f|i>|^2 to accept");
    sc_search->add_option("--tol", search_tol, "consistency tolerance");
    sc_search->add_flag("--json", search_json, "machine-readable output");

    auto* sc_classify = app.add_subcommand(
        "classify", "classify certain retrodictions of two frameworks at a shared event");
    std::string cls_a, cls_b;
    int cls_step = -1, cls_branch = 0;
    sc_classify->add_option("framework_a", cls_a, "framework file")->required();
    sc_classify->add_option("framework_b", cls_b, "framework file")->required();
    sc_classify->add_option("--step", cls_step, "shared given step (default: last)");
    sc_classify->add_option("--branch", cls_branch, "shared given branch");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (sc_griffiths->parsed()) return cmd_griffiths(dump_dir);
        if (sc_spin1->parsed())
            return cmd_spin1(nz2, root_name, azimuth, spin1_json, spin1_dump);
        if (sc_check->parsed()) return cmd_check(check_path, check_tol);
        if (sc_tree->parsed()) return cmd_tree(tree_path, tree_tol);
        if (sc_search->parsed())
            return cmd_search(dim, trials, seed, min_final_prob, search_tol, search_json);
        if (sc_classify->parsed()) return cmd_classify(cls_a, cls_b, cls_step, cls_branch);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
