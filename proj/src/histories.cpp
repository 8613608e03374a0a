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

#include "chist/histories.hpp"

#include <algorithm>
#include <cmath>

namespace chist {

namespace {
constexpr double kUnitaryTol = 1e-10;
constexpr double kZeroProb = 1e-12;
constexpr std::size_t kMaxPaths = 4096;
}  // namespace

HistoryFramework make_framework(StateVector initial, std::vector<Decomposition> steps,
                                std::vector<CMatrix> evolutions, std::string label) {
    if (steps.empty()) throw ValidationError("framework '" + label + "': no steps");
    const std::size_t d = initial.dim();
    for (const Decomposition& dec : steps)
        if (dec.dim != d)
            throw DimError("framework '" + label + "': step dimension mismatch");
    if (!evolutions.empty()) {
        if (evolutions.size() != steps.size())
            throw ValidationError("framework '" + label + "': need one evolution per step");
        for (const CMatrix& U : evolutions) {
            if (U.rows != d || U.cols != d)
                throw DimError("framework '" + label + "': evolution dimension mismatch");
            if (frobenius_norm(sub(mul(adjoint(U), U), CMatrix::identity(d))) > kUnitaryTol)
                throw ValidationError("framework '" + label + "': evolution not unitary");
        }
    }
    StateVector init = make_state(normalized(initial.v), initial.label);
    return HistoryFramework{std::move(init), std::move(steps), std::move(evolutions),
                            std::move(label)};
}

std::size_t path_count(const HistoryFramework& fw) {
    std::size_t n = 1;
    for (const Decomposition& dec : fw.steps) n *= dec.branches();
    return n;
}

std::vector<HistoryPath> enumerate_paths(const HistoryFramework& fw) {
    std::vector<HistoryPath> paths;
    paths.emplace_back();
    for (const Decomposition& dec : fw.steps) {
        std::vector<HistoryPath> next;
        next.reserve(paths.size() * dec.branches());
        for (const HistoryPath& p : paths)
            for (std::size_t b = 0; b < dec.branches(); ++b) {
                HistoryPath q = p;
                q.push_back(static_cast<int>(b));
                next.push_back(std::move(q));
            }
        paths = std::move(next);
    }
    return paths;
}

CVector chain_vector(const HistoryFramework& fw, const HistoryPath& path) {
    if (path.size() != fw.num_steps())
        throw DimError("chain_vector: path length mismatch");
    CVector v = fw.initial.v;
    for (std::size_t t = 0; t < fw.num_steps(); ++t) {
        const int b = path[t];
        if (b < 0 || static_cast<std::size_t>(b) >= fw.steps[t].branches())
            throw DimError("chain_vector: branch index out of range");
        if (!fw.evolutions.empty()) v = matvec(fw.evolutions[t], v);
        v = matvec(fw.steps[t].projectors[b].mat, v);
    }
    return v;
}

DecoherenceMatrix decoherence_matrix(const HistoryFramework& fw) {
    const std::size_t n = path_count(fw);
    if (n > kMaxPaths) throw SizeError("decoherence_matrix: too many histories");
    DecoherenceMatrix D;
    D.paths = enumerate_paths(fw);
    std::vector<CVector> chains;
    chains.reserve(n);
    for (const HistoryPath& p : D.paths) chains.push_back(chain_vector(fw, p));
    D.entries = CMatrix(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            D.entries(r, c) = inner(chains[c], chains[r]);
    return D;
}

ConsistencyReport check_consistency(const HistoryFramework& fw, double tol) {
    const DecoherenceMatrix D = decoherence_matrix(fw);
    const std::size_t n = D.paths.size();
    ConsistencyReport rep;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            if (r == c) continue;
            const double m = std::abs(D.entries(r, c));
            if (m > rep.max_offdiag) {
                rep.max_offdiag = m;
                rep.worst_a = D.paths[r];
                rep.worst_b = D.paths[c];
            }
            rep.max_offdiag_real =
                std::max(rep.max_offdiag_real, std::abs(D.entries(r, c).real()));
        }
    const double gate = tol * std::max(1.0, frobenius_norm(D.entries));
    rep.consistent = rep.max_offdiag <= gate;
    rep.weakly_consistent = rep.max_offdiag_real <= gate;
    return rep;
}

namespace {

double clamp_prob(double p) {
    if (p < 0.0 && p > -kZeroProb) return 0.0;
    return p;
}

// Marginal of a prefix: sum of D(alpha,alpha) over all paths extending it.
double prefix_probability(const DecoherenceMatrix& D, const HistoryPath& prefix) {
    double s = 0.0;
    for (std::size_t k = 0; k < D.paths.size(); ++k) {
        if (std::equal(prefix.begin(), prefix.end(), D.paths[k].begin()))
            s += D.entries(k, k).real();
    }
    return clamp_prob(s);
}

}  // namespace

const TreeNode& ProbabilityTree::node(const HistoryPath& prefix) const {
    const auto& level = levels.at(prefix.size() - 1);
    for (const TreeNode& n : level)
        if (n.prefix == prefix) return n;
    throw DimError("probability tree: no such prefix");
}

ProbabilityTree probability_tree(const HistoryFramework& fw, double tol) {
    const ConsistencyReport rep = check_consistency(fw, tol);
    if (!rep.consistent)
        throw InconsistencyError("probability_tree: framework '" + fw.label +
                                 "' fails the consistency condition");
    const DecoherenceMatrix D = decoherence_matrix(fw);

    ProbabilityTree tree;
    std::vector<HistoryPath> prefixes = {{}};
    for (std::size_t t = 0; t < fw.num_steps(); ++t) {
        std::vector<TreeNode> level;
        std::vector<HistoryPath> next;
        for (const HistoryPath& parent : prefixes) {
            const double pp = parent.empty() ? 1.0 : prefix_probability(D, parent);
            for (std::size_t b = 0; b < fw.steps[t].branches(); ++b) {
                TreeNode node;
                node.prefix = parent;
                node.prefix.push_back(static_cast<int>(b));
                node.probability = prefix_probability(D, node.prefix);
                if (pp < kZeroProb) {
                    node.conditional = 0.0;
                    node.conditional_defined = false;
                } else {
                    node.conditional = clamp_prob(node.probability / pp);
                }
                next.push_back(node.prefix);
                level.push_back(std::move(node));
            }
        }
        tree.levels.push_back(std::move(level));
        prefixes = std::move(next);
    }
    return tree;
}

namespace {

bool path_has_event(const HistoryPath& p, const Event& e) {
    return p[static_cast<std::size_t>(e.step)] == e.branch;
}

void validate_event(const HistoryFramework& fw, const Event& e, const char* who) {
    if (e.step < 0 || static_cast<std::size_t>(e.step) >= fw.num_steps() || e.branch < 0 ||
        static_cast<std::size_t>(e.branch) >= fw.steps[e.step].branches())
        throw DimError(std::string(who) + ": event out of range");
}

}  // namespace

double event_probability(const HistoryFramework& fw, Event event) {
    validate_event(fw, event, "event_probability");
    const DecoherenceMatrix D = decoherence_matrix(fw);
    double s = 0.0;
    for (std::size_t k = 0; k < D.paths.size(); ++k)
        if (path_has_event(D.paths[k], event)) s += D.entries(k, k).real();
    return clamp_prob(s);
}

double conditional_probability(const HistoryFramework& fw, Event given, Event target,
                               double tol) {
    validate_event(fw, given, "conditional_probability");
    validate_event(fw, target, "conditional_probability");
    // A zero-probability conditioning event is undefined no matter what else
    // holds, so this gate comes before the consistency one.
    const DecoherenceMatrix D = decoherence_matrix(fw);
    double pg = 0.0, pboth = 0.0;
    for (std::size_t k = 0; k < D.paths.size(); ++k) {
        if (!path_has_event(D.paths[k], given)) continue;
        const double p = D.entries(k, k).real();
        pg += p;
        if (path_has_event(D.paths[k], target)) pboth += p;
    }
    if (pg < kZeroProb)
        throw UndefinedConditional("conditional_probability: conditioning event has zero probability");
    const ConsistencyReport rep = check_consistency(fw, tol);
    if (!rep.consistent)
        throw InconsistencyError("conditional_probability: framework '" + fw.label +
                                 "' fails the consistency condition");
    return std::clamp(pboth / pg, 0.0, 1.0);
}

}  // namespace chist
