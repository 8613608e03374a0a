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

#include "chist/retrodiction.hpp"

#include <cmath>

namespace chist {

namespace {
constexpr double kZeroProb = 1e-12;
}

const char* to_string(PairKind k) {
    switch (k) {
        case PairKind::Identical: return "IDENTICAL";
        case PairKind::Compatible: return "COMPATIBLE";
        case PairKind::Incompatible: return "INCOMPATIBLE";
        case PairKind::Contradictory: return "CONTRADICTORY";
        case PairKind::ExhaustivelyContradictory: return "EXHAUSTIVELY CONTRADICTORY";
    }
    return "?";
}

PairClassification classify_pair(const Projector& qa, const Projector& qb, double tol) {
    if (qa.dim() != qb.dim()) throw DimError("classify_pair: dimension mismatch");
    PairClassification out;
    out.overlap_norm = frobenius_norm(mul(qa.mat, qb.mat));
    out.commutator_norm = frobenius_norm(commutator(qa.mat, qb.mat));
    if (frobenius_norm(sub(qa.mat, qb.mat)) <= tol) {
        out.kind = PairKind::Identical;
    } else if (out.overlap_norm <= tol) {
        const CMatrix co = sub(add(qa.mat, qb.mat), CMatrix::identity(qa.dim()));
        out.kind = (frobenius_norm(co) <= tol) ? PairKind::ExhaustivelyContradictory
                                               : PairKind::Contradictory;
    } else if (out.commutator_norm <= tol) {
        out.kind = PairKind::Compatible;
    } else {
        out.kind = PairKind::Incompatible;
    }
    return out;
}

std::vector<CertainRetrodiction> find_certain_retrodictions(const HistoryFramework& fw,
                                                            double tol_certain) {
    const ConsistencyReport rep = check_consistency(fw);
    if (!rep.consistent)
        throw InconsistencyError("find_certain_retrodictions: framework '" + fw.label +
                                 "' fails the consistency condition");
    std::vector<CertainRetrodiction> found;
    const int last = static_cast<int>(fw.num_steps()) - 1;
    if (last < 1) return found;  // nothing earlier to infer
    for (std::size_t g = 0; g < fw.steps[last].branches(); ++g) {
        const Event given{last, static_cast<int>(g)};
        if (event_probability(fw, given) < kZeroProb) continue;
        for (int s = 0; s < last; ++s)
            for (std::size_t b = 0; b < fw.steps[s].branches(); ++b) {
                const Event target{s, static_cast<int>(b)};
                const double p = conditional_probability(fw, given, target);
                if (p >= 1.0 - tol_certain)
                    found.push_back({fw.label, given, target, p});
            }
    }
    return found;
}

namespace {

const Projector& event_projector(const HistoryFramework& fw, const Event& e) {
    return fw.steps[static_cast<std::size_t>(e.step)]
        .projectors[static_cast<std::size_t>(e.branch)];
}

}  // namespace

RetrodictionReport cross_framework_report(const std::vector<HistoryFramework>& fws,
                                          Event shared_given, double tol) {
    if (fws.empty()) throw ValidationError("cross_framework_report: no frameworks");
    const HistoryFramework& ref = fws.front();
    for (const HistoryFramework& fw : fws) {
        if (fw.dim() != ref.dim())
            throw SharedEventMismatchError("cross_framework_report: dimension mismatch");
        // Same |i> up to a global phase; both are normalized.
        if (std::abs(std::abs(inner(fw.initial.v, ref.initial.v)) - 1.0) > 1e-9)
            throw SharedEventMismatchError(
                "cross_framework_report: initial states differ");
        if (shared_given.step < 0 ||
            static_cast<std::size_t>(shared_given.step) >= fw.num_steps() ||
            shared_given.branch < 0 ||
            static_cast<std::size_t>(shared_given.branch) >=
                fw.steps[shared_given.step].branches())
            throw SharedEventMismatchError(
                "cross_framework_report: shared event out of range");
        if (frobenius_norm(sub(event_projector(fw, shared_given).mat,
                               event_projector(ref, shared_given).mat)) > 1e-10)
            throw SharedEventMismatchError(
                "cross_framework_report: shared-event projectors differ");
    }

    RetrodictionReport report;
    report.shared_given = shared_given;
    for (const HistoryFramework& fw : fws) {
        std::vector<CertainRetrodiction> all = find_certain_retrodictions(fw);
        std::vector<CertainRetrodiction> at_event;
        for (const CertainRetrodiction& r : all)
            if (r.given == shared_given) at_event.push_back(r);
        report.per_framework.push_back(std::move(at_event));
    }
    for (std::size_t a = 0; a < fws.size(); ++a)
        for (std::size_t b = a + 1; b < fws.size(); ++b)
            for (const CertainRetrodiction& ra : report.per_framework[a])
                for (const CertainRetrodiction& rb : report.per_framework[b]) {
                    ClassifiedPair pair;
                    pair.framework_a = a;
                    pair.framework_b = b;
                    pair.retro_a = ra;
                    pair.retro_b = rb;
                    pair.classification = classify_pair(event_projector(fws[a], ra.inferred),
                                                        event_projector(fws[b], rb.inferred),
                                                        tol);
                    report.pairs.push_back(std::move(pair));
                }
    return report;
}

}  // namespace chist
