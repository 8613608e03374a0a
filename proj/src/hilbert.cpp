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

#include "chist/hilbert.hpp"

#include <cmath>
#include <utility>

namespace chist {

namespace {
constexpr double kHermTol = 1e-12;
constexpr double kIdemTol = 1e-10;
constexpr double kUnitGate = 1e-9;
constexpr double kSingular = 1e-8;
}  // namespace

StateVector make_state(CVector v, std::string label) {
    if (v.empty()) throw DimError("state: empty vector");
    if (!all_finite(v)) throw ValidationError("state: non-finite amplitude");
    if (norm(v) <= 0.0) throw DegenerateStateError("state '" + label + "': zero norm");
    return StateVector{std::move(v), std::move(label)};
}

Projector make_projector(CMatrix P, std::string label) {
    if (!P.square()) throw DimError("projector: matrix not square");
    if (!all_finite(P)) throw ValidationError("projector: non-finite entry");
    if (hermiticity_defect(P) > kHermTol)
        throw ValidationError("projector '" + label + "': not Hermitian");
    if (frobenius_norm(sub(mul(P, P), P)) > kIdemTol)
        throw ValidationError("projector '" + label + "': not idempotent");
    const double tr = trace(P).real();
    const int rank = static_cast<int>(std::lround(tr));
    if (std::abs(tr - rank) > 1e-8)
        throw ValidationError("projector '" + label + "': non-integral trace");
    return Projector{std::move(P), rank, std::move(label)};
}

Projector projector_from_vector(const StateVector& s) {
    const double n2 = inner(s.v, s.v).real();
    if (std::sqrt(n2) <= 1e-12)
        throw DegenerateStateError("projector_from_vector: near-zero state '" + s.label + "'");
    CMatrix P = scale(outer(s.v, s.v), 1.0 / n2);
    return make_projector(std::move(P), s.label.empty() ? "" : "[" + s.label + "]");
}

Projector complement(const Projector& p) {
    CMatrix C = sub(CMatrix::identity(p.dim()), p.mat);
    std::string label = p.label.empty() ? "" : "~" + p.label;
    return make_projector(std::move(C), std::move(label));
}

Decomposition make_decomposition(std::vector<Projector> ps) {
    if (ps.empty()) throw ValidationError("decomposition: no projectors");
    const std::size_t d = ps.front().dim();
    CMatrix sum(d, d);
    for (const Projector& p : ps) {
        if (p.dim() != d) throw DimError("decomposition: mixed dimensions");
        sum = add(sum, p.mat);
    }
    if (frobenius_norm(sub(sum, CMatrix::identity(d))) > kIdemTol)
        throw ValidationError("decomposition: projectors do not sum to identity");
    for (std::size_t j = 0; j < ps.size(); ++j)
        for (std::size_t k = j + 1; k < ps.size(); ++k)
            if (frobenius_norm(mul(ps[j].mat, ps[k].mat)) > kIdemTol)
                throw ValidationError("decomposition: projectors not mutually orthogonal");
    return Decomposition{std::move(ps), d};
}

Decomposition dichotomy(const Projector& p) {
    std::vector<Projector> ps;
    ps.push_back(p);
    ps.push_back(complement(p));
    return make_decomposition(std::move(ps));
}

UnitVector3 make_unit_vector(double x, double y, double z) {
    const double n2 = x * x + y * y + z * z;
    if (!std::isfinite(n2) || std::abs(n2 - 1.0) > kUnitGate)
        throw ValidationError("unit vector: components not normalized");
    return UnitVector3{x, y, z};
}

UnitVector3 unit_vector_from_z(double z_component, double azimuth) {
    if (std::abs(z_component) > 1.0)
        throw ValidationError("unit vector: |z| > 1");
    const double s = std::sqrt(std::max(0.0, 1.0 - z_component * z_component));
    return make_unit_vector(s * std::cos(azimuth), s * std::sin(azimuth), z_component);
}

CMatrix spin_operator(const UnitVector3& n, Spin spin) {
    if (spin == Spin::Half) {
        // (n_x sigma_x + n_y sigma_y + n_z sigma_z) / 2
        CMatrix S(2, 2);
        S(0, 0) = 0.5 * n.z;
        S(0, 1) = 0.5 * Complex(n.x, -n.y);
        S(1, 0) = 0.5 * Complex(n.x, n.y);
        S(1, 1) = -0.5 * n.z;
        return S;
    }
    // Spin-1 in the basis |+1>, |0>, |-1>.
    const double r = 1.0 / std::sqrt(2.0);
    const Complex np(n.x, n.y), nm(n.x, -n.y);
    CMatrix S(3, 3);
    S(0, 0) = n.z;
    S(0, 1) = r * nm;
    S(1, 0) = r * np;
    S(1, 1) = 0.0;
    S(1, 2) = r * nm;
    S(2, 1) = r * np;
    S(2, 2) = -n.z;
    return S;
}

StateVector spin1_eigenstate_closed_form(const UnitVector3& n, int m_value) {
    if (m_value != -1 && m_value != 0 && m_value != 1)
        throw DomainError("spin1 eigenstate: m_value must be -1, 0 or +1");
    const double r = 1.0 / std::sqrt(2.0);
    const Complex np(n.x, n.y), nm(n.x, -n.y);
    CVector v(3);
    if (m_value == 0) {
        if (std::abs(n.z) <= kSingular)
            throw FormulaDomainError("spin1 m=0 closed form singular at n_z = 0");
        v[0] = -r * nm / n.z;
        v[1] = 1.0;
        v[2] = r * np / n.z;
    } else {
        const double sgn = (m_value > 0) ? 1.0 : -1.0;
        const double den0 = 1.0 - sgn * n.z;  // 1 -+ n_z
        const double den2 = 1.0 + sgn * n.z;  // 1 +- n_z
        if (std::abs(den0) <= kSingular || std::abs(den2) <= kSingular)
            throw FormulaDomainError("spin1 m=+-1 closed form singular at |n_z| = 1");
        v[0] = sgn * r * nm / den0;
        v[1] = 1.0;
        v[2] = sgn * r * np / den2;
    }
    const char* tag = (m_value == 0) ? "m=0" : (m_value > 0 ? "m=+1" : "m=-1");
    return make_state(std::move(v), tag);
}

namespace {

StateVector eigensolver_eigenstate(const CMatrix& S, double target, std::string label) {
    EigenSystem es = hermitian_eigen(S, 1e-10);
    std::size_t best = 0;
    double bestd = std::abs(es.values[0] - target);
    for (std::size_t k = 1; k < es.values.size(); ++k) {
        const double d = std::abs(es.values[k] - target);
        if (d < bestd) {
            bestd = d;
            best = k;
        }
    }
    return make_state(es.vectors[best], std::move(label));
}

}  // namespace

StateVector spin1_eigenstate(const UnitVector3& n, int m_value) {
    try {
        StateVector s = spin1_eigenstate_closed_form(n, m_value);
        CVector v = normalized(s.v);
        fix_phase(v);
        return make_state(std::move(v), s.label);
    } catch (const FormulaDomainError&) {
        const char* tag = (m_value == 0) ? "m=0" : (m_value > 0 ? "m=+1" : "m=-1");
        return eigensolver_eigenstate(spin_operator(n, Spin::One),
                                      static_cast<double>(m_value), tag);
    }
}

StateVector spin_half_eigenstate(const UnitVector3& n, int sign) {
    if (sign != 1 && sign != -1)
        throw DomainError("spin-1/2 eigenstate: sign must be +1 or -1");
    const char* tag = (sign > 0) ? "s=+1/2" : "s=-1/2";
    return eigensolver_eigenstate(spin_operator(n, Spin::Half), 0.5 * sign, tag);
}

}  // namespace chist
