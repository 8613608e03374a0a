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

#include "chist/numkernel.hpp"

namespace chist {

/// A (possibly non-normalized) ket. Non-unit norm is deliberate: several of
/// the closed-form vectors this engine certifies are stated unnormalized and
/// their raw norms carry meaning.
struct StateVector {
    CVector v;
    std::string label;

    std::size_t dim() const { return v.size(); }
};

StateVector make_state(CVector v, std::string label = "");

/// Hermitian idempotent matrix representing a property.
struct Projector {
    CMatrix mat;
    int rank = 0;
    std::string label;

    std::size_t dim() const { return mat.rows; }
};

/// Validates Hermiticity (1e-12), idempotence (Frobenius 1e-10) and that the
/// trace is integral; throws ValidationError otherwise.
Projector make_projector(CMatrix P, std::string label = "");

/// Rank-1 projector onto span(s); invariant under rescaling of s.
Projector projector_from_vector(const StateVector& s);

/// identity - P.
Projector complement(const Projector& p);

/// Projectors summing to the identity, pairwise orthogonal.
struct Decomposition {
    std::vector<Projector> projectors;
    std::size_t dim = 0;

    std::size_t branches() const { return projectors.size(); }
};

Decomposition make_decomposition(std::vector<Projector> ps);

/// Two-branch decomposition {P, 1-P}.
Decomposition dichotomy(const Projector& p);

/// Direction in physical space; construction rejects non-unit input.
struct UnitVector3 {
    double x = 0.0, y = 0.0, z = 1.0;
};

UnitVector3 make_unit_vector(double x, double y, double z);

/// Unit vector with polar angle fixed by z-component and free azimuth.
UnitVector3 unit_vector_from_z(double z_component, double azimuth);

enum class Spin { Half, One };

/// S . n for the given spin (hbar = 1). Hermitian, traceless.
CMatrix spin_operator(const UnitVector3& direction, Spin spin);

/// The verbatim closed-form (non-normalized) eigenvector column of S.n for
/// spin 1. Throws FormulaDomainError where a denominator is singular:
/// m_value = 0 needs |n_z| bounded away from 0, m_value = +-1 needs
/// |1 -+ n_z| and |1 +- n_z| bounded away from 0.
StateVector spin1_eigenstate_closed_form(const UnitVector3& n, int m_value);

/// Normalized spin-1 eigenstate with the kernel phase convention; uses the
/// closed form when in-domain and falls back to the eigensolver otherwise.
StateVector spin1_eigenstate(const UnitVector3& n, int m_value);

/// Normalized spin-1/2 eigenstate of S.n with eigenvalue sign/2
/// (sign = +1 or -1), via the eigensolver.
StateVector spin_half_eigenstate(const UnitVector3& n, int sign);

}  // namespace chist
