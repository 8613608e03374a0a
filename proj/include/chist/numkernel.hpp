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

#include <complex>
#include <cstddef>
#include <vector>

#include "chist/errors.hpp"

namespace chist {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

constexpr double kDefaultTol = 1e-12;

/// Dense row-major complex matrix. Dimensions here never exceed 16,
/// so everything is O(n^3)-or-worse without apology.
struct CMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Complex> a;  // row-major, rows*cols entries

    CMatrix() = default;
    CMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    Complex& operator()(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    bool square() const { return rows == cols; }

    static CMatrix identity(std::size_t n);
};

// -- elementwise / BLAS-1,2,3-style helpers ---------------------------------

CMatrix add(const CMatrix& A, const CMatrix& B);
CMatrix sub(const CMatrix& A, const CMatrix& B);
CMatrix mul(const CMatrix& A, const CMatrix& B);
CMatrix scale(const CMatrix& A, Complex s);
CMatrix adjoint(const CMatrix& A);
CVector matvec(const CMatrix& A, const CVector& v);
Complex trace(const CMatrix& A);
double frobenius_norm(const CMatrix& A);
double max_abs_entry(const CMatrix& A);
CMatrix commutator(const CMatrix& A, const CMatrix& B);

double norm(const CVector& v);
CVector scaled(const CVector& v, Complex s);
CVector vsub(const CVector& u, const CVector& v);
CVector normalized(const CVector& v);

/// Conjugate-linear in u, linear in v (physicists' convention).
Complex inner(const CVector& u, const CVector& v);

/// |u><v| as a matrix: result(j,k) = u[j] * conj(v[k]).
CMatrix outer(const CVector& u, const CVector& v);

/// Max entrywise |A - A^dagger|.
double hermiticity_defect(const CMatrix& A);

/// True if every entry of the matrix/vector is finite.
bool all_finite(const CMatrix& A);
bool all_finite(const CVector& v);

// -- eigensolver ------------------------------------------------------------

struct EigenSystem {
    std::vector<double> values;    // ascending
    std::vector<CVector> vectors;  // orthonormal, vectors[k] pairs with values[k]
};

/// Rotate v by a global phase so its first component with magnitude > tol
/// is real positive. No-op on the (numerically) zero vector.
void fix_phase(CVector& v, double tol = kDefaultTol);

/// Cyclic Jacobi diagonalization of a Hermitian matrix.
/// Throws HermiticityError if the input fails the tol gate, ConvergenceError
/// if the sweep cap is hit (does not happen for Hermitian input in practice).
EigenSystem hermitian_eigen(const CMatrix& H, double tol = kDefaultTol);

/// Orthonormal basis of the subspace of C^dim orthogonal to span(vs).
/// Rank decisions by Gram-Schmidt with drop threshold tol * max input norm.
std::vector<CVector> orthogonal_complement(const std::vector<CVector>& vs,
                                           std::size_t dim,
                                           double tol = kDefaultTol);

}  // namespace chist
