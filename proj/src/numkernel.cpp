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

#include "chist/numkernel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace chist {

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix I(n, n);
    for (std::size_t k = 0; k < n; ++k) I(k, k) = 1.0;
    return I;
}

namespace {

void require_same_shape(const CMatrix& A, const CMatrix& B, const char* op) {
    if (A.rows != B.rows || A.cols != B.cols)
        throw DimError(std::string(op) + ": shape mismatch");
}

}  // namespace

CMatrix add(const CMatrix& A, const CMatrix& B) {
    require_same_shape(A, B, "add");
    CMatrix C(A.rows, A.cols);
    for (std::size_t k = 0; k < A.a.size(); ++k) C.a[k] = A.a[k] + B.a[k];
    return C;
}

CMatrix sub(const CMatrix& A, const CMatrix& B) {
    require_same_shape(A, B, "sub");
    CMatrix C(A.rows, A.cols);
    for (std::size_t k = 0; k < A.a.size(); ++k) C.a[k] = A.a[k] - B.a[k];
    return C;
}

CMatrix mul(const CMatrix& A, const CMatrix& B) {
    if (A.cols != B.rows) throw DimError("mul: inner dimension mismatch");
    CMatrix C(A.rows, B.cols);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t k = 0; k < A.cols; ++k) {
            const Complex aik = A(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < B.cols; ++j) C(i, j) += aik * B(k, j);
        }
    return C;
}

CMatrix scale(const CMatrix& A, Complex s) {
    CMatrix C(A.rows, A.cols);
    for (std::size_t k = 0; k < A.a.size(); ++k) C.a[k] = s * A.a[k];
    return C;
}

CMatrix adjoint(const CMatrix& A) {
    CMatrix C(A.cols, A.rows);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t j = 0; j < A.cols; ++j) C(j, i) = std::conj(A(i, j));
    return C;
}

CVector matvec(const CMatrix& A, const CVector& v) {
    if (A.cols != v.size()) throw DimError("matvec: dimension mismatch");
    CVector w(A.rows);
    for (std::size_t i = 0; i < A.rows; ++i) {
        Complex s = 0.0;
        for (std::size_t j = 0; j < A.cols; ++j) s += A(i, j) * v[j];
        w[i] = s;
    }
    return w;
}

Complex trace(const CMatrix& A) {
    if (!A.square()) throw DimError("trace: matrix not square");
    Complex s = 0.0;
    for (std::size_t k = 0; k < A.rows; ++k) s += A(k, k);
    return s;
}

double frobenius_norm(const CMatrix& A) {
    double s = 0.0;
    for (const Complex& z : A.a) s += std::norm(z);
    return std::sqrt(s);
}

double max_abs_entry(const CMatrix& A) {
    double m = 0.0;
    for (const Complex& z : A.a) m = std::max(m, std::abs(z));
    return m;
}

CMatrix commutator(const CMatrix& A, const CMatrix& B) {
    return sub(mul(A, B), mul(B, A));
}

double norm(const CVector& v) {
    double s = 0.0;
    for (const Complex& z : v) s += std::norm(z);
    return std::sqrt(s);
}

CVector scaled(const CVector& v, Complex s) {
    CVector w(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) w[k] = s * v[k];
    return w;
}

CVector vsub(const CVector& u, const CVector& v) {
    if (u.size() != v.size()) throw DimError("vsub: dimension mismatch");
    CVector w(u.size());
    for (std::size_t k = 0; k < u.size(); ++k) w[k] = u[k] - v[k];
    return w;
}

CVector normalized(const CVector& v) {
    const double n = norm(v);
    if (n <= 0.0) throw DegenerateStateError("normalized: zero vector");
    return scaled(v, 1.0 / n);
}

Complex inner(const CVector& u, const CVector& v) {
    if (u.size() != v.size()) throw DimError("inner: dimension mismatch");
    Complex s = 0.0;
    for (std::size_t k = 0; k < u.size(); ++k) s += std::conj(u[k]) * v[k];
    return s;
}

CMatrix outer(const CVector& u, const CVector& v) {
    CMatrix C(u.size(), v.size());
    for (std::size_t j = 0; j < u.size(); ++j)
        for (std::size_t k = 0; k < v.size(); ++k) C(j, k) = u[j] * std::conj(v[k]);
    return C;
}

double hermiticity_defect(const CMatrix& A) {
    if (!A.square()) throw DimError("hermiticity_defect: matrix not square");
    double m = 0.0;
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t j = 0; j < A.cols; ++j)
            m = std::max(m, std::abs(A(i, j) - std::conj(A(j, i))));
    return m;
}

bool all_finite(const CMatrix& A) {
    for (const Complex& z : A.a)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

bool all_finite(const CVector& v) {
    for (const Complex& z : v)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

void fix_phase(CVector& v, double tol) {
    for (const Complex& z : v) {
        const double m = std::abs(z);
        if (m > tol) {
            const Complex ph = std::conj(z) / m;
            for (Complex& w : v) w *= ph;
            return;
        }
    }
}

namespace {

double offdiag_norm(const CMatrix& A) {
    double s = 0.0;
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t j = 0; j < A.cols; ++j)
            if (i != j) s += std::norm(A(i, j));
    return std::sqrt(s);
}

}  // namespace

EigenSystem hermitian_eigen(const CMatrix& H, double tol) {
    if (!H.square()) throw DimError("hermitian_eigen: matrix not square");
    if (!all_finite(H)) throw HermiticityError("hermitian_eigen: non-finite entries");
    if (hermiticity_defect(H) > tol)
        throw HermiticityError("hermitian_eigen: input not Hermitian within tol");

    const std::size_t n = H.rows;

    // Symmetrize exactly so roundoff in the input cannot bias the sweeps.
    CMatrix A(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            A(i, j) = 0.5 * (H(i, j) + std::conj(H(j, i)));

    CMatrix V = CMatrix::identity(n);
    const double scale0 = std::max(1.0, frobenius_norm(A));
    const double stop = 1e-15 * scale0;

    constexpr int kMaxSweeps = 100;
    int sweep = 0;
    for (; sweep < kMaxSweeps; ++sweep) {
        if (offdiag_norm(A) <= stop) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = A(p, q);
                const double mag = std::abs(apq);
                if (mag <= stop / n) continue;
                const Complex phase = apq / mag;  // apq = mag * phase
                const double app = A(p, p).real();
                const double aqq = A(q, q).real();
                const double theta = (app - aqq) / (2.0 * mag);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                // Unitary P acting on columns (p,q):
                //   col p <- c*col p + s*conj(phase)*col q
                //   col q <- -s*phase*col p + c*col q
                // A <- P^dagger A P; V <- V P.
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = A(k, p), akq = A(k, q);
                    A(k, p) = c * akp + s * std::conj(phase) * akq;
                    A(k, q) = -s * phase * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = A(p, k), aqk = A(q, k);
                    A(p, k) = c * apk + s * phase * aqk;
                    A(q, k) = -s * std::conj(phase) * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex vkp = V(k, p), vkq = V(k, q);
                    V(k, p) = c * vkp + s * std::conj(phase) * vkq;
                    V(k, q) = -s * phase * vkp + c * vkq;
                }
            }
        }
    }
    if (sweep == kMaxSweeps && offdiag_norm(A) > 10.0 * tol * scale0)
        throw ConvergenceError("hermitian_eigen: Jacobi sweeps did not converge");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return A(i, i).real() < A(j, j).real(); });

    EigenSystem es;
    es.values.reserve(n);
    es.vectors.reserve(n);
    for (std::size_t k : order) {
        es.values.push_back(A(k, k).real());
        CVector v(n);
        for (std::size_t r = 0; r < n; ++r) v[r] = V(r, k);
        fix_phase(v, std::max(tol, 1e-12));
        es.vectors.push_back(std::move(v));
    }
    return es;
}

std::vector<CVector> orthogonal_complement(const std::vector<CVector>& vs,
                                           std::size_t dim, double tol) {
    double maxn = 0.0;
    for (const CVector& v : vs) {
        if (v.size() != dim) throw DimError("orthogonal_complement: dimension mismatch");
        maxn = std::max(maxn, norm(v));
    }
    const double drop = tol * std::max(1.0, maxn);

    // Orthonormalize the spanning set (modified Gram-Schmidt, two passes).
    std::vector<CVector> basis;
    auto deflate = [&](CVector w) -> CVector {
        for (int pass = 0; pass < 2; ++pass)
            for (const CVector& b : basis) {
                const Complex c = inner(b, w);
                for (std::size_t k = 0; k < dim; ++k) w[k] -= c * b[k];
            }
        return w;
    };
    for (const CVector& v : vs) {
        CVector w = deflate(v);
        if (norm(w) > drop) basis.push_back(normalized(w));
    }
    const std::size_t rank = basis.size();

    // Extend with standard basis vectors; what survives spans the complement.
    std::vector<CVector> comp;
    for (std::size_t j = 0; j < dim && basis.size() < dim; ++j) {
        CVector e(dim);
        e[j] = 1.0;
        CVector w = deflate(std::move(e));
        if (norm(w) > std::max(drop, tol)) {
            CVector u = normalized(w);
            fix_phase(u, tol);
            basis.push_back(u);
            comp.push_back(std::move(u));
        }
    }
    (void)rank;
    return comp;
}

}  // namespace chist
