// SPDX-License-Identifier: Apache-2.0
//
// mimocap - capacity and optimal signaling of Gaussian MIMO channels under
// total power and interference power constraints
// Copyright (C) 2026 The mimocap authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <complex>

#include <Eigen/Dense>

namespace mimocap
{

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Relative eigenvalue threshold below which a mode counts as numerically zero.
inline constexpr double default_rank_tol = 1e-9;

/// Dense complex square matrix with exact Hermitian symmetry.
///
/// Construction replaces the input by (A + A⁺)/2, so entry (i, j) is always the
/// exact conjugate of entry (j, i) and the diagonal is real. Real inputs are
/// embedded with zero imaginary parts.
class HermitianMatrix
{
public:
    /// 1×1 zero matrix.
    HermitianMatrix();

    /// Throws InvalidInput for empty, non-square or non-finite input.
    explicit HermitianMatrix(const CMatrix &a);

    static HermitianMatrix from_real(const Eigen::MatrixXd &a);
    static HermitianMatrix identity(Index m);
    static HermitianMatrix zero(Index m);
    static HermitianMatrix diagonal(const RVector &d);

    /// H⁺H for an n×m channel matrix H.
    static HermitianMatrix gram(const CMatrix &h);

    /// Σ wᵢ vᵢvᵢ⁺ over the columns of `vectors`.
    static HermitianMatrix from_modes(const CMatrix &vectors, const RVector &weights);

    Index dim() const { return data_.rows(); }
    const CMatrix &matrix() const { return data_; }
    Complex operator()(Index i, Index j) const { return data_(i, j); }

    double trace() const;
    double frobenius_norm() const;
    bool is_zero(double tol = 0.0) const;

    HermitianMatrix operator+(const HermitianMatrix &o) const;
    HermitianMatrix operator-(const HermitianMatrix &o) const;
    HermitianMatrix operator*(double s) const;
    friend HermitianMatrix operator*(double s, const HermitianMatrix &a) { return a * s; }

private:
    CMatrix data_;
};

/// Real part of tr(A·B) for Hermitian A, B (the imaginary part vanishes).
double trace_product(const HermitianMatrix &a, const HermitianMatrix &b);

/// T⁺·A·T, the restriction of A to the span of the columns of T.
HermitianMatrix congruence(const CMatrix &t, const HermitianMatrix &a);

/// T·A·T⁺, the embedding of A back through T.
HermitianMatrix embed(const CMatrix &t, const HermitianMatrix &a);

struct EigenDecomposition
{
    RVector values;  ///< descending
    CMatrix vectors; ///< column i pairs with values(i)
};

/// Eigendecomposition with eigenvalues sorted descending; ties keep solver order.
/// Throws NumericalError if the eigensolver fails.
EigenDecomposition eig(const HermitianMatrix &a);

/// Σ_{λᵢ > τ} λᵢuᵢuᵢ⁺ with τ = tol·max|λ|.
HermitianMatrix psd_part(const HermitianMatrix &a, double tol = default_rank_tol);

/// Moore-Penrose inverse of a PSD matrix: eigenvalues above tol·λ₁ are inverted, the rest dropped.
HermitianMatrix pinv(const HermitianMatrix &a, double tol = default_rank_tol);

/// PSD square root. Throws DomainError when an eigenvalue is below -tol·max(1, max|λ|).
HermitianMatrix sqrt_psd(const HermitianMatrix &a, double tol = default_rank_tol);

/// Number of eigenvalues with |λᵢ| > tol·max(1, |λ₁|).
Index numerical_rank(const HermitianMatrix &a, double tol = default_rank_tol);

/// Orthonormal basis (columns) of the numerical null space, same threshold as numerical_rank.
CMatrix null_space_basis(const HermitianMatrix &a, double tol = default_rank_tol);

/// Orthonormal basis of the numerical range, same threshold as numerical_rank.
CMatrix range_basis(const HermitianMatrix &a, double tol = default_rank_tol);

/// N(A) ⊆ N(B): every null eigenvector u of A has ‖B·u‖ ≤ tol·(1 + ‖B‖).
/// Throws InvalidInput on dimension mismatch.
bool null_space_contained(const HermitianMatrix &a, const HermitianMatrix &b, double tol = default_rank_tol);

double min_eigenvalue(const HermitianMatrix &a);
double max_eigenvalue(const HermitianMatrix &a);

/// λ_min ≥ -tol·max(1, max|λ|).
bool is_psd(const HermitianMatrix &a, double tol = default_rank_tol);

} // namespace mimocap
