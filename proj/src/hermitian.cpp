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

#include "mimocap/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "mimocap/error.hpp"

namespace mimocap
{

namespace
{

double magnitude_scale(const RVector &values)
{
    return values.size() == 0 ? 0.0 : values.cwiseAbs().maxCoeff();
}

double rank_threshold(const RVector &values, double tol)
{
    return tol * std::max(1.0, magnitude_scale(values));
}

void require_same_dim(const HermitianMatrix &a, const HermitianMatrix &b)
{
    if (a.dim() != b.dim())
        throw InvalidInput("dimension mismatch: " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
}

CMatrix select_columns(const CMatrix &m, const std::vector<Index> &cols)
{
    CMatrix out(m.rows(), static_cast<Index>(cols.size()));
    for (std::size_t k = 0; k < cols.size(); ++k)
        out.col(static_cast<Index>(k)) = m.col(cols[k]);
    return out;
}

} // namespace

HermitianMatrix::HermitianMatrix() : data_(CMatrix::Zero(1, 1)) {}

HermitianMatrix::HermitianMatrix(const CMatrix &a)
{
    if (a.rows() == 0 || a.rows() != a.cols())
        throw InvalidInput("Hermitian matrix must be square and non-empty, got " + std::to_string(a.rows()) + "x" +
                           std::to_string(a.cols()));
    if (!a.allFinite())
        throw InvalidInput("matrix contains non-finite entries");

    const Index m = a.rows();
    data_.resize(m, m);
    for (Index i = 0; i < m; ++i)
    {
        data_(i, i) = Complex(a(i, i).real(), 0.0);
        for (Index j = i + 1; j < m; ++j)
        {
            const Complex v = 0.5 * (a(i, j) + std::conj(a(j, i)));
            data_(i, j) = v;
            data_(j, i) = std::conj(v);
        }
    }
}

HermitianMatrix HermitianMatrix::from_real(const Eigen::MatrixXd &a)
{
    return HermitianMatrix(CMatrix(a.cast<Complex>()));
}

HermitianMatrix HermitianMatrix::identity(Index m)
{
    return HermitianMatrix(CMatrix::Identity(m, m));
}

HermitianMatrix HermitianMatrix::zero(Index m)
{
    return HermitianMatrix(CMatrix::Zero(m, m));
}

HermitianMatrix HermitianMatrix::diagonal(const RVector &d)
{
    return HermitianMatrix(CMatrix(d.cast<Complex>().asDiagonal()));
}

HermitianMatrix HermitianMatrix::gram(const CMatrix &h)
{
    return HermitianMatrix(CMatrix(h.adjoint() * h));
}

HermitianMatrix HermitianMatrix::from_modes(const CMatrix &vectors, const RVector &weights)
{
    return HermitianMatrix(CMatrix(vectors * weights.cast<Complex>().asDiagonal() * vectors.adjoint()));
}

double HermitianMatrix::trace() const
{
    return data_.trace().real();
}

double HermitianMatrix::frobenius_norm() const
{
    return data_.norm();
}

bool HermitianMatrix::is_zero(double tol) const
{
    return data_.cwiseAbs().maxCoeff() <= tol;
}

HermitianMatrix HermitianMatrix::operator+(const HermitianMatrix &o) const
{
    require_same_dim(*this, o);
    return HermitianMatrix(CMatrix(data_ + o.data_));
}

HermitianMatrix HermitianMatrix::operator-(const HermitianMatrix &o) const
{
    require_same_dim(*this, o);
    return HermitianMatrix(CMatrix(data_ - o.data_));
}

HermitianMatrix HermitianMatrix::operator*(double s) const
{
    return HermitianMatrix(CMatrix(data_ * s));
}

double trace_product(const HermitianMatrix &a, const HermitianMatrix &b)
{
    require_same_dim(a, b);
    // tr(AB) = Σᵢⱼ aᵢⱼ bⱼᵢ = Σᵢⱼ aᵢⱼ conj(bᵢⱼ)
    return (a.matrix().array() * b.matrix().conjugate().array()).sum().real();
}

HermitianMatrix congruence(const CMatrix &t, const HermitianMatrix &a)
{
    return HermitianMatrix(CMatrix(t.adjoint() * a.matrix() * t));
}

HermitianMatrix embed(const CMatrix &t, const HermitianMatrix &a)
{
    return HermitianMatrix(CMatrix(t * a.matrix() * t.adjoint()));
}

EigenDecomposition eig(const HermitianMatrix &a)
{
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(a.matrix());
    if (solver.info() != Eigen::Success)
        throw NumericalError("Hermitian eigendecomposition did not converge");

    const Index m = a.dim();
    const RVector &asc = solver.eigenvalues();
    std::vector<Index> order(static_cast<std::size_t>(m));
    std::iota(order.begin(), order.end(), Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Index x, Index y) { return asc(x) > asc(y); });

    EigenDecomposition out;
    out.values.resize(m);
    out.vectors.resize(m, m);
    for (Index k = 0; k < m; ++k)
    {
        out.values(k) = asc(order[static_cast<std::size_t>(k)]);
        out.vectors.col(k) = solver.eigenvectors().col(order[static_cast<std::size_t>(k)]);
    }
    return out;
}

HermitianMatrix psd_part(const HermitianMatrix &a, double tol)
{
    const auto ed = eig(a);
    const double thr = tol * magnitude_scale(ed.values);
    RVector w = ed.values;
    for (Index i = 0; i < w.size(); ++i)
        if (!(w(i) > thr))
            w(i) = 0.0;
    return HermitianMatrix::from_modes(ed.vectors, w);
}

HermitianMatrix pinv(const HermitianMatrix &a, double tol)
{
    const auto ed = eig(a);
    const double thr = tol * std::max(ed.values(0), 0.0);
    RVector w = RVector::Zero(ed.values.size());
    for (Index i = 0; i < w.size(); ++i)
        if (ed.values(i) > thr && ed.values(i) > 0.0)
            w(i) = 1.0 / ed.values(i);
    return HermitianMatrix::from_modes(ed.vectors, w);
}

HermitianMatrix sqrt_psd(const HermitianMatrix &a, double tol)
{
    const auto ed = eig(a);
    const double floor = -rank_threshold(ed.values, tol);
    RVector w(ed.values.size());
    for (Index i = 0; i < w.size(); ++i)
    {
        if (ed.values(i) < floor)
            throw DomainError("square root of a matrix with negative eigenvalue " + std::to_string(ed.values(i)));
        w(i) = std::sqrt(std::max(ed.values(i), 0.0));
    }
    return HermitianMatrix::from_modes(ed.vectors, w);
}

Index numerical_rank(const HermitianMatrix &a, double tol)
{
    const auto ed = eig(a);
    const double thr = rank_threshold(ed.values, tol);
    return (ed.values.array().abs() > thr).count();
}

CMatrix null_space_basis(const HermitianMatrix &a, double tol)
{
    const auto ed = eig(a);
    const double thr = rank_threshold(ed.values, tol);
    std::vector<Index> cols;
    for (Index i = 0; i < ed.values.size(); ++i)
        if (std::abs(ed.values(i)) <= thr)
            cols.push_back(i);
    return select_columns(ed.vectors, cols);
}

CMatrix range_basis(const HermitianMatrix &a, double tol)
{
    const auto ed = eig(a);
    const double thr = rank_threshold(ed.values, tol);
    std::vector<Index> cols;
    for (Index i = 0; i < ed.values.size(); ++i)
        if (std::abs(ed.values(i)) > thr)
            cols.push_back(i);
    return select_columns(ed.vectors, cols);
}

bool null_space_contained(const HermitianMatrix &a, const HermitianMatrix &b, double tol)
{
    require_same_dim(a, b);
    const CMatrix null_a = null_space_basis(a, tol);
    if (null_a.cols() == 0)
        return true;
    const double bound = tol * (1.0 + b.frobenius_norm());
    for (Index k = 0; k < null_a.cols(); ++k)
        if ((b.matrix() * null_a.col(k)).norm() > bound)
            return false;
    return true;
}

double min_eigenvalue(const HermitianMatrix &a)
{
    const auto ed = eig(a);
    return ed.values(ed.values.size() - 1);
}

double max_eigenvalue(const HermitianMatrix &a)
{
    return eig(a).values(0);
}

bool is_psd(const HermitianMatrix &a, double tol)
{
    const auto ed = eig(a);
    return ed.values(ed.values.size() - 1) >= -rank_threshold(ed.values, tol);
}

} // namespace mimocap
