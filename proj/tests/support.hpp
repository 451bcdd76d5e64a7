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

#include <cmath>
#include <random>

#include "mimocap/hermitian.hpp"
#include "mimocap/problem.hpp"

namespace testing
{

using namespace mimocap;

inline HermitianMatrix real_matrix(std::initializer_list<std::initializer_list<double>> rows)
{
    const Index m = static_cast<Index>(rows.size());
    Eigen::MatrixXd a(m, m);
    Index i = 0;
    for (const auto &row : rows)
    {
        Index j = 0;
        for (double x : row)
            a(i, j++) = x;
        ++i;
    }
    return HermitianMatrix::from_real(a);
}

inline HermitianMatrix diag(std::initializer_list<double> d)
{
    RVector v(static_cast<Index>(d.size()));
    Index i = 0;
    for (double x : d)
        v(i++) = x;
    return HermitianMatrix::diagonal(v);
}

inline ProblemInstance make_instance(const HermitianMatrix &w1, double p_total,
                                     std::initializer_list<std::pair<HermitianMatrix, double>> ipcs = {})
{
    ProblemInstance inst;
    inst.w1 = w1;
    inst.p_total = p_total;
    for (const auto &[w2, budget] : ipcs)
        inst.constraints.push_back({w2, budget});
    return inst;
}

// Example channels: W1 = diag(1, 0.5) against a full-rank or a rank-1 W2.
inline HermitianMatrix example_w1() { return diag({1.0, 0.5}); }
inline HermitianMatrix example1_w2() { return real_matrix({{1.0, -0.5}, {-0.5, 1.0}}); }
inline HermitianMatrix example2_w2() { return real_matrix({{1.0, -1.0}, {-1.0, 1.0}}); }

inline CMatrix random_complex(Index rows, Index cols, std::mt19937_64 &rng)
{
    std::normal_distribution<double> n(0.0, std::sqrt(0.5));
    CMatrix a(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j)
            a(i, j) = Complex(n(rng), n(rng));
    return a;
}

inline CMatrix random_unitary(Index m, std::mt19937_64 &rng)
{
    Eigen::HouseholderQR<CMatrix> qr(random_complex(m, m, rng));
    return qr.householderQ() * CMatrix::Identity(m, m);
}

/// H⁺H with H of size rank×m: PSD of the given rank (almost surely).
inline HermitianMatrix random_psd(Index m, Index rank, std::mt19937_64 &rng)
{
    return HermitianMatrix::gram(random_complex(rank, m, rng));
}

inline HermitianMatrix random_hermitian(Index m, std::mt19937_64 &rng)
{
    const CMatrix a = random_complex(m, m, rng);
    return HermitianMatrix(CMatrix(a + a.adjoint()));
}

inline double uniform(double lo, double hi, std::mt19937_64 &rng)
{
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int uniform_int(int lo, int hi, std::mt19937_64 &rng)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

} // namespace testing
