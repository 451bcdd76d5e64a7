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

#include "mimocap/waterfill.hpp"

#include <cmath>
#include <string>

#include "mimocap/error.hpp"

namespace mimocap
{

WaterfillResult waterfill(const HermitianMatrix &w1, double p_total, double tol)
{
    if (!(p_total > 0.0) || !std::isfinite(p_total))
        throw DomainError("total power must be positive and finite, got " + std::to_string(p_total));

    const auto ed = eig(w1);
    const Index rank = numerical_rank(w1, tol);
    if (rank == 0)
        throw ZeroChannelError("main channel Gram W1 is zero");

    // Largest k whose level (P + Σ_{i<=k} 1/λᵢ)/k still clears 1/λ_k.
    double inverse_sum = 0.0;
    double level = 0.0;
    for (Index k = 1; k <= rank; ++k)
    {
        inverse_sum += 1.0 / ed.values(k - 1);
        const double candidate = (p_total + inverse_sum) / static_cast<double>(k);
        if (candidate > 1.0 / ed.values(k - 1))
            level = candidate;
        else
            break;
    }

    WaterfillResult out;
    out.water_level_inverse = level;
    RVector power = RVector::Zero(w1.dim());
    for (Index i = 0; i < rank; ++i)
    {
        const double p = level - 1.0 / ed.values(i);
        if (p > 0.0)
        {
            power(i) = p;
            ++out.active_modes;
            out.capacity_nats += std::log(level * ed.values(i));
        }
    }
    out.covariance = HermitianMatrix::from_modes(ed.vectors, power);
    return out;
}

double capacity_of(const HermitianMatrix &r, const HermitianMatrix &w1)
{
    if (r.dim() != w1.dim())
        throw InvalidInput("capacity_of: dimension mismatch");
    const HermitianMatrix q = sqrt_psd(w1);
    const auto ed = eig(congruence(q.matrix(), r));
    double c = 0.0;
    for (Index i = 0; i < ed.values.size(); ++i)
        if (ed.values(i) > 0.0)
            c += std::log1p(ed.values(i));
    return c;
}

} // namespace mimocap
