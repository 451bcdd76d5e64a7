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

#include "mimocap/problem.hpp"

#include <algorithm>
#include <cmath>

#include "mimocap/error.hpp"

namespace mimocap
{

HermitianMatrix ProblemInstance::combined_ipc_gram() const
{
    HermitianMatrix sum = HermitianMatrix::zero(dim());
    for (const auto &c : constraints)
        sum = sum + c.w2;
    return sum;
}

void ProblemInstance::validate(double tol) const
{
    if (!is_psd(w1, tol))
        throw InvalidInput("W1 is not positive semidefinite (min eigenvalue " + std::to_string(min_eigenvalue(w1)) +
                           ")");
    if (!(p_total > 0.0) || !std::isfinite(p_total))
        throw InvalidInput("P_T must be positive and finite, got " + std::to_string(p_total));
    for (std::size_t k = 0; k < constraints.size(); ++k)
    {
        const auto &c = constraints[k];
        const std::string name = "W2[" + std::to_string(k) + "]";
        if (c.w2.dim() != dim())
            throw InvalidInput(name + " has dimension " + std::to_string(c.w2.dim()) + ", expected " +
                               std::to_string(dim()));
        if (!is_psd(c.w2, tol))
            throw InvalidInput(name + " is not positive semidefinite (min eigenvalue " +
                               std::to_string(min_eigenvalue(c.w2)) + ")");
        if (!(c.budget >= 0.0) || !std::isfinite(c.budget))
            throw InvalidInput("P_I[" + std::to_string(k) + "] must be non-negative and finite, got " +
                               std::to_string(c.budget));
    }
}

double KKTResiduals::max_residual() const
{
    double r = std::max({stationarity, slack_tpc, feasibility_tpc, psd_violation});
    for (double s : slack_ipc)
        r = std::max(r, s);
    for (double f : feasibility_ipc)
        r = std::max(r, f);
    return r;
}

SolverConfig SolverConfig::with_epsilon(double epsilon)
{
    SolverConfig cfg;
    cfg.epsilon = epsilon;
    cfg.delta = epsilon / 100.0;
    return cfg;
}

void SolverConfig::validate() const
{
    if (!(delta > 0.0) || !(epsilon > 0.0))
        throw DomainError("delta and epsilon must be positive");
    if (delta > epsilon)
        throw DomainError("delta must not exceed epsilon");
    if (k_max < 1)
        throw DomainError("k_max must be at least 1");
    if (!(rank_tol > 0.0))
        throw DomainError("rank_tol must be positive");
}

std::string to_string(Regime r)
{
    switch (r)
    {
    case Regime::PowerLimited:
        return "power-limited";
    case Regime::InterferenceLimited:
        return "interference-limited";
    case Regime::JointlyConstrained:
        return "jointly-constrained";
    }
    return "unknown";
}

} // namespace mimocap
