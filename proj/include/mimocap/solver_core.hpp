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

#include <string>
#include <vector>

#include "mimocap/problem.hpp"

namespace mimocap
{

/// Optimal covariance for fixed duals and the capacity it achieves.
struct DualResponse
{
    HermitianMatrix covariance;
    double capacity_nats = 0.0;
    bool singular_branch = false; ///< W_μ was rank-deficient and the problem was projected onto its range
};

/// R*(d) = W_μ^† (I - W_μ W1⁻¹ W_μ)₊ W_μ^† with W_μ² = μ₁I + Σₖ μ₂ₖW₂ₖ.
///
/// Works in the coordinates of the active eigenvectors of W_μ², which covers the
/// non-singular case (all eigenvectors) and the singular one (the range of the
/// weighted constraint Gram) with one code path; the off-range block is zero.
/// W1⁻¹ acts on the positive eigenspace only. Non-finite duals are ignored.
///
/// Throws DegenerateDualError if W_μ² = 0, InvalidInput for negative duals or a
/// dual vector of the wrong length.
DualResponse respond_to_duals(const ProblemInstance &inst, const DualPoint &d, double tol = default_rank_tol);

HermitianMatrix covariance_from_duals(const ProblemInstance &inst, const DualPoint &d, double tol = default_rank_tol);

/// Σ_{λ_a > 1} ln λ_a over the eigenvalues of W_μ^† W1 W_μ^†.
double capacity_from_duals(const ProblemInstance &inst, const DualPoint &d, double tol = default_rank_tol);

struct PowerProfile
{
    double tx_power = 0.0;
    std::vector<double> interference_powers;
};

PowerProfile powers_of(const ProblemInstance &inst, const HermitianMatrix &r);

/// (tr R*(d), [tr(W₂ₖR*(d))]).
PowerProfile powers_from_duals(const ProblemInstance &inst, const DualPoint &d, double tol = default_rank_tol);

/// KKT residuals of (sol.covariance, sol.duals) with the implied multiplier
/// M = μ₁I + Σμ₂ₖW₂ₖ - (I + W1R)⁻¹W1. Always returns.
KKTResiduals kkt_check(const ProblemInstance &inst, const Solution &sol, double tol = default_rank_tol);

/// Fills powers, activity flags and KKT residuals around a covariance and its duals.
/// A dual counts as active when it exceeds activity_tol.
Solution assemble_solution(const ProblemInstance &inst, const DualPoint &d, HermitianMatrix covariance,
                           double capacity_nats, std::string method, double activity_tol,
                           double tol = default_rank_tol);

} // namespace mimocap
