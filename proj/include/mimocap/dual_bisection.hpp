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

#include <functional>
#include <vector>

#include "mimocap/problem.hpp"
#include "mimocap/solver_core.hpp"

namespace mimocap
{

struct BisectionResult
{
    double value = 0.0;
    int iterations = 0;
};

/// Root of a function that is >= 0 left of its root and <= 0 right of it.
///
/// Halves [lo, hi] until its width is at most eps, stopping early if a midpoint
/// hits f = 0 exactly. Returns the upper end of the final bracket, which lies on
/// the f <= 0 side. At most ceil(log2((hi - lo)/eps)) evaluations.
///
/// Throws DomainError if lo > hi or eps <= 0.
BisectionResult bisect(const std::function<double(double)> &f, double lo, double hi, double eps);

/// Upper ends of the intervals that contain the optimal duals.
struct DualBounds
{
    double mu1_upper = 0.0;
    std::vector<double> mu2_upper; ///< +inf for a zero budget, 0 for a zero Gram
};

/// μ₁ᵤ = m/(P_T + 1/λ₁(W1)), μ₂ᵤₖ = 1/(P_Iₖ/r₂ₖ + λ_m(W₂ₖ)/λ₁(W1)).
/// Throws ZeroChannelError if W1 = 0.
DualBounds dual_bounds(const ProblemInstance &inst, double tol = default_rank_tol);

/// Per constraint: tr(W₂ₖ·R_WF) <= P_Iₖ, i.e. water-filling alone already respects it.
std::vector<bool> check_ipc_redundant(const ProblemInstance &inst, double tol = default_rank_tol);

/// True when every constraint Gram has its range inside N(W1), so water-filling
/// leaks no interference at all.
bool check_zf_shortcut(const ProblemInstance &inst, double tol = default_rank_tol);

/// Evaluates (tr R, [tr W₂ₖR]) at given duals.
using PowerOracle = std::function<PowerProfile(const DualPoint &)>;

struct DualIteration
{
    DualPoint duals;
    int iterations = 0;
    bool converged = false;
    double residual = 0.0;
    std::vector<DualPoint> history;
};

/// Cyclic coordinate bisection on the complementary slackness functions
/// f₁ = μ₁(P₁ - P_T) and f₂ₖ = μ₂ₖ(P₂ₖ - P_Iₖ), starting from μ₂ = 0.
///
/// Each outer iteration bisects μ₁ with μ₂ fixed, then each unpinned μ₂ₖ in
/// ascending k with the others fixed. Stops when
/// max(|f₁|, |f₂ₖ|, feasibility excess) <= epsilon or after k_max iterations;
/// in the latter case the iterate with the smallest residual is returned.
/// Pinned constraints keep μ₂ₖ = 0.
DualIteration iterate_duals(const PowerOracle &powers, double p_total, const std::vector<double> &budgets,
                            const DualBounds &bounds, const SolverConfig &cfg,
                            const std::vector<bool> &pinned = {});

/// Duals from iterate_duals on the matrix problem, covariance from them.
/// Non-convergence is reported through Solution::converged, never thrown.
Solution iba_solve(const ProblemInstance &inst, const SolverConfig &cfg, const std::vector<bool> &pinned = {});

/// Duals at or below tol count as zero.
Regime classify_regime(const Solution &sol, double tol);

/// Activity threshold matching the inner bisection accuracy.
double activity_tolerance(const SolverConfig &cfg);

} // namespace mimocap
