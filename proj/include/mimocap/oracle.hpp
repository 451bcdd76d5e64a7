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

#include <cstdint>

#include "mimocap/problem.hpp"

namespace mimocap
{

/// Brute-force reference solver for small instances (m <= 6, K <= 3).
///
/// Step 1 scans a logarithmic grid of duals inside the dual bound boxes, then
/// polishes the best point by cyclic golden-section search on the dual
/// function. Each Lagrangian maximizer is scaled onto the feasible set and the
/// best one kept. Step 2 runs conditional-gradient ascent on log|I + W1R| over
/// {R ⪰ 0, tr R <= P_T, tr W₂ₖR <= P_Iₖ} from that point and from `restarts`
/// random feasible points, with rank-1 linear maximization steps and exact
/// line search. The better primal point wins.
///
/// Deterministic for a fixed seed.
struct OracleOptions
{
    int grid_points = 40;
    int refine_iters = 2000;
    int restarts = 1;
    std::uint64_t seed = 1;
};

struct OracleResult
{
    double capacity = 0.0;      ///< of the returned feasible covariance
    HermitianMatrix covariance; ///< primal feasible
    double upper_bound = 0.0;   ///< smallest dual function value seen
};

/// Throws DomainError above desk scale or for a zero interference budget.
OracleResult oracle_solve(const ProblemInstance &inst, const OracleOptions &opt = {});

OracleResult oracle_solve(const ProblemInstance &inst, int grid_points, int refine_iters);

} // namespace mimocap
