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

#include "mimocap/problem.hpp"

namespace mimocap
{

/// Per-constraint interference limits through cyclic bisection over all duals.
///
/// Constraints that water-filling already satisfies start pinned at μ₂ₖ = 0.
/// If the final covariance violates a pinned budget by more than epsilon the
/// iteration reruns with every constraint free.
Solution solve_multiuser(const ProblemInstance &inst, const SolverConfig &cfg);

/// Single constraint on the total interference: W2 = Σₖ W₂ₖ with budget p_i_total.
/// Throws InvalidInput for an instance without constraints or a negative budget.
Solution solve_sum_ipc(const ProblemInstance &inst, double p_i_total, const SolverConfig &cfg);

} // namespace mimocap
