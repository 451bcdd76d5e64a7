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

enum class Strategy
{
    Auto,      ///< exact shortcuts and closed forms first, iterative solver last
    Iterative, ///< iterative solver for every instance it can take
};

/// Capacity-achieving covariance for any valid instance.
///
/// Auto dispatch: zero channel, no constraints, zero budgets (projection onto the
/// common null space of their Grams), zero-forcing shortcut, all constraints
/// redundant, then for K = 1 the commuting, rank-1 W1, interference-only and
/// full-rank formulas, and finally the bisection iteration. A closed form is
/// only accepted when its KKT residuals stay below 1e-7. Closed forms report
/// zero iterations.
///
/// Constraints with a zero budget report an infinite dual.
/// Throws InvalidInput for invalid instances, DomainError for an invalid config.
Solution solve(const ProblemInstance &inst, const SolverConfig &cfg = {}, Strategy strategy = Strategy::Auto);

} // namespace mimocap
