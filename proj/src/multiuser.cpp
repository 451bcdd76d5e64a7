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

#include "mimocap/multiuser.hpp"

#include "mimocap/dual_bisection.hpp"
#include "mimocap/error.hpp"
#include "mimocap/solve.hpp"

namespace mimocap
{

Solution solve_multiuser(const ProblemInstance &inst, const SolverConfig &cfg)
{
    const std::vector<bool> pinned = check_ipc_redundant(inst, cfg.rank_tol);
    Solution s = iba_solve(inst, cfg, pinned);
    for (std::size_t k = 0; k < inst.num_constraints(); ++k)
        if (pinned[k] && s.interference_powers[k] > inst.constraints[k].budget + cfg.epsilon)
            return iba_solve(inst, cfg);
    return s;
}

Solution solve_sum_ipc(const ProblemInstance &inst, double p_i_total, const SolverConfig &cfg)
{
    if (inst.num_constraints() == 0)
        throw InvalidInput("sum interference constraint needs at least one W2");
    if (!(p_i_total >= 0.0))
        throw InvalidInput("total interference budget must be non-negative");
    ProblemInstance sum;
    sum.w1 = inst.w1;
    sum.p_total = inst.p_total;
    sum.constraints.push_back({inst.combined_ipc_gram(), p_i_total});
    return solve(sum, cfg);
}

} // namespace mimocap
