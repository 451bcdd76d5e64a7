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

#include "mimocap/solve.hpp"

#include <algorithm>
#include <limits>
#include <optional>

#include "mimocap/closed_forms.hpp"
#include "mimocap/dual_bisection.hpp"
#include "mimocap/error.hpp"
#include "mimocap/multiuser.hpp"
#include "mimocap/solver_core.hpp"
#include "mimocap/waterfill.hpp"

namespace mimocap
{

namespace
{

constexpr double closed_form_kkt_limit = 1e-7;

Solution zero_capacity(const ProblemInstance &inst, double tol)
{
    DualPoint d{0.0, std::vector<double>(inst.num_constraints(), 0.0)};
    return assemble_solution(inst, d, HermitianMatrix::zero(inst.dim()), 0.0, "zero-capacity", 0.0, tol);
}

Solution waterfill_solution(const ProblemInstance &inst, const char *method, double tol)
{
    WaterfillResult wf = waterfill(inst.w1, inst.p_total, tol);
    DualPoint d{1.0 / wf.water_level_inverse, std::vector<double>(inst.num_constraints(), 0.0)};
    Solution s = assemble_solution(inst, d, std::move(wf.covariance), wf.capacity_nats, method, 0.0, tol);
    s.iterations = 0;
    return s;
}

bool accept(const std::optional<Solution> &s)
{
    return s && s->kkt.max_residual() <= closed_form_kkt_limit;
}

std::optional<Solution> single_constraint_closed_form(const ProblemInstance &inst, const SolverConfig &cfg)
{
    const double tol = cfg.rank_tol;
    if (numerical_rank(inst.w1, tol) == 1)
    {
        std::optional<Solution> s = rank1_w1(inst, tol);
        if (accept(s))
            return s;
    }
    if (auto s = common_eigv(inst, cfg); accept(s))
        return s;
    for (auto form : {ipc_only, full_rank_tpc, full_rank_ipc, rank1_w2})
        if (auto s = form(inst, tol); accept(s))
            return s;
    return std::nullopt;
}

/// Zero budgets confine R to the null space of their Grams: solve there and embed.
// Nothing reaches the receiver once the zero-budget directions are removed.
Solution blocked_capacity(const ProblemInstance &inst, double tol)
{
    Solution s = zero_capacity(inst, tol);
    for (std::size_t k = 0; k < inst.num_constraints(); ++k)
        if (inst.constraints[k].budget == 0.0)
        {
            s.duals.mu2[k] = std::numeric_limits<double>::infinity();
            s.ipc_active[k] = true;
        }
    s.kkt.m_min_eigenvalue = 0.0;
    s.kkt.dual_psd_violation = 0.0;
    s.kkt.complementarity = 0.0;
    s.kkt.stationarity = 0.0;
    return s;
}

Solution solve_projected(const ProblemInstance &inst, const SolverConfig &cfg, Strategy strategy)
{
    const double tol = cfg.rank_tol;
    HermitianMatrix blocked = HermitianMatrix::zero(inst.dim());
    for (const auto &c : inst.constraints)
        if (c.budget == 0.0)
            blocked = blocked + c.w2;
    const CMatrix basis = null_space_basis(blocked, tol);
    if (basis.cols() == 0)
        return blocked_capacity(inst, tol);

    ProblemInstance reduced;
    reduced.w1 = congruence(basis, inst.w1);
    reduced.p_total = inst.p_total;
    std::vector<std::size_t> kept;
    for (std::size_t k = 0; k < inst.num_constraints(); ++k)
        if (inst.constraints[k].budget > 0.0)
        {
            reduced.constraints.push_back({congruence(basis, inst.constraints[k].w2), inst.constraints[k].budget});
            kept.push_back(k);
        }
    if (numerical_rank(reduced.w1, tol) == 0)
        return blocked_capacity(inst, tol);

    const Solution inner = solve(reduced, cfg, strategy);

    Solution s;
    s.covariance = embed(basis, inner.covariance);
    s.capacity_nats = inner.capacity_nats;
    s.duals.mu1 = inner.duals.mu1;
    s.duals.mu2.assign(inst.num_constraints(), std::numeric_limits<double>::infinity());
    s.ipc_active.assign(inst.num_constraints(), true);
    for (std::size_t j = 0; j < kept.size(); ++j)
    {
        s.duals.mu2[kept[j]] = inner.duals.mu2[j];
        s.ipc_active[kept[j]] = inner.ipc_active[j];
    }
    s.tpc_active = inner.tpc_active;
    const PowerProfile p = powers_of(inst, s.covariance);
    s.tx_power = p.tx_power;
    s.interference_powers = p.interference_powers;
    // Stationarity from the reduced problem.
    s.kkt = inner.kkt;
    s.kkt.slack_ipc.assign(inst.num_constraints(), 0.0);
    s.kkt.feasibility_ipc.assign(inst.num_constraints(), 0.0);
    for (std::size_t k = 0; k < inst.num_constraints(); ++k)
        s.kkt.feasibility_ipc[k] = std::max(0.0, p.interference_powers[k] - inst.constraints[k].budget);
    for (std::size_t j = 0; j < kept.size(); ++j)
        s.kkt.slack_ipc[kept[j]] = inner.kkt.slack_ipc[j];
    s.kkt.feasibility_tpc = std::max(0.0, p.tx_power - inst.p_total);
    s.iterations = inner.iterations;
    s.converged = inner.converged;
    s.residual = inner.residual;
    s.method = "zf-projection+" + inner.method;
    for (const DualPoint &h : inner.history)
    {
        DualPoint full{h.mu1, s.duals.mu2};
        for (std::size_t j = 0; j < kept.size(); ++j)
            full.mu2[kept[j]] = h.mu2[j];
        s.history.push_back(std::move(full));
    }
    return s;
}

} // namespace

Solution solve(const ProblemInstance &inst, const SolverConfig &cfg, Strategy strategy)
{
    inst.validate(cfg.rank_tol);
    cfg.validate();
    const double tol = cfg.rank_tol;

    if (numerical_rank(inst.w1, tol) == 0)
        return zero_capacity(inst, tol);
    if (inst.num_constraints() == 0)
        return waterfill_solution(inst, "waterfill", tol);
    if (std::any_of(inst.constraints.begin(), inst.constraints.end(), [](const auto &c) { return c.budget == 0.0; }))
        return solve_projected(inst, cfg, strategy);

    if (strategy == Strategy::Auto)
    {
        if (check_zf_shortcut(inst, tol))
            return waterfill_solution(inst, "zf-waterfill", tol);
        const auto redundant = check_ipc_redundant(inst, tol);
        if (std::all_of(redundant.begin(), redundant.end(), [](bool b) { return b; }))
            return waterfill_solution(inst, "waterfill", tol);
        if (inst.num_constraints() == 1)
            if (auto s = single_constraint_closed_form(inst, cfg))
                return *s;
    }

    if (inst.num_constraints() > 1)
        return solve_multiuser(inst, cfg);
    return iba_solve(inst, cfg);
}

} // namespace mimocap
