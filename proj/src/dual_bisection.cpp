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

#include "mimocap/dual_bisection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mimocap/error.hpp"
#include "mimocap/waterfill.hpp"

namespace mimocap
{

namespace
{

constexpr double inf = std::numeric_limits<double>::infinity();

double slackness_residual(const DualPoint &d, const PowerProfile &p, double p_total,
                          const std::vector<double> &budgets)
{
    double r = std::abs(d.mu1 * (p.tx_power - p_total));
    r = std::max(r, p.tx_power - p_total);
    for (std::size_t k = 0; k < budgets.size(); ++k)
    {
        const double gap = p.interference_powers[k] - budgets[k];
        r = std::max({r, std::abs(d.mu2[k] * gap), gap});
    }
    return r;
}

} // namespace

BisectionResult bisect(const std::function<double(double)> &f, double lo, double hi, double eps)
{
    if (lo > hi)
        throw DomainError("bisect: lower end exceeds upper end");
    if (!(eps > 0.0))
        throw DomainError("bisect: accuracy must be positive");

    BisectionResult out;
    while (hi - lo > eps)
    {
        const double x = 0.5 * (lo + hi);
        if (x <= lo || x >= hi)
            break; // bracket below floating-point resolution
        const double fx = f(x);
        ++out.iterations;
        if (fx == 0.0)
        {
            out.value = x;
            return out;
        }
        if (fx < 0.0)
            hi = x;
        else
            lo = x;
    }
    out.value = hi;
    return out;
}

DualBounds dual_bounds(const ProblemInstance &inst, double tol)
{
    const double lambda1 = max_eigenvalue(inst.w1);
    if (numerical_rank(inst.w1, tol) == 0)
        throw ZeroChannelError("main channel Gram W1 is zero");

    DualBounds b;
    b.mu1_upper = static_cast<double>(inst.dim()) / (inst.p_total + 1.0 / lambda1);
    for (const auto &c : inst.constraints)
    {
        const Index r2 = numerical_rank(c.w2, tol);
        if (r2 == 0)
            b.mu2_upper.push_back(0.0);
        else if (c.budget == 0.0)
            b.mu2_upper.push_back(inf);
        else
        {
            const double lambda_min = std::max(0.0, min_eigenvalue(c.w2));
            b.mu2_upper.push_back(1.0 / (c.budget / static_cast<double>(r2) + lambda_min / lambda1));
        }
    }
    return b;
}

std::vector<bool> check_ipc_redundant(const ProblemInstance &inst, double tol)
{
    std::vector<bool> out(inst.num_constraints(), true);
    if (numerical_rank(inst.w1, tol) == 0)
        return out;
    const HermitianMatrix r = waterfill(inst.w1, inst.p_total, tol).covariance;
    for (std::size_t k = 0; k < inst.num_constraints(); ++k)
    {
        const double budget = inst.constraints[k].budget;
        out[k] = trace_product(inst.constraints[k].w2, r) <= budget + 1e-12 * std::max(1.0, budget);
    }
    return out;
}

bool check_zf_shortcut(const ProblemInstance &inst, double tol)
{
    const double bound = tol * std::max(1.0, inst.w1.frobenius_norm());
    for (const auto &c : inst.constraints)
    {
        const CMatrix range = range_basis(c.w2, tol);
        for (Index k = 0; k < range.cols(); ++k)
            if ((inst.w1.matrix() * range.col(k)).norm() > bound)
                return false;
    }
    return true;
}

DualIteration iterate_duals(const PowerOracle &powers, double p_total, const std::vector<double> &budgets,
                            const DualBounds &bounds, const SolverConfig &cfg, const std::vector<bool> &pinned)
{
    cfg.validate();
    const std::size_t K = budgets.size();
    auto is_pinned = [&](std::size_t k) { return k < pinned.size() && pinned[k]; };

    DualPoint d;
    d.mu2.assign(K, 0.0);

    auto f1 = [&](double x) {
        DualPoint trial = d;
        trial.mu1 = x;
        return x * (powers(trial).tx_power - p_total);
    };

    DualIteration out;
    DualIteration best;
    best.residual = inf;

    for (int k = 1; k <= cfg.k_max; ++k)
    {
        d.mu1 = bisect(f1, 0.0, bounds.mu1_upper, cfg.delta).value;

        if (k == 1)
        {
            // Water-filling already feasible: the interference constraints are redundant.
            const double r = slackness_residual(d, powers(d), p_total, budgets);
            if (r <= cfg.epsilon)
            {
                out.duals = d;
                out.iterations = 1;
                out.converged = true;
                out.residual = r;
                out.history.push_back(d);
                return out;
            }
        }

        for (std::size_t j = 0; j < K; ++j)
        {
            if (is_pinned(j))
                continue;
            auto f2 = [&](double x) {
                DualPoint trial = d;
                trial.mu2[j] = x;
                return x * (powers(trial).interference_powers[j] - budgets[j]);
            };
            d.mu2[j] = bisect(f2, 0.0, bounds.mu2_upper[j], cfg.delta).value;
        }

        const double r = slackness_residual(d, powers(d), p_total, budgets);
        out.history.push_back(d);
        if (r < best.residual)
        {
            best.duals = d;
            best.residual = r;
            best.iterations = k;
        }
        if (r <= cfg.epsilon)
        {
            out.duals = d;
            out.iterations = k;
            out.converged = true;
            out.residual = r;
            return out;
        }
    }

    out.duals = best.duals;
    out.residual = best.residual;
    out.iterations = cfg.k_max;
    out.converged = false;
    return out;
}

Solution iba_solve(const ProblemInstance &inst, const SolverConfig &cfg, const std::vector<bool> &pinned)
{
    const DualBounds bounds = dual_bounds(inst, cfg.rank_tol);
    std::vector<double> budgets;
    for (const auto &c : inst.constraints)
        budgets.push_back(c.budget);

    const PowerOracle powers = [&](const DualPoint &d) { return powers_from_duals(inst, d, cfg.rank_tol); };
    DualIteration it = iterate_duals(powers, inst.p_total, budgets, bounds, cfg, pinned);

    DualResponse resp = respond_to_duals(inst, it.duals, cfg.rank_tol);
    Solution s = assemble_solution(inst, it.duals, std::move(resp.covariance), resp.capacity_nats, "iba",
                                   activity_tolerance(cfg), cfg.rank_tol);
    s.iterations = it.iterations;
    s.converged = it.converged;
    s.residual = it.residual;
    s.history = std::move(it.history);
    return s;
}

Regime classify_regime(const Solution &sol, double tol)
{
    const bool ipc_binding = std::any_of(sol.duals.mu2.begin(), sol.duals.mu2.end(), [&](double mu) { return mu > tol; });
    if (!ipc_binding)
        return Regime::PowerLimited;
    if (!(sol.duals.mu1 > tol))
        return Regime::InterferenceLimited;
    return Regime::JointlyConstrained;
}

double activity_tolerance(const SolverConfig &cfg)
{
    return 100.0 * cfg.delta;
}

} // namespace mimocap
