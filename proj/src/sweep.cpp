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

#include "mimocap/sweep.hpp"

#include <cmath>
#include <cstdio>

#include "mimocap/closed_forms.hpp"
#include "mimocap/dual_bisection.hpp"
#include "mimocap/error.hpp"

namespace mimocap
{

namespace
{

std::string format(double x)
{
    if (std::isnan(x))
        return "nan";
    if (std::isinf(x))
        return x > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

} // namespace

std::vector<double> sweep_grid(double min, double max, double step)
{
    if (!(step > 0.0) || !std::isfinite(min) || !std::isfinite(max))
        throw InvalidInput("sweep step must be positive and bounds finite");
    if (max < min)
        throw InvalidInput("empty sweep grid: max is below min");
    const auto n = static_cast<long long>(std::floor((max - min) / step + 1e-9)) + 1;
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(n));
    for (long long i = 0; i < n; ++i)
        grid.push_back(min + static_cast<double>(i) * step);
    return grid;
}

std::vector<SweepRow> run_sweep(const ProblemInstance &inst, SweepVariable var, const std::vector<double> &grid,
                                const SolverConfig &cfg, Strategy strategy)
{
    if (var == SweepVariable::InterferenceBudget && inst.num_constraints() == 0)
        throw InvalidInput("cannot sweep P_I of an instance without interference constraints");
    std::vector<SweepRow> rows;
    rows.reserve(grid.size());
    for (double v : grid)
    {
        ProblemInstance point = inst;
        if (var == SweepVariable::TotalPower)
            point.p_total = v;
        else
            for (auto &c : point.constraints)
                c.budget = v;

        SweepRow row;
        row.value = v;
        row.solution = solve(point, cfg, strategy);
        row.capacity_wf = waterfill_capacity(point, cfg.rank_tol);
        row.capacity_ipc = ipc_alone_capacity(point, cfg.rank_tol);
        row.regime = classify_regime(row.solution, activity_tolerance(cfg));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string sweep_csv_header(std::size_t num_constraints)
{
    std::string h = "sweep_value,C_nats,C_WF_nats,C_IPC_nats,mu1";
    auto indexed = [&](const char *name) {
        if (num_constraints == 1)
            h += std::string(",") + name;
        else
            for (std::size_t k = 1; k <= num_constraints; ++k)
                h += std::string(",") + name + "_" + std::to_string(k);
    };
    indexed("mu2");
    h += ",P1";
    indexed("P2");
    h += ",iterations,regime";
    return h;
}

void write_sweep_csv(std::ostream &out, const std::vector<SweepRow> &rows, std::size_t num_constraints)
{
    out << sweep_csv_header(num_constraints) << '\n';
    for (const auto &r : rows)
    {
        const Solution &s = r.solution;
        out << format(r.value) << ',' << format(s.capacity_nats) << ',' << format(r.capacity_wf) << ','
            << format(r.capacity_ipc) << ',' << format(s.duals.mu1);
        for (double mu : s.duals.mu2)
            out << ',' << format(mu);
        out << ',' << format(s.tx_power);
        for (double p : s.interference_powers)
            out << ',' << format(p);
        out << ',' << s.iterations << ',' << to_string(r.regime) << '\n';
    }
}

} // namespace mimocap
