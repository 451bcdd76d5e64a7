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

#include <ostream>
#include <string>
#include <vector>

#include "mimocap/problem.hpp"
#include "mimocap/solve.hpp"

namespace mimocap
{

enum class SweepVariable
{
    TotalPower,        ///< P_T
    InterferenceBudget ///< every P_Iₖ set to the same value
};

struct SweepRow
{
    double value = 0.0;
    Solution solution;
    double capacity_wf = 0.0;
    double capacity_ipc = 0.0; ///< NaN unless K = 1
    Regime regime = Regime::PowerLimited;
};

/// min, min + step, ... up to max, with 1e-9 of slack on the point count.
/// Throws InvalidInput when the grid is empty or step <= 0.
std::vector<double> sweep_grid(double min, double max, double step);

/// Solves every grid point independently, rows in grid order.
/// Throws InvalidInput when sweeping budgets of an instance without constraints.
std::vector<SweepRow> run_sweep(const ProblemInstance &inst, SweepVariable var, const std::vector<double> &grid,
                                const SolverConfig &cfg, Strategy strategy = Strategy::Auto);

/// sweep_value,C_nats,C_WF_nats,C_IPC_nats,mu1,mu2...,P1,P2...,iterations,regime
std::string sweep_csv_header(std::size_t num_constraints);

void write_sweep_csv(std::ostream &out, const std::vector<SweepRow> &rows, std::size_t num_constraints);

} // namespace mimocap
