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

#include <cmath>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mimocap/closed_forms.hpp"
#include "mimocap/error.hpp"
#include "mimocap/instance_io.hpp"
#include "mimocap/solve.hpp"
#include "mimocap/sweep.hpp"

namespace
{

constexpr int exit_ok = 0;
constexpr int exit_input = 1;
constexpr int exit_not_converged = 2;

struct ConfigFlags
{
    double epsilon = 1e-10;
    double delta = -1.0; // epsilon/100 unless given
    int k_max = 500;
    std::string method = "auto";

    mimocap::SolverConfig config() const
    {
        mimocap::SolverConfig cfg = mimocap::SolverConfig::with_epsilon(epsilon);
        if (delta > 0.0)
            cfg.delta = delta;
        cfg.k_max = k_max;
        return cfg;
    }

    mimocap::Strategy strategy() const
    {
        return method == "iba" ? mimocap::Strategy::Iterative : mimocap::Strategy::Auto;
    }
};

void add_config_flags(CLI::App *cmd, ConfigFlags &flags)
{
    cmd->add_option("--epsilon", flags.epsilon, "outer residual tolerance")->check(CLI::PositiveNumber);
    cmd->add_option("--delta", flags.delta, "inner bisection accuracy (default epsilon/100)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--kmax", flags.k_max, "maximum outer iterations")->check(CLI::PositiveNumber);
    cmd->add_option("--method", flags.method, "auto: closed forms where they apply; iba: always iterate")
        ->check(CLI::IsMember({"auto", "iba"}));
}

int cmd_solve(const std::string &file, const ConfigFlags &flags, bool bits)
{
    const mimocap::ProblemInstance inst = mimocap::load_instance(file);
    const mimocap::Solution sol = mimocap::solve(inst, flags.config(), flags.strategy());
    nlohmann::json doc = mimocap::solution_to_json(sol);
    doc["capacity"] = bits ? doc["capacity_bits"] : doc["capacity_nats"];
    doc["capacity_unit"] = bits ? "bits" : "nats";
    std::cout << doc.dump(2) << '\n';
    return sol.converged ? exit_ok : exit_not_converged;
}

int cmd_sweep(const std::string &file, const std::string &var, double min, double max, double step,
              const ConfigFlags &flags)
{
    const mimocap::ProblemInstance inst = mimocap::load_instance(file);
    const auto grid = mimocap::sweep_grid(min, max, step);
    const auto which =
        var == "PT" ? mimocap::SweepVariable::TotalPower : mimocap::SweepVariable::InterferenceBudget;
    const auto rows = mimocap::run_sweep(inst, which, grid, flags.config(), flags.strategy());
    mimocap::write_sweep_csv(std::cout, rows, inst.num_constraints());
    for (const auto &r : rows)
        if (!r.solution.converged)
            return exit_not_converged;
    return exit_ok;
}

int cmd_classify(const std::string &file)
{
    const mimocap::ProblemInstance inst = mimocap::load_instance(file);
    std::cout << mimocap::report_to_json(mimocap::classify_capacity(inst)).dump(2) << '\n';
    return exit_ok;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Capacity and optimal transmit covariance of Gaussian MIMO channels under total power and "
                 "interference power constraints"};
    app.require_subcommand(1);

    std::string file;
    ConfigFlags flags;
    bool bits = false;
    std::string var;
    double min = 0.0, max = 0.0, step = 0.0;

    CLI::App *solve = app.add_subcommand("solve", "solve one instance, print a JSON solution document");
    solve->add_option("file", file, "instance file")->required();
    add_config_flags(solve, flags);
    solve->add_flag("--bits", bits, "report the headline capacity in bits");

    CLI::App *sweep = app.add_subcommand("sweep", "sweep P_T or P_I, print CSV");
    sweep->add_option("file", file, "instance file")->required();
    sweep->add_option("--var", var, "swept variable")->required()->check(CLI::IsMember({"PT", "PI"}));
    sweep->add_option("--min", min, "first grid value")->required();
    sweep->add_option("--max", max, "last grid value")->required();
    sweep->add_option("--step", step, "grid step")->required();
    add_config_flags(sweep, flags);

    CLI::App *classify = app.add_subcommand("classify", "print the capacity classification report");
    classify->add_option("file", file, "instance file")->required();

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        return app.exit(e) == 0 ? exit_ok : exit_input;
    }

    try
    {
        if (*solve)
            return cmd_solve(file, flags, bits);
        if (*sweep)
            return cmd_sweep(file, var, min, max, step, flags);
        return cmd_classify(file);
    }
    catch (const mimocap::NumericalError &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_not_converged;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
    }
}
