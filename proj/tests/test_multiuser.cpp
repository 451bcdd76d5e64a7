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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mimocap/dual_bisection.hpp"
#include "mimocap/multiuser.hpp"
#include "mimocap/solve.hpp"
#include "support.hpp"

using namespace mimocap;
using testing::diag;
using testing::make_instance;

TEST_CASE("per-axis interference caps")
{
    const SolverConfig cfg;
    const auto inst = make_instance(HermitianMatrix::identity(2), 10.0, {{diag({1.0, 0.0}), 0.3}, {diag({0.0, 1.0}), 0.3}});
    const Solution s = solve_multiuser(inst, cfg);
    CHECK(s.converged);
    CHECK((s.covariance.matrix() - 0.3 * CMatrix::Identity(2, 2)).norm() < 1e-9);
    CHECK(s.capacity_nats == doctest::Approx(2.0 * std::log(1.3)));
    CHECK_FALSE(s.tpc_active);

    const Solution sum = solve_sum_ipc(inst, 0.6, cfg);
    CHECK((sum.covariance.matrix() - 0.3 * CMatrix::Identity(2, 2)).norm() < 1e-9);
    CHECK(sum.capacity_nats == doctest::Approx(2.0 * std::log(1.3)));
}

TEST_CASE("single constraint matches the single-user path")
{
    const SolverConfig cfg;
    const auto inst = make_instance(testing::example_w1(), 1.5, {{testing::example1_w2(), 1.0}});
    CHECK(solve_multiuser(inst, cfg).capacity_nats == doctest::Approx(iba_solve(inst, cfg).capacity_nats).epsilon(1e-12));
    CHECK(solve_sum_ipc(inst, 1.0, cfg).capacity_nats == doctest::Approx(solve(inst, cfg).capacity_nats).epsilon(1e-10));
}

TEST_CASE("duplicate constraints change nothing")
{
    const SolverConfig cfg;
    std::mt19937_64 rng(12);
    for (int t = 0; t < 10; ++t)
    {
        const HermitianMatrix w1 = testing::random_psd(3, 3, rng);
        const HermitianMatrix w2 = testing::random_psd(3, 2, rng);
        const double p_t = testing::uniform(0.5, 5.0, rng), p_i = testing::uniform(0.1, 2.0, rng);
        const auto one = make_instance(w1, p_t, {{w2, p_i}});
        const auto two = make_instance(w1, p_t, {{w2, p_i}, {w2, p_i}});
        CHECK(solve_multiuser(two, cfg).capacity_nats == doctest::Approx(solve(one, cfg).capacity_nats).epsilon(1e-8));
    }
}

TEST_CASE("random multi-constraint instances")
{
    const SolverConfig cfg;
    std::mt19937_64 rng(99);
    for (int t = 0; t < 30; ++t)
    {
        const Index m = testing::uniform_int(2, 4, rng);
        const int K = testing::uniform_int(2, 3, rng);
        ProblemInstance inst;
        inst.w1 = testing::random_psd(m, testing::uniform_int(1, static_cast<int>(m), rng), rng);
        inst.p_total = testing::uniform(0.1, 10.0, rng);
        double total = 0.0;
        for (int k = 0; k < K; ++k)
        {
            inst.constraints.push_back({testing::random_psd(m, testing::uniform_int(1, static_cast<int>(m), rng), rng),
                                        testing::uniform(0.1, 5.0, rng)});
            total += inst.constraints.back().budget;
        }
        CAPTURE(t);
        const Solution s = solve_multiuser(inst, cfg);
        CHECK(s.converged);
        for (int k = 0; k < K; ++k)
            CHECK(s.interference_powers[k] <= inst.constraints[k].budget + cfg.epsilon);
        CHECK(s.tx_power <= inst.p_total + cfg.epsilon);

        // Looser total-interference constraint can only help.
        CHECK(solve_sum_ipc(inst, total, cfg).capacity_nats >= s.capacity_nats - 1e-8);

        // Raising a budget never hurts.
        ProblemInstance looser = inst;
        looser.constraints[0].budget *= 1.5;
        CHECK(solve_multiuser(looser, cfg).capacity_nats >= s.capacity_nats - 1e-9);
    }
}
