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

#include <string>
#include <vector>

#include "mimocap/hermitian.hpp"

namespace mimocap
{

/// One interference power constraint tr(W2·R) <= budget.
struct InterferenceConstraint
{
    HermitianMatrix w2;
    double budget = 0.0;
};

/// Main channel Gram W1, total power P_T and K interference constraints.
///
/// An instance with no interference constraints is valid and reduces to
/// plain water-filling.
struct ProblemInstance
{
    HermitianMatrix w1;
    std::vector<InterferenceConstraint> constraints;
    double p_total = 0.0;

    Index dim() const { return w1.dim(); }
    std::size_t num_constraints() const { return constraints.size(); }

    /// Σₖ W2ₖ, or the zero matrix when K = 0.
    HermitianMatrix combined_ipc_gram() const;

    /// Throws InvalidInput naming the offending field.
    void validate(double tol = default_rank_tol) const;
};

/// Lagrange multipliers: mu1 for the total power, mu2[k] for constraint k.
struct DualPoint
{
    double mu1 = 0.0;
    std::vector<double> mu2;
};

/// Optimality diagnostics of a candidate covariance against its duals.
struct KKTResiduals
{
    double m_min_eigenvalue = 0.0;   ///< λ_min of the implied PSD multiplier M
    double dual_psd_violation = 0.0; ///< max(0, -λ_min(M))
    double complementarity = 0.0;    ///< ‖M·R‖_F
    double stationarity = 0.0;       ///< max(dual_psd_violation, complementarity)
    double slack_tpc = 0.0;          ///< |μ₁(tr R - P_T)|
    std::vector<double> slack_ipc;   ///< |μ₂ₖ(tr W₂ₖR - P_Iₖ)|
    double feasibility_tpc = 0.0;    ///< max(0, tr R - P_T)
    std::vector<double> feasibility_ipc;
    double psd_violation = 0.0; ///< max(0, -λ_min(R))

    /// Largest of every residual above.
    double max_residual() const;
};

struct SolverConfig
{
    double delta = 1e-12;   ///< inner bisection interval width
    double epsilon = 1e-10; ///< outer residual tolerance
    int k_max = 500;
    double rank_tol = default_rank_tol;

    /// Config with delta = epsilon/100.
    static SolverConfig with_epsilon(double epsilon);

    /// Throws DomainError unless 0 < delta <= epsilon and k_max >= 1.
    void validate() const;
};

enum class Regime
{
    PowerLimited,
    InterferenceLimited,
    JointlyConstrained,
};

std::string to_string(Regime r);

struct Solution
{
    HermitianMatrix covariance;
    double capacity_nats = 0.0;
    DualPoint duals;
    double tx_power = 0.0;
    std::vector<double> interference_powers;
    bool tpc_active = false;
    std::vector<bool> ipc_active;
    KKTResiduals kkt;
    int iterations = 0;
    bool converged = true;
    double residual = 0.0; ///< final max(|f₁|, |f₂ₖ|, feasibility excess)
    std::string method;
    std::vector<DualPoint> history; ///< dual iterate after each outer iteration
};

} // namespace mimocap
