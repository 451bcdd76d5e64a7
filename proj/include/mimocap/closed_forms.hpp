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

#include <optional>
#include <vector>

#include "mimocap/problem.hpp"

namespace mimocap
{

// Explicit solutions for single-constraint instances. Each returns std::nullopt
// when its preconditions or applicability conditions fail; inequality
// thresholds carry an absolute margin of 1e-12 so boundary cases fall through
// to the iterative solver.

/// Full-rank W1 with the interference constraint redundant:
/// R = μ₁⁻¹I - W1⁻¹, μ₁⁻¹ = (P_T + tr W1⁻¹)/m.
std::optional<Solution> full_rank_tpc(const ProblemInstance &inst, double tol = default_rank_tol);

/// Full-rank W1, W2 with the total power constraint redundant:
/// R = μ₂⁻¹W2⁻¹ - W1⁻¹, μ₂⁻¹ = (P_I + tr W2W1⁻¹)/m.
std::optional<Solution> full_rank_ipc(const ProblemInstance &inst, double tol = default_rank_tol);

/// Full-rank W1 with rank-1 W2 = λ₂u₂u₂⁺: plain water-filling above the
/// interference threshold, otherwise R = μ₁⁻¹I - W1⁻¹ - αu₂u₂⁺ with both
/// constraints binding.
std::optional<Solution> rank1_w2(const ProblemInstance &inst, double tol = default_rank_tol);

/// Full-rank W2 with the total power constraint redundant. Applicable iff the
/// interference-only optimum fits the power budget.
std::optional<Solution> ipc_only(const ProblemInstance &inst, double tol = default_rank_tol);

/// Geometry of a rank-1 main channel W1 = λ₁u₁u₁⁺ against W2.
struct Rank1Geometry
{
    double gamma_i = 0.0; ///< P_I/P_T
    double gamma_1 = 0.0; ///< u₁⁺W2^†u₁ / u₁⁺(W2^†)²u₁, zero when u₁ leaves range(W2)
    double gamma_2 = 0.0; ///< u₁⁺W2u₁
    double alpha = 1.0;   ///< power-loss factor, capacity = log(1 + λ₁αP_T)
    int regime = 0;       ///< 1: total power redundant, 2: interference redundant, 3: both binding
};

Rank1Geometry rank1_geometry(const ProblemInstance &inst, double tol = default_rank_tol);

/// Beamforming solution for rank-1 W1. Throws DomainError unless W1 has rank 1
/// and there is exactly one interference constraint with a positive budget.
Solution rank1_w1(const ProblemInstance &inst, double tol = default_rank_tol);

/// W1 and W2 share eigenvectors: per-mode allocation
/// λᵢ* = [(μ₁ + μ₂λ₂ᵢ)^† - λ₁ᵢ^†]₊ in the joint eigenbasis, duals by scalar
/// coordinate bisection. Returns nullopt for non-commuting inputs.
std::optional<Solution> common_eigv(const ProblemInstance &inst, const SolverConfig &cfg);

/// Capacity classification from null spaces and ranks.
struct CapacityReport
{
    bool unbounded_growth = false;   ///< N(ΣW₂ₖ) ⊄ N(W1): capacity grows without bound in P_T
    bool zero_capacity = false;      ///< zero-budget constraints null out W1 (or W1 = 0)
    bool tpc_always_active = false;  ///< same null-space condition as unbounded growth
    bool zf_optimal = false;         ///< every range(W₂ₖ) lies in N(W1)
    bool rank_w1_exceeds_w2 = false; ///< r(W1) > r(ΣW₂ₖ)
    Index rank_w1 = 0;
    std::vector<Index> rank_w2;
};

CapacityReport classify_capacity(const ProblemInstance &inst, double tol = default_rank_tol);

/// Capacity under the total power constraint alone.
double waterfill_capacity(const ProblemInstance &inst, double tol = default_rank_tol);

/// Capacity under the interference constraint alone (single constraint): +inf
/// when N(W2) ⊄ N(W1), otherwise the interference-only optimum on range(W2).
/// NaN for K != 1.
double ipc_alone_capacity(const ProblemInstance &inst, double tol = default_rank_tol);

struct CapacityBounds
{
    double capacity = 0.0;
    double capacity_wf = 0.0;
    double capacity_ipc = 0.0;
};

/// (C, C_WF, C_IPC) with C from the iterative solver; C <= min(C_WF, C_IPC).
CapacityBounds capacity_bounds(const ProblemInstance &inst, const SolverConfig &cfg);

} // namespace mimocap
