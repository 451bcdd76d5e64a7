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

#include "mimocap/closed_forms.hpp"

#include <cmath>
#include <limits>

#include "mimocap/dual_bisection.hpp"
#include "mimocap/error.hpp"
#include "mimocap/solver_core.hpp"
#include "mimocap/waterfill.hpp"

namespace mimocap
{

namespace
{

constexpr double margin = 1e-12;
constexpr double inf = std::numeric_limits<double>::infinity();

/// Inverse of a full-rank PSD matrix with the spectral quantities the formulas need.
struct Inverted
{
    HermitianMatrix inverse;
    double log_det = 0.0;
    double trace_inverse = 0.0;
    double max_inverse_eigenvalue = 0.0; ///< λ₁(A⁻¹) = 1/λ_m(A)
};

std::optional<Inverted> invert_full_rank(const HermitianMatrix &a, double tol)
{
    if (numerical_rank(a, tol) != a.dim())
        return std::nullopt;
    const auto ed = eig(a);
    if (!(ed.values(ed.values.size() - 1) > 0.0))
        return std::nullopt;
    Inverted out;
    RVector inv = ed.values.cwiseInverse();
    out.inverse = HermitianMatrix::from_modes(ed.vectors, inv);
    out.log_det = ed.values.array().log().sum();
    out.trace_inverse = inv.sum();
    out.max_inverse_eigenvalue = inv.maxCoeff();
    return out;
}

bool single_positive_budget(const ProblemInstance &inst)
{
    return inst.num_constraints() == 1 && inst.constraints[0].budget > 0.0;
}

Solution finish(const ProblemInstance &inst, double mu1, double mu2, HermitianMatrix r, double capacity,
                const char *method, double tol)
{
    DualPoint d{mu1, {mu2}};
    return assemble_solution(inst, d, std::move(r), capacity, method, 0.0, tol);
}

/// Interference-only optimum for full-rank W2, ignoring the power budget.
struct IpcOnlyCore
{
    HermitianMatrix covariance;
    double capacity = 0.0;
    double mu2 = 0.0;
    bool valid = false;
};

IpcOnlyCore ipc_only_core(const HermitianMatrix &w1, const HermitianMatrix &w2, double budget, double tol)
{
    IpcOnlyCore out;
    const auto e2 = eig(w2);
    if (!(e2.values(e2.values.size() - 1) > tol * e2.values(0)) || !(budget > 0.0))
        return out;

    const HermitianMatrix w2_inv_sqrt = HermitianMatrix::from_modes(e2.vectors, e2.values.cwiseSqrt().cwiseInverse());
    const auto b = eig(congruence(w2_inv_sqrt.matrix(), w1));
    if (!(b.values(0) > 0.0))
        return out;

    Index positive = 0;
    while (positive < b.values.size() && b.values(positive) > tol * b.values(0))
        ++positive;

    // Largest rank r with P_I > Σ_{i<=r} (1/λ_b,r - 1/λ_b,i).
    Index rank = 0;
    for (Index r = 1; r <= positive; ++r)
    {
        double need = 0.0;
        for (Index i = 0; i < r; ++i)
            need += 1.0 / b.values(r - 1) - 1.0 / b.values(i);
        if (budget > need)
            rank = r;
    }
    if (rank == 0)
        return out;

    double inverse_sum = 0.0;
    for (Index i = 0; i < rank; ++i)
        inverse_sum += 1.0 / b.values(i);
    const double level = (budget + inverse_sum) / static_cast<double>(rank);

    RVector alloc = RVector::Zero(b.values.size());
    for (Index i = 0; i < rank; ++i)
    {
        alloc(i) = std::max(0.0, level - 1.0 / b.values(i));
        out.capacity += std::log(b.values(i) * level);
    }
    out.covariance = embed(w2_inv_sqrt.matrix(), HermitianMatrix::from_modes(b.vectors, alloc));
    out.mu2 = 1.0 / level;
    out.valid = true;
    return out;
}

/// Joint eigenbasis of commuting W1, W2: eigenvectors of W1 with degenerate
/// clusters rotated to diagonalize W2.
CMatrix joint_eigenbasis(const HermitianMatrix &w1, const HermitianMatrix &w2, double tol)
{
    const auto e1 = eig(w1);
    const Index m = w1.dim();
    const double cluster_gap = std::sqrt(tol) * std::max(1.0, std::abs(e1.values(0)));
    CMatrix basis = e1.vectors;
    Index start = 0;
    while (start < m)
    {
        Index end = start + 1;
        while (end < m && e1.values(end - 1) - e1.values(end) <= cluster_gap)
            ++end;
        if (end - start > 1)
        {
            const CMatrix block = e1.vectors.middleCols(start, end - start);
            const auto e2 = eig(congruence(block, w2));
            basis.middleCols(start, end - start) = block * e2.vectors;
        }
        start = end;
    }
    return basis;
}

} // namespace

std::optional<Solution> full_rank_tpc(const ProblemInstance &inst, double tol)
{
    if (!single_positive_budget(inst))
        return std::nullopt;
    const auto w1 = invert_full_rank(inst.w1, tol);
    if (!w1)
        return std::nullopt;

    const auto &c = inst.constraints[0];
    const double m = static_cast<double>(inst.dim());
    const double lower = m * w1->max_inverse_eigenvalue - w1->trace_inverse;
    const double tr_w2 = c.w2.trace();
    const double upper =
        tr_w2 > 0.0 ? m / tr_w2 * (c.budget + trace_product(c.w2, w1->inverse)) - w1->trace_inverse : inf;
    if (!(inst.p_total > lower + margin && inst.p_total <= upper - margin))
        return std::nullopt;

    const double level = (inst.p_total + w1->trace_inverse) / m;
    HermitianMatrix r = HermitianMatrix::identity(inst.dim()) * level - w1->inverse;
    const double capacity = m * std::log(level) + w1->log_det;
    return finish(inst, 1.0 / level, 0.0, std::move(r), capacity, "full-rank-tpc", tol);
}

std::optional<Solution> full_rank_ipc(const ProblemInstance &inst, double tol)
{
    if (!single_positive_budget(inst))
        return std::nullopt;
    const auto &c = inst.constraints[0];
    const auto w1 = invert_full_rank(inst.w1, tol);
    const auto w2 = invert_full_rank(c.w2, tol);
    if (!w1 || !w2)
        return std::nullopt;

    const double m = static_cast<double>(inst.dim());
    // λ₁(W2W1⁻¹) through the similar Hermitian matrix W1^{-1/2}W2W1^{-1/2}.
    const HermitianMatrix w1_inv_sqrt = sqrt_psd(w1->inverse, tol);
    const double lambda1 = max_eigenvalue(congruence(w1_inv_sqrt.matrix(), c.w2));
    const double tr_w2_w1inv = trace_product(c.w2, w1->inverse);
    const double lower = m * lambda1 - tr_w2_w1inv;
    const double upper = m / w2->trace_inverse * (inst.p_total + w1->trace_inverse) - tr_w2_w1inv;
    if (!(c.budget > lower + margin && c.budget <= upper - margin))
        return std::nullopt;

    const double level = (c.budget + tr_w2_w1inv) / m;
    HermitianMatrix r = w2->inverse * level - w1->inverse;
    const double capacity = m * std::log(level) + w1->log_det - w2->log_det;
    return finish(inst, 0.0, 1.0 / level, std::move(r), capacity, "full-rank-ipc", tol);
}

std::optional<Solution> rank1_w2(const ProblemInstance &inst, double tol)
{
    if (!single_positive_budget(inst))
        return std::nullopt;
    const auto &c = inst.constraints[0];
    if (numerical_rank(c.w2, tol) != 1)
        return std::nullopt;
    const auto w1 = invert_full_rank(inst.w1, tol);
    if (!w1)
        return std::nullopt;

    const Index dim = inst.dim();
    const double m = static_cast<double>(dim);
    const auto e2 = eig(c.w2);
    const double lambda2 = e2.values(0);
    const CVector u2 = e2.vectors.col(0);
    const double b = (u2.adjoint() * w1->inverse.matrix() * u2)(0).real();
    const double tr_inv = w1->trace_inverse;
    const double p_i = c.budget;
    const double p_t = inst.p_total;
    const double threshold = lambda2 * (p_t + tr_inv) / m - lambda2 * b;

    // Interference constraint redundant: full-rank water-filling.
    if (p_i >= threshold + margin && p_t > m * w1->max_inverse_eigenvalue - tr_inv + margin)
    {
        const double level = (p_t + tr_inv) / m;
        HermitianMatrix r = HermitianMatrix::identity(dim) * level - w1->inverse;
        return finish(inst, 1.0 / level, 0.0, std::move(r), m * std::log(level) + w1->log_det, "rank1-w2", tol);
    }

    // Both constraints binding, still full rank.
    if (dim >= 2 && p_i > lambda2 * w1->max_inverse_eigenvalue - lambda2 * b + margin && p_i < threshold - margin &&
        p_t > m * p_i / lambda2 + m * b - tr_inv + margin)
    {
        const double mu1 = (m - 1.0) / (p_t - p_i / lambda2 - b + tr_inv);
        const double mu2 = 1.0 / (p_i + lambda2 * b) - mu1 / lambda2;
        const double alpha = 1.0 / mu1 - 1.0 / (mu1 + lambda2 * mu2);
        HermitianMatrix r = HermitianMatrix::identity(dim) * (1.0 / mu1) - w1->inverse -
                            HermitianMatrix(CMatrix(alpha * u2 * u2.adjoint()));
        if (!(mu2 > 0.0) || !is_psd(r, tol))
            return std::nullopt;
        // log|W1| - log|W_μ²| with |W_μ²| = μ₁^{m-1}(μ₁ + λ₂μ₂).
        const double capacity = w1->log_det - (m - 1.0) * std::log(mu1) - std::log(mu1 + lambda2 * mu2);
        return finish(inst, mu1, mu2, std::move(r), capacity, "rank1-w2", tol);
    }
    return std::nullopt;
}

std::optional<Solution> ipc_only(const ProblemInstance &inst, double tol)
{
    if (!single_positive_budget(inst))
        return std::nullopt;
    const auto &c = inst.constraints[0];
    IpcOnlyCore core = ipc_only_core(inst.w1, c.w2, c.budget, tol);
    if (!core.valid || core.covariance.trace() > inst.p_total * (1.0 + margin))
        return std::nullopt;
    return finish(inst, 0.0, core.mu2, std::move(core.covariance), core.capacity, "ipc-only", tol);
}

Rank1Geometry rank1_geometry(const ProblemInstance &inst, double tol)
{
    if (numerical_rank(inst.w1, tol) != 1)
        throw DomainError("rank-1 beamforming solution needs rank(W1) = 1");
    if (!single_positive_budget(inst))
        throw DomainError("rank-1 beamforming solution needs one interference constraint with positive budget");

    const auto &c = inst.constraints[0];
    const CVector u1 = eig(inst.w1).vectors.col(0);
    const HermitianMatrix w2_pinv = pinv(c.w2, tol);
    const CVector pu = w2_pinv.matrix() * u1;

    Rank1Geometry g;
    g.gamma_i = c.budget / inst.p_total;
    g.gamma_2 = (u1.adjoint() * c.w2.matrix() * u1)(0).real();
    // A component of u1 in N(W2) keeps the total power constraint active, so
    // the interference-only beamformer never applies.
    if (null_space_contained(c.w2, inst.w1, tol))
        g.gamma_1 = (u1.adjoint() * pu)(0).real() / pu.squaredNorm();

    if (g.gamma_i >= g.gamma_2)
    {
        g.regime = 2;
        g.alpha = 1.0;
    }
    else if (g.gamma_i < g.gamma_1)
    {
        g.regime = 1;
        g.alpha = g.gamma_i * (u1.adjoint() * pu)(0).real();
    }
    else
    {
        g.regime = 3;
    }
    return g;
}

Solution rank1_w1(const ProblemInstance &inst, double tol)
{
    Rank1Geometry g = rank1_geometry(inst, tol);
    const auto &c = inst.constraints[0];
    const auto e1 = eig(inst.w1);
    const double lambda1 = e1.values(0);
    const CVector u1 = e1.vectors.col(0);
    const double p_t = inst.p_total;
    const double p_i = c.budget;

    if (g.regime == 2)
    {
        HermitianMatrix r(CMatrix(p_t * u1 * u1.adjoint()));
        return finish(inst, 1.0 / (p_t + 1.0 / lambda1), 0.0, std::move(r), std::log1p(lambda1 * p_t), "rank1-w1",
                      tol);
    }

    // P₂(t) = P_T·v⁺W2v/‖v‖² along v = (I + tW2)⁻¹u₁ decreases from P_Tγ₂ towards P_Tγ₁.
    const Index m = inst.dim();
    auto direction = [&](double t) -> CVector {
        const CMatrix a = CMatrix::Identity(m, m) + t * c.w2.matrix();
        return a.ldlt().solve(u1);
    };
    auto excess = [&](double t) {
        const CVector v = direction(t);
        return p_t * (v.adjoint() * c.w2.matrix() * v)(0).real() / v.squaredNorm() - p_i;
    };

    double t_hi = 0.0;
    if (g.regime == 3)
    {
        t_hi = 1.0;
        int doublings = 0;
        while (excess(t_hi) > 0.0 && doublings < 1100)
        {
            t_hi *= 2.0;
            ++doublings;
        }
        if (excess(t_hi) > 0.0)
        {
            // Root at infinity: boundary with the interference-only beamformer.
            g.regime = 1;
            g.alpha = g.gamma_i * (u1.adjoint() * pinv(c.w2, tol).matrix() * u1)(0).real();
        }
    }

    if (g.regime == 1)
    {
        const CVector pu = pinv(c.w2, tol).matrix() * u1;
        const double a = (u1.adjoint() * pu)(0).real();
        HermitianMatrix r(CMatrix(p_i * pu * pu.adjoint() / a));
        const double mu2 = 1.0 / (p_i + 1.0 / (lambda1 * a));
        return finish(inst, 0.0, mu2, std::move(r), std::log1p(lambda1 * g.alpha * p_t), "rank1-w1", tol);
    }

    const double t = bisect(excess, 0.0, t_hi, t_hi * 1e-15).value;
    const CVector v = direction(t);
    const double s = (u1.adjoint() * v)(0).real();
    const double q = v.squaredNorm();
    g.alpha = s * s / q;
    HermitianMatrix r(CMatrix(p_t * v * v.adjoint() / q));
    const double mu1 = 1.0 / (p_t * s / q + 1.0 / (lambda1 * s));
    return finish(inst, mu1, t * mu1, std::move(r), std::log1p(lambda1 * g.alpha * p_t), "rank1-w1", tol);
}

std::optional<Solution> common_eigv(const ProblemInstance &inst, const SolverConfig &cfg)
{
    if (!single_positive_budget(inst))
        return std::nullopt;
    const double tol = cfg.rank_tol;
    const auto &c = inst.constraints[0];
    const CMatrix &a = inst.w1.matrix();
    const CMatrix &b = c.w2.matrix();
    if ((a * b - b * a).norm() > tol * a.norm() * b.norm())
        return std::nullopt;
    if (numerical_rank(inst.w1, tol) == 0)
        return std::nullopt;

    const CMatrix basis = joint_eigenbasis(inst.w1, c.w2, tol);
    const Index m = inst.dim();
    RVector lambda1(m), lambda2(m);
    for (Index i = 0; i < m; ++i)
    {
        lambda1(i) = (basis.col(i).adjoint() * a * basis.col(i))(0).real();
        lambda2(i) = std::max(0.0, (basis.col(i).adjoint() * b * basis.col(i))(0).real());
    }
    const double lambda1_max = lambda1.maxCoeff();

    // [(μ₁ + μ₂λ₂ᵢ)^† - λ₁ᵢ^†]₊ with zero modes of either side receiving nothing.
    auto allocate = [&](const DualPoint &d) {
        RVector g = (d.mu1 + d.mu2[0] * lambda2.array()).matrix();
        const double g_max = g.maxCoeff();
        RVector p = RVector::Zero(m);
        for (Index i = 0; i < m; ++i)
            if (lambda1(i) > tol * lambda1_max && g(i) > tol * g_max)
                p(i) = std::max(0.0, 1.0 / g(i) - 1.0 / lambda1(i));
        return p;
    };
    const PowerOracle powers = [&](const DualPoint &d) {
        const RVector p = allocate(d);
        return PowerProfile{p.sum(), {lambda2.dot(p)}};
    };

    DualIteration it = iterate_duals(powers, inst.p_total, {c.budget}, dual_bounds(inst, tol), cfg);
    const RVector p = allocate(it.duals);
    const RVector g = (it.duals.mu1 + it.duals.mu2[0] * lambda2.array()).matrix();
    double capacity = 0.0;
    for (Index i = 0; i < m; ++i)
        if (p(i) > 0.0)
            capacity += std::log(lambda1(i) / g(i));

    Solution s = assemble_solution(inst, it.duals, HermitianMatrix::from_modes(basis, p), capacity, "common-eigv",
                                   activity_tolerance(cfg), tol);
    s.iterations = it.iterations;
    s.converged = it.converged;
    s.residual = it.residual;
    s.history = std::move(it.history);
    return s;
}

CapacityReport classify_capacity(const ProblemInstance &inst, double tol)
{
    CapacityReport rep;
    const HermitianMatrix combined = inst.combined_ipc_gram();
    rep.rank_w1 = numerical_rank(inst.w1, tol);
    for (const auto &c : inst.constraints)
        rep.rank_w2.push_back(numerical_rank(c.w2, tol));

    const bool w1_zero = rep.rank_w1 == 0;
    rep.unbounded_growth = !w1_zero && !null_space_contained(combined, inst.w1, tol);
    rep.tpc_always_active = rep.unbounded_growth;
    rep.rank_w1_exceeds_w2 = rep.rank_w1 > numerical_rank(combined, tol);
    rep.zf_optimal = check_zf_shortcut(inst, tol);

    HermitianMatrix zero_budget = HermitianMatrix::zero(inst.dim());
    bool any_zero_budget = false;
    for (const auto &c : inst.constraints)
        if (c.budget == 0.0)
        {
            zero_budget = zero_budget + c.w2;
            any_zero_budget = true;
        }
    rep.zero_capacity = w1_zero || (any_zero_budget && null_space_contained(zero_budget, inst.w1, tol));
    return rep;
}

double waterfill_capacity(const ProblemInstance &inst, double tol)
{
    if (numerical_rank(inst.w1, tol) == 0)
        return 0.0;
    return waterfill(inst.w1, inst.p_total, tol).capacity_nats;
}

double ipc_alone_capacity(const ProblemInstance &inst, double tol)
{
    if (inst.num_constraints() != 1)
        return std::numeric_limits<double>::quiet_NaN();
    const auto &c = inst.constraints[0];
    if (numerical_rank(inst.w1, tol) == 0)
        return 0.0;
    if (!null_space_contained(c.w2, inst.w1, tol))
        return inf;
    if (c.budget == 0.0)
        return 0.0;
    // N(W2) ⊆ N(W1): restrict both to range(W2), where W2 is invertible.
    const CMatrix range = range_basis(c.w2, tol);
    const IpcOnlyCore core = ipc_only_core(congruence(range, inst.w1), congruence(range, c.w2), c.budget, tol);
    return core.valid ? core.capacity : 0.0;
}

CapacityBounds capacity_bounds(const ProblemInstance &inst, const SolverConfig &cfg)
{
    CapacityBounds out;
    out.capacity = iba_solve(inst, cfg).capacity_nats;
    out.capacity_wf = waterfill_capacity(inst, cfg.rank_tol);
    out.capacity_ipc = ipc_alone_capacity(inst, cfg.rank_tol);
    return out;
}

} // namespace mimocap
