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

#include "mimocap/solver_core.hpp"

#include <cmath>
#include <utility>

#include "mimocap/error.hpp"

namespace mimocap
{

namespace
{

HermitianMatrix weighted_gram(const ProblemInstance &inst, const DualPoint &d)
{
    if (d.mu2.size() != inst.num_constraints())
        throw InvalidInput("dual vector has " + std::to_string(d.mu2.size()) + " IPC entries, instance has " +
                           std::to_string(inst.num_constraints()));
    if (d.mu1 < 0.0)
        throw InvalidInput("negative TPC dual");

    CMatrix g = CMatrix::Zero(inst.dim(), inst.dim());
    if (std::isfinite(d.mu1))
        g.diagonal().array() += d.mu1;
    for (std::size_t k = 0; k < d.mu2.size(); ++k)
    {
        if (d.mu2[k] < 0.0)
            throw InvalidInput("negative IPC dual");
        if (std::isfinite(d.mu2[k]) && d.mu2[k] > 0.0)
            g += d.mu2[k] * inst.constraints[k].w2.matrix();
    }
    return HermitianMatrix(g);
}

} // namespace

DualResponse respond_to_duals(const ProblemInstance &inst, const DualPoint &d, double tol)
{
    const auto g = eig(weighted_gram(inst, d));
    const double g_max = g.values(0);
    if (!(g_max > 0.0))
        throw DegenerateDualError("W_mu is zero: all duals vanish on the constraint Grams");

    std::vector<Index> active;
    for (Index i = 0; i < g.values.size(); ++i)
        if (g.values(i) > tol * g_max)
            active.push_back(i);

    // Columns of t span range(W_μ) and satisfy t·t⁺ = (W_μ^†)².
    CMatrix t(inst.dim(), static_cast<Index>(active.size()));
    for (std::size_t k = 0; k < active.size(); ++k)
        t.col(static_cast<Index>(k)) = g.vectors.col(active[k]) / std::sqrt(g.values(active[k]));

    const auto a = eig(congruence(t, inst.w1));
    RVector weight = RVector::Zero(a.values.size());
    DualResponse out;
    for (Index i = 0; i < a.values.size(); ++i)
    {
        if (a.values(i) > 1.0)
        {
            weight(i) = 1.0 - 1.0 / a.values(i);
            out.capacity_nats += std::log(a.values(i));
        }
    }
    out.covariance = embed(t, HermitianMatrix::from_modes(a.vectors, weight));
    out.singular_branch = static_cast<Index>(active.size()) < inst.dim();
    return out;
}

HermitianMatrix covariance_from_duals(const ProblemInstance &inst, const DualPoint &d, double tol)
{
    return respond_to_duals(inst, d, tol).covariance;
}

double capacity_from_duals(const ProblemInstance &inst, const DualPoint &d, double tol)
{
    return respond_to_duals(inst, d, tol).capacity_nats;
}

PowerProfile powers_of(const ProblemInstance &inst, const HermitianMatrix &r)
{
    PowerProfile p;
    p.tx_power = r.trace();
    p.interference_powers.reserve(inst.num_constraints());
    for (const auto &c : inst.constraints)
        p.interference_powers.push_back(trace_product(c.w2, r));
    return p;
}

PowerProfile powers_from_duals(const ProblemInstance &inst, const DualPoint &d, double tol)
{
    return powers_of(inst, covariance_from_duals(inst, d, tol));
}

KKTResiduals kkt_check(const ProblemInstance &inst, const Solution &sol, double tol)
{
    const HermitianMatrix &r = sol.covariance;
    const Index m = inst.dim();

    // (I + W1R)⁻¹W1 = Q(I + QRQ)⁻¹Q with Q = W1^{1/2}, which keeps it Hermitian.
    const HermitianMatrix q = sqrt_psd(inst.w1, tol);
    const CMatrix inner = CMatrix::Identity(m, m) + q.matrix() * r.matrix() * q.matrix();
    const CMatrix gradient = q.matrix() * inner.ldlt().solve(q.matrix());

    DualPoint d = sol.duals;
    if (d.mu2.size() != inst.num_constraints())
        d.mu2.assign(inst.num_constraints(), 0.0);
    CMatrix g = CMatrix::Zero(m, m);
    if (std::isfinite(d.mu1))
        g.diagonal().array() += d.mu1;
    for (std::size_t k = 0; k < d.mu2.size(); ++k)
        if (std::isfinite(d.mu2[k]))
            g += d.mu2[k] * inst.constraints[k].w2.matrix();

    const HermitianMatrix mult(CMatrix(g - gradient));
    KKTResiduals out;
    out.m_min_eigenvalue = min_eigenvalue(mult);
    out.dual_psd_violation = std::max(0.0, -out.m_min_eigenvalue);
    out.complementarity = (mult.matrix() * r.matrix()).norm();
    out.stationarity = std::max(out.dual_psd_violation, out.complementarity);

    const PowerProfile p = powers_of(inst, r);
    out.slack_tpc = std::isfinite(d.mu1) ? std::abs(d.mu1 * (p.tx_power - inst.p_total)) : 0.0;
    out.feasibility_tpc = std::max(0.0, p.tx_power - inst.p_total);
    for (std::size_t k = 0; k < inst.num_constraints(); ++k)
    {
        const double gap = p.interference_powers[k] - inst.constraints[k].budget;
        out.slack_ipc.push_back(std::isfinite(d.mu2[k]) ? std::abs(d.mu2[k] * gap) : 0.0);
        out.feasibility_ipc.push_back(std::max(0.0, gap));
    }
    out.psd_violation = std::max(0.0, -min_eigenvalue(r));
    return out;
}

Solution assemble_solution(const ProblemInstance &inst, const DualPoint &d, HermitianMatrix covariance,
                           double capacity_nats, std::string method, double activity_tol, double tol)
{
    Solution s;
    s.covariance = std::move(covariance);
    s.capacity_nats = capacity_nats;
    s.duals = d;
    const PowerProfile p = powers_of(inst, s.covariance);
    s.tx_power = p.tx_power;
    s.interference_powers = p.interference_powers;
    s.tpc_active = d.mu1 > activity_tol;
    for (double mu : d.mu2)
        s.ipc_active.push_back(mu > activity_tol);
    s.method = std::move(method);
    s.kkt = kkt_check(inst, s, tol);
    return s;
}

} // namespace mimocap
