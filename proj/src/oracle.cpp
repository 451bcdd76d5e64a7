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

#include "mimocap/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>

#include <Eigen/Eigenvalues>

#include "mimocap/error.hpp"

namespace mimocap
{

namespace
{

constexpr double inf = std::numeric_limits<double>::infinity();
constexpr double golden = 0.6180339887498949;

/// Minimizer of a unimodal function on [a, b] by golden-section search.
template <class F>
double golden_min(F &&f, double a, double b, int evals)
{
    double x1 = b - golden * (b - a), x2 = a + golden * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < evals; ++i)
    {
        if (f1 <= f2)
        {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - golden * (b - a);
            f1 = f(x1);
        }
        else
        {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + golden * (b - a);
            f2 = f(x2);
        }
    }
    return f1 <= f2 ? x1 : x2;
}

CMatrix hermitian_part(const CMatrix &a)
{
    return 0.5 * (a + a.adjoint());
}

class Oracle
{
public:
    explicit Oracle(const ProblemInstance &inst)
        : m_(inst.dim()), w1_(inst.w1.matrix()), p_total_(inst.p_total)
    {
        for (const auto &c : inst.constraints)
        {
            w2_.push_back(c.w2.matrix());
            budget_.push_back(c.budget);
        }
        Eigen::SelfAdjointEigenSolver<CMatrix> es(w1_, Eigen::EigenvaluesOnly);
        lambda1_ = es.eigenvalues().maxCoeff();
    }

    bool zero_channel() const { return !(lambda1_ > 1e-12); }

    // log|I + W1R| through an LU factorization.
    double logdet(const CMatrix &r) const
    {
        const CMatrix a = CMatrix::Identity(m_, m_) + w1_ * r;
        const Eigen::PartialPivLU<CMatrix> lu(a);
        double s = 0.0;
        for (Index i = 0; i < m_; ++i)
            s += std::log(std::abs(lu.matrixLU()(i, i)));
        return s;
    }

    /// Largest s with s·R feasible.
    double boundary_scale(const CMatrix &r) const
    {
        double s = inf;
        const double tr = r.trace().real();
        if (tr > 0.0)
            s = std::min(s, p_total_ / tr);
        for (std::size_t k = 0; k < w2_.size(); ++k)
        {
            const double p = (w2_[k] * r).trace().real();
            if (p > 0.0)
                s = std::min(s, budget_[k] / p);
        }
        return s;
    }

    CMatrix scale_to_feasible(const CMatrix &r) const
    {
        return std::min(1.0, boundary_scale(r)) * r;
    }

    /// Upper end of the box holding each optimal dual; zero for a zero Gram.
    std::vector<double> dual_box() const
    {
        std::vector<double> box{static_cast<double>(m_) / (p_total_ + 1.0 / lambda1_)};
        for (std::size_t k = 0; k < w2_.size(); ++k)
        {
            Eigen::SelfAdjointEigenSolver<CMatrix> es(w2_[k], Eigen::EigenvaluesOnly);
            const auto &ev = es.eigenvalues();
            const double top = ev.maxCoeff();
            const Index rank = (ev.array() > 1e-9 * std::max(1.0, top)).count();
            box.push_back(rank == 0 ? 0.0 : 1.0 / (budget_[k] / rank + std::max(0.0, ev.minCoeff()) / lambda1_));
        }
        return box;
    }

    struct Lagrangian
    {
        double dual_value = inf;
        CMatrix maximizer;
    };

    /// max_R log|I + W1R| - tr(GR) + μ·b through the pencil W1v = λGv.
    Lagrangian lagrangian(const std::vector<double> &mu) const
    {
        CMatrix g = mu[0] * CMatrix::Identity(m_, m_);
        double linear = mu[0] * p_total_;
        for (std::size_t k = 0; k < w2_.size(); ++k)
        {
            g += mu[k + 1] * w2_[k];
            linear += mu[k + 1] * budget_[k];
        }
        Eigen::GeneralizedSelfAdjointEigenSolver<CMatrix> ges(w1_, hermitian_part(g),
                                                              Eigen::ComputeEigenvectors | Eigen::Ax_lBx);
        Lagrangian out;
        if (ges.info() != Eigen::Success)
            return out;
        const auto &lam = ges.eigenvalues();
        const CMatrix &v = ges.eigenvectors();
        out.maximizer = CMatrix::Zero(m_, m_);
        double value = linear;
        for (Index i = 0; i < m_; ++i)
        {
            if (lam(i) > 1.0)
            {
                value += std::log(lam(i)) - 1.0 + 1.0 / lam(i);
                out.maximizer += (1.0 - 1.0 / lam(i)) * v.col(i) * v.col(i).adjoint();
            }
        }
        out.dual_value = value;
        return out;
    }

    /// Largest tr(ΓS) over the feasible set through its dual
    /// min over the simplex of λ_max(Γ, w₀I/P_T + Σ wₖW₂ₖ/P_Iₖ), plus a feasible
    /// rank-1 point along the top generalized eigenvector.
    struct LinearStep
    {
        double bound = inf;
        CMatrix vertex;
    };

    LinearStep linear_step(const CMatrix &gamma, int evals) const
    {
        const std::size_t K = w2_.size();
        auto pencil = [&](const std::vector<double> &w) {
            double w0 = 1.0;
            CMatrix b = CMatrix::Zero(m_, m_);
            for (std::size_t k = 0; k < K; ++k)
            {
                b += (w[k] / budget_[k]) * w2_[k];
                w0 -= w[k];
            }
            b.diagonal().array() += std::max(w0, 1e-9) / p_total_;
            return b;
        };
        auto top = [&](const std::vector<double> &w) {
            Eigen::GeneralizedSelfAdjointEigenSolver<CMatrix> ges(gamma, hermitian_part(pencil(w)),
                                                                  Eigen::EigenvaluesOnly | Eigen::Ax_lBx);
            return ges.info() == Eigen::Success ? ges.eigenvalues().maxCoeff() : inf;
        };

        std::vector<double> w(K, 0.0);
        // Nested search over the simplex; the value is quasi-convex in w.
        std::function<double(std::size_t, double)> search = [&](std::size_t k, double room) -> double {
            if (k == K)
                return top(w);
            auto f = [&](double x) {
                w[k] = x;
                return search(k + 1, room - x);
            };
            const double best = golden_min(f, 0.0, room, evals);
            w[k] = best;
            return search(k + 1, room - best);
        };
        LinearStep out;
        out.bound = search(0, 1.0 - 1e-9);

        Eigen::GeneralizedSelfAdjointEigenSolver<CMatrix> ges(gamma, hermitian_part(pencil(w)),
                                                              Eigen::ComputeEigenvectors | Eigen::Ax_lBx);
        const CVector x = ges.eigenvectors().col(m_ - 1);
        const CMatrix dir = x * x.adjoint();
        out.vertex = boundary_scale(dir) * dir;
        return out;
    }

    CMatrix gradient(const CMatrix &r) const
    {
        const CMatrix a = CMatrix::Identity(m_, m_) + w1_ * r;
        return hermitian_part(a.partialPivLu().solve(w1_));
    }

    /// Conditional-gradient ascent; returns the final iterate.
    CMatrix ascend(CMatrix r, int iters, double &value) const
    {
        value = logdet(r);
        const int evals = w2_.size() > 1 ? 18 : 40;
        for (int it = 0; it < iters; ++it)
        {
            const CMatrix gamma = gradient(r);
            const LinearStep step = linear_step(gamma, evals);
            const double gap = step.bound - (gamma * r).trace().real();
            if (gap < 1e-10)
                break;
            const CMatrix dir = step.vertex - r;
            auto neg = [&](double t) { return -logdet(r + t * dir); };
            const double t = golden_min(neg, 0.0, 1.0, 40);
            const double next = logdet(r + t * dir);
            if (!(next > value))
                break;
            r += t * dir;
            r = hermitian_part(r);
            value = next;
        }
        return r;
    }

    OracleResult run(const OracleOptions &opt) const
    {
        OracleResult best;
        best.covariance = HermitianMatrix::zero(m_);
        best.capacity = 0.0;
        best.upper_bound = inf;

        const std::vector<double> box = dual_box();
        const std::size_t dims = box.size();
        const double floor_ratio = 1e-7;
        const int n = std::max(2, opt.grid_points);

        CMatrix best_primal = CMatrix::Zero(m_, m_);
        double best_primal_value = 0.0;
        std::vector<double> best_mu(dims, 0.0);
        auto consider = [&](const std::vector<double> &mu) {
            const Lagrangian l = lagrangian(mu);
            if (!std::isfinite(l.dual_value))
                return inf;
            if (l.dual_value < best.upper_bound)
            {
                best.upper_bound = l.dual_value;
                best_mu = mu;
            }
            const CMatrix r = scale_to_feasible(l.maximizer);
            const double c = logdet(r);
            if (c > best_primal_value)
            {
                best_primal_value = c;
                best_primal = r;
            }
            return l.dual_value;
        };

        // Step 1a: logarithmic grid, μ₁ > 0 keeps the pencil definite.
        std::vector<double> mu(dims, 0.0);
        std::vector<int> idx(dims, 0);
        while (true)
        {
            for (std::size_t d = 0; d < dims; ++d)
                mu[d] = box[d] > 0.0 ? box[d] * std::pow(floor_ratio, 1.0 - static_cast<double>(idx[d]) / (n - 1)) : 0.0;
            consider(mu);
            std::size_t d = 0;
            while (d < dims && (box[d] == 0.0 || ++idx[d] == n))
            {
                idx[d] = 0;
                ++d;
            }
            if (d == dims)
                break;
        }

        // Step 1b: cyclic golden-section polish of the dual function.
        mu = best_mu;
        for (int sweep = 0; sweep < 60; ++sweep)
        {
            const double before = best.upper_bound;
            for (std::size_t d = 0; d < dims; ++d)
            {
                if (box[d] == 0.0)
                    continue;
                const double lo = d == 0 ? box[0] * 1e-12 : 0.0;
                auto f = [&](double x) {
                    std::vector<double> trial = mu;
                    trial[d] = x;
                    return consider(trial);
                };
                mu[d] = golden_min(f, lo, box[d], 60);
                consider(mu);
                mu = best_mu;
            }
            if (before - best.upper_bound <= 1e-15 * std::max(1.0, std::abs(before)))
                break;
        }

        // Step 2: conditional-gradient ascent from the dual candidate and random points.
        double value = 0.0;
        CMatrix r = ascend(best_primal, opt.refine_iters, value);
        if (value > best_primal_value)
        {
            best_primal_value = value;
            best_primal = r;
        }
        std::mt19937_64 rng(opt.seed);
        std::normal_distribution<double> normal;
        for (int s = 0; s < opt.restarts; ++s)
        {
            CMatrix a(m_, m_);
            for (Index i = 0; i < m_; ++i)
                for (Index j = 0; j < m_; ++j)
                    a(i, j) = Complex(normal(rng), normal(rng));
            const CMatrix start = boundary_scale(a * a.adjoint()) * a * a.adjoint();
            r = ascend(start, opt.refine_iters, value);
            if (value > best_primal_value)
            {
                best_primal_value = value;
                best_primal = r;
            }
        }

        best.covariance = HermitianMatrix(best_primal);
        best.capacity = best_primal_value;
        return best;
    }

private:
    Index m_;
    CMatrix w1_;
    double p_total_;
    std::vector<CMatrix> w2_;
    std::vector<double> budget_;
    double lambda1_ = 0.0;
};

} // namespace

OracleResult oracle_solve(const ProblemInstance &inst, const OracleOptions &opt)
{
    if (inst.dim() > 6 || inst.num_constraints() > 3)
        throw DomainError("oracle is limited to m <= 6 and K <= 3");
    inst.validate();
    for (const auto &c : inst.constraints)
        if (!(c.budget > 0.0))
            throw DomainError("oracle needs positive interference budgets");

    const Oracle oracle(inst);
    if (oracle.zero_channel())
    {
        OracleResult out;
        out.covariance = HermitianMatrix::zero(inst.dim());
        return out;
    }
    return oracle.run(opt);
}

OracleResult oracle_solve(const ProblemInstance &inst, int grid_points, int refine_iters)
{
    OracleOptions opt;
    opt.grid_points = grid_points;
    opt.refine_iters = refine_iters;
    return oracle_solve(inst, opt);
}

} // namespace mimocap
