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

#include "mimocap/instance_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>

#include "mimocap/error.hpp"

namespace mimocap
{

namespace
{

using nlohmann::json;

Complex entry_from_json(const json &e, const std::string &field)
{
    if (e.is_number())
        return {e.get<double>(), 0.0};
    if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number())
        return {e[0].get<double>(), e[1].get<double>()};
    throw InvalidInput(field + ": entries must be numbers or [re, im] pairs");
}

double number(const json &j, const char *key, const std::string &where)
{
    if (!j.contains(key) || !j.at(key).is_number())
        throw InvalidInput(where + ": missing or non-numeric \"" + key + "\"");
    return j.at(key).get<double>();
}

HermitianMatrix gram_field(const json &j, const char *gram_key, const char *channel_key, const std::string &where)
{
    const std::string gram_name = where.empty() ? gram_key : where + "." + gram_key;
    const std::string channel_name = where.empty() ? channel_key : where + "." + channel_key;
    if (j.contains(gram_key))
    {
        const CMatrix a = matrix_from_json(j.at(gram_key), gram_name);
        if (a.rows() != a.cols())
            throw InvalidInput(gram_name + " must be square");
        const double asym = (a - a.adjoint()).norm();
        if (asym > 1e-9 * std::max(1.0, a.norm()))
            throw InvalidInput(gram_name + " is not Hermitian");
        return HermitianMatrix(a);
    }
    if (j.contains(channel_key))
        return HermitianMatrix::gram(matrix_from_json(j.at(channel_key), channel_name));
    throw InvalidInput("missing " + gram_name + " (or " + channel_name + ")");
}

json finite_or_null(double x)
{
    return std::isfinite(x) ? json(x) : json(nullptr);
}

double finite_or_inf(const json &j)
{
    return j.is_null() ? std::numeric_limits<double>::infinity() : j.get<double>();
}

} // namespace

CMatrix matrix_from_json(const json &j, const std::string &field)
{
    if (!j.is_array() || j.empty())
        throw InvalidInput(field + " must be a non-empty array of rows");
    const std::size_t rows = j.size();
    if (!j[0].is_array() || j[0].empty())
        throw InvalidInput(field + " must be a non-empty array of rows");
    const std::size_t cols = j[0].size();
    CMatrix a(static_cast<Index>(rows), static_cast<Index>(cols));
    for (std::size_t r = 0; r < rows; ++r)
    {
        if (!j[r].is_array() || j[r].size() != cols)
            throw InvalidInput(field + ": rows must all have " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c)
            a(static_cast<Index>(r), static_cast<Index>(c)) = entry_from_json(j[r][c], field);
    }
    if (!a.allFinite())
        throw InvalidInput(field + " has non-finite entries");
    return a;
}

json matrix_to_json(const CMatrix &a)
{
    json rows = json::array();
    for (Index r = 0; r < a.rows(); ++r)
    {
        json row = json::array();
        for (Index c = 0; c < a.cols(); ++c)
            row.push_back({a(r, c).real(), a(r, c).imag()});
        rows.push_back(row);
    }
    return rows;
}

ProblemInstance instance_from_json(const json &j)
{
    if (!j.is_object())
        throw InvalidInput("instance document must be an object");
    ProblemInstance inst;
    inst.w1 = gram_field(j, "W1", "H1", "");
    inst.p_total = number(j, "P_T", "instance");
    if (j.contains("m"))
    {
        if (!j.at("m").is_number_integer() || j.at("m").get<long long>() != inst.dim())
            throw InvalidInput("m does not match the dimension of W1 (" + std::to_string(inst.dim()) + ")");
    }
    if (j.contains("constraints"))
    {
        const json &cs = j.at("constraints");
        if (!cs.is_array())
            throw InvalidInput("constraints must be an array");
        for (std::size_t k = 0; k < cs.size(); ++k)
        {
            const std::string where = "constraints[" + std::to_string(k) + "]";
            if (!cs[k].is_object())
                throw InvalidInput(where + " must be an object");
            InterferenceConstraint c;
            c.w2 = gram_field(cs[k], "W2", "H2", where);
            c.budget = number(cs[k], "P_I", where);
            inst.constraints.push_back(std::move(c));
        }
    }
    inst.validate();
    return inst;
}

json instance_to_json(const ProblemInstance &inst)
{
    json j;
    j["m"] = inst.dim();
    j["P_T"] = inst.p_total;
    j["W1"] = matrix_to_json(inst.w1.matrix());
    j["constraints"] = json::array();
    for (const auto &c : inst.constraints)
        j["constraints"].push_back({{"W2", matrix_to_json(c.w2.matrix())}, {"P_I", c.budget}});
    return j;
}

ProblemInstance load_instance(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidInput("cannot open instance file " + path);
    json j;
    try
    {
        in >> j;
    }
    catch (const json::exception &e)
    {
        throw InvalidInput("malformed instance file " + path + ": " + e.what());
    }
    return instance_from_json(j);
}

json kkt_to_json(const KKTResiduals &kkt)
{
    return {
        {"m_min_eigenvalue", kkt.m_min_eigenvalue},
        {"dual_psd_violation", kkt.dual_psd_violation},
        {"complementarity", kkt.complementarity},
        {"stationarity", kkt.stationarity},
        {"slack_tpc", kkt.slack_tpc},
        {"slack_ipc", kkt.slack_ipc},
        {"feasibility_tpc", kkt.feasibility_tpc},
        {"feasibility_ipc", kkt.feasibility_ipc},
        {"psd_violation", kkt.psd_violation},
        {"max_residual", kkt.max_residual()},
    };
}

json solution_to_json(const Solution &sol)
{
    json mu2 = json::array();
    for (double mu : sol.duals.mu2)
        mu2.push_back(finite_or_null(mu));
    json j;
    j["capacity_nats"] = sol.capacity_nats;
    j["capacity_bits"] = sol.capacity_nats / std::log(2.0);
    j["covariance"] = matrix_to_json(sol.covariance.matrix());
    j["duals"] = {{"mu1", finite_or_null(sol.duals.mu1)}, {"mu2", mu2}};
    j["tx_power"] = sol.tx_power;
    j["interference_powers"] = sol.interference_powers;
    j["tpc_active"] = sol.tpc_active;
    j["ipc_active"] = sol.ipc_active;
    j["kkt"] = kkt_to_json(sol.kkt);
    j["iterations"] = sol.iterations;
    j["converged"] = sol.converged;
    j["residual"] = sol.residual;
    j["method"] = sol.method;
    return j;
}

Solution solution_from_json(const json &j)
{
    try
    {
        Solution s;
        s.covariance = HermitianMatrix(matrix_from_json(j.at("covariance"), "covariance"));
        s.capacity_nats = j.at("capacity_nats").get<double>();
        s.duals.mu1 = finite_or_inf(j.at("duals").at("mu1"));
        for (const auto &mu : j.at("duals").at("mu2"))
            s.duals.mu2.push_back(finite_or_inf(mu));
        s.iterations = j.value("iterations", 0);
        s.converged = j.value("converged", true);
        s.method = j.value("method", std::string());
        return s;
    }
    catch (const json::exception &e)
    {
        throw InvalidInput(std::string("malformed solution document: ") + e.what());
    }
}

json report_to_json(const CapacityReport &rep)
{
    return {
        {"unbounded_growth", rep.unbounded_growth},
        {"zero_capacity", rep.zero_capacity},
        {"tpc_always_active", rep.tpc_always_active},
        {"zf_optimal", rep.zf_optimal},
        {"rank_w1", rep.rank_w1},
        {"rank_w2", rep.rank_w2},
        {"rank_w1_exceeds_w2", rep.rank_w1_exceeds_w2},
    };
}

} // namespace mimocap
