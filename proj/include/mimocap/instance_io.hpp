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

#include <json.hpp>

#include "mimocap/closed_forms.hpp"
#include "mimocap/problem.hpp"

namespace mimocap
{

// Instance documents:
//   {"m": 2, "P_T": 1.5, "W1": [[1, 0], [0, 0.5]],
//    "constraints": [{"W2": [[1, -0.5], [-0.5, 1]], "P_I": 1}]}
// Matrices are row-major nested arrays; an entry is a real number or a
// [re, im] pair. "H1" may replace "W1" and "H2" may replace "W2"; raw
// channels are turned into Grams H⁺H on load.

/// Throws InvalidInput naming the offending field.
CMatrix matrix_from_json(const nlohmann::json &j, const std::string &field);

/// Rows of [re, im] pairs.
nlohmann::json matrix_to_json(const CMatrix &a);

/// Parses and validates. Throws InvalidInput.
ProblemInstance instance_from_json(const nlohmann::json &j);

nlohmann::json instance_to_json(const ProblemInstance &inst);

/// Reads and parses a file. Throws InvalidInput for unreadable or malformed files.
ProblemInstance load_instance(const std::string &path);

/// Solution document. Non-finite duals are written as null.
nlohmann::json solution_to_json(const Solution &sol);

nlohmann::json kkt_to_json(const KKTResiduals &kkt);

/// Covariance and duals back from a solution document (null duals read as +inf).
Solution solution_from_json(const nlohmann::json &j);

nlohmann::json report_to_json(const CapacityReport &rep);

} // namespace mimocap
