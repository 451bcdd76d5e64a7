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

#include "mimocap/hermitian.hpp"

namespace mimocap
{

/// Optimal covariance under the total power constraint alone.
struct WaterfillResult
{
    HermitianMatrix covariance;
    double water_level_inverse = 0.0; ///< μ⁻¹; active modes receive μ⁻¹ - λᵢ⁻¹
    Index active_modes = 0;           ///< modes with strictly positive power
    double capacity_nats = 0.0;
};

/// Water-filling over the eigenmodes of W1 with total power p_total.
///
/// The water level comes from an exact active-set sweep over the eigenvalues in
/// descending order. Modes at or below the rank tolerance never receive power,
/// so W1 may be singular.
///
/// Throws ZeroChannelError if W1 is numerically zero, DomainError if p_total <= 0.
WaterfillResult waterfill(const HermitianMatrix &w1, double p_total, double tol = default_rank_tol);

/// log|I + W1·R| in nats, evaluated through the eigenvalues of W1^{1/2}·R·W1^{1/2}.
double capacity_of(const HermitianMatrix &r, const HermitianMatrix &w1);

} // namespace mimocap
