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

#include <stdexcept>
#include <string>

namespace mimocap
{

/// Base class for every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (bad dimensions, non-PSD Gram, negative budget).
class InvalidInput : public Error
{
public:
    using Error::Error;
};

/// Argument outside the domain of an operation.
class DomainError : public Error
{
public:
    using Error::Error;
};

/// Eigensolver or other numerical kernel failed.
class NumericalError : public Error
{
public:
    using Error::Error;
};

/// Main channel Gram is zero; no water level exists.
class ZeroChannelError : public Error
{
public:
    using Error::Error;
};

/// All duals vanish and the weighted constraint Gram is zero.
class DegenerateDualError : public Error
{
public:
    using Error::Error;
};

} // namespace mimocap
