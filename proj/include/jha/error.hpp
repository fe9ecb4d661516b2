// SPDX-License-Identifier: Apache-2.0
//
// janus-holo: tensor impedance holographic antenna synthesis and analysis
// Copyright (C) 2026 The janus-holo authors
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

namespace jha {

/// Broad failure class. The CLI maps these onto process exit codes.
enum class ErrorKind {
    usage,      // bad invocation, unknown selector, empty request
    validation, // malformed input data or spec
    numerical   // input is well-formed but the computation cannot proceed
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string &what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class UsageError : public Error {
public:
    explicit UsageError(const std::string &what) : Error(ErrorKind::usage, what) {}
};

class ValidationError : public Error {
public:
    explicit ValidationError(const std::string &what) : Error(ErrorKind::validation, what) {}
};

class NumericalError : public Error {
public:
    explicit NumericalError(const std::string &what) : Error(ErrorKind::numerical, what) {}
};

// unitcell

class InvalidGeometryError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class InvalidTableError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class InsufficientDataError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Unit cell is not guiding a bound surface wave (k_t < k_0).
class FastWaveError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Requested value lies outside the range a curve can realise.
class OutOfRangeError : public NumericalError {
public:
    OutOfRangeError(const std::string &what, double nearest)
        : NumericalError(what), nearest_(nearest) {}
    double nearest() const noexcept { return nearest_; }

private:
    double nearest_;
};

// hologram

/// Point lies inside the feed exclusion disk where the reference current is undefined.
class FeedRegionError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class DegenerateDirectionError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// aperture

class UndefinedPolarizationError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class LowSignalError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class MissingCutError : public ValidationError {
public:
    MissingCutError(const std::string &what, double nearest_cut_deg)
        : ValidationError(what), nearest_(nearest_cut_deg) {}
    double nearest_cut_deg() const noexcept { return nearest_; }

private:
    double nearest_;
};

} // namespace jha
