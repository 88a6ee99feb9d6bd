// Copyright 2026 The catlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace catlab {

/// Base class for failures that indicate the numerics cannot be trusted
/// (truncation too small, enumeration incomplete, broken invariants).
class NumericalError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class CutoffTooSmall : public NumericalError {
   public:
    using NumericalError::NumericalError;
};

class NonConvergentTail : public NumericalError {
   public:
    using NumericalError::NumericalError;
};

class EnumerationCapReached : public NumericalError {
   public:
    using NumericalError::NumericalError;
};

class ZeroProbability : public NumericalError {
   public:
    using NumericalError::NumericalError;
};

class NonIdealReflection : public NumericalError {
   public:
    using NumericalError::NumericalError;
};

class DimensionMismatch : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed or inconsistent experiment configuration.
class ConfigError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace catlab
