// Copyright 2026 The nongauss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NONGAUSS_ERRORS_H
#define NONGAUSS_ERRORS_H

#include <stdexcept>
#include <string>

namespace nongauss {

/// Raised when a caller passes parameters outside a function's domain.
class InvalidArgument : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A Gaussian channel (X, Y) that is not completely positive.
class InvalidChannel : public InvalidArgument {
   public:
    using InvalidArgument::InvalidArgument;
};

/// A computation ran but could not reach its accuracy target.
class NumericalFailure : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Probability mass left the truncated Fock space beyond tolerance.
class CutoffTooSmall : public NumericalFailure {
   public:
    using NumericalFailure::NumericalFailure;
};

/// A root or bracket search left its admissible interval.
class OutOfRange : public NumericalFailure {
   public:
    using NumericalFailure::NumericalFailure;
};

}  // namespace nongauss

#endif
