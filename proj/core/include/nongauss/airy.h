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

#ifndef NONGAUSS_AIRY_H
#define NONGAUSS_AIRY_H

namespace nongauss {

/// Airy function Ai(x) for |x| <= 200.
///
/// Power series near the origin, asymptotic expansions for large |x|, and Taylor
/// continuation of the Airy ODE between the series and the decaying asymptote.
/// Throws InvalidArgument outside the supported range.
double airy_ai(double x);

/// Ai(x) * exp(2/3 x^{3/2}) for x >= 0, Ai(x) for x < 0. Avoids underflow in tails.
double airy_ai_scaled(double x);

/// k-th zero of Ai (k = 1, 2, ...), all negative. Cached after the first request.
double airy_ai_zero(int k);

namespace detail {
// Unguarded variants for internal integrals that reach beyond |x| = 200.
double airy_ai_any(double x);
double airy_ai_scaled_any(double x);
}  // namespace detail

}  // namespace nongauss

#endif
