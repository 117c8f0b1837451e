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

#ifndef NONGAUSS_QUADRATURE_H
#define NONGAUSS_QUADRATURE_H

#include <functional>
#include <vector>

namespace nongauss {

struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [a, b]. Nodes come from Newton iteration on P_n.
GaussLegendreRule gauss_legendre(int n, double a = -1.0, double b = 1.0);

/// Composite rule: `panels` equal panels on [a, b], each with an n-point rule.
GaussLegendreRule composite_gauss_legendre(int n, int panels, double a, double b);

struct IntegrationResult {
    double value = 0.0;
    double error = 0.0;
    int evaluations = 0;
    bool converged = false;
};

/// Globally adaptive Gauss-Kronrod (7/15) integration of f over a finite [a, b].
///
/// Bisects the interval with the worst error estimate until the total estimate is below
/// max(abs_tol, rel_tol * |value|) or `max_intervals` is reached.
IntegrationResult integrate_adaptive(const std::function<double(double)> &f, double a, double b,
                                     double abs_tol, double rel_tol, int max_intervals = 2000);

}  // namespace nongauss

#endif
