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

#include "nongauss/airy.h"

#include <array>
#include <cmath>
#include <mutex>
#include <numbers>
#include <vector>

#include "nongauss/errors.h"

namespace nongauss {

namespace {

using Real = long double;

constexpr Real kAi0 = 0.355028053887817239260063186004183176L;
constexpr Real kAiPrime0 = -0.258819403792806798405183560189203963L;
constexpr double kSeriesLow = -9.0;
constexpr double kSeriesHigh = 5.0;
constexpr double kAsymptoticHigh = 12.0;
constexpr double kTableStep = 0.25;

// Maclaurin series Ai = c1 f - c2 g. Evaluated in extended precision because the two
// series cancel by several orders of magnitude at the ends of the interval.
Real airy_series(Real x) {
    Real x3 = x * x * x;
    Real f = 1.0L;
    Real g = x;
    Real tf = 1.0L;
    Real tg = x;
    for (int k = 0; k < 400; k++) {
        tf *= x3 / ((3 * k + 2) * (3 * k + 3));
        tg *= x3 / ((3 * k + 3) * (3 * k + 4));
        f += tf;
        g += tg;
        if (std::abs(tf) <= 1e-24L * std::abs(f) && std::abs(tg) <= 1e-24L * (std::abs(g) + 1e-300L)) {
            break;
        }
    }
    return kAi0 * f + kAiPrime0 * g;
}

// Coefficients u_k of the large-argument expansions.
const std::array<Real, 64> &u_coefficients() {
    static const std::array<Real, 64> u = [] {
        std::array<Real, 64> c{};
        c[0] = 1.0L;
        for (int k = 1; k < 64; k++) {
            c[k] = c[k - 1] * (6.0L * k - 5) * (6.0L * k - 3) * (6.0L * k - 1) / ((2.0L * k - 1) * 216.0L * k);
        }
        return c;
    }();
    return u;
}

// Sum of (-1)^k c_k zeta^{-k}, truncated at the smallest term.
Real alternating_asymptotic_sum(Real zeta, bool derivative) {
    const auto &u = u_coefficients();
    Real sum = 0.0L;
    Real power = 1.0L;
    Real previous = INFINITY;
    for (int k = 0; k < 64; k++) {
        Real coeff = u[k];
        if (derivative && k > 0) {
            coeff = -(6.0L * k + 1) / (6.0L * k - 1) * u[k];
        }
        Real term = coeff * power;
        if (std::abs(term) > previous) {
            break;
        }
        sum += (k % 2 == 0) ? term : -term;
        previous = std::abs(term);
        if (previous < 1e-22L * std::abs(sum)) {
            break;
        }
        power /= zeta;
    }
    return sum;
}

// Ai(x) e^{zeta} and Ai'(x) e^{zeta} for large positive x.
std::array<Real, 2> airy_positive_asymptotic_scaled(Real x) {
    Real zeta = 2.0L / 3.0L * x * std::sqrt(x);
    Real root = std::pow(x, 0.25L);
    Real pref = 1.0L / (2.0L * std::sqrt(std::numbers::pi_v<Real>));
    return {pref / root * alternating_asymptotic_sum(zeta, false), -pref * root * alternating_asymptotic_sum(zeta, true)};
}

// Oscillatory expansion for large negative x.
Real airy_negative_asymptotic(Real x) {
    Real z = -x;
    Real zeta = 2.0L / 3.0L * z * std::sqrt(z);
    const auto &u = u_coefficients();
    Real even = 0.0L;
    Real odd = 0.0L;
    Real previous = INFINITY;
    Real power = 1.0L;
    for (int k = 0; k < 64; k++) {
        Real term = u[k] * power;
        if (term > previous) {
            break;
        }
        previous = term;
        int sign = ((k / 2) % 2 == 0) ? 1 : -1;
        if (k % 2 == 0) {
            even += sign * term;
        } else {
            odd += sign * term;
        }
        if (term < 1e-22L) {
            break;
        }
        power /= zeta;
    }
    Real phase = zeta - std::numbers::pi_v<Real> / 4;
    return (std::cos(phase) * even + std::sin(phase) * odd) / (std::sqrt(std::numbers::pi_v<Real>) * std::pow(z, 0.25L));
}

// One Taylor step of y'' = x y from x0 by h. Returns (y, y').
std::array<Real, 2> airy_taylor_step(Real x0, Real y0, Real dy0, Real h) {
    constexpr int kTerms = 48;
    std::array<Real, kTerms> a{};
    a[0] = y0;
    a[1] = dy0;
    a[2] = x0 * y0 / 2;
    for (int k = 1; k + 2 < kTerms; k++) {
        a[k + 2] = (x0 * a[k] + a[k - 1]) / ((k + 2.0L) * (k + 1.0L));
    }
    Real y = 0.0L;
    Real dy = 0.0L;
    for (int k = kTerms - 1; k >= 1; k--) {
        y = y * h + a[k];
        dy = dy * h + k * a[k];
    }
    y = y * h + a[0];
    return {y, dy};
}

// Scaled (Ai e^{zeta}, Ai' e^{zeta}) on the grid 12, 11.75, ..., 5, integrated backward
// from the asymptotic anchor. Backward is the stable direction for the decaying solution.
struct ContinuationTable {
    std::vector<Real> x;
    std::vector<Real> y;
    std::vector<Real> dy;
};

const ContinuationTable &continuation_table() {
    static const ContinuationTable table = [] {
        ContinuationTable t;
        Real x = kAsymptoticHigh;
        auto anchor = airy_positive_asymptotic_scaled(x);
        Real scale = std::exp(-2.0L / 3.0L * x * std::sqrt(x));
        Real y = anchor[0] * scale;
        Real dy = anchor[1] * scale;
        int steps = static_cast<int>(std::lround((kAsymptoticHigh - kSeriesHigh) / kTableStep));
        for (int i = 0; i <= steps; i++) {
            t.x.push_back(x);
            t.y.push_back(y);
            t.dy.push_back(dy);
            auto next = airy_taylor_step(x, y, dy, -kTableStep);
            x -= kTableStep;
            y = next[0];
            dy = next[1];
        }
        return t;
    }();
    return table;
}

Real airy_continuation(Real x) {
    const auto &t = continuation_table();
    // Step down from the nearest grid point at or above x.
    auto idx = static_cast<size_t>(std::floor((kAsymptoticHigh - x) / kTableStep));
    if (idx >= t.x.size()) {
        idx = t.x.size() - 1;
    }
    return airy_taylor_step(t.x[idx], t.y[idx], t.dy[idx], x - t.x[idx])[0];
}

void check_range(double x) {
    if (!(std::abs(x) <= 200.0)) {
        throw InvalidArgument("airy_ai: argument outside [-200, 200]");
    }
}

}  // namespace

namespace detail {

double airy_ai_any(double x) {
    if (std::isnan(x)) {
        throw InvalidArgument("airy_ai: NaN argument");
    }
    if (x < kSeriesLow) {
        return static_cast<double>(airy_negative_asymptotic(x));
    }
    if (x <= kSeriesHigh) {
        return static_cast<double>(airy_series(x));
    }
    if (x < kAsymptoticHigh) {
        return static_cast<double>(airy_continuation(x));
    }
    Real zeta = 2.0L / 3.0L * x * std::sqrt(static_cast<Real>(x));
    return static_cast<double>(airy_positive_asymptotic_scaled(x)[0] * std::exp(-zeta));
}

double airy_ai_scaled_any(double x) {
    if (x < 0.0 || std::isnan(x)) {
        return airy_ai_any(x);
    }
    if (x >= kAsymptoticHigh) {
        return static_cast<double>(airy_positive_asymptotic_scaled(x)[0]);
    }
    Real zeta = 2.0L / 3.0L * x * std::sqrt(static_cast<Real>(x));
    Real value = x <= kSeriesHigh ? airy_series(x) : airy_continuation(x);
    return static_cast<double>(value * std::exp(zeta));
}

}  // namespace detail

double airy_ai(double x) {
    check_range(x);
    return detail::airy_ai_any(x);
}

double airy_ai_scaled(double x) {
    check_range(x);
    return detail::airy_ai_scaled_any(x);
}

double airy_ai_zero(int k) {
    if (k < 1) {
        throw InvalidArgument("airy_ai_zero: index must be >= 1");
    }
    static std::mutex mu;
    static std::vector<double> zeros;
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(zeros.size()) < k) {
        int j = static_cast<int>(zeros.size()) + 1;
        double t = 3.0 * std::numbers::pi * (4.0 * j - 1.0) / 8.0;
        double t2 = 1.0 / (t * t);
        double guess = -std::pow(t, 2.0 / 3.0) *
                       (1.0 + t2 * (5.0 / 48.0 + t2 * (-5.0 / 36.0 + t2 * (77125.0 / 82944.0 - t2 * 108056875.0 / 6967296.0))));
        // Bracket within a fraction of the local zero spacing, then regula falsi (Illinois).
        double width = 0.15 * std::numbers::pi / std::sqrt(-guess);
        double lo = guess - width;
        double hi = guess + width;
        double flo = detail::airy_ai_any(lo);
        double fhi = detail::airy_ai_any(hi);
        if (flo * fhi > 0.0) {
            throw NumericalFailure("airy_ai_zero: failed to bracket zero");
        }
        int side = 0;
        double root = guess;
        for (int iter = 0; iter < 200 && hi - lo > 4e-16 * std::abs(root); iter++) {
            root = (lo * fhi - hi * flo) / (fhi - flo);
            double fr = detail::airy_ai_any(root);
            if (fr == 0.0) {
                break;
            }
            if (fr * fhi > 0.0) {
                hi = root;
                fhi = fr;
                if (side == -1) {
                    flo /= 2;
                }
                side = -1;
            } else {
                lo = root;
                flo = fr;
                if (side == 1) {
                    fhi /= 2;
                }
                side = 1;
            }
        }
        zeros.push_back(root);
    }
    return zeros[k - 1];
}

}  // namespace nongauss
