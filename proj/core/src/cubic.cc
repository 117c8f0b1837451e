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

#include "nongauss/cubic.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "nongauss/airy.h"
#include "nongauss/errors.h"
#include "nongauss/parallel.h"
#include "nongauss/quadrature.h"

namespace nongauss {

namespace {

constexpr double kMinX = 1e-3;
constexpr double kMaxX = 50.0;
// Lobes beyond this |z| are replaced by the lobe-averaged asymptote.
constexpr double kTailStart = 400.0;
// Log of the envelope below which contributions are dropped.
constexpr double kLogCut = -46.0;

// Constants of the closed form for one parameter set.
struct CubicConstants {
    double s2;
    double g;
    double kappa;
    double a;
    double d;
    double lambda;
};

CubicConstants constants_for(double gamma, double r) {
    CubicConstants c{};
    c.s2 = std::exp(2 * r) / 2;
    c.g = 2 * std::numbers::sqrt2 * gamma;
    c.kappa = std::cbrt(4.0 / (3.0 * c.g));
    c.a = 1.0 / (8.0 * c.s2);
    c.d = 1.0 / (6.0 * c.g * c.s2);
    c.lambda = c.d / c.kappa;
    return c;
}

// lambda for the representative (gamma = x, r = 0).
double lambda_of_x(double x) {
    return constants_for(x, 0.0).lambda;
}

double log_envelope(double lambda, double z) {
    return lambda * z - lambda * lambda * lambda / 3 - 0.25 * std::log(std::max(std::abs(z), 1.0)) -
           0.5 * std::log(std::numbers::pi);
}

struct ZIntegral {
    double value = 0.0;
    double error = 0.0;
    double z_min = 0.0;
    double z_max = 0.0;
    int lobes = 0;
    double tail = 0.0;
};

const GaussLegendreRule &rule16() {
    static const GaussLegendreRule r = gauss_legendre(16);
    return r;
}
const GaussLegendreRule &rule10() {
    static const GaussLegendreRule r = gauss_legendre(10);
    return r;
}

template <class F>
double apply_rule(const GaussLegendreRule &rule, F &f, double lo, double hi) {
    double half = 0.5 * (hi - lo);
    double mid = 0.5 * (hi + lo);
    double sum = 0.0;
    for (size_t i = 0; i < rule.nodes.size(); i++) {
        sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    }
    return sum * half;
}

// int_0^inf x^{-1/4} e^{-t} dt from y upward.
double upper_gamma_three_quarters(double y) {
    IntegrationResult res = integrate_adaptive([](double t) { return std::pow(t, -0.25) * std::exp(-t); }, y,
                                               y + 80.0, 1e-16, 1e-13);
    return res.value;
}

// Integral over z of a nonnegative integrand f(z) whose envelope is
// e^{lambda z - lambda^3/3} |Ai(z)|. With use_tail the region z < -kTailStart uses
// the lobe average 2/pi of |sin|, which needs the integrand to be exactly that envelope.
template <class F>
ZIntegral integrate_z(double lambda, F &&f, bool use_tail) {
    ZIntegral out;
    const double lam3 = lambda * lambda * lambda / 3;
    // z > 0: peak near lambda^2, decays like exp(-(2/3) z^{3/2}).
    double z_hi = std::max(lambda * lambda, 1.0);
    const double step = std::max(1.0, std::sqrt(2 * lambda));
    while (lambda * z_hi - lam3 - 2.0 / 3.0 * std::pow(z_hi, 1.5) > kLogCut - 4) {
        z_hi += step;
    }
    out.z_max = z_hi;
    const double a1 = airy_ai_zero(1);
    IntegrationResult pos = integrate_adaptive(f, 0.0, z_hi, 1e-16, 1e-13, 4000);
    IntegrationResult first = integrate_adaptive(f, a1, 0.0, 1e-16, 1e-13, 400);
    out.value = pos.value + first.value;
    out.error = pos.error + first.error;
    if (!pos.converged || !first.converged) {
        throw NumericalFailure("wigner_negativity: adaptive quadrature did not converge near the Airy turning point");
    }
    double right = a1;
    out.z_min = a1;
    for (int k = 2;; k++) {
        if (log_envelope(lambda, right) < kLogCut) {
            break;
        }
        if (use_tail && -right > kTailStart) {
            double u = -right;
            double tail = std::exp(-lam3) * 2.0 / std::pow(std::numbers::pi, 1.5) * std::pow(lambda, -0.75) *
                          upper_gamma_three_quarters(lambda * u);
            double period2 = std::numbers::pi * std::numbers::pi / u;
            double zeta = 2.0 / 3.0 * std::pow(u, 1.5);
            double rel = period2 * std::pow(lambda + 1.0 / u, 2) / 24 + 1.0 / (zeta * zeta);
            out.tail = tail;
            out.value += tail;
            out.error += tail * rel;
            break;
        }
        if (k > 5000000) {
            throw NumericalFailure("wigner_negativity: lobe count exceeded; x too large for direct lobe summation");
        }
        double left = airy_ai_zero(k);
        double fine = apply_rule(rule16(), f, left, right);
        double coarse = apply_rule(rule10(), f, left, right);
        out.value += fine;
        out.error += std::abs(fine - coarse);
        out.lobes++;
        right = left;
        out.z_min = left;
    }
    // Rounding accumulated over the lobe sum.
    out.error += out.value * 1e-14 * (out.lobes + 10);
    return out;
}

double abs_airy_weight(double lambda, double z) {
    const double lam3 = lambda * lambda * lambda / 3;
    if (z > 0.0) {
        return std::exp(lambda * z - lam3 - 2.0 / 3.0 * std::pow(z, 1.5)) * detail::airy_ai_scaled_any(z);
    }
    return std::exp(lambda * z - lam3) * std::abs(detail::airy_ai_any(z));
}

NegativityResult to_result(const ZIntegral &zi) {
    NegativityResult out;
    out.value = zi.value;
    out.error = zi.error;
    out.z_min = zi.z_min;
    out.z_max = zi.z_max;
    out.lobes = zi.lobes;
    out.tail = zi.tail;
    return out;
}

void require_finite(double v, const char *what) {
    if (!std::isfinite(v)) {
        throw InvalidArgument(std::string(what) + " must be finite");
    }
}

}  // namespace

double CubicPhaseParams::x() const {
    return gamma * std::exp(3 * r);
}

double cubic_wigner(const CubicPhaseParams &params, double q, double p) {
    require_finite(params.r, "cubic_wigner: r");
    require_finite(params.momentum, "cubic_wigner: P");
    if (!(params.gamma > 0.0) || !std::isfinite(params.gamma)) {
        throw InvalidArgument("cubic_wigner: gamma must be positive; gamma = 0 is Gaussian, use the Gaussian Wigner function");
    }
    const CubicConstants c = constants_for(params.gamma, params.r);
    const double b = 3 * c.g * q * q - p + params.momentum / std::numbers::sqrt2;
    const double z = c.kappa * (b + c.a * c.d);
    double log_pref = std::log(c.kappa) - 0.5 * std::log(2 * std::numbers::pi * c.s2) - q * q / (2 * c.s2) + b * c.d +
                      2.0 / 3.0 * c.a * c.d * c.d;
    if (z > 0.0) {
        return std::exp(log_pref - 2.0 / 3.0 * std::pow(z, 1.5)) * detail::airy_ai_scaled_any(z);
    }
    return std::exp(log_pref) * detail::airy_ai_any(z);
}

Complex cubic_characteristic(const CubicPhaseParams &params, const PhasePoint &r) {
    if (r.modes() != 1) {
        throw InvalidArgument("cubic_characteristic: single-mode phase point expected");
    }
    require_finite(params.gamma, "cubic_characteristic: gamma");
    require_finite(params.r, "cubic_characteristic: r");
    require_finite(params.momentum, "cubic_characteristic: P");
    const double s2 = std::exp(2 * params.r) / 2;
    const double g = 2 * std::numbers::sqrt2 * params.gamma;
    const double u = r.q();
    const double v = r.p();
    const Complex i(0.0, 1.0);
    // int exp(-A q^2 + B q + C) dq with psi(q) = (2 pi s^2)^{-1/4} e^{-q^2/(4 s^2)} e^{i g q^3 + i P q / sqrt 2}.
    const Complex big_a = 1.0 / (2 * s2) - 3.0 * i * g * u;
    const Complex big_b = -u / (2 * s2) + 3.0 * i * g * u * u - i * v;
    const Complex big_c = -u * u / (4 * s2) + i * (g * u * u * u + params.momentum / std::numbers::sqrt2 * u);
    return std::exp(-i * (u * v / 2)) / std::sqrt(2 * std::numbers::pi * s2) * std::sqrt(std::numbers::pi / big_a) *
           std::exp(big_b * big_b / (4.0 * big_a) + big_c);
}

double cubic_n_renyi2(double x) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
        throw InvalidArgument("cubic_n_renyi2: x must be finite and nonnegative");
    }
    if (x == 0.0) {
        return 0.0;
    }
    // Representative r = 0, so s^2 = 1/2.
    const double s2 = 0.5;
    const double g = 2 * std::numbers::sqrt2 * x;
    const Complex i(0.0, 1.0);
    // |chi(u, v)|^4 integrated over v in closed form, left as a function of u.
    auto integrand = [&](double u) {
        const Complex big_a = 1.0 / (2 * s2) - 3.0 * i * g * u;
        const Complex b0 = -u / (2 * s2) + 3.0 * i * g * u * u;
        const Complex c = 1.0 / (4.0 * big_a);
        const double curvature = c.real();
        const double slope = 2 * (c * b0).imag();
        const double offset = (c * b0 * b0).real() - u * u / (4 * s2);
        const double pref = std::pow(2 * std::numbers::pi * s2, -2) * std::pow(std::numbers::pi / std::abs(big_a), 2);
        return pref * std::sqrt(std::numbers::pi / (4 * curvature)) * std::exp(4 * offset + slope * slope / curvature);
    };
    const double half_width = 40 * std::sqrt(s2);
    IntegrationResult res = integrate_adaptive(integrand, -half_width, half_width, 1e-16, 1e-13, 20000);
    if (!res.converged) {
        throw NumericalFailure("cubic_n_renyi2: quartic characteristic integral did not converge");
    }
    // (1/2 pi) int |chi(r/sqrt 2)|^4 d^2 r = (1/pi) int |chi(v)|^4 d^2 v.
    return std::max(0.0, -std::log2(res.value / std::numbers::pi));
}

CubicPhaseParams cubic_params_for_energy(double energy) {
    if (!(energy >= 0.0) || !std::isfinite(energy)) {
        throw InvalidArgument("cubic_params_for_energy: energy must be finite and nonnegative");
    }
    // min_energy is increasing in x; bracket then bisect.
    double lo = 0.0;
    double hi = 1.0;
    while (min_energy(hi) < energy) {
        hi *= 2;
    }
    for (int iter = 0; iter < 200 && hi - lo > 1e-15 * hi; iter++) {
        double mid = 0.5 * (lo + hi);
        (min_energy(mid) < energy ? lo : hi) = mid;
    }
    const double x = 0.5 * (lo + hi);
    CubicPhaseParams p;
    p.r = optimal_squeezing(x);
    p.gamma = x * std::exp(-3 * p.r);
    p.momentum = -6 * p.gamma * std::exp(2 * p.r);
    return p;
}

namespace detail {

NegativityResult wigner_negativity_any(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw InvalidArgument("wigner_negativity: x must be positive");
    }
    const double lambda = lambda_of_x(x);
    ZIntegral zi = integrate_z(lambda, [lambda](double z) { return abs_airy_weight(lambda, z); }, true);
    return to_result(zi);
}

}  // namespace detail

NegativityResult wigner_negativity(double x) {
    if (!(x >= kMinX && x <= kMaxX)) {
        throw InvalidArgument("wigner_negativity: x must lie in [1e-3, 50]");
    }
    return detail::wigner_negativity_any(x);
}

NegativityResult wigner_negativity(const CubicPhaseParams &params) {
    require_finite(params.r, "wigner_negativity: r");
    return wigner_negativity(params.x());
}

NegativityResult wigner_negativity_direct(const CubicPhaseParams &params) {
    require_finite(params.r, "wigner_negativity_direct: r");
    require_finite(params.momentum, "wigner_negativity_direct: P");
    if (!(params.x() >= kMinX && params.x() <= kMaxX) || !(params.gamma > 0.0)) {
        throw InvalidArgument("wigner_negativity_direct: need gamma > 0 and x in [1e-3, 50]");
    }
    const CubicConstants c = constants_for(params.gamma, params.r);
    const double half_width = std::sqrt(c.s2 * 2 * 40.0);
    auto outer = [&](const GaussLegendreRule &rule, ZIntegral &last) {
        double total = 0.0;
        double err = 0.0;
        for (size_t i = 0; i < rule.nodes.size(); i++) {
            const double q = rule.nodes[i];
            const double shift = 3 * c.g * q * q + c.a * c.d + params.momentum / std::numbers::sqrt2;
            auto inner = [&](double z) { return std::abs(cubic_wigner(params, q, shift - z / c.kappa)) / c.kappa; };
            last = integrate_z(c.lambda, inner, false);
            total += rule.weights[i] * last.value;
            err += rule.weights[i] * last.error;
        }
        return std::pair<double, double>(total, err);
    };
    ZIntegral last;
    auto [coarse, coarse_err] = outer(composite_gauss_legendre(8, 4, -half_width, half_width), last);
    auto [fine, fine_err] = outer(composite_gauss_legendre(12, 4, -half_width, half_width), last);
    (void)coarse_err;
    NegativityResult out = to_result(last);
    out.value = fine;
    out.error = std::abs(fine - coarse) + fine_err;
    return out;
}

double cubic_fidelity(double r, double r_prime) {
    require_finite(r, "cubic_fidelity: r");
    require_finite(r_prime, "cubic_fidelity: r'");
    return 1.0 / std::cosh(r - r_prime);
}

double optimal_squeezing(double x) {
    require_finite(x, "optimal_squeezing: x");
    return 0.25 * std::log1p(72 * x * x);
}

double min_energy(double x) {
    require_finite(x, "min_energy: x");
    const double w = std::sqrt(72 * x * x + 1);
    return 0.5 * ((36 * x * x + 1) / w - 1) + 18 * x * x / w;
}

double cubic_mean_photon(double gamma, double r, double momentum) {
    require_finite(gamma, "cubic_mean_photon: gamma");
    require_finite(r, "cubic_mean_photon: r");
    require_finite(momentum, "cubic_mean_photon: P");
    const double shifted = momentum + 6 * gamma * std::exp(2 * r);
    return 0.5 * (std::cosh(2 * r) - 1) + 18 * gamma * gamma * std::exp(4 * r) + 0.25 * shifted * shifted;
}

double discrimination_success(double fidelity, double copies) {
    if (!(fidelity > 0.0 && fidelity <= 1.0)) {
        throw InvalidArgument("discrimination_success: fidelity must lie in (0, 1]");
    }
    if (!(copies >= 0.0) || !std::isfinite(copies)) {
        throw InvalidArgument("discrimination_success: copy count must be nonnegative");
    }
    return 0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - std::pow(fidelity, copies))));
}

double samples_for_squeezing_gap(double delta, double dr) {
    if (!(delta > 0.0 && delta < 0.5)) {
        throw InvalidArgument("samples_for_squeezing_gap: delta must lie in (0, 1/2)");
    }
    if (!(dr > 0.0) || !std::isfinite(dr)) {
        throw InvalidArgument("samples_for_squeezing_gap: dr must be positive");
    }
    return std::log(1.0 / (4 * delta * (1 - delta))) / std::log(std::cosh(dr));
}

BoundSpec sample_lower_bound(double epsilon, double delta, double x) {
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
        throw InvalidArgument("sample_lower_bound: epsilon must be positive");
    }
    if (!(delta > 0.0 && delta < 0.5)) {
        throw InvalidArgument("sample_lower_bound: delta must lie in (0, 1/2)");
    }
    if (!(x >= kMinX && x <= kMaxX)) {
        throw InvalidArgument("sample_lower_bound: x must lie in [1e-3, 50]");
    }
    const double base = detail::wigner_negativity_any(x).value;
    auto gap = [&](double dr) { return detail::wigner_negativity_any(x * std::exp(3 * dr)).value - base - 2 * epsilon; };
    // Expand a bracket geometrically from small dr, capped at 2.
    double lo = 0.0;
    double hi = 1e-3;
    while (gap(hi) < 0.0) {
        if (hi >= 2.0) {
            throw OutOfRange("sample_lower_bound: W(x e^{3 dr}) - W(x) stays below 2 epsilon for dr in (0, 2]");
        }
        lo = hi;
        hi = std::min(2.0, hi * 2);
    }
    while (hi - lo > std::max(1e-12, 1e-10 * hi)) {
        double mid = 0.5 * (lo + hi);
        if (gap(mid) < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    BoundSpec out;
    out.epsilon = epsilon;
    out.delta = delta;
    out.x = x;
    out.dr = 0.5 * (lo + hi);
    out.samples = samples_for_squeezing_gap(delta, out.dr);
    return out;
}

std::vector<BoundRow> lower_bound_curve(double epsilon, double delta, const std::vector<double> &xs) {
    std::vector<BoundRow> rows(xs.size());
    parallel_chunks(xs.size(), 1, [&](size_t, size_t begin, size_t end) {
        for (size_t i = begin; i < end; i++) {
            BoundSpec spec = sample_lower_bound(epsilon, delta, xs[i]);
            BoundRow &row = rows[i];
            row.x = xs[i];
            row.r_opt = optimal_squeezing(xs[i]);
            row.mean_photon = min_energy(xs[i]);
            row.negativity = detail::wigner_negativity_any(xs[i]).value;
            row.dr = spec.dr;
            row.samples = spec.samples;
        }
    });
    return rows;
}

}  // namespace nongauss
