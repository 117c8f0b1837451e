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

#include "nongauss/quadrature.h"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <queue>

#include "nongauss/errors.h"

namespace nongauss {

namespace {

const GaussLegendreRule &unit_rule(int n) {
    static std::mutex mu;
    static std::map<int, GaussLegendreRule> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) {
        return it->second;
    }
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; i++) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; iter++) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; k++) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) {
                p0 = 1.0;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return cache.emplace(n, std::move(rule)).first->second;
}

// Kronrod 15-point abscissae on [0, 1) and weights; Gauss 7-point weights at the odd
// Kronrod nodes.
constexpr double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                            0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a;
    double b;
    double value;
    double error;
    bool operator<(const Panel &other) const {
        return error < other.error;
    }
};

Panel gauss_kronrod_15(const std::function<double(double)> &f, double a, double b) {
    double center = 0.5 * (a + b);
    double half = 0.5 * (b - a);
    double fc = f(center);
    double kronrod = fc * kWgk[7];
    double gauss = fc * kWg[3];
    for (int j = 0; j < 7; j++) {
        double dx = half * kXgk[j];
        double sum = f(center - dx) + f(center + dx);
        kronrod += kWgk[j] * sum;
        if (j % 2 == 1) {
            gauss += kWg[j / 2] * sum;
        }
    }
    return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace

GaussLegendreRule gauss_legendre(int n, double a, double b) {
    if (n < 1) {
        throw InvalidArgument("gauss_legendre: n must be positive");
    }
    const GaussLegendreRule &unit = unit_rule(n);
    GaussLegendreRule out;
    out.nodes.resize(n);
    out.weights.resize(n);
    double mid = 0.5 * (a + b);
    double half = 0.5 * (b - a);
    for (int i = 0; i < n; i++) {
        out.nodes[i] = mid + half * unit.nodes[i];
        out.weights[i] = half * unit.weights[i];
    }
    return out;
}

GaussLegendreRule composite_gauss_legendre(int n, int panels, double a, double b) {
    if (panels < 1) {
        throw InvalidArgument("composite_gauss_legendre: panels must be positive");
    }
    GaussLegendreRule out;
    double width = (b - a) / panels;
    for (int k = 0; k < panels; k++) {
        GaussLegendreRule piece = gauss_legendre(n, a + k * width, a + (k + 1) * width);
        out.nodes.insert(out.nodes.end(), piece.nodes.begin(), piece.nodes.end());
        out.weights.insert(out.weights.end(), piece.weights.begin(), piece.weights.end());
    }
    return out;
}

IntegrationResult integrate_adaptive(const std::function<double(double)> &f, double a, double b,
                                     double abs_tol, double rel_tol, int max_intervals) {
    if (!std::isfinite(a) || !std::isfinite(b)) {
        throw InvalidArgument("integrate_adaptive: bounds must be finite");
    }
    IntegrationResult result;
    if (a == b) {
        result.converged = true;
        return result;
    }
    std::priority_queue<Panel> heap;
    Panel first = gauss_kronrod_15(f, a, b);
    heap.push(first);
    double value = first.value;
    double error = first.error;
    int evaluations = 15;
    while (error > std::max(abs_tol, rel_tol * std::abs(value)) && static_cast<int>(heap.size()) < max_intervals) {
        Panel worst = heap.top();
        heap.pop();
        double mid = 0.5 * (worst.a + worst.b);
        Panel left = gauss_kronrod_15(f, worst.a, mid);
        Panel right = gauss_kronrod_15(f, mid, worst.b);
        evaluations += 30;
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }
    // Re-sum to shed the rounding drift of the running totals.
    value = 0.0;
    error = 0.0;
    while (!heap.empty()) {
        value += heap.top().value;
        error += heap.top().error;
        heap.pop();
    }
    result.value = value;
    result.error = error;
    result.evaluations = evaluations;
    result.converged = error <= std::max(abs_tol, rel_tol * std::abs(value));
    return result;
}

}  // namespace nongauss
