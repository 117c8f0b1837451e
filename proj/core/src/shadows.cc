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

#include "nongauss/shadows.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nongauss/errors.h"
#include "nongauss/linalg.h"
#include "nongauss/parallel.h"
#include "nongauss/philox.h"
#include "nongauss/quadrature.h"

namespace nongauss {

namespace {

constexpr int kGridCells = 4096;
constexpr double kDensityCut = 1e-10;
constexpr double kMassTol = 1e-6;
constexpr double kKernelCut = 1e-12;
constexpr int kMaxCap = 20;
constexpr size_t kSampleChunk = 2048;
// Philox stream reserved for bootstrap resampling.
constexpr uint32_t kBootstrapStream = 7;

void require_cap(int cap) {
    if (cap < 0 || cap > kMaxCap) {
        throw InvalidArgument("shadow cap M must lie in [0, 20]");
    }
}

double max_abs_x(const std::vector<ShadowSample> &samples) {
    double m = 0.0;
    for (const auto &s : samples) {
        if (!std::isfinite(s.x) || !std::isfinite(s.theta)) {
            throw InvalidArgument("shadow sample must be finite");
        }
        m = std::max(m, std::abs(s.x));
    }
    return m;
}

// Running sums needed by the purity U-statistic.
struct PuritySums {
    CMatrix sum;
    double self = 0.0;
    uint64_t count = 0;
};

double u_statistic(const PuritySums &s) {
    double n = double(s.count);
    return (s.sum.squaredNorm() - s.self) / (n * (n - 1.0));
}

// Per-block sums over consecutive blocks, deterministic for any thread count.
std::vector<PuritySums> block_sums(const std::vector<ShadowSample> &samples, int cap, size_t block) {
    ShadowKernel kernel(cap, max_abs_x(samples));
    const size_t n = samples.size();
    const size_t blocks = (n + block - 1) / block;
    std::vector<PuritySums> out(blocks);
    parallel_chunks(n, block, [&](size_t idx, size_t begin, size_t end) {
        PuritySums s;
        s.sum = CMatrix::Zero(cap + 1, cap + 1);
        for (size_t i = begin; i < end; i++) {
            CMatrix m = kernel.matrix(samples[i]);
            s.self += m.squaredNorm();
            s.sum += m;
        }
        s.count = end - begin;
        out[idx] = std::move(s);
    });
    return out;
}

PuritySums fold(const std::vector<PuritySums> &parts, int cap) {
    PuritySums total;
    total.sum = CMatrix::Zero(cap + 1, cap + 1);
    for (const auto &p : parts) {
        total.sum += p.sum;
        total.self += p.self;
        total.count += p.count;
    }
    return total;
}

}  // namespace

QuadratureSampler::QuadratureSampler(const DensityOperator &rho) {
    if (rho.modes() != 1) {
        throw InvalidArgument("QuadratureSampler: single-mode state expected");
    }
    const CMatrix &m = rho.matrix();
    const int d = rho.dim_per_mode();
    const int nmax = d - 1;
    RVector sqrt_diag = m.diagonal().real().cwiseMax(0.0).cwiseSqrt();
    // Cauchy-Schwarz bound on the density at |x|, for every theta.
    auto bound = [&](double x) {
        double s = sqrt_diag.dot(hermite_functions(x, nmax).cwiseAbs());
        return s * s;
    };
    double edge = 0.0;
    for (double x = 60.0; x >= 0.0; x -= 0.05) {
        if (bound(x) >= kDensityCut) {
            edge = x;
            break;
        }
    }
    support_ = edge + 0.05;
    harmonics_ = d;
    grid_.resize(kGridCells + 1);
    const double h = 2 * support_ / kGridCells;
    for (int i = 0; i <= kGridCells; i++) {
        grid_[i] = -support_ + i * h;
    }
    cumulative_.assign(d, std::vector<Complex>(kGridCells + 1, Complex(0.0)));
    std::vector<Complex> prev(d, Complex(0.0));
    for (int i = 0; i <= kGridCells; i++) {
        RVector hf = hermite_functions(grid_[i], nmax);
        for (int k = 0; k < d; k++) {
            Complex a = 0.0;
            for (int row = 0; row + k < d; row++) {
                a += m(row, row + k) * hf[row] * hf[row + k];
            }
            cumulative_[k][i] = (i == 0) ? Complex(0.0) : cumulative_[k][i - 1] + 0.5 * h * (prev[k] + a);
            prev[k] = a;
        }
    }
    for (int j = 0; j < 64; j++) {
        double theta = 2 * std::numbers::pi * j / 64;
        double mass = cdf(kGridCells, theta);
        if (mass < 1.0 - kMassTol) {
            throw NumericalFailure("QuadratureSampler: density mass " + std::to_string(mass) +
                                   " on the detected support is below 1 - 1e-6");
        }
    }
}

double QuadratureSampler::cdf(size_t cell, double theta) const {
    return cdf(cell, phases(theta));
}

std::vector<Complex> QuadratureSampler::phases(double theta) const {
    std::vector<Complex> out(harmonics_);
    const Complex step = std::polar(1.0, theta);
    Complex z = 1.0;
    for (int k = 0; k < harmonics_; k++) {
        out[k] = z;
        z *= step;
    }
    return out;
}

double QuadratureSampler::cdf(size_t cell, const std::vector<Complex> &phase) const {
    double value = cumulative_[0][cell].real();
    for (int k = 1; k < harmonics_; k++) {
        value += 2 * (phase[k] * cumulative_[k][cell]).real();
    }
    return value;
}

ShadowSample QuadratureSampler::draw(uint64_t seed, uint64_t index) const {
    auto u = Philox4x32::from_seed(seed).uniforms(index);
    ShadowSample s;
    s.theta = 2 * std::numbers::pi * u[0];
    const std::vector<Complex> phase = phases(s.theta);
    const double target = u[1] * cdf(kGridCells, phase);
    size_t lo = 0;
    size_t hi = kGridCells;
    while (hi - lo > 1) {
        size_t mid = (lo + hi) / 2;
        if (cdf(mid, phase) <= target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    double f_lo = cdf(lo, phase);
    double f_hi = cdf(hi, phase);
    double frac = f_hi > f_lo ? std::clamp((target - f_lo) / (f_hi - f_lo), 0.0, 1.0) : 0.5;
    s.x = grid_[lo] + frac * (grid_[hi] - grid_[lo]);
    return s;
}

ShadowSample sample_shadow(const DensityOperator &rho, uint64_t seed) {
    return QuadratureSampler(rho).draw(seed, 0);
}

std::vector<ShadowSample> sample_shadows(const DensityOperator &rho, uint64_t count, uint64_t seed) {
    QuadratureSampler sampler(rho);
    std::vector<ShadowSample> out(count);
    parallel_chunks(count, kSampleChunk, [&](size_t, size_t begin, size_t end) {
        for (size_t i = begin; i < end; i++) {
            out[i] = sampler.draw(seed, i);
        }
    });
    return out;
}

ShadowKernel::ShadowKernel(int cap, double x_bound) : cap_(cap), x_bound_(x_bound) {
    require_cap(cap);
    if (!(x_bound >= 0.0) || !std::isfinite(x_bound)) {
        throw InvalidArgument("ShadowKernel: x bound must be finite and nonnegative");
    }
    const int d = cap + 1;
    // Truncation point: the Gaussian factor alone, then the full t |<n1|e^{itq}|n2>|.
    double t_max = 2 * std::sqrt(std::log(1.0 / kKernelCut));
    for (double t = 0.0; t <= 80.0; t += 0.25) {
        double peak = t * displacement_matrix(PhasePoint(0.0, -t), d).cwiseAbs().maxCoeff();
        if (peak > kKernelCut) {
            t_max = std::max(t_max, t + 0.5);
        }
    }
    const double freq = x_bound + std::sqrt(2.0 * cap + 1) + 1.0;
    const int panels = std::max(4, int(std::ceil(t_max * freq / 8.0)));
    GaussLegendreRule rule = composite_gauss_legendre(16, panels, 0.0, t_max);
    nodes_ = rule.nodes;
    const int entries = d * (d + 1) / 2;
    cos_part_ = RMatrix::Zero(entries, Eigen::Index(nodes_.size()));
    sin_part_ = RMatrix::Zero(entries, Eigen::Index(nodes_.size()));
    for (size_t j = 0; j < nodes_.size(); j++) {
        const double t = nodes_[j];
        CMatrix e = displacement_matrix(PhasePoint(0.0, -t), d);
        int row = 0;
        for (int n1 = 0; n1 < d; n1++) {
            for (int n2 = n1; n2 < d; n2++) {
                cos_part_(row, Eigen::Index(j)) = rule.weights[j] * t * e(n1, n2).real();
                sin_part_(row, Eigen::Index(j)) = rule.weights[j] * t * e(n1, n2).imag();
                row++;
            }
        }
    }
}

CMatrix ShadowKernel::matrix(const ShadowSample &sample) const {
    if (std::abs(sample.x) > x_bound_ * (1 + 1e-12)) {
        throw InvalidArgument("ShadowKernel: outcome outside the kernel's x range");
    }
    const Eigen::Index n = Eigen::Index(nodes_.size());
    RVector c(n);
    RVector s(n);
    for (Eigen::Index j = 0; j < n; j++) {
        c[j] = std::cos(nodes_[j] * sample.x);
        s[j] = std::sin(nodes_[j] * sample.x);
    }
    RVector k = cos_part_ * c + sin_part_ * s;
    const int d = cap_ + 1;
    CMatrix out(d, d);
    int row = 0;
    for (int n1 = 0; n1 < d; n1++) {
        for (int n2 = n1; n2 < d; n2++) {
            Complex v = std::polar(k[row], sample.theta * (n1 - n2));
            out(n1, n2) = v;
            out(n2, n1) = std::conj(v);
            row++;
        }
    }
    return out;
}

ShadowEstimate shadow_matrix(const ShadowSample &sample, int cap) {
    ShadowKernel kernel(cap, std::abs(sample.x));
    return {kernel.matrix(sample), cap, 1};
}

ShadowEstimate average_shadow(const std::vector<ShadowSample> &samples, int cap) {
    require_cap(cap);
    if (samples.empty()) {
        throw InvalidArgument("average_shadow: no samples");
    }
    PuritySums total = fold(block_sums(samples, cap, kSampleChunk), cap);
    CMatrix mean = total.sum / double(total.count);
    mean = (0.5 * (mean + mean.adjoint())).eval();
    return {std::move(mean), cap, total.count};
}

double shadow_purity(const std::vector<ShadowSample> &samples, int cap) {
    require_cap(cap);
    if (samples.size() < 2) {
        throw InvalidArgument("shadow_purity: at least two samples needed");
    }
    return u_statistic(fold(block_sums(samples, cap, kSampleChunk), cap));
}

double shadow_purity(const std::vector<CMatrix> &shadows) {
    if (shadows.size() < 2) {
        throw InvalidArgument("shadow_purity: at least two shadows needed");
    }
    PuritySums s;
    s.sum = CMatrix::Zero(shadows[0].rows(), shadows[0].cols());
    for (const auto &m : shadows) {
        if (m.rows() != s.sum.rows() || m.cols() != s.sum.cols()) {
            throw InvalidArgument("shadow_purity: shadows must share a shape");
        }
        s.sum += m;
        s.self += m.squaredNorm();
    }
    s.count = shadows.size();
    return u_statistic(s);
}

namespace {

double bootstrap_block_mean(const std::vector<PuritySums> &parts, uint64_t seed, int resamples) {
    std::vector<double> stats;
    for (const auto &p : parts) {
        if (p.count >= 2) {
            stats.push_back(u_statistic(p));
        }
    }
    const Philox4x32 gen = Philox4x32::from_seed(seed);
    const size_t b = stats.size();
    double sum = 0.0;
    double sq = 0.0;
    for (int r = 0; r < resamples; r++) {
        double mean = 0.0;
        for (size_t i = 0; i < b; i++) {
            double u = gen.uniforms(uint64_t(r) * b + i, kBootstrapStream)[0];
            mean += stats[std::min(b - 1, size_t(u * double(b)))];
        }
        mean /= double(b);
        sum += mean;
        sq += mean * mean;
    }
    double mean = sum / resamples;
    double var = (sq - resamples * mean * mean) / (resamples - 1);
    return std::sqrt(std::max(var, 0.0));
}

std::vector<PuritySums> checked_blocks(const std::vector<ShadowSample> &samples, int cap, int blocks,
                                       int resamples) {
    require_cap(cap);
    if (blocks < 2 || resamples < 2) {
        throw InvalidArgument("stderr_bootstrap: need at least two blocks and two resamples");
    }
    if (samples.size() < size_t(2 * blocks)) {
        throw InvalidArgument("stderr_bootstrap: need at least two samples per block");
    }
    return block_sums(samples, cap, samples.size() / size_t(blocks));
}

}  // namespace

double stderr_bootstrap(const std::vector<ShadowSample> &samples, int cap, uint64_t seed, int blocks,
                        int resamples) {
    return bootstrap_block_mean(checked_blocks(samples, cap, blocks, resamples), seed, resamples);
}

ShadowStatistics shadow_statistics(const std::vector<ShadowSample> &samples, int cap, uint64_t seed, int blocks,
                                   int resamples) {
    std::vector<PuritySums> parts = checked_blocks(samples, cap, blocks, resamples);
    PuritySums total = fold(parts, cap);
    ShadowStatistics out;
    CMatrix mean = total.sum / double(total.count);
    out.average = {(0.5 * (mean + mean.adjoint())).eval(), cap, total.count};
    out.purity = u_statistic(total);
    out.purity_stderr = bootstrap_block_mean(parts, seed, resamples);
    return out;
}

double shadow_entropy_functional(const CMatrix &sigma, int d_p) {
    if (sigma.rows() == 0 || sigma.rows() != sigma.cols()) {
        throw InvalidArgument("shadow_entropy_functional: square matrix expected");
    }
    if (d_p < 1) {
        throw InvalidArgument("shadow_entropy_functional: d_p must be positive");
    }
    CMatrix delta = CMatrix::Identity(sigma.rows(), sigma.cols()) - 0.5 * (sigma + sigma.adjoint());
    RVector ev = hermitian_eigenvalues(delta);
    double value = ev.sum();
    for (Eigen::Index i = 0; i < ev.size(); i++) {
        double power = ev[i];
        for (int k = 2; k <= d_p; k++) {
            power *= ev[i];
            value -= power / (double(k) * (k - 1));
        }
    }
    return value;
}

double shadow_entropy_functional(const ShadowEstimate &estimate, int d_p) {
    return shadow_entropy_functional(estimate.matrix, d_p);
}

ShadowSampleCount shadow_sample_count(double epsilon, double delta, double energy, double sigma0,
                                      std::optional<int> cap, int observables) {
    if (!(epsilon > 0.0 && epsilon < 1.0) || !(delta > 0.0 && delta < 1.0)) {
        throw InvalidArgument("shadow_sample_count: epsilon and delta must lie in (0, 1)");
    }
    if (!(energy >= 0.0) || !(sigma0 >= 0.0) || !std::isfinite(energy) || !std::isfinite(sigma0)) {
        throw InvalidArgument("shadow_sample_count: energy and Sigma0 must be finite and nonnegative");
    }
    if (observables < 1) {
        throw InvalidArgument("shadow_sample_count: at least one observable");
    }
    ShadowSampleCount out;
    if (cap) {
        if (*cap < 0) {
            throw InvalidArgument("shadow_sample_count: cap must be nonnegative");
        }
        out.cap = *cap;
    } else {
        double ratio = 4 * energy / epsilon;
        out.cap = int(std::ceil(ratio * ratio - 1e-9));
    }
    const double dim = out.cap + 1.0;
    out.samples = dim * dim / (3 * epsilon * epsilon) * (24 * sigma0 * sigma0 + 4 * (sigma0 + energy) * epsilon) *
                  std::log(2.0 * observables * dim / delta);
    return out;
}

}  // namespace nongauss
