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

#ifndef NONGAUSS_SHADOWS_H
#define NONGAUSS_SHADOWS_H

#include <cstdint>
#include <optional>
#include <vector>

#include "nongauss/fock.h"

namespace nongauss {

/// One random-axis homodyne record: the quadrature cos(theta) q + sin(theta) p was
/// measured with outcome x.
struct ShadowSample {
    double theta = 0.0;
    double x = 0.0;
};

/// Inverse-CDF sampler for rotated-quadrature outcomes of a single-mode state.
///
/// The outcome density is a trigonometric polynomial in theta whose harmonics are
/// tabulated once on a grid of 4096 cells across the detected support, so each draw
/// costs a binary search over cumulative harmonics.
class QuadratureSampler {
   public:
    explicit QuadratureSampler(const DensityOperator &rho);

    /// Sample number `index` of the stream keyed by `seed`.
    ShadowSample draw(uint64_t seed, uint64_t index) const;

    /// Outcomes lie in [-support, support].
    double support() const {
        return support_;
    }

   private:
    double cdf(size_t cell, double theta) const;
    double cdf(size_t cell, const std::vector<Complex> &phase) const;
    std::vector<Complex> phases(double theta) const;

    double support_;
    int harmonics_;
    std::vector<double> grid_;
    // cumulative_[k][i]: integral up to grid_[i] of the k-th harmonic of the density.
    std::vector<std::vector<Complex>> cumulative_;
};

ShadowSample sample_shadow(const DensityOperator &rho, uint64_t seed);
std::vector<ShadowSample> sample_shadows(const DensityOperator &rho, uint64_t count, uint64_t seed);

struct ShadowEstimate {
    CMatrix matrix;
    int cap = 0;
    uint64_t samples = 0;
};

/// Fock-projected single-sample shadows for a fixed cap M.
///
/// Entry (n1, n2) equals e^{i theta (n1 - n2)} K_{n1 n2}(x) with
/// K(x) = int_0^inf t Re[<n1| e^{i t q} |n2> e^{-i t x}] dt, the inverse measurement
/// channel applied to the homodyne record. The t integral is truncated where
/// t |<n1|e^{itq}|n2>| and the Gaussian factor e^{-t^2/4} both fall below 1e-12.
class ShadowKernel {
   public:
    /// Valid for outcomes with |x| <= x_bound.
    ShadowKernel(int cap, double x_bound);

    int cap() const {
        return cap_;
    }
    CMatrix matrix(const ShadowSample &sample) const;

   private:
    int cap_;
    double x_bound_;
    std::vector<double> nodes_;
    // Rows: upper-triangle entries (n1 <= n2); columns: weighted kernel values per node.
    RMatrix cos_part_;
    RMatrix sin_part_;
};

/// Single-sample shadow. Requires M <= 20.
ShadowEstimate shadow_matrix(const ShadowSample &sample, int cap);

/// Mean of the single-sample shadows.
ShadowEstimate average_shadow(const std::vector<ShadowSample> &samples, int cap);

/// U-statistic (2 / (N (N-1))) sum_{i<j} Re Tr[rho_i rho_j] over single-sample shadows.
double shadow_purity(const std::vector<ShadowSample> &samples, int cap);

/// Same U-statistic over explicit matrices, for checks that bypass sampling.
double shadow_purity(const std::vector<CMatrix> &shadows);

/// Standard error of shadow_purity: samples are split into `blocks` consecutive blocks,
/// each block gets its own U-statistic, and the mean of block statistics is
/// bootstrapped with `resamples` Philox-driven resamples.
double stderr_bootstrap(const std::vector<ShadowSample> &samples, int cap, uint64_t seed, int blocks = 50,
                        int resamples = 1000);

struct ShadowStatistics {
    ShadowEstimate average;
    double purity = 0.0;
    double purity_stderr = 0.0;
};

/// average_shadow, shadow_purity and stderr_bootstrap from a single pass over the
/// samples.
ShadowStatistics shadow_statistics(const std::vector<ShadowSample> &samples, int cap, uint64_t seed,
                                   int blocks = 50, int resamples = 1000);

/// -Tr[sigma - P_M] - sum_{k=2}^{d_p} Tr[(P_M - sigma)^k] / (k (k - 1)), in nats.
///
/// This is the Mercator series of -Tr[sigma ln sigma] around P_M. An eigenvalue at 0
/// converges slowly: it contributes 1/d_p after d_p terms.
double shadow_entropy_functional(const CMatrix &sigma, int d_p);
double shadow_entropy_functional(const ShadowEstimate &estimate, int d_p);

struct ShadowSampleCount {
    double samples = 0.0;
    int cap = 0;
};

/// Single-mode (r = 1) sample bound
///   N = (M+1)^2 / (3 eps^2) (24 S0^2 + 4 (S0 + E_r) eps) log(2 L (M+1) / delta)
/// with S0 supplied by the caller and M = ceil((4 E_r / eps)^2) unless given.
ShadowSampleCount shadow_sample_count(double epsilon, double delta, double energy, double sigma0,
                                      std::optional<int> cap = std::nullopt, int observables = 1);

}  // namespace nongauss

#endif
