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

#include "nongauss/swap_test.h"

#include <algorithm>
#include <cmath>

#include "nongauss/errors.h"
#include "nongauss/measures.h"
#include "nongauss/parallel.h"
#include "nongauss/philox.h"

namespace nongauss {

namespace {

constexpr double kPurityFloor = 1e-6;
constexpr size_t kShotChunk = 4096;

int term(const PnrOutcome &o, int cap) {
    if (o.n + o.m > 2 * cap) {
        return 0;
    }
    return (o.n % 2 == 0) ? 1 : -1;
}

void require_cap(int cap) {
    if (cap < 0) {
        throw InvalidArgument("detector cap M must be nonnegative");
    }
}

}  // namespace

PnrDistribution::PnrDistribution(RMatrix table) : table_(std::move(table)) {
    if (table_.rows() == 0 || table_.rows() != table_.cols()) {
        throw InvalidArgument("PnrDistribution: square nonempty table expected");
    }
    if ((table_.array() < -1e-12).any() || std::abs(table_.sum() - 1.0) > 1e-10) {
        throw InvalidArgument("PnrDistribution: table must be a probability distribution");
    }
    table_ = table_.cwiseMax(0.0);
}

PnrDistribution joint_pnr_distribution(const DensityOperator &rho, const DensityOperator &sigma) {
    if (rho.modes() != 1 || sigma.modes() != 1) {
        throw InvalidArgument("joint_pnr_distribution: single-mode inputs expected");
    }
    if (rho.cutoff() != sigma.cutoff()) {
        throw InvalidArgument("joint_pnr_distribution: inputs must share a cutoff");
    }
    const int c = rho.cutoff();
    const CMatrix &a = rho.matrix();
    const CMatrix &b = sigma.matrix();
    RMatrix table = RMatrix::Zero(2 * c + 1, 2 * c + 1);
    // Only the block of fixed total photon number N contributes to counts with n + m = N.
    for (int total = 0; total <= 2 * c; total++) {
        const int kmin = std::max(0, total - c);
        const int kmax = std::min(total, c);
        const int count = kmax - kmin + 1;
        CMatrix sub(count, count);
        for (int i = 0; i < count; i++) {
            for (int j = 0; j < count; j++) {
                int ki = kmin + i;
                int kj = kmin + j;
                sub(i, j) = a(ki, kj) * b(total - ki, total - kj);
            }
        }
        CMatrix u = beam_splitter_block(total).middleCols(kmin, count).cast<Complex>();
        CMatrix out = u * sub * u.adjoint();
        for (int n = 0; n <= total; n++) {
            table(n, total - n) = out(n, n).real();
        }
    }
    table /= table.sum();
    return PnrDistribution(std::move(table));
}

std::vector<PnrOutcome> sample_outcomes(const PnrDistribution &dist, uint64_t shots, uint64_t seed) {
    const int d = dist.max_count() + 1;
    std::vector<double> cdf(size_t(d) * d);
    double acc = 0.0;
    for (int n = 0; n < d; n++) {
        for (int m = 0; m < d; m++) {
            acc += dist(n, m);
            cdf[size_t(n) * d + m] = acc;
        }
    }
    for (double &v : cdf) {
        v /= acc;
    }
    cdf.back() = 1.0;
    const Philox4x32 gen = Philox4x32::from_seed(seed);
    std::vector<PnrOutcome> out(shots);
    parallel_chunks(shots, kShotChunk, [&](size_t, size_t begin, size_t end) {
        for (size_t s = begin; s < end; s++) {
            double u = gen.uniforms(s)[0];
            size_t idx = size_t(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
            idx = std::min(idx, cdf.size() - 1);
            out[s] = {int(idx / d), int(idx % d)};
        }
    });
    return out;
}

double swap_estimator(const std::vector<PnrOutcome> &outcomes, int cap) {
    require_cap(cap);
    if (outcomes.empty()) {
        throw InvalidArgument("swap_estimator: empty outcome list");
    }
    long long sum = 0;
    for (const auto &o : outcomes) {
        sum += term(o, cap);
    }
    return double(sum) / double(outcomes.size());
}

double swap_estimator_stderr(const std::vector<PnrOutcome> &outcomes, int cap) {
    require_cap(cap);
    if (outcomes.size() < 2) {
        throw InvalidArgument("swap_estimator_stderr: at least two outcomes needed");
    }
    long long sum = 0;
    long long sq = 0;
    for (const auto &o : outcomes) {
        int t = term(o, cap);
        sum += t;
        sq += t * t;
    }
    const double s = double(outcomes.size());
    double mean = double(sum) / s;
    double var = (double(sq) - s * mean * mean) / (s - 1.0);
    return std::sqrt(std::max(var, 0.0) / s);
}

double truncated_swap_expectation(const PnrDistribution &dist, int cap) {
    require_cap(cap);
    const int d = dist.max_count() + 1;
    double value = 0.0;
    for (int n = 0; n < d; n++) {
        for (int m = 0; m < d && n + m <= 2 * cap; m++) {
            value += (n % 2 == 0 ? 1.0 : -1.0) * dist(n, m);
        }
    }
    return value;
}

double photon_mass_below(const DensityOperator &rho, int cap) {
    require_cap(cap);
    if (rho.modes() != 1) {
        throw InvalidArgument("photon_mass_below: single-mode input expected");
    }
    int top = std::min(cap, rho.cutoff());
    return rho.matrix().diagonal().real().head(top + 1).sum();
}

SystematicBounds systematic_error_bound(const DensityOperator &rho, const DensityOperator &sigma, int cap) {
    require_cap(cap);
    PnrDistribution dist = joint_pnr_distribution(rho, sigma);
    const int d = dist.max_count() + 1;
    double inside = 0.0;
    for (int n = 0; n < d; n++) {
        for (int m = 0; m < d && n + m <= 2 * cap; m++) {
            inside += dist(n, m);
        }
    }
    SystematicBounds out;
    out.joint = std::clamp(1.0 - inside, 0.0, 1.0);
    out.product = std::clamp(1.0 - photon_mass_below(rho, cap) * photon_mass_below(sigma, cap), 0.0, 1.0);
    return out;
}

EstimatorReport simulate_swap_test(const DensityOperator &rho, const DensityOperator &sigma, int cap, uint64_t shots,
                                   uint64_t seed) {
    require_cap(cap);
    if (shots < 2) {
        throw InvalidArgument("simulate_swap_test: at least two shots needed");
    }
    PnrDistribution dist = joint_pnr_distribution(rho, sigma);
    std::vector<PnrOutcome> outcomes = sample_outcomes(dist, shots, seed);
    EstimatorReport report;
    report.estimate = swap_estimator(outcomes, cap);
    report.shots = shots;
    report.cap = cap;
    report.statistical_stderr = swap_estimator_stderr(outcomes, cap);
    report.systematic_bound = systematic_error_bound(rho, sigma, cap).product;
    report.truncated_expectation = truncated_swap_expectation(dist, cap);
    return report;
}

ProtocolReport simulate_nongauss_protocol(const PureState &psi, int cap, uint64_t shots, uint64_t seed) {
    if (psi.modes() != 1) {
        throw InvalidArgument("simulate_nongauss_protocol: single-mode pure state expected");
    }
    DensityOperator reduced = partial_trace(beam_splitter_output(psi), 0);
    ProtocolReport out;
    out.swap = simulate_swap_test(reduced, reduced, cap, shots, seed);
    double raw = out.swap.estimate;
    out.reliable = raw >= kPurityFloor;
    out.purity = std::clamp(raw, kPurityFloor, 1.0);
    out.e2 = -std::log2(out.purity);
    out.e2_stderr = out.swap.statistical_stderr / (out.purity * std::log(2.0));
    return out;
}

uint64_t samples_for_accuracy(double delta) {
    if (!(delta > 0.0) || !std::isfinite(delta)) {
        throw InvalidArgument("samples_for_accuracy: delta must be positive");
    }
    return uint64_t(std::ceil(1.0 / (delta * delta)));
}

}  // namespace nongauss
