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

#include "nongauss/measures.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "nongauss/errors.h"
#include "nongauss/gaussian.h"
#include "nongauss/quadrature.h"

namespace nongauss {

namespace {

constexpr double kClamp = 1e-14;
constexpr double kPinvTol = 1e-12;

// Exact binomial sums up to n = 60 overflow 64 bits.
__extension__ typedef __int128 wide_int;

void require_alpha(double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw InvalidArgument("Renyi order alpha must be positive and finite");
    }
}

void require_two_mode(const DensityOperator &rho, const char *what) {
    if (rho.modes() != 2) {
        throw InvalidArgument(std::string(what) + ": requires a two-mode state");
    }
}

// Index of the last amplitude that matters, so displacement matrices stay small.
int effective_support(const CVector &amps) {
    double peak = amps.cwiseAbs().maxCoeff();
    int last = 0;
    for (int n = 0; n < amps.size(); n++) {
        if (std::abs(amps[n]) > 1e-16 * peak) {
            last = n;
        }
    }
    return last + 1;
}

// Eigen-decomposition factor L with rho ~= L L^dag.
CMatrix low_rank_factor(const CMatrix &rho) {
    PsdSpectrum spec = psd_spectrum(rho, kClamp);
    return spec.vectors * spec.values.cwiseSqrt().asDiagonal();
}

// (I_A x M) applied to the B index of each column of a two-mode vector set.
CMatrix apply_on_b(const CMatrix &m_b, const CMatrix &vecs, int d) {
    CMatrix out(vecs.rows(), vecs.cols());
    for (int a = 0; a < d; a++) {
        out.middleRows(Eigen::Index(a) * d, d) = m_b * vecs.middleRows(Eigen::Index(a) * d, d);
    }
    return out;
}

DensityOperator embed_with_mean(const RVector &mean, const RMatrix &cov, int cutoff) {
    return embed_gaussian_to_fock(GaussianState(mean, cov), cutoff);
}

void check_mixture(const std::vector<double> &weights, const std::vector<RVector> &means, const RMatrix &cov) {
    if (weights.empty() || weights.size() != means.size()) {
        throw InvalidArgument("displaced mixture: weights and means must be nonempty and equal length");
    }
    double total = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0)) {
            throw InvalidArgument("displaced mixture: weights must be nonnegative");
        }
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw InvalidArgument("displaced mixture: weights must sum to 1");
    }
    for (const auto &m : means) {
        if (m.size() != 2) {
            throw InvalidArgument("displaced mixture: single-mode means expected");
        }
    }
    if (cov.rows() != 2 || cov.cols() != 2) {
        throw InvalidArgument("displaced mixture: single-mode covariance expected");
    }
}

std::vector<double> unique_labels(const std::vector<double> &labels) {
    std::vector<double> out;
    for (double v : labels) {
        bool seen = false;
        for (double u : out) {
            if (std::abs(u - v) < 1e-9) {
                seen = true;
            }
        }
        if (!seen) {
            out.push_back(v);
        }
    }
    return out;
}

int label_index(const std::vector<double> &labels, double v) {
    for (size_t i = 0; i < labels.size(); i++) {
        if (std::abs(labels[i] - v) < 1e-9) {
            return int(i);
        }
    }
    return -1;
}

double min_gap(const std::vector<double> &labels) {
    double gap = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < labels.size(); i++) {
        for (size_t j = i + 1; j < labels.size(); j++) {
            gap = std::min(gap, std::abs(labels[i] - labels[j]));
        }
    }
    return gap;
}

}  // namespace

PureState beam_splitter_output(const PureState &psi) {
    if (psi.modes() != 1) {
        throw InvalidArgument("beam_splitter_output: single-mode input expected");
    }
    return apply_beam_splitter(tensor(psi, psi));
}

DensityOperator beam_splitter_output(const DensityOperator &rho) {
    if (rho.modes() != 1) {
        throw InvalidArgument("beam_splitter_output: single-mode input expected");
    }
    return apply_beam_splitter(tensor(rho, rho));
}

double n_renyi(const PureState &psi, double alpha) {
    require_alpha(alpha);
    return std::max(0.0, renyi_entropy(schmidt_spectrum(beam_splitter_output(psi)), alpha));
}

std::vector<double> fock_bs_coefficients(int n) {
    if (n < 0 || n > 60) {
        throw InvalidArgument("fock_bs_coefficients: n must lie in [0, 60]");
    }
    auto binom = [](int top, int k) -> wide_int {
        if (k < 0 || k > top) {
            return 0;
        }
        wide_int v = 1;
        for (int i = 1; i <= k; i++) {
            v = v * (top - k + i) / i;
        }
        return v;
    };
    std::vector<double> c(n + 1);
    double norm = 0.0;
    for (int m = 0; m <= n; m++) {
        wide_int sum = 0;
        for (int k = 0; k <= n; k++) {
            wide_int term = binom(n, k) * binom(n, 2 * m - k);
            sum += ((n - k) % 2 == 0) ? term : -term;
        }
        long double scale = std::exp(0.5L * (std::lgamma(2.0L * m + 1) + std::lgamma(2.0L * n - 2.0L * m + 1)) -
                                     std::lgamma(n + 1.0L) - n * std::log(2.0L));
        c[m] = static_cast<double>(static_cast<long double>(sum) * scale);
        norm += c[m] * c[m];
    }
    for (double &v : c) {
        v /= std::sqrt(norm);
    }
    return c;
}

double n_renyi_fock_analytic(int n, double alpha) {
    require_alpha(alpha);
    std::vector<double> c = fock_bs_coefficients(n);
    RVector p(c.size());
    for (size_t m = 0; m < c.size(); m++) {
        p[Eigen::Index(m)] = c[m] * c[m];
    }
    return renyi_entropy(p, alpha);
}

double n_renyi2_via_char_integral(const PureState &psi, const QuarticIntegralOptions &options) {
    if (psi.modes() != 1) {
        throw InvalidArgument("n_renyi2_via_char_integral: single-mode input expected");
    }
    if (!(options.radius > 0.0) || options.points < 2) {
        throw InvalidArgument("n_renyi2_via_char_integral: radius must be positive and points >= 2");
    }
    const int support = effective_support(psi.amplitudes());
    const CVector amps = psi.amplitudes().head(support);
    auto integrand = [&](double x, double y) {
        PhasePoint r(x / std::numbers::sqrt2, y / std::numbers::sqrt2);
        Complex chi = amps.dot(displacement_matrix(r, support) * amps);
        double m = std::norm(chi);
        return m * m;
    };
    // Decay check along the boundary of the square.
    const double big = options.radius;
    double boundary = 0.0;
    for (int i = 0; i <= 64; i++) {
        double t = -big + 2 * big * i / 64.0;
        boundary = std::max({boundary, integrand(t, big), integrand(t, -big), integrand(big, t), integrand(-big, t)});
    }
    if (boundary > options.decay_tol) {
        throw NumericalFailure("n_renyi2_via_char_integral: integrand not decayed at the boundary; increase R");
    }
    GaussLegendreRule rule = gauss_legendre(options.points, -big, big);
    // |chi(-r)| = |chi(r)|: integrate the half plane x > 0 (x = 0 excluded for even
    // point counts) and double it.
    const int n = options.points;
    double total = 0.0;
    for (int i = 0; i < n; i++) {
        double x = rule.nodes[i];
        if (x < 0.0) {
            continue;
        }
        double weight = (x == 0.0) ? 1.0 : 2.0;
        double row = 0.0;
        for (int j = 0; j < n; j++) {
            row += rule.weights[j] * integrand(x, rule.nodes[j]);
        }
        total += weight * rule.weights[i] * row;
    }
    double purity_value = total / (2 * std::numbers::pi);
    return std::max(0.0, -std::log2(purity_value));
}

CatEntropyApprox cat_entropy_approx(const std::vector<Complex> &coeffs, const std::vector<double> &alphas, double s,
                                    double alpha) {
    require_alpha(alpha);
    if (!std::isfinite(s)) {
        throw InvalidArgument("cat_entropy_approx: s must be finite");
    }
    if (coeffs.empty() || coeffs.size() != alphas.size()) {
        throw InvalidArgument("cat_entropy_approx: coefficient and amplitude lists must be nonempty and equal length");
    }
    // Equal squeezing on both copies commutes with the beam splitter and preserves
    // overlaps, so s does not enter the approximation.
    const size_t k = coeffs.size();
    std::vector<double> a_labels;
    std::vector<double> b_labels;
    for (size_t i = 0; i < k; i++) {
        for (size_t j = 0; j < k; j++) {
            a_labels.push_back((alphas[i] - alphas[j]) / std::numbers::sqrt2);
            b_labels.push_back((alphas[i] + alphas[j]) / std::numbers::sqrt2);
        }
    }
    std::vector<double> ua = unique_labels(a_labels);
    std::vector<double> ub = unique_labels(b_labels);
    CMatrix c = CMatrix::Zero(Eigen::Index(ua.size()), Eigen::Index(ub.size()));
    for (size_t i = 0; i < k; i++) {
        for (size_t j = 0; j < k; j++) {
            size_t idx = i * k + j;
            c(label_index(ua, a_labels[idx]), label_index(ub, b_labels[idx])) += coeffs[i] * coeffs[j];
        }
    }
    double norm = c.norm();
    if (norm < 1e-12) {
        throw InvalidArgument("cat_entropy_approx: branch coefficients vanish");
    }
    c /= norm;
    Eigen::JacobiSVD<CMatrix> svd(c);
    RVector p = svd.singularValues().cwiseAbs2();
    CatEntropyApprox out;
    out.value = std::max(0.0, renyi_entropy(p, alpha));
    out.min_separation = std::min(min_gap(ua), min_gap(ub));
    out.valid = out.min_separation >= 3.0;
    return out;
}

DensityOperator swap_modes(const DensityOperator &rho) {
    require_two_mode(rho, "swap_modes");
    const int d = rho.dim_per_mode();
    const Eigen::Index n = rho.matrix().rows();
    Eigen::PermutationMatrix<Eigen::Dynamic> perm(n);
    for (int a = 0; a < d; a++) {
        for (int b = 0; b < d; b++) {
            perm.indices()[Eigen::Index(a) * d + b] = Eigen::Index(b) * d + a;
        }
    }
    CMatrix swapped = perm * rho.matrix() * perm.transpose();
    return DensityOperator(2, rho.cutoff(), std::move(swapped), rho.truncation_deficit());
}

double mutual_information_vn(const DensityOperator &rho_ab) {
    require_two_mode(rho_ab, "mutual_information_vn");
    double s_ab = renyi_entropy(psd_spectrum(rho_ab.matrix(), kClamp).values, 1.0);
    double s_a = renyi_entropy(partial_trace(rho_ab, 0), 1.0);
    double s_b = renyi_entropy(partial_trace(rho_ab, 1), 1.0);
    return s_a + s_b - s_ab;
}

double conditional_renyi_up(const DensityOperator &rho_ab, double alpha) {
    require_two_mode(rho_ab, "conditional_renyi_up");
    require_alpha(alpha);
    if (alpha == 1.0) {
        throw InvalidArgument("conditional_renyi_up: alpha = 1 is excluded");
    }
    const int d = rho_ab.dim_per_mode();
    PsdSpectrum spec = psd_spectrum(rho_ab.matrix(), kClamp);
    RVector powered = spec.values.array().pow(alpha).matrix();
    // Tr_A(rho^alpha) from the low-rank factors.
    CMatrix reduced = CMatrix::Zero(d, d);
    for (int a = 0; a < d; a++) {
        auto block = spec.vectors.middleRows(Eigen::Index(a) * d, d);
        reduced += block * powered.asDiagonal() * block.adjoint();
    }
    reduced = (0.5 * (reduced + reduced.adjoint())).eval();
    CMatrix root = psd_function(reduced, [alpha](double v) { return std::pow(v, 1.0 / alpha); }, 0.0);
    double tr = root.trace().real();
    return alpha / (1.0 - alpha) * std::log2(tr);
}

double conditional_renyi2_down(const DensityOperator &rho_ab) {
    require_two_mode(rho_ab, "conditional_renyi2_down");
    const int d = rho_ab.dim_per_mode();
    DensityOperator rho_b = partial_trace(rho_ab, 1);
    CMatrix inv_sqrt = psd_function(rho_b.matrix(), [](double v) { return 1.0 / std::sqrt(v); }, kPinvTol);
    CMatrix factor = low_rank_factor(rho_ab.matrix());
    CMatrix g = factor.adjoint() * apply_on_b(inv_sqrt, factor, d);
    return -std::log2(g.squaredNorm());
}

MiBound mi_bound(const DensityOperator &rho_ab, double alpha, double beta, MutualInformationKind kind) {
    require_two_mode(rho_ab, "mi_bound");
    require_alpha(alpha);
    require_alpha(beta);
    if (alpha == 1.0 || beta == 1.0) {
        throw InvalidArgument("mi_bound: alpha and beta must differ from 1");
    }
    if (kind == MutualInformationKind::kUp && alpha != 2.0) {
        throw InvalidArgument("mi_bound: the I^up bound needs H^down_alpha, available only for alpha = 2");
    }
    double t = alpha / (alpha - 1.0) - beta / (beta - 1.0);
    if (std::abs(t - 1.0) < 1e-12) {
        throw InvalidArgument("mi_bound: no finite gamma satisfies the order constraint");
    }
    MiBound out;
    out.gamma = t / (t - 1.0);
    if (out.gamma < 0.5) {
        throw InvalidArgument("mi_bound: constraint requires gamma >= 1/2");
    }
    double sign = (alpha - 1.0) * (beta - 1.0) * (out.gamma - 1.0);
    if (std::abs(sign) < 1e-15) {
        throw InvalidArgument("mi_bound: (alpha-1)(beta-1)(gamma-1) vanishes");
    }
    out.is_lower = sign > 0.0;
    // H(B|A) is H(A|B) of the mode-swapped state.
    DensityOperator swapped = swap_modes(rho_ab);
    double conditional = kind == MutualInformationKind::kUp ? conditional_renyi2_down(swapped)
                                                            : conditional_renyi_up(swapped, alpha);
    out.value = renyi_entropy(partial_trace(rho_ab, 1), beta) - conditional;
    return out;
}

std::vector<ProbeRow> monotonicity_probe(const PureState &psi, const std::vector<double> &etas, ProbeMeasure measure) {
    if (psi.modes() != 1) {
        throw InvalidArgument("monotonicity_probe: single-mode input expected");
    }
    DensityOperator rho = DensityOperator::from_pure(psi);
    std::vector<ProbeRow> rows;
    for (double eta : etas) {
        DensityOperator out = beam_splitter_output(apply_loss_fock(rho, eta));
        double value = 0.0;
        if (measure == ProbeMeasure::kMutualInformation) {
            value = mutual_information_vn(out);
        } else {
            value = renyi_entropy(partial_trace(out, 0), 2.0) + renyi_entropy(partial_trace(out, 1), 2.0) +
                    std::log2(purity(out));
        }
        rows.push_back({eta, value});
    }
    return rows;
}

DensityOperator displaced_gaussian_mixture(const std::vector<double> &weights, const std::vector<RVector> &means,
                                           const RMatrix &cov, int cutoff) {
    check_mixture(weights, means, cov);
    const int d = cutoff + 1;
    CMatrix total = CMatrix::Zero(d, d);
    for (size_t i = 0; i < weights.size(); i++) {
        if (weights[i] > 0.0) {
            total += weights[i] * embed_with_mean(means[i], cov, cutoff).matrix();
        }
    }
    return DensityOperator(1, cutoff, std::move(total));
}

DensityOperator displaced_mixture_output(const std::vector<double> &weights, const std::vector<RVector> &means,
                                         const RMatrix &cov, int cutoff) {
    check_mixture(weights, means, cov);
    const Eigen::Index dim = Eigen::Index(cutoff + 1) * (cutoff + 1);
    CMatrix total = CMatrix::Zero(dim, dim);
    for (size_t i = 0; i < weights.size(); i++) {
        for (size_t j = 0; j < weights.size(); j++) {
            double w = weights[i] * weights[j];
            if (w == 0.0) {
                continue;
            }
            DensityOperator a = embed_with_mean((means[i] - means[j]) / std::numbers::sqrt2, cov, cutoff);
            DensityOperator b = embed_with_mean((means[i] + means[j]) / std::numbers::sqrt2, cov, cutoff);
            total += w * tensor(a, b).matrix();
        }
    }
    return DensityOperator(2, cutoff, std::move(total));
}

DensityOperator displaced_mixture_output_marginal(const std::vector<double> &weights,
                                                  const std::vector<RVector> &means, const RMatrix &cov, int cutoff) {
    check_mixture(weights, means, cov);
    const int d = cutoff + 1;
    CMatrix total = CMatrix::Zero(d, d);
    for (size_t i = 0; i < weights.size(); i++) {
        for (size_t j = 0; j < weights.size(); j++) {
            double w = weights[i] * weights[j];
            if (w > 0.0) {
                total += w * embed_with_mean((means[i] - means[j]) / std::numbers::sqrt2, cov, cutoff).matrix();
            }
        }
    }
    return DensityOperator(1, cutoff, std::move(total));
}

SchmidtSpectrum product_spectrum(const SchmidtSpectrum &a, const SchmidtSpectrum &b) {
    std::vector<double> out;
    out.reserve(a.probabilities().size() * b.probabilities().size());
    for (double x : a.probabilities()) {
        for (double y : b.probabilities()) {
            out.push_back(x * y);
        }
    }
    return SchmidtSpectrum(std::move(out));
}

}  // namespace nongauss
