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

#ifndef NONGAUSS_MEASURES_H
#define NONGAUSS_MEASURES_H

#include <vector>

#include "nongauss/fock.h"

namespace nongauss {

/// U_BS (psi x psi) for a single-mode pure state.
PureState beam_splitter_output(const PureState &psi);
/// U_BS (rho x rho) U_BS^dag for a single-mode density operator.
DensityOperator beam_splitter_output(const DensityOperator &rho);

/// Renyi-alpha entanglement entropy (bits) of the beam-splitter output of two copies.
double n_renyi(const PureState &psi, double alpha);

/// Output amplitudes c_m of two copies of |n>, on |2m, 2n - 2m>, m = 0..n.
/// Exact integer sums; normalized so that sum c_m^2 = 1.
std::vector<double> fock_bs_coefficients(int n);

/// Renyi-alpha entropy of the distribution |c_m|^2 from fock_bs_coefficients(n).
double n_renyi_fock_analytic(int n, double alpha);

struct QuarticIntegralOptions {
    double radius = 12.0;
    int points = 400;
    double decay_tol = 1e-10;
};

/// -log2 of (1 / 2 pi) int |chi_psi(r / sqrt 2)|^4 d^2 r over [-R, R]^2 with a
/// Gauss-Legendre tensor grid. Throws NumericalFailure when the integrand has not
/// decayed below decay_tol on the boundary.
double n_renyi2_via_char_integral(const PureState &psi, const QuarticIntegralOptions &options = {});

struct CatEntropyApprox {
    double value = 0.0;
    bool valid = true;
    /// Smallest distance between distinct local branch amplitudes on either output.
    double min_separation = 0.0;
};

/// Large-separation approximation of n_renyi for squeezed cats sum_i c_i S(s)|alpha_i>
/// (real alpha_i). Branch (i, j) lands on |(alpha_i - alpha_j)/sqrt 2> x
/// |(alpha_i + alpha_j)/sqrt 2>; distinct local amplitudes are treated as orthogonal and
/// branches sharing a local amplitude are merged before taking the Schmidt spectrum.
/// `valid` is false when two distinct local amplitudes are closer than 3.
CatEntropyApprox cat_entropy_approx(const std::vector<Complex> &coeffs, const std::vector<double> &alphas, double s,
                                    double alpha);

/// Exchanges the two modes of a two-mode state.
DensityOperator swap_modes(const DensityOperator &rho);

/// S(A) + S(B) - S(AB), in bits.
double mutual_information_vn(const DensityOperator &rho_ab);

/// Sandwiched-type conditional entropy H^up_alpha(A|B) in bits.
double conditional_renyi_up(const DensityOperator &rho_ab, double alpha);

/// H^down_2(A|B) in bits, with rho_B^{-1/2} taken on the support of rho_B.
double conditional_renyi2_down(const DensityOperator &rho_ab);

/// Which Renyi mutual information a bound refers to.
enum class MutualInformationKind {
    /// I^up_alpha, bounded with H^down_alpha(B|A); only alpha = 2 is available.
    kUp,
    /// I^down_alpha, bounded with H^up_alpha(B|A).
    kDown,
};

struct MiBound {
    double value = 0.0;
    bool is_lower = true;
    double gamma = 0.0;
};

/// H_beta(B) - H_alpha(B|A), a lower or upper bound on the Renyi mutual information.
/// gamma solves alpha/(alpha-1) = beta/(beta-1) + gamma/(gamma-1) and must satisfy
/// gamma >= 1/2; the sign of (alpha-1)(beta-1)(gamma-1) selects lower (> 0) or upper (< 0).
MiBound mi_bound(const DensityOperator &rho_ab, double alpha, double beta, MutualInformationKind kind);

/// Probe measures for monotonicity checks.
enum class ProbeMeasure {
    kMutualInformation,
    /// S_2(A) + S_2(B) - S_2(AB): a purity-only correlation proxy.
    kRenyi2Proxy,
};

struct ProbeRow {
    double eta = 0.0;
    double value = 0.0;
};

/// The chosen measure on U_BS (L_eta(psi) x L_eta(psi)) U_BS^dag for each loss eta.
std::vector<ProbeRow> monotonicity_probe(const PureState &psi, const std::vector<double> &etas, ProbeMeasure measure);

/// sum_i p_i rho_G(mean_i): displaced copies of the zero-mean Gaussian with covariance cov.
DensityOperator displaced_gaussian_mixture(const std::vector<double> &weights, const std::vector<RVector> &means,
                                           const RMatrix &cov, int cutoff);

/// Closed form of the beam-splitter output of two copies of displaced_gaussian_mixture:
/// sum_ij p_i p_j rho_G((m_i - m_j)/sqrt 2) x rho_G((m_i + m_j)/sqrt 2).
DensityOperator displaced_mixture_output(const std::vector<double> &weights, const std::vector<RVector> &means,
                                         const RMatrix &cov, int cutoff);

/// Marginal on mode A of displaced_mixture_output, built directly.
DensityOperator displaced_mixture_output_marginal(const std::vector<double> &weights,
                                                  const std::vector<RVector> &means, const RMatrix &cov, int cutoff);

/// Schmidt spectrum of a tensor product of two bipartite pure states (same cut).
SchmidtSpectrum product_spectrum(const SchmidtSpectrum &a, const SchmidtSpectrum &b);

}  // namespace nongauss

#endif
