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

#ifndef NONGAUSS_FOCK_H
#define NONGAUSS_FOCK_H

#include <vector>

#include "nongauss/linalg.h"

namespace nongauss {

/// Phase-space displacement vector r = (q_1, p_1, ..., q_m, p_m).
///
/// Convention: [q, p] = i, vacuum covariance I, and D(r) = exp(i r^T Omega rhat), which
/// equals the textbook D(alpha) with alpha = -(r_q + i r_p) / sqrt(2).
class PhasePoint {
   public:
    PhasePoint(double q, double p);
    explicit PhasePoint(RVector coords);

    int modes() const {
        return static_cast<int>(coords_.size() / 2);
    }
    double q(int mode = 0) const {
        return coords_[2 * mode];
    }
    double p(int mode = 0) const {
        return coords_[2 * mode + 1];
    }
    const RVector &coords() const {
        return coords_;
    }
    /// The single-mode slice for `mode`.
    PhasePoint mode(int k) const {
        return PhasePoint(q(k), p(k));
    }

   private:
    RVector coords_;
};

/// Complex amplitude of the textbook displacement equivalent to D(r) for one mode.
Complex displacement_alpha(const PhasePoint &r);

/// A normalized state vector on one or two truncated modes.
///
/// Two-mode amplitudes are stored with index n_A * (cutoff + 1) + n_B.
class PureState {
   public:
    /// Validates shape and normalization (|1 - <psi|psi>| <= 1e-10).
    PureState(int modes, int cutoff, CVector amplitudes, double truncation_deficit = 0.0);

    int modes() const {
        return modes_;
    }
    int cutoff() const {
        return cutoff_;
    }
    int dim_per_mode() const {
        return cutoff_ + 1;
    }
    const CVector &amplitudes() const {
        return amps_;
    }
    Complex amplitude(int n) const;
    Complex amplitude(int n_a, int n_b) const;

    /// Probability that was outside the truncated space before renormalization.
    double truncation_deficit() const {
        return deficit_;
    }

    /// Two-mode amplitudes as a (cutoff+1) x (cutoff+1) matrix indexed [n_A, n_B].
    CMatrix as_matrix() const;

   private:
    int modes_;
    int cutoff_;
    CVector amps_;
    double deficit_;
};

/// A density matrix on one or two truncated modes (same indexing as PureState).
class DensityOperator {
   public:
    /// Validates shape, Hermiticity (1e-10) and unit trace (1e-10).
    DensityOperator(int modes, int cutoff, CMatrix matrix, double truncation_deficit = 0.0);
    static DensityOperator from_pure(const PureState &psi);

    int modes() const {
        return modes_;
    }
    int cutoff() const {
        return cutoff_;
    }
    int dim_per_mode() const {
        return cutoff_ + 1;
    }
    const CMatrix &matrix() const {
        return rho_;
    }
    double truncation_deficit() const {
        return deficit_;
    }

   private:
    int modes_;
    int cutoff_;
    CMatrix rho_;
    double deficit_;
};

/// Schmidt probabilities of a bipartite pure state, sorted nonincreasing, summing to 1.
class SchmidtSpectrum {
   public:
    explicit SchmidtSpectrum(std::vector<double> probabilities);
    const std::vector<double> &probabilities() const {
        return probs_;
    }

   private:
    std::vector<double> probs_;
};

/// Working dimension used to build states before truncation to `cutoff`.
int working_dimension(int cutoff);

PureState make_fock(int n, int cutoff);
PureState make_coherent(Complex alpha, int cutoff);
/// (|0> + |N>) / sqrt(2).
PureState make_zero_n(int n, int cutoff);
/// S(r)|0> with S(r) = exp(r/2 (a^2 - a^dag^2)); r > 0 squeezes q.
PureState make_squeezed(double r, int cutoff);
/// Normalized sum_i c_i S(s)|alpha_i> for real alpha_i.
PureState make_cat(const std::vector<Complex> &coeffs, const std::vector<double> &alphas, double s,
                   int cutoff);
/// Cubic phase state D(P) exp(i gamma Q^3) S(r)|0> in the Q = a + a^dag scale where
/// r > 0 stretches Q. The optional momentum shift P is in the same scale.
PureState make_cubic_phase(double gamma, double r, int cutoff, double momentum = 0.0);

PureState tensor(const PureState &a, const PureState &b);
DensityOperator tensor(const DensityOperator &a, const DensityOperator &b);

/// Unitary block of the 50:50 beam splitter exp(pi/4 (a b^dag - a^dag b)) on the
/// (N+1)-dimensional subspace of total photon number N, basis |k, N-k>, k = 0..N.
/// Blocks are cached and safe to request from several threads.
const RMatrix &beam_splitter_block(int total);

/// Applies the 50:50 beam splitter to a two-mode state. Output components with a mode
/// above the cutoff are dropped; their weight is added to truncation_deficit.
PureState apply_beam_splitter(const PureState &psi);
DensityOperator apply_beam_splitter(const DensityOperator &rho);

/// <m|D(r)|n> for one mode, from the closed Laguerre form.
Complex displacement_matrix_element(int m, int n, const PhasePoint &r);
/// Matrix of <m|D(r)|n> for m, n < dim. Entries are computed independently of any
/// truncation, so they equal the untruncated operator's matrix elements.
CMatrix displacement_matrix(const PhasePoint &r, int dim);

/// chi(r) = Tr[D(r) rho] for one or two modes.
Complex characteristic_function(const DensityOperator &rho, const PhasePoint &r);
Complex characteristic_function(const PureState &psi, const PhasePoint &r);

/// Wigner quasi-probability of a single-mode state, normalized to integrate to 1.
double wigner_function(const DensityOperator &rho, const PhasePoint &r);

/// Reduced state on mode `keep` (0 = A, 1 = B).
DensityOperator partial_trace(const DensityOperator &rho, int keep);
DensityOperator partial_trace(const PureState &psi, int keep);

SchmidtSpectrum schmidt_spectrum(const PureState &psi);

/// Renyi entropy in bits; alpha = 1 gives the von Neumann entropy. Eigenvalues below
/// 1e-14 are treated as zero.
double renyi_entropy(const SchmidtSpectrum &spectrum, double alpha);
double renyi_entropy(const RVector &probabilities, double alpha);
double renyi_entropy(const DensityOperator &rho, double alpha);

double purity(const DensityOperator &rho);
double mean_photon_number(const PureState &psi);
double mean_photon_number(const DensityOperator &rho);

/// h_0(x) .. h_{nmax}(x): normalized Hermite functions for vacuum variance 1/2.
RVector hermite_functions(double x, int nmax);

/// <x_theta|psi> with x_theta = q cos(theta) + p sin(theta).
Complex position_wavefunction(const PureState &psi, double x, double theta = 0.0);

/// Homodyne density p(x | theta) of a single-mode state.
double quadrature_density(const DensityOperator &rho, double x, double theta = 0.0);

}  // namespace nongauss

#endif
