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

#ifndef NONGAUSS_GAUSSIAN_H
#define NONGAUSS_GAUSSIAN_H

#include "nongauss/fock.h"
#include "nongauss/linalg.h"

namespace nongauss {

/// Omega = direct sum of [[0, 1], [-1, 0]] in (q_1, p_1, ..., q_m, p_m) ordering.
RMatrix symplectic_form(int modes);

/// Mean vector and covariance matrix of an m-mode Gaussian state. The vacuum has
/// covariance I, so the uncertainty relation reads cov + i Omega >= 0.
class GaussianState {
   public:
    GaussianState(RVector mean, RMatrix cov);

    static GaussianState vacuum(int modes = 1);
    static GaussianState thermal(double mean_photons);
    static GaussianState coherent(Complex alpha);
    /// Library squeezer convention: r > 0 gives cov diag(e^{-2r}, e^{2r}).
    static GaussianState squeezed(double r);

    int modes() const {
        return static_cast<int>(mean_.size() / 2);
    }
    const RVector &mean() const {
        return mean_;
    }
    const RMatrix &cov() const {
        return cov_;
    }

   private:
    RVector mean_;
    RMatrix cov_;
};

/// A real 2m x 2m matrix with S Omega S^T = Omega (checked to 1e-10).
class SymplecticMatrix {
   public:
    explicit SymplecticMatrix(RMatrix entries);

    static SymplecticMatrix identity(int modes);
    /// Single-mode q-squeezer diag(e^{-r}, e^{r}).
    static SymplecticMatrix squeezing(double r);
    /// Single-mode counterclockwise phase-space rotation by phi.
    static SymplecticMatrix rotation(double phi);

    int modes() const {
        return static_cast<int>(s_.rows() / 2);
    }
    const RMatrix &entries() const {
        return s_;
    }
    SymplecticMatrix operator*(const SymplecticMatrix &other) const;
    SymplecticMatrix inverse() const;

   private:
    RMatrix s_;
};

/// Gaussian channel acting as cov -> X^T cov X + Y and mean -> X^T mean + d.
struct GaussianChannelSpec {
    RMatrix x;
    RMatrix y;
    RVector d;

    static GaussianChannelSpec identity(int modes);
    /// Pure loss with transmissivity eta on each of `modes` modes.
    static GaussianChannelSpec pure_loss(double eta, int modes = 1);
};

Complex gaussian_characteristic(const GaussianState &g, const PhasePoint &r);

/// (1/sqrt 2) [[I, I], [-I, I]] with all A quadratures first, then all B quadratures.
SymplecticMatrix beam_splitter_symplectic(int modes);

/// Complete positivity: Y + i Omega_out - i X^T Omega_in X >= -1e-10.
bool check_cp(const GaussianChannelSpec &ch);

/// Throws InvalidChannel when check_cp fails.
GaussianState channel_apply(const GaussianState &g, const GaussianChannelSpec &ch);

/// cov -> S cov S^T, mean -> S mean + d.
GaussianState apply_symplectic(const GaussianState &g, const SymplecticMatrix &s, const RVector &d);

struct Moments {
    RVector mean;
    RMatrix cov;
};

/// First and second moments from ladder-operator expectations of the truncated state.
/// Ordering (q_A, p_A, q_B, p_B) for two modes.
Moments covariance_of(const DensityOperator &rho);
Moments covariance_of(const PureState &psi);

/// Symplectic eigenvalues (ascending) of a covariance matrix.
RVector symplectic_eigenvalues(const RMatrix &cov);

/// Fock-space density matrix of a single-mode Gaussian state, built as a displaced,
/// rotated, squeezed thermal state in a working space and truncated to `cutoff`.
DensityOperator embed_gaussian_to_fock(const GaussianState &g, int cutoff);

/// Pure-loss channel with transmissivity eta via its Kraus operators
/// K_k = sqrt((1-eta)^k / k!) eta^{n/2} a^k. Maps the truncated space into itself.
DensityOperator apply_loss_fock(const DensityOperator &rho, double eta);

}  // namespace nongauss

#endif
