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

#include "nongauss/gaussian.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "nongauss/errors.h"

namespace nongauss {

namespace {

constexpr double kUncertaintyTol = 1e-10;

double min_eigenvalue(const CMatrix &h) {
    return hermitian_eigenvalues(h)[0];
}

bool satisfies_uncertainty(const RMatrix &cov, double tol) {
    CMatrix h = cov.cast<Complex>() + Complex(0.0, 1.0) * symplectic_form(int(cov.rows() / 2)).cast<Complex>();
    return min_eigenvalue(h) >= -tol;
}

RMatrix lowering(int dim) {
    RMatrix a = RMatrix::Zero(dim, dim);
    for (int n = 1; n < dim; n++) {
        a(n - 1, n) = std::sqrt(double(n));
    }
    return a;
}

// Ladder-operator bookkeeping for the flat (n_A, n_B) index.
struct LadderLayout {
    int modes;
    int d;
    int occupation(Eigen::Index x, int mode) const {
        if (modes == 1) {
            return int(x);
        }
        return mode == 0 ? int(x / d) : int(x % d);
    }
    Eigen::Index stride(int mode) const {
        return (modes == 2 && mode == 0) ? d : 1;
    }
};

// a_mode * M, acting on rows.
CMatrix lower_rows(const CMatrix &m, int mode, const LadderLayout &layout) {
    CMatrix out = CMatrix::Zero(m.rows(), m.cols());
    Eigen::Index s = layout.stride(mode);
    for (Eigen::Index x = 0; x < m.rows(); x++) {
        int n = layout.occupation(x, mode);
        if (n + 1 < layout.d) {
            out.row(x) = std::sqrt(double(n + 1)) * m.row(x + s);
        }
    }
    return out;
}

// Assemble quadrature moments from <a_i>, <a_i a_j>, <a_i^dag a_j>.
Moments moments_from_ladder(int modes, const CVector &a, const CMatrix &aa, const CMatrix &ada) {
    Moments out;
    out.mean.resize(2 * modes);
    for (int i = 0; i < modes; i++) {
        out.mean[2 * i] = std::numbers::sqrt2 * a[i].real();
        out.mean[2 * i + 1] = std::numbers::sqrt2 * a[i].imag();
    }
    RMatrix second(2 * modes, 2 * modes);
    for (int i = 0; i < modes; i++) {
        for (int j = 0; j < modes; j++) {
            double delta = i == j ? 0.5 : 0.0;
            second(2 * i, 2 * j) = aa(i, j).real() + ada(i, j).real() + delta;
            second(2 * i + 1, 2 * j + 1) = -aa(i, j).real() + ada(i, j).real() + delta;
            second(2 * i, 2 * j + 1) = aa(i, j).imag() + ada(i, j).imag();
            second(2 * j + 1, 2 * i) = second(2 * i, 2 * j + 1);
        }
    }
    out.cov = 2.0 * (second - out.mean * out.mean.transpose());
    out.cov = (0.5 * (out.cov + out.cov.transpose())).eval();
    return out;
}

}  // namespace

RMatrix symplectic_form(int modes) {
    if (modes < 1) {
        throw InvalidArgument("symplectic_form: modes must be positive");
    }
    RMatrix omega = RMatrix::Zero(2 * modes, 2 * modes);
    for (int i = 0; i < modes; i++) {
        omega(2 * i, 2 * i + 1) = 1.0;
        omega(2 * i + 1, 2 * i) = -1.0;
    }
    return omega;
}

GaussianState::GaussianState(RVector mean, RMatrix cov) : mean_(std::move(mean)), cov_(std::move(cov)) {
    if (mean_.size() < 2 || mean_.size() % 2 != 0 || cov_.rows() != mean_.size() || cov_.cols() != mean_.size()) {
        throw InvalidArgument("GaussianState: mean must have even length 2m and cov must be 2m x 2m");
    }
    if (!mean_.allFinite() || !cov_.allFinite()) {
        throw InvalidArgument("GaussianState: non-finite entries");
    }
    if ((cov_ - cov_.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
        throw InvalidArgument("GaussianState: covariance is not symmetric");
    }
    if (!satisfies_uncertainty(cov_, kUncertaintyTol)) {
        throw InvalidArgument("GaussianState: covariance violates the uncertainty relation");
    }
}

GaussianState GaussianState::vacuum(int modes) {
    return GaussianState(RVector::Zero(2 * modes), RMatrix::Identity(2 * modes, 2 * modes));
}

GaussianState GaussianState::thermal(double mean_photons) {
    if (!(mean_photons >= 0.0)) {
        throw InvalidArgument("GaussianState::thermal: mean photon number must be nonnegative");
    }
    return GaussianState(RVector::Zero(2), (2 * mean_photons + 1) * RMatrix::Identity(2, 2));
}

GaussianState GaussianState::coherent(Complex alpha) {
    RVector mean(2);
    mean << std::numbers::sqrt2 * alpha.real(), std::numbers::sqrt2 * alpha.imag();
    return GaussianState(mean, RMatrix::Identity(2, 2));
}

GaussianState GaussianState::squeezed(double r) {
    RMatrix cov = RMatrix::Zero(2, 2);
    cov(0, 0) = std::exp(-2 * r);
    cov(1, 1) = std::exp(2 * r);
    return GaussianState(RVector::Zero(2), cov);
}

SymplecticMatrix::SymplecticMatrix(RMatrix entries) : s_(std::move(entries)) {
    if (s_.rows() != s_.cols() || s_.rows() < 2 || s_.rows() % 2 != 0) {
        throw InvalidArgument("SymplecticMatrix: must be 2m x 2m");
    }
    RMatrix omega = symplectic_form(int(s_.rows() / 2));
    if ((s_ * omega * s_.transpose() - omega).cwiseAbs().maxCoeff() > 1e-10) {
        throw InvalidArgument("SymplecticMatrix: S Omega S^T != Omega");
    }
}

SymplecticMatrix SymplecticMatrix::identity(int modes) {
    return SymplecticMatrix(RMatrix::Identity(2 * modes, 2 * modes));
}

SymplecticMatrix SymplecticMatrix::squeezing(double r) {
    RMatrix s = RMatrix::Zero(2, 2);
    s(0, 0) = std::exp(-r);
    s(1, 1) = std::exp(r);
    return SymplecticMatrix(s);
}

SymplecticMatrix SymplecticMatrix::rotation(double phi) {
    RMatrix s(2, 2);
    s << std::cos(phi), -std::sin(phi), std::sin(phi), std::cos(phi);
    return SymplecticMatrix(s);
}

SymplecticMatrix SymplecticMatrix::operator*(const SymplecticMatrix &other) const {
    if (other.s_.rows() != s_.rows()) {
        throw InvalidArgument("SymplecticMatrix: dimension mismatch");
    }
    return SymplecticMatrix(s_ * other.s_);
}

SymplecticMatrix SymplecticMatrix::inverse() const {
    // S^{-1} = -Omega S^T Omega.
    RMatrix omega = symplectic_form(modes());
    return SymplecticMatrix(-omega * s_.transpose() * omega);
}

GaussianChannelSpec GaussianChannelSpec::identity(int modes) {
    return {RMatrix::Identity(2 * modes, 2 * modes), RMatrix::Zero(2 * modes, 2 * modes), RVector::Zero(2 * modes)};
}

GaussianChannelSpec GaussianChannelSpec::pure_loss(double eta, int modes) {
    if (!(eta >= 0.0 && eta <= 1.0)) {
        throw InvalidArgument("pure_loss: eta must lie in [0, 1]");
    }
    return {std::sqrt(eta) * RMatrix::Identity(2 * modes, 2 * modes),
            (1 - eta) * RMatrix::Identity(2 * modes, 2 * modes), RVector::Zero(2 * modes)};
}

Complex gaussian_characteristic(const GaussianState &g, const PhasePoint &r) {
    if (r.modes() != g.modes()) {
        throw InvalidArgument("gaussian_characteristic: dimension mismatch");
    }
    RMatrix omega = symplectic_form(g.modes());
    RVector w = omega * r.coords();
    double quad = w.dot(g.cov() * w);
    double lin = g.mean().dot(w);
    return std::exp(Complex(-0.25 * quad, -lin));
}

SymplecticMatrix beam_splitter_symplectic(int modes) {
    if (modes < 1) {
        throw InvalidArgument("beam_splitter_symplectic: modes must be positive");
    }
    const int n = 2 * modes;
    RMatrix s(2 * n, 2 * n);
    RMatrix id = RMatrix::Identity(n, n) * (1.0 / std::numbers::sqrt2);
    s << id, id, -id, id;
    return SymplecticMatrix(s);
}

bool check_cp(const GaussianChannelSpec &ch) {
    const auto n_in = ch.x.rows();
    const auto n_out = ch.x.cols();
    if (n_in % 2 != 0 || n_out % 2 != 0 || n_in == 0 || n_out == 0 || ch.y.rows() != n_out || ch.y.cols() != n_out ||
        ch.d.size() != n_out) {
        return false;
    }
    if ((ch.y - ch.y.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
        return false;
    }
    RMatrix omega_in = symplectic_form(int(n_in / 2));
    RMatrix omega_out = symplectic_form(int(n_out / 2));
    RMatrix skew = omega_out - ch.x.transpose() * omega_in * ch.x;
    CMatrix h = ch.y.cast<Complex>() + Complex(0.0, 1.0) * skew.cast<Complex>();
    return min_eigenvalue(h) >= -kUncertaintyTol;
}

GaussianState channel_apply(const GaussianState &g, const GaussianChannelSpec &ch) {
    if (ch.x.rows() != g.mean().size()) {
        throw InvalidArgument("channel_apply: channel input dimension does not match the state");
    }
    if (!check_cp(ch)) {
        throw InvalidChannel("channel_apply: channel is not completely positive");
    }
    RMatrix cov = ch.x.transpose() * g.cov() * ch.x + ch.y;
    cov = (0.5 * (cov + cov.transpose())).eval();
    return GaussianState(ch.x.transpose() * g.mean() + ch.d, cov);
}

GaussianState apply_symplectic(const GaussianState &g, const SymplecticMatrix &s, const RVector &d) {
    if (s.entries().rows() != g.mean().size() || d.size() != g.mean().size()) {
        throw InvalidArgument("apply_symplectic: dimension mismatch");
    }
    RMatrix cov = s.entries() * g.cov() * s.entries().transpose();
    cov = (0.5 * (cov + cov.transpose())).eval();
    return GaussianState(s.entries() * g.mean() + d, cov);
}

Moments covariance_of(const DensityOperator &rho) {
    const int modes = rho.modes();
    LadderLayout layout{modes, rho.dim_per_mode()};
    const CMatrix &m = rho.matrix();
    std::vector<CMatrix> lowered;
    for (int j = 0; j < modes; j++) {
        lowered.push_back(lower_rows(m, j, layout));
    }
    CVector a(modes);
    CMatrix aa(modes, modes);
    CMatrix ada(modes, modes);
    for (int i = 0; i < modes; i++) {
        a[i] = lowered[i].trace();
        for (int j = 0; j < modes; j++) {
            aa(i, j) = lower_rows(lowered[j], i, layout).trace();
            // Tr[a_i^dag a_j rho] = sum_x sqrt(n_i(x)+1) (a_j rho)(x, x + stride_i).
            Complex s = 0.0;
            Eigen::Index stride = layout.stride(i);
            for (Eigen::Index x = 0; x < m.rows(); x++) {
                int n = layout.occupation(x, i);
                if (n + 1 < layout.d) {
                    s += std::sqrt(double(n + 1)) * lowered[j](x, x + stride);
                }
            }
            ada(i, j) = s;
        }
    }
    return moments_from_ladder(modes, a, aa, ada);
}

Moments covariance_of(const PureState &psi) {
    const int modes = psi.modes();
    LadderLayout layout{modes, psi.dim_per_mode()};
    CMatrix v = psi.amplitudes();
    std::vector<CVector> lowered;
    for (int j = 0; j < modes; j++) {
        lowered.push_back(lower_rows(v, j, layout).col(0));
    }
    CVector a(modes);
    CMatrix aa(modes, modes);
    CMatrix ada(modes, modes);
    for (int i = 0; i < modes; i++) {
        a[i] = psi.amplitudes().dot(lowered[i]);
        for (int j = 0; j < modes; j++) {
            CMatrix lj = lowered[j];
            aa(i, j) = psi.amplitudes().dot(lower_rows(lj, i, layout).col(0));
            ada(i, j) = lowered[i].dot(lowered[j]);
        }
    }
    return moments_from_ladder(modes, a, aa, ada);
}

RVector symplectic_eigenvalues(const RMatrix &cov) {
    if (cov.rows() != cov.cols() || cov.rows() % 2 != 0 || cov.rows() == 0) {
        throw InvalidArgument("symplectic_eigenvalues: covariance must be 2m x 2m");
    }
    const int modes = int(cov.rows() / 2);
    // Eigenvalues of i Omega cov come in pairs +-nu.
    CMatrix h = Complex(0.0, 1.0) * (symplectic_form(modes) * cov).cast<Complex>();
    Eigen::ComplexEigenSolver<CMatrix> solver(h, false);
    std::vector<double> vals;
    for (Eigen::Index i = 0; i < h.rows(); i++) {
        vals.push_back(std::abs(solver.eigenvalues()[i].real()));
    }
    std::sort(vals.begin(), vals.end());
    RVector nu(modes);
    for (int i = 0; i < modes; i++) {
        nu[i] = 0.5 * (vals[2 * i] + vals[2 * i + 1]);
    }
    return nu;
}

DensityOperator embed_gaussian_to_fock(const GaussianState &g, int cutoff) {
    if (g.modes() != 1) {
        throw InvalidArgument("embed_gaussian_to_fock: single-mode state required");
    }
    if (cutoff < 0) {
        throw InvalidArgument("embed_gaussian_to_fock: cutoff must be nonnegative");
    }
    // Williamson form cov = nu R(phi) diag(e^{-2r}, e^{2r}) R(phi)^T.
    double nu = std::sqrt(g.cov().determinant());
    if (nu < 1.0 - 1e-8) {
        throw InvalidArgument("embed_gaussian_to_fock: symplectic eigenvalue below 1");
    }
    nu = std::max(nu, 1.0);
    Eigen::SelfAdjointEigenSolver<RMatrix> eig(g.cov() / nu);
    double lam_min = eig.eigenvalues()[0];
    double r = -0.5 * std::log(lam_min);
    double phi = std::atan2(eig.eigenvectors()(1, 0), eig.eigenvectors()(0, 0));
    double nbar = (nu - 1.0) / 2.0;

    const int w = working_dimension(cutoff) + int(std::ceil(20 * nbar));
    CMatrix rho = CMatrix::Zero(w, w);
    double thermal_kept = 0.0;
    for (int n = 0; n < w; n++) {
        double p = nbar == 0.0 ? (n == 0 ? 1.0 : 0.0) : std::pow(nbar / (nbar + 1), n) / (nbar + 1);
        rho(n, n) = p;
        thermal_kept += p;
    }
    double deficit = 1.0 - thermal_kept;
    if (std::abs(r) > 1e-15) {
        RMatrix a = lowering(w);
        RMatrix a2 = a * a;
        CMatrix s = expm(RMatrix(0.5 * r * (a2 - a2.transpose()))).cast<Complex>();
        rho = s * rho * s.adjoint();
    }
    if (phi != 0.0) {
        for (int m = 0; m < w; m++) {
            for (int n = 0; n < w; n++) {
                rho(m, n) *= std::polar(1.0, phi * (m - n));
            }
        }
    }
    Complex alpha = Complex(g.mean()[0], g.mean()[1]) / std::numbers::sqrt2;
    if (std::abs(alpha) > 0.0) {
        RMatrix a = lowering(w);
        CMatrix gen = alpha * a.transpose().cast<Complex>() - std::conj(alpha) * a.cast<Complex>();
        CMatrix dmat = expm(gen);
        rho = dmat * rho * dmat.adjoint();
    }
    const int d = cutoff + 1;
    CMatrix kept = rho.topLeftCorner(d, d);
    double tr = kept.trace().real();
    deficit += thermal_kept - tr;
    if (deficit > 1e-8) {
        std::ostringstream msg;
        msg << "embed_gaussian_to_fock: truncation deficit " << deficit << " at cutoff " << cutoff;
        throw CutoffTooSmall(msg.str());
    }
    kept /= tr;
    kept = (0.5 * (kept + kept.adjoint())).eval();
    return DensityOperator(1, cutoff, std::move(kept), std::max(deficit, 0.0));
}

DensityOperator apply_loss_fock(const DensityOperator &rho, double eta) {
    if (rho.modes() != 1) {
        throw InvalidArgument("apply_loss_fock: single-mode state required");
    }
    if (!(eta >= 0.0 && eta <= 1.0)) {
        throw InvalidArgument("apply_loss_fock: eta must lie in [0, 1]");
    }
    const int d = rho.dim_per_mode();
    // amp(n, k) = <n-k| K_k |n> = sqrt(C(n, k)) eta^{(n-k)/2} (1-eta)^{k/2}.
    RMatrix amp = RMatrix::Zero(d, d);
    for (int n = 0; n < d; n++) {
        for (int k = 0; k <= n; k++) {
            double log_binom = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
            amp(n, k) = std::sqrt(std::exp(log_binom) * std::pow(eta, n - k) * std::pow(1 - eta, k));
        }
    }
    const CMatrix &in = rho.matrix();
    CMatrix out = CMatrix::Zero(d, d);
    for (int m = 0; m < d; m++) {
        for (int mp = 0; mp < d; mp++) {
            Complex s = 0.0;
            for (int k = 0; m + k < d && mp + k < d; k++) {
                s += amp(m + k, k) * amp(mp + k, k) * in(m + k, mp + k);
            }
            out(m, mp) = s;
        }
    }
    return DensityOperator(1, rho.cutoff(), std::move(out), rho.truncation_deficit());
}

}  // namespace nongauss
