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

#include "nongauss/fock.h"

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

#include "nongauss/errors.h"

namespace nongauss {

namespace {

constexpr double kNormTol = 1e-10;
constexpr double kGeneratorLeakTol = 1e-8;
constexpr double kCoherentLeakTol = 1e-10;

void require_finite(double v, const char *what) {
    if (!std::isfinite(v)) {
        throw InvalidArgument(std::string(what) + " must be finite");
    }
}

void require_cutoff(int cutoff) {
    if (cutoff < 0) {
        throw InvalidArgument("cutoff must be nonnegative");
    }
}

RMatrix lowering(int dim) {
    RMatrix a = RMatrix::Zero(dim, dim);
    for (int n = 1; n < dim; n++) {
        a(n - 1, n) = std::sqrt(static_cast<double>(n));
    }
    return a;
}

// Keeps the first cutoff+1 amplitudes of a working-space vector, failing if the
// discarded weight exceeds tol.
PureState truncate_working(const CVector &v, int cutoff, double tol, const char *what) {
    const int d = cutoff + 1;
    double total = v.squaredNorm();
    double tail = v.tail(v.size() - d).squaredNorm();
    double deficit = tail / total;
    if (deficit > tol) {
        std::ostringstream msg;
        msg << what << ": truncation deficit " << deficit << " exceeds " << tol << " at cutoff " << cutoff;
        throw CutoffTooSmall(msg.str());
    }
    CVector kept = v.head(d);
    kept /= std::sqrt(kept.squaredNorm());
    return PureState(1, cutoff, std::move(kept), deficit);
}

// Coherent amplitudes <n|alpha> for n < dim together with the weight beyond dim.
CVector coherent_amplitudes(Complex alpha, int dim, double *tail) {
    CVector c(dim);
    double mag = std::abs(alpha);
    double phase = std::arg(alpha);
    double x = mag * mag;
    for (int n = 0; n < dim; n++) {
        if (mag == 0.0) {
            c[n] = n == 0 ? 1.0 : 0.0;
            continue;
        }
        double log_mag = -x / 2 + n * std::log(mag) - 0.5 * std::lgamma(n + 1.0);
        c[n] = std::polar(std::exp(log_mag), n * phase);
    }
    // Poisson tail, summed forward until negligible.
    double t = 0.0;
    if (mag > 0.0) {
        for (int n = dim; n < dim + 100000; n++) {
            double term = std::exp(-x + n * std::log(x) - std::lgamma(n + 1.0));
            t += term;
            if (n > x && term < 1e-30) {
                break;
            }
        }
    }
    *tail = t;
    return c;
}

CVector apply_generator(const CMatrix &generator, CVector v) {
    return expm(generator) * v;
}

CMatrix squeeze_generator(double r, int dim) {
    RMatrix a = lowering(dim);
    RMatrix a2 = a * a;
    return (0.5 * r * (a2 - a2.transpose())).cast<Complex>();
}

// L_n^{(k)}(x) for n = 0..count-1 by forward recurrence.
void laguerre_column(int k, double x, int count, std::vector<double> &out) {
    out.resize(count);
    if (count == 0) {
        return;
    }
    out[0] = 1.0;
    if (count > 1) {
        out[1] = 1.0 + k - x;
    }
    for (int n = 1; n + 1 < count; n++) {
        out[n + 1] = ((2.0 * n + 1.0 + k - x) * out[n] - (n + k) * out[n - 1]) / (n + 1.0);
    }
}

void require_single_mode(int modes, const char *what) {
    if (modes != 1) {
        throw InvalidArgument(std::string(what) + ": requires a single-mode state");
    }
}

void require_two_mode(int modes, const char *what) {
    if (modes != 2) {
        throw InvalidArgument(std::string(what) + ": requires a two-mode state");
    }
}

}  // namespace

PhasePoint::PhasePoint(double q, double p) : coords_(2) {
    coords_ << q, p;
}

PhasePoint::PhasePoint(RVector coords) : coords_(std::move(coords)) {
    if (coords_.size() < 2 || coords_.size() % 2 != 0) {
        throw InvalidArgument("PhasePoint: length must be a positive multiple of 2");
    }
}

Complex displacement_alpha(const PhasePoint &r) {
    if (r.modes() != 1) {
        throw InvalidArgument("displacement_alpha: single-mode point expected");
    }
    return -Complex(r.q(), r.p()) / std::numbers::sqrt2;
}

PureState::PureState(int modes, int cutoff, CVector amplitudes, double truncation_deficit)
    : modes_(modes), cutoff_(cutoff), amps_(std::move(amplitudes)), deficit_(truncation_deficit) {
    if (modes_ != 1 && modes_ != 2) {
        throw InvalidArgument("PureState: one or two modes supported");
    }
    require_cutoff(cutoff_);
    Eigen::Index expected = modes_ == 1 ? cutoff_ + 1 : Eigen::Index(cutoff_ + 1) * (cutoff_ + 1);
    if (amps_.size() != expected) {
        throw InvalidArgument("PureState: amplitude count does not match (cutoff+1)^modes");
    }
    if (!amps_.allFinite()) {
        throw InvalidArgument("PureState: non-finite amplitude");
    }
    double norm = amps_.squaredNorm();
    if (std::abs(norm - 1.0) > kNormTol) {
        std::ostringstream msg;
        msg << "PureState: norm " << norm << " differs from 1";
        throw InvalidArgument(msg.str());
    }
}

Complex PureState::amplitude(int n) const {
    require_single_mode(modes_, "PureState::amplitude");
    return (n >= 0 && n <= cutoff_) ? amps_[n] : Complex(0.0);
}

Complex PureState::amplitude(int n_a, int n_b) const {
    require_two_mode(modes_, "PureState::amplitude");
    if (n_a < 0 || n_b < 0 || n_a > cutoff_ || n_b > cutoff_) {
        return 0.0;
    }
    return amps_[n_a * (cutoff_ + 1) + n_b];
}

CMatrix PureState::as_matrix() const {
    require_two_mode(modes_, "PureState::as_matrix");
    const int d = cutoff_ + 1;
    CMatrix m(d, d);
    for (int a = 0; a < d; a++) {
        for (int b = 0; b < d; b++) {
            m(a, b) = amps_[a * d + b];
        }
    }
    return m;
}

DensityOperator::DensityOperator(int modes, int cutoff, CMatrix matrix, double truncation_deficit)
    : modes_(modes), cutoff_(cutoff), rho_(std::move(matrix)), deficit_(truncation_deficit) {
    if (modes_ != 1 && modes_ != 2) {
        throw InvalidArgument("DensityOperator: one or two modes supported");
    }
    require_cutoff(cutoff_);
    Eigen::Index expected = modes_ == 1 ? cutoff_ + 1 : Eigen::Index(cutoff_ + 1) * (cutoff_ + 1);
    if (rho_.rows() != expected || rho_.cols() != expected) {
        throw InvalidArgument("DensityOperator: matrix shape does not match (cutoff+1)^modes");
    }
    if (!rho_.allFinite()) {
        throw InvalidArgument("DensityOperator: non-finite entry");
    }
    if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > kNormTol) {
        throw InvalidArgument("DensityOperator: matrix is not Hermitian");
    }
    Complex tr = rho_.trace();
    if (std::abs(tr - 1.0) > kNormTol) {
        std::ostringstream msg;
        msg << "DensityOperator: trace " << tr.real() << " differs from 1";
        throw InvalidArgument(msg.str());
    }
    rho_ = (0.5 * (rho_ + rho_.adjoint())).eval();
}

DensityOperator DensityOperator::from_pure(const PureState &psi) {
    return DensityOperator(psi.modes(), psi.cutoff(), psi.amplitudes() * psi.amplitudes().adjoint(),
                           psi.truncation_deficit());
}

SchmidtSpectrum::SchmidtSpectrum(std::vector<double> probabilities) : probs_(std::move(probabilities)) {
    double total = 0.0;
    for (double p : probs_) {
        if (!(p >= -1e-14)) {
            throw InvalidArgument("SchmidtSpectrum: negative probability");
        }
        total += p;
    }
    if (probs_.empty() || std::abs(total - 1.0) > 1e-9) {
        throw InvalidArgument("SchmidtSpectrum: probabilities must sum to 1");
    }
    for (double &p : probs_) {
        p = std::max(p, 0.0) / total;
    }
    std::sort(probs_.begin(), probs_.end(), std::greater<double>());
}

int working_dimension(int cutoff) {
    return 2 * cutoff + 20;
}

PureState make_fock(int n, int cutoff) {
    require_cutoff(cutoff);
    if (n < 0) {
        throw InvalidArgument("make_fock: n must be nonnegative");
    }
    if (n > cutoff) {
        throw CutoffTooSmall("make_fock: n exceeds cutoff");
    }
    CVector v = CVector::Zero(cutoff + 1);
    v[n] = 1.0;
    return PureState(1, cutoff, std::move(v));
}

PureState make_coherent(Complex alpha, int cutoff) {
    require_cutoff(cutoff);
    require_finite(alpha.real(), "make_coherent: alpha");
    require_finite(alpha.imag(), "make_coherent: alpha");
    double tail = 0.0;
    CVector c = coherent_amplitudes(alpha, cutoff + 1, &tail);
    if (tail > kCoherentLeakTol) {
        std::ostringstream msg;
        msg << "make_coherent: Poisson tail " << tail << " beyond cutoff " << cutoff;
        throw CutoffTooSmall(msg.str());
    }
    c /= std::sqrt(c.squaredNorm());
    return PureState(1, cutoff, std::move(c), tail);
}

PureState make_zero_n(int n, int cutoff) {
    require_cutoff(cutoff);
    if (n < 0) {
        throw InvalidArgument("make_zero_n: N must be nonnegative");
    }
    if (n > cutoff) {
        throw CutoffTooSmall("make_zero_n: N exceeds cutoff");
    }
    CVector v = CVector::Zero(cutoff + 1);
    if (n == 0) {
        v[0] = 1.0;
    } else {
        v[0] = (1.0 / std::numbers::sqrt2);
        v[n] = (1.0 / std::numbers::sqrt2);
    }
    return PureState(1, cutoff, std::move(v));
}

PureState make_squeezed(double r, int cutoff) {
    require_cutoff(cutoff);
    require_finite(r, "make_squeezed: r");
    const int w = working_dimension(cutoff);
    CVector v = CVector::Zero(w);
    v[0] = 1.0;
    return truncate_working(apply_generator(squeeze_generator(r, w), v), cutoff, kGeneratorLeakTol, "make_squeezed");
}

PureState make_cat(const std::vector<Complex> &coeffs, const std::vector<double> &alphas, double s, int cutoff) {
    require_cutoff(cutoff);
    require_finite(s, "make_cat: s");
    if (coeffs.empty() || coeffs.size() != alphas.size()) {
        throw InvalidArgument("make_cat: coefficient and amplitude lists must be nonempty and equal length");
    }
    const int w = working_dimension(cutoff);
    CVector v = CVector::Zero(w);
    for (size_t i = 0; i < coeffs.size(); i++) {
        require_finite(alphas[i], "make_cat: alpha");
        double tail = 0.0;
        v += coeffs[i] * coherent_amplitudes(alphas[i], w, &tail);
        if (tail > kCoherentLeakTol) {
            throw CutoffTooSmall("make_cat: coherent component leaves the working space");
        }
    }
    double norm = v.norm();
    if (norm < 1e-8) {
        throw InvalidArgument("make_cat: superposition has vanishing norm");
    }
    v /= norm;
    if (s != 0.0) {
        v = apply_generator(squeeze_generator(s, w), v);
    }
    return truncate_working(v, cutoff, kGeneratorLeakTol, "make_cat");
}

PureState make_cubic_phase(double gamma, double r, int cutoff, double momentum) {
    require_cutoff(cutoff);
    require_finite(gamma, "make_cubic_phase: gamma");
    require_finite(r, "make_cubic_phase: r");
    require_finite(momentum, "make_cubic_phase: momentum");
    if (gamma < 0.0) {
        throw InvalidArgument("make_cubic_phase: gamma must be nonnegative");
    }
    const int w = working_dimension(cutoff);
    CVector v = CVector::Zero(w);
    v[0] = 1.0;
    // The cubic-phase scale uses Q = a + a^dag and a squeezer that stretches Q for r > 0,
    // which is the library squeezer at -r.
    if (r != 0.0) {
        v = apply_generator(squeeze_generator(-r, w), v);
    }
    RMatrix a = lowering(w);
    RMatrix big_q = a + a.transpose();
    CMatrix gate = Complex(0.0, gamma) * RMatrix(big_q * big_q * big_q).cast<Complex>();
    v = apply_generator(gate, v);
    if (momentum != 0.0) {
        // Shift of Q-scale momentum by P: textbook alpha = i P / 2.
        Complex alpha(0.0, momentum / 2);
        CMatrix gen = (alpha * a.transpose().cast<Complex>() - std::conj(alpha) * a.cast<Complex>());
        v = apply_generator(gen, v);
    }
    return truncate_working(v, cutoff, kGeneratorLeakTol, "make_cubic_phase");
}

PureState tensor(const PureState &a, const PureState &b) {
    require_single_mode(a.modes(), "tensor");
    require_single_mode(b.modes(), "tensor");
    if (a.cutoff() != b.cutoff()) {
        throw InvalidArgument("tensor: cutoffs must match");
    }
    const int d = a.dim_per_mode();
    CVector v(Eigen::Index(d) * d);
    for (int i = 0; i < d; i++) {
        v.segment(Eigen::Index(i) * d, d) = a.amplitudes()[i] * b.amplitudes();
    }
    return PureState(2, a.cutoff(), std::move(v), a.truncation_deficit() + b.truncation_deficit());
}

DensityOperator tensor(const DensityOperator &a, const DensityOperator &b) {
    require_single_mode(a.modes(), "tensor");
    require_single_mode(b.modes(), "tensor");
    if (a.cutoff() != b.cutoff()) {
        throw InvalidArgument("tensor: cutoffs must match");
    }
    const int d = a.dim_per_mode();
    CMatrix m(Eigen::Index(d) * d, Eigen::Index(d) * d);
    for (int i = 0; i < d; i++) {
        for (int j = 0; j < d; j++) {
            m.block(Eigen::Index(i) * d, Eigen::Index(j) * d, d, d) = a.matrix()(i, j) * b.matrix();
        }
    }
    return DensityOperator(2, a.cutoff(), std::move(m), a.truncation_deficit() + b.truncation_deficit());
}

const RMatrix &beam_splitter_block(int total) {
    if (total < 0) {
        throw InvalidArgument("beam_splitter_block: total photon number must be nonnegative");
    }
    static std::mutex mu;
    static std::vector<std::unique_ptr<RMatrix>> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (static_cast<int>(cache.size()) <= total) {
        cache.resize(total + 1);
    }
    if (!cache[total]) {
        const int n = total;
        const double theta = std::numbers::pi / 4;
        RMatrix gen = RMatrix::Zero(n + 1, n + 1);
        for (int k = 0; k <= n; k++) {
            // a b^dag |k, n-k> and a^dag b |k, n-k>.
            if (k > 0) {
                gen(k - 1, k) += theta * std::sqrt(double(k) * (n - k + 1));
            }
            if (k < n) {
                gen(k + 1, k) -= theta * std::sqrt(double(k + 1) * (n - k));
            }
        }
        cache[total] = std::make_unique<RMatrix>(expm(gen));
    }
    return *cache[total];
}

PureState apply_beam_splitter(const PureState &psi) {
    require_two_mode(psi.modes(), "apply_beam_splitter");
    const int d = psi.dim_per_mode();
    const int c = psi.cutoff();
    CVector out = CVector::Zero(psi.amplitudes().size());
    double lost = 0.0;
    for (int n = 0; n <= 2 * c; n++) {
        int kmin = std::max(0, n - c);
        int kmax = std::min(n, c);
        int count = kmax - kmin + 1;
        CVector in(count);
        for (int k = kmin; k <= kmax; k++) {
            in[k - kmin] = psi.amplitudes()[k * d + (n - k)];
        }
        CVector mixed = beam_splitter_block(n).middleCols(kmin, count).cast<Complex>() * in;
        for (int k = 0; k <= n; k++) {
            if (k >= kmin && k <= kmax) {
                out[k * d + (n - k)] = mixed[k];
            } else {
                lost += std::norm(mixed[k]);
            }
        }
    }
    double norm2 = out.squaredNorm();
    if (norm2 <= 0.0) {
        throw CutoffTooSmall("apply_beam_splitter: no weight left inside the cutoff");
    }
    out /= std::sqrt(norm2);
    return PureState(2, c, std::move(out), psi.truncation_deficit() + lost);
}

DensityOperator apply_beam_splitter(const DensityOperator &rho) {
    require_two_mode(rho.modes(), "apply_beam_splitter");
    const int d = rho.dim_per_mode();
    const int c = rho.cutoff();
    const int blocks = 2 * c + 1;
    std::vector<std::vector<Eigen::Index>> index(blocks);
    std::vector<RMatrix> kept(blocks);
    for (int n = 0; n < blocks; n++) {
        int kmin = std::max(0, n - c);
        int kmax = std::min(n, c);
        int count = kmax - kmin + 1;
        for (int k = kmin; k <= kmax; k++) {
            index[n].push_back(Eigen::Index(k) * d + (n - k));
        }
        kept[n] = beam_splitter_block(n).block(kmin, kmin, count, count);
    }
    const CMatrix &in = rho.matrix();
    CMatrix out = CMatrix::Zero(in.rows(), in.cols());
    for (int n = 0; n < blocks; n++) {
        for (int m = 0; m < blocks; m++) {
            const auto &rows = index[n];
            const auto &cols = index[m];
            CMatrix sub(rows.size(), cols.size());
            for (size_t i = 0; i < rows.size(); i++) {
                for (size_t j = 0; j < cols.size(); j++) {
                    sub(i, j) = in(rows[i], cols[j]);
                }
            }
            if (sub.cwiseAbs().maxCoeff() == 0.0) {
                continue;
            }
            CMatrix mapped = kept[n].cast<Complex>() * sub * kept[m].transpose().cast<Complex>();
            for (size_t i = 0; i < rows.size(); i++) {
                for (size_t j = 0; j < cols.size(); j++) {
                    out(rows[i], cols[j]) = mapped(i, j);
                }
            }
        }
    }
    double tr = out.trace().real();
    if (tr <= 0.0) {
        throw CutoffTooSmall("apply_beam_splitter: no weight left inside the cutoff");
    }
    double lost = in.trace().real() - tr;
    out /= tr;
    return DensityOperator(2, c, std::move(out), rho.truncation_deficit() + std::max(lost, 0.0));
}

Complex displacement_matrix_element(int m, int n, const PhasePoint &r) {
    if (m < 0 || n < 0) {
        throw InvalidArgument("displacement_matrix_element: indices must be nonnegative");
    }
    Complex alpha = displacement_alpha(r);
    double x = std::norm(alpha);
    int lo = std::min(m, n);
    int k = std::abs(m - n);
    if (x == 0.0) {
        return m == n ? 1.0 : 0.0;
    }
    std::vector<double> lag;
    laguerre_column(k, x, lo + 1, lag);
    double log_mag = 0.5 * (std::lgamma(lo + 1.0) - std::lgamma(lo + k + 1.0)) + k * 0.5 * std::log(x) - x / 2;
    Complex value = std::polar(std::exp(log_mag) * lag[lo], k * std::arg(alpha));
    if (m < n) {
        value = std::conj(value) * ((k % 2 == 0) ? 1.0 : -1.0);
    }
    return value;
}

CMatrix displacement_matrix(const PhasePoint &r, int dim) {
    if (dim < 1) {
        throw InvalidArgument("displacement_matrix: dim must be positive");
    }
    Complex alpha = displacement_alpha(r);
    double x = std::norm(alpha);
    if (x == 0.0) {
        return CMatrix::Identity(dim, dim);
    }
    double log_abs = 0.5 * std::log(x);
    double phase = std::arg(alpha);
    CMatrix d(dim, dim);
    std::vector<double> lag;
    std::vector<double> log_fact(dim + 1);
    for (int i = 0; i <= dim; i++) {
        log_fact[i] = std::lgamma(i + 1.0);
    }
    for (int k = 0; k < dim; k++) {
        int count = dim - k;
        laguerre_column(k, x, count, lag);
        Complex rot = std::polar(1.0, k * phase);
        double sign = (k % 2 == 0) ? 1.0 : -1.0;
        // sqrt(n! / (n+k)!) |alpha|^k e^{-x/2}, advanced in n by a ratio.
        double pref = std::exp(-0.5 * log_fact[k] + k * log_abs - x / 2);
        for (int n = 0; n < count; n++) {
            if (n > 0) {
                pref *= std::sqrt(double(n) / double(n + k));
            }
            double mag = pref * lag[n];
            Complex lower = mag * rot;
            d(n + k, n) = lower;
            if (k > 0) {
                d(n, n + k) = sign * std::conj(lower);
            }
        }
    }
    return d;
}

Complex characteristic_function(const DensityOperator &rho, const PhasePoint &r) {
    const int d = rho.dim_per_mode();
    if (r.modes() != rho.modes()) {
        throw InvalidArgument("characteristic_function: phase point has wrong number of modes");
    }
    const CMatrix &m = rho.matrix();
    if (rho.modes() == 1) {
        return displacement_matrix(r, d).cwiseProduct(m.transpose()).sum();
    }
    CMatrix da = displacement_matrix(r.mode(0), d);
    CMatrix db = displacement_matrix(r.mode(1), d);
    Complex total = 0.0;
    for (int a = 0; a < d; a++) {
        for (int ap = 0; ap < d; ap++) {
            if (da(a, ap) == 0.0) {
                continue;
            }
            // Tr[D_B rho_{a', a}] for the (a', a) block.
            auto blk = m.block(Eigen::Index(ap) * d, Eigen::Index(a) * d, d, d);
            total += da(a, ap) * db.cwiseProduct(blk.transpose()).sum();
        }
    }
    return total;
}

Complex characteristic_function(const PureState &psi, const PhasePoint &r) {
    const int d = psi.dim_per_mode();
    if (r.modes() != psi.modes()) {
        throw InvalidArgument("characteristic_function: phase point has wrong number of modes");
    }
    if (psi.modes() == 1) {
        return psi.amplitudes().dot(displacement_matrix(r, d) * psi.amplitudes());
    }
    CMatrix m = psi.as_matrix();
    CMatrix da = displacement_matrix(r.mode(0), d);
    CMatrix db = displacement_matrix(r.mode(1), d);
    return m.conjugate().cwiseProduct(da * m * db.transpose()).sum();
}

double wigner_function(const DensityOperator &rho, const PhasePoint &r) {
    require_single_mode(rho.modes(), "wigner_function");
    if (r.modes() != 1) {
        throw InvalidArgument("wigner_function: single-mode phase point expected");
    }
    const int d = rho.dim_per_mode();
    const CMatrix &m = rho.matrix();
    Complex beta = Complex(r.q(), r.p()) / std::numbers::sqrt2;
    double b2 = std::norm(beta);
    double x = 4 * b2;
    double log_two_beta = b2 > 0.0 ? std::log(2 * std::sqrt(b2)) : 0.0;
    double phase = std::arg(beta);
    std::vector<double> lag;
    double total = 0.0;
    for (int k = 0; k < d; k++) {
        if (k > 0 && b2 == 0.0) {
            break;
        }
        int count = d - k;
        laguerre_column(k, x, count, lag);
        Complex rot = std::polar(1.0, -k * phase);
        double partial_re = 0.0;
        for (int n = 0; n < count; n++) {
            double mag = std::exp(0.5 * (std::lgamma(n + 1.0) - std::lgamma(n + k + 1.0)) + k * log_two_beta - 2 * b2) *
                         lag[n];
            if (n % 2 == 1) {
                mag = -mag;
            }
            // rho_{n+k, n} pairs with the kernel element (n, n+k).
            partial_re += (m(n + k, n) * rot).real() * mag;
        }
        total += (k == 0 ? 1.0 : 2.0) * partial_re;
    }
    return total / std::numbers::pi;
}

DensityOperator partial_trace(const DensityOperator &rho, int keep) {
    require_two_mode(rho.modes(), "partial_trace");
    if (keep != 0 && keep != 1) {
        throw InvalidArgument("partial_trace: keep must be 0 or 1");
    }
    const int d = rho.dim_per_mode();
    const CMatrix &m = rho.matrix();
    CMatrix out = CMatrix::Zero(d, d);
    for (int i = 0; i < d; i++) {
        for (int j = 0; j < d; j++) {
            Complex s = 0.0;
            for (int t = 0; t < d; t++) {
                s += keep == 0 ? m(Eigen::Index(i) * d + t, Eigen::Index(j) * d + t)
                               : m(Eigen::Index(t) * d + i, Eigen::Index(t) * d + j);
            }
            out(i, j) = s;
        }
    }
    out /= out.trace().real();
    return DensityOperator(1, rho.cutoff(), std::move(out), rho.truncation_deficit());
}

DensityOperator partial_trace(const PureState &psi, int keep) {
    require_two_mode(psi.modes(), "partial_trace");
    if (keep != 0 && keep != 1) {
        throw InvalidArgument("partial_trace: keep must be 0 or 1");
    }
    CMatrix m = psi.as_matrix();
    CMatrix out = keep == 0 ? CMatrix(m * m.adjoint()) : CMatrix(m.transpose() * m.conjugate());
    out /= out.trace().real();
    return DensityOperator(1, psi.cutoff(), std::move(out), psi.truncation_deficit());
}

SchmidtSpectrum schmidt_spectrum(const PureState &psi) {
    require_two_mode(psi.modes(), "schmidt_spectrum");
    Eigen::BDCSVD<CMatrix> svd(psi.as_matrix());
    const RVector &s = svd.singularValues();
    std::vector<double> probs(s.size());
    for (Eigen::Index i = 0; i < s.size(); i++) {
        probs[i] = s[i] * s[i];
    }
    return SchmidtSpectrum(std::move(probs));
}

double renyi_entropy(const RVector &probabilities, double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw InvalidArgument("renyi_entropy: alpha must be positive and finite");
    }
    constexpr double kClamp = 1e-14;
    if (alpha == 1.0) {
        double h = 0.0;
        for (double p : probabilities) {
            if (p > kClamp) {
                h -= p * std::log2(p);
            }
        }
        return h;
    }
    double s = 0.0;
    for (double p : probabilities) {
        if (p > kClamp) {
            s += std::pow(p, alpha);
        }
    }
    return std::log2(s) / (1.0 - alpha);
}

double renyi_entropy(const SchmidtSpectrum &spectrum, double alpha) {
    const auto &p = spectrum.probabilities();
    return renyi_entropy(Eigen::Map<const RVector>(p.data(), static_cast<Eigen::Index>(p.size())), alpha);
}

double renyi_entropy(const DensityOperator &rho, double alpha) {
    return renyi_entropy(psd_spectrum(rho.matrix(), 1e-14).values, alpha);
}

double purity(const DensityOperator &rho) {
    return rho.matrix().squaredNorm();
}

double mean_photon_number(const PureState &psi) {
    const int d = psi.dim_per_mode();
    double total = 0.0;
    for (Eigen::Index i = 0; i < psi.amplitudes().size(); i++) {
        int photons = psi.modes() == 1 ? int(i) : int(i / d + i % d);
        total += photons * std::norm(psi.amplitudes()[i]);
    }
    return total;
}

double mean_photon_number(const DensityOperator &rho) {
    const int d = rho.dim_per_mode();
    double total = 0.0;
    for (Eigen::Index i = 0; i < rho.matrix().rows(); i++) {
        int photons = rho.modes() == 1 ? int(i) : int(i / d + i % d);
        total += photons * rho.matrix()(i, i).real();
    }
    return total;
}

RVector hermite_functions(double x, int nmax) {
    if (nmax < 0) {
        throw InvalidArgument("hermite_functions: nmax must be nonnegative");
    }
    RVector h(nmax + 1);
    h[0] = std::exp(-x * x / 2) / std::pow(std::numbers::pi, 0.25);
    if (nmax >= 1) {
        h[1] = std::numbers::sqrt2 * x * h[0];
    }
    for (int n = 1; n < nmax; n++) {
        h[n + 1] = std::sqrt(2.0 / (n + 1)) * x * h[n] - std::sqrt(double(n) / (n + 1)) * h[n - 1];
    }
    return h;
}

Complex position_wavefunction(const PureState &psi, double x, double theta) {
    require_single_mode(psi.modes(), "position_wavefunction");
    RVector h = hermite_functions(x, psi.cutoff());
    Complex total = 0.0;
    for (int n = 0; n <= psi.cutoff(); n++) {
        total += psi.amplitudes()[n] * std::polar(h[n], -n * theta);
    }
    return total;
}

double quadrature_density(const DensityOperator &rho, double x, double theta) {
    require_single_mode(rho.modes(), "quadrature_density");
    RVector h = hermite_functions(x, rho.cutoff());
    CVector v(rho.dim_per_mode());
    for (int n = 0; n <= rho.cutoff(); n++) {
        v[n] = std::polar(h[n], n * theta);
    }
    // sum_{mn} rho_mn e^{-i(m-n) theta} h_m h_n = v^dag rho v.
    return v.dot(rho.matrix() * v).real();
}

}  // namespace nongauss
