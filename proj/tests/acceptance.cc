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

// Prints one PASS/FAIL line per acceptance criterion and exits nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <boost/math/tools/minima.hpp>

#include "nongauss/cubic.h"
#include "nongauss/gaussian.h"
#include "nongauss/measures.h"
#include "nongauss/philox.h"
#include "nongauss/shadows.h"
#include "nongauss/swap_test.h"

using namespace nongauss;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string &what) {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

std::string fmt(const char *f, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), f, a, b, c);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome faithfulness() {
    Outcome out;
    auto t0 = std::chrono::steady_clock::now();
    const int cutoff = 60;
    double worst_gaussian = 0.0;
    for (double a : {0.0, 1.0, 2.0}) {
        worst_gaussian = std::max(worst_gaussian, n_renyi(make_coherent(a, cutoff), 2.0));
    }
    for (double r : {0.3, 0.6}) {
        worst_gaussian = std::max(worst_gaussian, n_renyi(make_squeezed(r, cutoff), 2.0));
    }
    out.require(worst_gaussian < 1e-6, fmt("Gaussian E2 %.3g", worst_gaussian));
    double least_nongaussian = 1e300;
    for (const PureState &psi : {make_fock(1, cutoff), make_fock(2, cutoff), make_zero_n(2, cutoff)}) {
        least_nongaussian = std::min(least_nongaussian, n_renyi(psi, 2.0));
    }
    out.require(least_nongaussian > 0.5, fmt("non-Gaussian E2 %.4f", least_nongaussian));
    double t = seconds_since(t0);
    out.require(t < 60.0, fmt("runtime %.1f s", t));
    out.detail += fmt(" max Gaussian E2 %.2g, min non-Gaussian E2 %.4f, %.2f s", worst_gaussian, least_nongaussian, t);
    return out;
}

Outcome hom_anchor() {
    Outcome out;
    double worst = 0.0;
    for (double a : {0.5, 1.0, 2.0, 3.0}) {
        worst = std::max(worst, std::abs(n_renyi(make_fock(1, 10), a) - 1.0));
    }
    const std::vector<double> p = schmidt_spectrum(beam_splitter_output(make_fock(1, 10))).probabilities();
    out.require(worst <= 1e-9, fmt("|E_alpha - 1| %.3g", worst));
    double rest = 0.0;
    for (size_t i = 2; i < p.size(); i++) {
        rest += p[i];
    }
    out.require(p.size() >= 2 && std::abs(p[0] - 0.5) < 1e-12 && std::abs(p[1] - 0.5) < 1e-12 && rest < 1e-12,
                "Schmidt spectrum is not (1/2, 1/2)");
    out.detail += fmt(" max |E_alpha - 1| = %.2g", worst);
    return out;
}

Outcome analytic_equivalence() {
    Outcome out;
    double worst_fock = 0.0;
    for (int n = 0; n <= 10; n++) {
        PureState psi = make_fock(n, 2 * n);
        for (double a : {1.0, 2.0}) {
            worst_fock = std::max(worst_fock, std::abs(n_renyi(psi, a) - n_renyi_fock_analytic(n, a)));
        }
    }
    out.require(worst_fock <= 1e-9, fmt("Fock c_m mismatch %.3g", worst_fock));
    double worst_quartic = 0.0;
    for (const PureState &psi : {make_fock(1, 20), make_fock(2, 20), make_coherent(Complex(1.0, 0.5), 30)}) {
        worst_quartic = std::max(worst_quartic, std::abs(n_renyi2_via_char_integral(psi) - n_renyi(psi, 2.0)));
    }
    out.require(worst_quartic <= 1e-4, fmt("quartic integral mismatch %.3g", worst_quartic));
    out.detail += fmt(" c_m vs simulation %.2g, quartic vs Schmidt %.2g", worst_fock, worst_quartic);
    return out;
}

// Random finite superpositions; cutoff 2 n_max keeps the beam-splitter output exact.
PureState random_state(uint64_t index) {
    const Philox4x32 gen = Philox4x32::from_seed(20260101);
    const int n_max = 1 + int(index % 8);
    const int cutoff = 2 * n_max;
    CVector amps = CVector::Zero(cutoff + 1);
    for (int n = 0; n <= n_max; n++) {
        auto u = gen.uniforms(index * 64 + uint64_t(n));
        double radius = std::sqrt(-2.0 * std::log1p(-u[0]));
        amps[n] = std::polar(radius, 2.0 * M_PI * u[1]);
    }
    amps /= amps.norm();
    return PureState(1, cutoff, amps);
}

Outcome lemma_covariance() {
    Outcome out;
    double worst = 0.0;
    int non_gaussian = 0;
    for (uint64_t i = 0; i < 20; i++) {
        PureState psi = random_state(i);
        non_gaussian += n_renyi(psi, 2.0) > 1e-3;
        PureState pair = tensor(psi, psi);
        RMatrix before = covariance_of(pair).cov;
        RMatrix after = covariance_of(apply_beam_splitter(pair)).cov;
        worst = std::max(worst, (before - after).cwiseAbs().maxCoeff());
    }
    out.require(worst <= 1e-8, fmt("covariance change %.3g", worst));
    out.require(non_gaussian == 20, "a test state was Gaussian");
    out.detail += fmt(" 20 states, max covariance change %.2g", worst);
    return out;
}

Outcome monotonicity() {
    Outcome out;
    std::vector<double> etas;
    for (int k = 10; k >= 0; k--) {
        etas.push_back(k / 10.0);
    }
    double worst_rise = -1e300;
    for (int n : {1, 2}) {
        std::vector<ProbeRow> rows = monotonicity_probe(make_fock(n, 2 * n), etas, ProbeMeasure::kMutualInformation);
        for (size_t i = 1; i < rows.size(); i++) {
            worst_rise = std::max(worst_rise, rows[i].value - rows[i - 1].value);
        }
    }
    out.require(worst_rise <= 1e-6, fmt("I_1 rises by %.3g", worst_rise));
    out.detail += fmt(" largest step I_1(eta_next) - I_1(eta) = %.3g", worst_rise);
    return out;
}

Outcome separable_mixture() {
    Outcome out;
    const int cutoff = 40;
    RVector plus(2), minus(2);
    plus << 3.0, 0.0;
    minus << -3.0, 0.0;
    std::vector<double> w = {0.5, 0.5};
    std::vector<RVector> means = {plus, minus};
    RMatrix cov = RMatrix::Identity(2, 2);
    DensityOperator rho = displaced_gaussian_mixture(w, means, cov, cutoff);
    DensityOperator simulated = beam_splitter_output(rho);
    DensityOperator closed = displaced_mixture_output(w, means, cov, cutoff);
    double td = trace_distance(simulated.matrix(), closed.matrix());
    double mi = mutual_information_vn(closed);
    out.require(td <= 1e-8, fmt("trace distance %.3g", td));
    out.require(mi > 0.1, fmt("I_1 %.4f", mi));
    out.detail += fmt(" trace distance %.2g, I_1 %.5f", td, mi);
    return out;
}

Outcome swap_budget() {
    Outcome out;
    const int cutoff = 20;
    const int cap = 3;
    struct Pair {
        const char *name;
        PureState a;
        PureState b;
    };
    std::vector<Pair> pairs = {
        {"fock1", make_fock(1, cutoff), make_fock(1, cutoff)},
        {"coherent", make_coherent(1.0, cutoff), make_coherent(1.0, cutoff)},
        {"coherent-squeezed", make_coherent(1.5, cutoff), make_squeezed(0.4, cutoff)},
        {"zero2-fock1", make_zero_n(2, cutoff), make_fock(1, cutoff)},
        {"cat-fock2", make_cat({1.0, 1.0}, {1.5, -1.5}, 0.0, cutoff), make_fock(2, cutoff)},
    };
    double worst_z = 0.0;
    double worst_chain = -1e300;
    for (const Pair &p : pairs) {
        DensityOperator rho = DensityOperator::from_pure(p.a);
        DensityOperator sigma = DensityOperator::from_pure(p.b);
        PnrDistribution dist = joint_pnr_distribution(rho, sigma);
        const double expected = truncated_swap_expectation(dist, cap);
        double sum = 0.0;
        double var = 0.0;
        const int seeds = 200;
        for (int s = 0; s < seeds; s++) {
            std::vector<PnrOutcome> shots = sample_outcomes(dist, 10000, 1000 + uint64_t(s));
            sum += swap_estimator(shots, cap);
            double se = swap_estimator_stderr(shots, cap);
            var += se * se;
        }
        double mean = sum / seeds;
        double combined = std::sqrt(var) / seeds;
        worst_z = std::max(worst_z, std::abs(mean - expected) / combined);

        double exact = (rho.matrix() * sigma.matrix()).trace().real();
        SystematicBounds b = systematic_error_bound(rho, sigma, cap);
        worst_chain = std::max({worst_chain, std::abs(exact - expected) - b.joint, b.joint - b.product});
    }
    out.require(worst_z <= 4.0, fmt("seed-mean off by %.2f combined stderr", worst_z));
    out.require(worst_chain <= 1e-12, fmt("error chain violated by %.3g", worst_chain));

    ProtocolReport proto = simulate_nongauss_protocol(make_fock(1, 10), 10, 100000, 7);
    double z = std::abs(proto.e2 - 1.0) / proto.e2_stderr;
    out.require(z <= 3.0, fmt("protocol E2 %.4f is %.2f stderr from 1", proto.e2, z));
    out.detail += fmt(" max |z| over 5 pairs %.2f, chain slack %.2g, protocol E2 %.4f", worst_z, worst_chain, proto.e2);
    out.detail += fmt(" +- %.4f", proto.e2_stderr);
    return out;
}

Outcome cubic_suite() {
    Outcome out;
    auto t0 = std::chrono::steady_clock::now();

    double worst_line = 0.0;
    for (double x : {0.5, 2.0, 5.0}) {
        NegativityResult ref = wigner_negativity(x);
        for (double r : {-0.2, 0.0, 0.3}) {
            NegativityResult d = wigner_negativity_direct({x * std::exp(-3 * r), r, 0.4});
            double ratio = std::abs(d.value - ref.value) / (d.error + ref.error);
            worst_line = std::max(worst_line, ratio);
        }
    }
    out.require(worst_line <= 2.0, fmt("line invariance at %.2f x quadrature error", worst_line));

    double worst_margin = 1e300;
    for (int i = 0; i < 10; i++) {
        double x = 5.0 * std::pow(10.0, i / 9.0);
        worst_margin = std::min(worst_margin, wigner_negativity(x).value - std::cbrt(x));
    }
    out.require(worst_margin >= 0.0, fmt("W(x) - x^(1/3) min %.4f", worst_margin));

    double worst_fid = 0.0;
    for (double r : {0.0, 0.3}) {
        for (double rp : {r - 1.0, r - 0.5, r + 0.4}) {
            PureState a = make_squeezed(-r, 100);
            PureState b = make_squeezed(-rp, 100);
            double overlap = std::norm(a.amplitudes().dot(b.amplitudes()));
            worst_fid = std::max(worst_fid, std::abs(overlap - cubic_fidelity(r, rp)));
        }
    }
    out.require(worst_fid <= 1e-8, fmt("fidelity mismatch %.3g", worst_fid));

    double worst_sq = 0.0;
    for (double x : {0.1, 1.0, 5.0, 30.0}) {
        auto energy = [x](double r) {
            double gamma = x * std::exp(-3 * r);
            return cubic_mean_photon(gamma, r, -6 * gamma * std::exp(2 * r));
        };
        auto [r_min, e_min] = boost::math::tools::brent_find_minima(energy, -2.0, 5.0, 52);
        worst_sq = std::max(worst_sq, std::abs(r_min - optimal_squeezing(x)));
    }
    out.require(worst_sq <= 1e-6, fmt("optimal squeezing mismatch %.3g", worst_sq));

    std::vector<double> xs;
    for (int i = 0; i < 12; i++) {
        xs.push_back(2.0 * std::pow(20.0, i / 11.0));
    }
    std::vector<BoundRow> curve = lower_bound_curve(0.1, 0.05, xs);
    bool monotone = true;
    for (size_t i = 1; i < curve.size(); i++) {
        monotone = monotone && curve[i].mean_photon > curve[i - 1].mean_photon &&
                   curve[i].samples >= curve[i - 1].samples;
    }
    out.require(monotone, "lower_bound_curve not monotone in mean photon number");

    double t = seconds_since(t0);
    out.require(t < 600.0, fmt("runtime %.0f s", t));
    out.detail += fmt(" line invariance %.2g x err, min W - x^(1/3) %.3f, fidelity %.2g", worst_line, worst_margin,
                      worst_fid);
    out.detail += fmt(", squeezing %.2g, N from %.0f to %.0f", worst_sq, curve.front().samples, curve.back().samples);
    out.detail += fmt(", %.0f s", t);
    return out;
}

Outcome figure2() {
    Outcome out;
    for (int nbar : {1, 2, 3}) {
        double fock = n_renyi(make_fock(nbar, 60), 2.0);
        double zero_n = n_renyi(make_zero_n(2 * nbar, 60), 2.0);
        double cubic = cubic_n_renyi2(cubic_params_for_energy(nbar).x());
        out.require(fock > zero_n && fock > cubic, fmt("nbar %.0f ordering violated", nbar));
        out.detail += fmt(" nbar=%.0f: Fock %.4f 0N %.4f", nbar, fock, zero_n);
        out.detail += fmt(" cubic %.4f;", cubic);
    }
    return out;
}

Outcome shadows() {
    Outcome out;
    const uint64_t n = 200000;
    DensityOperator vacuum = DensityOperator::from_pure(make_fock(0, 10));
    ShadowStatistics vac = shadow_statistics(sample_shadows(vacuum, n, 11), 4, 11);
    CMatrix truth = CMatrix::Zero(5, 5);
    truth(0, 0) = 1.0;
    double diff = (vac.average.matrix - truth).cwiseAbs().maxCoeff();
    out.require(diff <= 0.02, fmt("vacuum shadow max-norm error %.4f", diff));
    out.require(std::abs(vac.purity - 1.0) <= 0.05, fmt("vacuum purity %.4f", vac.purity));

    DensityOperator one = DensityOperator::from_pure(make_fock(1, 10));
    ShadowStatistics st1 = shadow_statistics(sample_shadows(one, n, 12), 6, 12);
    out.require(std::abs(st1.purity - 1.0) <= 0.05, fmt("|1> purity %.4f", st1.purity));

    // Entropy functional on exact matrices: trivial projector, the zero-eigenvalue bias
    // and agreement with von Neumann entropy on full-rank spectra.
    bool exact_ok = std::abs(shadow_entropy_functional(CMatrix::Identity(1, 1), 50)) < 1e-15;
    CMatrix vac5 = truth;
    exact_ok = exact_ok && std::abs(shadow_entropy_functional(vac5, 20) - 4.0 / 20.0) < 1e-12;
    double worst_vn = 0.0;
    for (const std::vector<double> &spec : std::vector<std::vector<double>>{{0.5, 0.5}, {0.7, 0.2, 0.1}, {0.4, 0.3, 0.2, 0.1}}) {
        CMatrix sigma = CMatrix::Zero(int(spec.size()), int(spec.size()));
        double vn = 0.0;
        for (size_t i = 0; i < spec.size(); i++) {
            sigma(int(i), int(i)) = spec[i];
            vn -= spec[i] * std::log(spec[i]);
        }
        worst_vn = std::max(worst_vn, std::abs(shadow_entropy_functional(sigma, 200) - vn));
    }
    exact_ok = exact_ok && worst_vn <= 1e-4;
    out.require(exact_ok, fmt("entropy functional exact checks failed (vN gap %.3g)", worst_vn));
    out.detail += fmt(" vacuum max error %.4f, purity vacuum %.4f, |1> %.4f", diff, vac.purity, st1.purity);
    out.detail += fmt(", entropy vs vN %.2g", worst_vn);
    return out;
}

}  // namespace

int main() {
    struct Criterion {
        const char *name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {"faithfulness", faithfulness},
        {"hom_anchor", hom_anchor},
        {"analytic_numeric_equivalence", analytic_equivalence},
        {"beam_splitter_covariance_invariance", lemma_covariance},
        {"monotonicity_under_loss", monotonicity},
        {"separable_displaced_mixture", separable_mixture},
        {"swap_test_budget", swap_budget},
        {"cubic_phase_suite", cubic_suite},
        {"figure2_ordering", figure2},
        {"shadows", shadows},
    };
    int failures = 0;
    for (const Criterion &c : criteria) {
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        failures += !o.pass;
        std::printf("%s %s:%s\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
