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

#include "nongauss/cubic.h"

#include <gtest/gtest.h>

#include <cmath>

#include "nongauss/errors.h"
#include "nongauss/measures.h"
#include "nongauss/quadrature.h"

using namespace nongauss;

TEST(cubic, invariant_and_energy_formulas) {
    CubicPhaseParams p{0.2, 0.1, 0.0};
    EXPECT_NEAR(p.x(), 0.2 * std::exp(0.3), 1e-15);
    EXPECT_NEAR(cubic_mean_photon(0.1, 0.0, 0.0), 0.27, 1e-15);
    EXPECT_NEAR(optimal_squeezing(1.0), 0.25 * std::log(73.0), 1e-15);
    for (double e : {0.5, 1.0, 3.0, 20.0}) {
        CubicPhaseParams q = cubic_params_for_energy(e);
        EXPECT_NEAR(cubic_mean_photon(q.gamma, q.r, q.momentum), e, 1e-10);
        EXPECT_NEAR(min_energy(q.x()), e, 1e-10);
    }
    EXPECT_LT(min_energy(1.0), min_energy(2.0));
}

TEST(cubic, energy_matches_fock_state) {
    const double gamma = 0.04, r = 0.2, mom = 0.3;
    PureState psi = make_cubic_phase(gamma, r, 140, mom);
    EXPECT_NEAR(mean_photon_number(psi), cubic_mean_photon(gamma, r, mom), 1e-8);
}

TEST(cubic, wigner_matches_fock_oracle) {
    CubicPhaseParams p{0.05, 0.1, 0.3};
    DensityOperator rho = DensityOperator::from_pure(make_cubic_phase(p.gamma, p.r, 160, p.momentum));
    for (double q : {-1.0, 0.0, 0.6}) {
        for (double pp : {-1.5, 0.0, 0.8, 2.0}) {
            EXPECT_NEAR(cubic_wigner(p, q, pp), wigner_function(rho, PhasePoint(q, pp)), 1e-9) << q << " " << pp;
        }
    }
    EXPECT_THROW(cubic_wigner({0.0, 0.0, 0.0}, 0.0, 0.0), InvalidArgument);
}

TEST(cubic, characteristic_matches_fock_oracle) {
    CubicPhaseParams p{0.05, -0.1, 0.2};
    PureState psi = make_cubic_phase(p.gamma, p.r, 160, p.momentum);
    for (double q : {-0.8, 0.3, 1.5}) {
        for (double pp : {-0.6, 0.0, 1.1}) {
            PhasePoint r(q, pp);
            EXPECT_LT(std::abs(cubic_characteristic(p, r) - characteristic_function(psi, r)), 1e-10);
        }
    }
}

TEST(cubic, renyi2_matches_fock_simulation) {
    for (double gamma : {0.02, 0.05}) {
        PureState psi = make_cubic_phase(gamma, 0.0, 160);
        EXPECT_NEAR(cubic_n_renyi2(gamma), n_renyi(psi, 2.0), 1e-8);
    }
    // Only x matters.
    PureState squeezed = make_cubic_phase(0.02 * std::exp(-0.6), 0.2, 200);
    EXPECT_NEAR(cubic_n_renyi2(0.02), n_renyi(squeezed, 2.0), 1e-8);
}

TEST(cubic, negativity_reference_values) {
    EXPECT_NEAR(wigner_negativity(1e-3).value, 1.0, 1e-3);
    EXPECT_NEAR(wigner_negativity(0.5).value, 1.69678396, 1e-7);
    EXPECT_NEAR(wigner_negativity(2.0).value, 2.94592204, 1e-7);
    EXPECT_NEAR(wigner_negativity(50.0).value, 13.1845482, 1e-6);
    EXPECT_THROW(wigner_negativity(60.0), InvalidArgument);
    EXPECT_THROW(wigner_negativity(0.0), InvalidArgument);
}

TEST(cubic, negativity_grows_faster_than_cube_root) {
    double prev = 0.0;
    for (double x = 5.0; x <= 50.0; x *= 1.3) {
        NegativityResult w = wigner_negativity(x);
        EXPECT_GE(w.value, std::cbrt(x));
        EXPECT_GT(w.value, prev);
        EXPECT_LT(w.error, 1e-4);
        prev = w.value;
    }
}

TEST(cubic, line_invariance_direct) {
    NegativityResult ref = wigner_negativity(0.5);
    for (double r : {-0.3, 0.25}) {
        NegativityResult d = wigner_negativity_direct({0.5 * std::exp(-3 * r), r, -0.7});
        EXPECT_LE(std::abs(d.value - ref.value), 2 * (d.error + ref.error));
    }
    EXPECT_NEAR(wigner_negativity(CubicPhaseParams{0.5 * std::exp(-0.3), 0.1, 2.0}).value, ref.value, 1e-12);
}

TEST(cubic, negativity_brute_force_phase_space) {
    // Iterated adaptive integration of |W| on the raw (q, p) plane, no substitutions.
    CubicPhaseParams p{0.3, 0.0, 0.0};
    auto inner = [&](double q) {
        double centre = 3 * 2 * std::sqrt(2.0) * p.gamma * q * q;
        auto f = [&](double pp) { return std::abs(cubic_wigner(p, q, pp)); };
        return integrate_adaptive(f, centre - 8.0, centre + 60.0, 1e-9, 1e-9, 20000).value;
    };
    IntegrationResult outer = integrate_adaptive(inner, -7.0, 7.0, 1e-7, 1e-7);
    EXPECT_NEAR(outer.value, wigner_negativity(p).value, 2e-4);
}

TEST(cubic, fidelity_and_discrimination) {
    EXPECT_NEAR(cubic_fidelity(0.3, 0.3), 1.0, 1e-15);
    EXPECT_NEAR(cubic_fidelity(0.0, 1.0), 1.0 / std::cosh(1.0), 1e-15);
    EXPECT_NEAR(discrimination_success(1.0, 7), 0.5, 1e-15);
    EXPECT_NEAR(discrimination_success(1e-12, 1), 1.0, 1e-12);
    EXPECT_THROW(discrimination_success(0.0, 1), InvalidArgument);
    EXPECT_NEAR(samples_for_squeezing_gap(0.25, 1.0), std::log(4.0 / 3.0) / std::log(std::cosh(1.0)), 1e-14);
    EXPECT_NEAR(samples_for_squeezing_gap(0.25, 1.0), 0.663, 1e-3);
    // The bound is a ratio of logs: the base cancels.
    double n2 = std::log2(1.0 / (4 * 0.25 * 0.75)) / std::log2(std::cosh(1.0));
    EXPECT_NEAR(samples_for_squeezing_gap(0.25, 1.0), n2, 1e-14);
}

TEST(cubic, fidelity_matches_fock_overlap) {
    for (double r : {0.0, 0.4}) {
        for (double rp : {r - 0.6, r + 0.5}) {
            PureState a = make_squeezed(-r, 100);
            PureState b = make_squeezed(-rp, 100);
            EXPECT_NEAR(std::norm(a.amplitudes().dot(b.amplitudes())), cubic_fidelity(r, rp), 1e-8);
        }
    }
    // The cubic gate cancels in the overlap.
    PureState c1 = make_cubic_phase(0.03, 0.0, 160);
    PureState c2 = make_cubic_phase(0.03, 0.3, 160);
    EXPECT_NEAR(std::norm(c1.amplitudes().dot(c2.amplitudes())), cubic_fidelity(0.0, 0.3), 1e-8);
}

TEST(cubic, sample_lower_bound) {
    BoundSpec b = sample_lower_bound(0.1, 0.05, 2.0);
    EXPECT_NEAR(b.dr, 0.050557, 1e-5);
    EXPECT_NEAR(b.samples, 1300.0, 0.5);
    double gap = wigner_negativity(2.0 * std::exp(3 * b.dr)).value - wigner_negativity(2.0).value;
    EXPECT_NEAR(gap, 0.2, 1e-6);
    EXPECT_LT(sample_lower_bound(0.1, 0.05, 10.0).dr, b.dr);
    EXPECT_THROW(sample_lower_bound(100.0, 0.05, 2.0), OutOfRange);
    EXPECT_THROW(sample_lower_bound(0.1, 0.0, 2.0), InvalidArgument);
}

TEST(cubic, lower_bound_curve_is_ordered_and_monotone) {
    std::vector<double> xs = {2.0, 6.0, 20.0};
    std::vector<BoundRow> rows = lower_bound_curve(0.1, 0.05, xs);
    ASSERT_EQ(rows.size(), 3u);
    for (size_t i = 0; i < rows.size(); i++) {
        EXPECT_EQ(rows[i].x, xs[i]);
        EXPECT_NEAR(rows[i].mean_photon, min_energy(xs[i]), 1e-12);
        EXPECT_NEAR(rows[i].r_opt, optimal_squeezing(xs[i]), 1e-15);
    }
    EXPECT_LT(rows[0].samples, rows[1].samples);
    EXPECT_LT(rows[1].samples, rows[2].samples);
}
