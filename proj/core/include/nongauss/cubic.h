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

#ifndef NONGAUSS_CUBIC_H
#define NONGAUSS_CUBIC_H

#include <vector>

#include "nongauss/fock.h"

namespace nongauss {

/// Cubic phase state D(P) exp(i gamma Q^3) S(r)|0>, Q = a + a^dag, with the same
/// conventions as make_cubic_phase: r > 0 stretches Q and P shifts the Q-conjugate
/// quadrature -i(a - a^dag).
struct CubicPhaseParams {
    double gamma = 0.0;
    double r = 0.0;
    double momentum = 0.0;

    /// Invariant x = gamma e^{3r}; the Wigner negativity depends on nothing else.
    double x() const;
};

/// Closed-form Wigner function at phase-space point (q, p), q = (a + a^dag)/sqrt 2.
///
/// With s^2 = e^{2r}/2, g = 2 sqrt(2) gamma, kappa = (4/(3g))^{1/3}, a = 1/(8 s^2),
/// d = 1/(6 g s^2) and b = 3 g q^2 - p + P/sqrt 2:
///   W = kappa (2 pi s^2)^{-1/2} e^{-q^2/(2 s^2)} e^{b d + 2 a d^2 / 3} Ai(kappa (b + a d)).
/// Throws InvalidArgument for gamma <= 0: the gamma = 0 state is Gaussian and has its
/// own Wigner function.
double cubic_wigner(const CubicPhaseParams &params, double q, double p);

/// Closed-form characteristic function Tr[D(r) rho] of the cubic phase state.
///
/// The cubic terms of psi*(q) psi(q + r_q) cancel down to a quadratic in q, so the
/// overlap integral is a complex Gaussian integral.
Complex cubic_characteristic(const CubicPhaseParams &params, const PhasePoint &r);

/// E_2 entanglement entropy (bits) of U_BS (psi x psi) for the cubic phase state of
/// invariant x, from the quartic-characteristic-function purity
///   Tr[rho_A^2] = (1 / 2 pi) int |chi(r / sqrt 2)|^4 d^2 r.
/// The momentum integral is Gaussian and done exactly; the rest is adaptive 1D
/// quadrature. Local squeezing and displacement leave E_2 unchanged, so only x matters.
double cubic_n_renyi2(double x);

/// Energy-optimal cubic phase state (r = optimal_squeezing(x), P = -6 gamma e^{2r})
/// whose mean photon number equals `energy`.
CubicPhaseParams cubic_params_for_energy(double energy);

struct NegativityResult {
    /// Integral of |W| over phase space.
    double value = 1.0;
    double error = 0.0;
    /// Region in Airy-argument units: z = kappa (b + a d) ranges over [z_min, z_max].
    double z_min = 0.0;
    double z_max = 0.0;
    /// Number of sign-definite lobes integrated on z < 0.
    int lobes = 0;
    /// Weight of z < z_min handled by the lobe-averaged asymptotic tail.
    double tail = 0.0;
};

/// Wigner negativity of the representative |gamma = x, r = 0>, for x in [1e-3, 50].
///
/// Substituting z for p turns the inner integral into C(q) int e^{lambda z} |Ai(z)| dz
/// with lambda depending on x alone; the Gaussian q integral of C(q) is exact. The z
/// integral runs lobe by lobe between Airy zeros, and far tails use the lobe average
/// of |Ai|.
NegativityResult wigner_negativity(double x);
NegativityResult wigner_negativity(const CubicPhaseParams &params);

/// Brute-force iterated quadrature of |cubic_wigner| over (q outer, p inner) for the
/// given (gamma, r, P), without using line invariance. Slow; meant for validation.
NegativityResult wigner_negativity_direct(const CubicPhaseParams &params);

/// |<gamma, r | gamma, r'>|^2 = 1 / cosh(r - r').
double cubic_fidelity(double r, double r_prime);

/// Squeezing that minimizes the mean photon number at fixed x: (1/4) log(72 x^2 + 1).
double optimal_squeezing(double x);

/// Mean photon number at optimal_squeezing(x) and the energy-optimal displacement.
double min_energy(double x);

/// 1/2 (cosh 2r - 1) + 18 gamma^2 e^{4r} + 1/4 (P + 6 gamma e^{2r})^2.
double cubic_mean_photon(double gamma, double r, double momentum);

/// Optimal success probability for discriminating n copies of two pure states with
/// fidelity F: (1 + sqrt(1 - F^n)) / 2.
double discrimination_success(double fidelity, double copies);

/// Copies needed to discriminate two states at fidelity 1/cosh(dr) with failure
/// probability delta: log(1/(4 delta (1 - delta))) / log(cosh dr).
double samples_for_squeezing_gap(double delta, double dr);

struct BoundSpec {
    double epsilon = 0.0;
    double delta = 0.0;
    double x = 0.0;
    /// Squeezing gap with W(x e^{3 dr}) - W(x) = 2 epsilon.
    double dr = 0.0;
    double samples = 0.0;
};

/// Root-solves for dr in (0, 2] (bracket expansion, then bisection well below 1e-4) and
/// returns the resulting sample lower bound. Throws OutOfRange when no root lies in
/// (0, 2].
BoundSpec sample_lower_bound(double epsilon, double delta, double x);

struct BoundRow {
    double x = 0.0;
    double r_opt = 0.0;
    double mean_photon = 0.0;
    double negativity = 0.0;
    double dr = 0.0;
    double samples = 0.0;
};

/// sample_lower_bound over a grid of x, paired with min_energy(x). Rows are evaluated in
/// parallel and returned in input order.
std::vector<BoundRow> lower_bound_curve(double epsilon, double delta, const std::vector<double> &xs);

namespace detail {
// Negativity for any x > 0, beyond the validated range. Used by the root solver, which
// evaluates x e^{3 dr}.
NegativityResult wigner_negativity_any(double x);
}  // namespace detail

}  // namespace nongauss

#endif
