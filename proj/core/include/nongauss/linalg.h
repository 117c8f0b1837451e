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

#ifndef NONGAUSS_LINALG_H
#define NONGAUSS_LINALG_H

#include <complex>
#include <functional>

#include <Eigen/Dense>

namespace nongauss {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;

/// Matrix exponential (scaling and squaring with a degree-13 Pade approximant).
CMatrix expm(const CMatrix &a);
RMatrix expm(const RMatrix &a);

/// Nonzero part of the spectrum of a positive semidefinite Hermitian matrix.
/// Values are sorted descending; columns of `vectors` are matching eigenvectors.
struct PsdSpectrum {
    RVector values;
    CMatrix vectors;
    double dropped_trace = 0.0;
};

/// Low-rank eigendecomposition via pivoted Cholesky.
///
/// Pivoting stops once the trace left in the residual falls below `drop_tol`, so the
/// cost scales with the numerical rank rather than the full dimension. Eigenvalues
/// below `drop_tol` are discarded.
PsdSpectrum psd_spectrum(const CMatrix &rho, double drop_tol = 1e-13);

/// Eigenvalues of a Hermitian matrix, ascending.
RVector hermitian_eigenvalues(const CMatrix &h);

/// Trace distance 0.5 * ||rho - sigma||_1 between two density matrices.
///
/// Both arguments are compressed onto the joint numerical support first. The neglected
/// residual contributes at most `drop_tol` to the result.
double trace_distance(const CMatrix &rho, const CMatrix &sigma, double drop_tol = 1e-13);

/// f(A) for Hermitian A built from its eigendecomposition. Eigenvalues below `floor`
/// are treated as zero and mapped to zero.
CMatrix psd_function(const CMatrix &a, const std::function<double(double)> &f, double floor);

}  // namespace nongauss

#endif
