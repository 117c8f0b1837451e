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

#include "nongauss/linalg.h"

#include <algorithm>
#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

#include "nongauss/errors.h"

namespace nongauss {

namespace {

void require_square(Eigen::Index rows, Eigen::Index cols, const char *what) {
    if (rows != cols) {
        throw InvalidArgument(std::string(what) + ": matrix must be square");
    }
}

// Pivoted Cholesky factor L (n x k) with rho ~= L L^dag. Stops once the residual trace
// is at most drop_tol; the residual trace is written to *dropped.
CMatrix pivoted_cholesky(const CMatrix &rho, double drop_tol, double *dropped) {
    const Eigen::Index n = rho.rows();
    RVector d = rho.diagonal().real();
    CMatrix factor(n, std::min<Eigen::Index>(n, 8));
    Eigen::Index k = 0;
    double remaining = 0.0;
    while (true) {
        remaining = 0.0;
        Eigen::Index pivot = -1;
        double best = 0.0;
        for (Eigen::Index i = 0; i < n; i++) {
            if (d[i] > 0.0) {
                remaining += d[i];
                if (d[i] > best) {
                    best = d[i];
                    pivot = i;
                }
            }
        }
        if (pivot < 0 || remaining <= drop_tol || k == n) {
            break;
        }
        if (k == factor.cols()) {
            factor.conservativeResize(n, std::min<Eigen::Index>(n, 2 * factor.cols()));
        }
        CVector col = rho.col(pivot);
        if (k > 0) {
            col.noalias() -= factor.leftCols(k) * factor.row(pivot).head(k).adjoint();
        }
        col /= std::sqrt(best);
        factor.col(k) = col;
        for (Eigen::Index i = 0; i < n; i++) {
            d[i] -= std::norm(col[i]);
        }
        d[pivot] = 0.0;
        k++;
    }
    *dropped = std::max(remaining, 0.0);
    return factor.leftCols(k);
}

}  // namespace

CMatrix expm(const CMatrix &a) {
    require_square(a.rows(), a.cols(), "expm");
    return a.exp();
}

RMatrix expm(const RMatrix &a) {
    require_square(a.rows(), a.cols(), "expm");
    return a.exp();
}

PsdSpectrum psd_spectrum(const CMatrix &rho, double drop_tol) {
    require_square(rho.rows(), rho.cols(), "psd_spectrum");
    PsdSpectrum out;
    CMatrix factor = pivoted_cholesky(rho, drop_tol, &out.dropped_trace);
    const Eigen::Index k = factor.cols();
    if (k == 0) {
        out.values.resize(0);
        out.vectors.resize(rho.rows(), 0);
        return out;
    }
    // Nonzero eigenpairs of L L^dag follow from the small Gram matrix L^dag L.
    CMatrix gram = factor.adjoint() * factor;
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(gram);
    const RVector &vals = solver.eigenvalues();
    Eigen::Index kept = 0;
    for (Eigen::Index i = 0; i < k; i++) {
        if (vals[i] > drop_tol) {
            kept++;
        }
    }
    out.values.resize(kept);
    out.vectors.resize(rho.rows(), kept);
    for (Eigen::Index j = 0; j < kept; j++) {
        Eigen::Index src = k - 1 - j;
        out.values[j] = vals[src];
        out.vectors.col(j) = factor * solver.eigenvectors().col(src) / std::sqrt(vals[src]);
    }
    return out;
}

RVector hermitian_eigenvalues(const CMatrix &h) {
    require_square(h.rows(), h.cols(), "hermitian_eigenvalues");
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

double trace_distance(const CMatrix &rho, const CMatrix &sigma, double drop_tol) {
    require_square(rho.rows(), rho.cols(), "trace_distance");
    if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols()) {
        throw InvalidArgument("trace_distance: dimension mismatch");
    }
    double dropped_a = 0.0;
    double dropped_b = 0.0;
    CMatrix la = pivoted_cholesky(rho, drop_tol / 2, &dropped_a);
    CMatrix lb = pivoted_cholesky(sigma, drop_tol / 2, &dropped_b);
    CMatrix joint(rho.rows(), la.cols() + lb.cols());
    joint << la, lb;
    if (joint.cols() == 0) {
        return 0.0;
    }
    Eigen::ColPivHouseholderQR<CMatrix> qr(joint);
    const Eigen::Index rank = qr.rank();
    CMatrix q = qr.householderQ() * CMatrix::Identity(rho.rows(), rank);
    CMatrix diff = q.adjoint() * (rho - sigma) * q;
    diff = (diff + diff.adjoint()).eval() * 0.5;
    return 0.5 * hermitian_eigenvalues(diff).cwiseAbs().sum();
}

CMatrix psd_function(const CMatrix &a, const std::function<double(double)> &f, double floor) {
    require_square(a.rows(), a.cols(), "psd_function");
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(a);
    RVector mapped(a.rows());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        double v = solver.eigenvalues()[i];
        mapped[i] = v > floor ? f(v) : 0.0;
    }
    return solver.eigenvectors() * mapped.asDiagonal() * solver.eigenvectors().adjoint();
}

}  // namespace nongauss
