// Copyright 2026 The EntropyScope Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "entropyscope/density_matrix.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "entropyscope/error.h"

using namespace entropyscope;

namespace {

std::string describe(const char *what, double magnitude, double tolerance) {
    std::ostringstream out;
    out.precision(6);
    out << what << " (violation " << magnitude << " exceeds tolerance " << tolerance << ")";
    return out.str();
}

}  // namespace

Matrix Spectrum::reconstruct() const {
    Eigen::VectorXd lambda(eigenvalues.size());
    for (size_t k = 0; k < eigenvalues.size(); k++) {
        lambda[k] = eigenvalues[k];
    }
    return eigenvectors * lambda.cast<cplx>().asDiagonal() * eigenvectors.adjoint();
}

double Spectrum::min_eigenvalue() const {
    return eigenvalues.empty() ? 0.0 : eigenvalues.back();
}

Spectrum entropyscope::hermitian_spectrum(const Matrix &m) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorKind::BadInput, "eigendecomposition did not converge");
    }
    // Eigen returns ascending order.
    size_t dim = static_cast<size_t>(m.rows());
    Spectrum out;
    out.eigenvalues.resize(dim);
    out.eigenvectors.resize(dim, dim);
    for (size_t k = 0; k < dim; k++) {
        out.eigenvalues[k] = solver.eigenvalues()[dim - 1 - k];
        out.eigenvectors.col(k) = solver.eigenvectors().col(dim - 1 - k);
    }
    return out;
}

DensityMatrix::DensityMatrix(Matrix matrix, Spectrum spectrum, int num_qubits)
    : matrix_(std::move(matrix)), spectrum_(std::move(spectrum)), num_qubits_(num_qubits) {
}

DensityMatrix entropyscope::validate_state(const Matrix &raw, const Tolerances &tol) {
    if (raw.rows() == 0 || raw.rows() != raw.cols()) {
        throw Error(ErrorKind::BadDimension, "expected a non-empty square matrix, got " + std::to_string(raw.rows()) +
                                                 "x" + std::to_string(raw.cols()));
    }
    if (!is_power_of_two(static_cast<size_t>(raw.rows()))) {
        throw Error(ErrorKind::BadDimension,
                    "dimension " + std::to_string(raw.rows()) + " is not a power of two");
    }
    if (!raw.allFinite()) {
        throw Error(ErrorKind::BadInput, "matrix has non-finite entries");
    }

    double herm = (raw - raw.adjoint()).cwiseAbs().maxCoeff();
    if (herm > tol.hermitian) {
        throw Error(ErrorKind::NotHermitian, describe("max |M - M^dagger|", herm, tol.hermitian));
    }

    cplx trace = raw.trace();
    double trace_err = std::abs(trace - cplx(1.0, 0.0));
    if (trace_err > tol.trace) {
        std::ostringstream msg;
        msg << "trace is " << trace.real();
        throw Error(ErrorKind::TraceNotOne, describe(msg.str().c_str(), trace_err, tol.trace));
    }

    Matrix hermitized = (raw + raw.adjoint()) * 0.5;
    Spectrum spec = hermitian_spectrum(hermitized);
    double min_eig = spec.min_eigenvalue();
    if (min_eig < -tol.psd) {
        std::ostringstream msg;
        msg << "minimum eigenvalue is " << min_eig;
        throw Error(ErrorKind::NotPSD, describe(msg.str().c_str(), -min_eig, tol.psd));
    }

    int n = qubit_count_for_dim(static_cast<size_t>(raw.rows()));
    return DensityMatrix(std::move(hermitized), std::move(spec), n);
}

DensityMatrix entropyscope::maximally_mixed(int num_qubits) {
    size_t dim = size_t{1} << num_qubits;
    return validate_state(Matrix::Identity(dim, dim) / static_cast<double>(dim));
}

DensityMatrix entropyscope::computational_zero(int num_qubits) {
    size_t dim = size_t{1} << num_qubits;
    Matrix m = Matrix::Zero(dim, dim);
    m(0, 0) = 1.0;
    return validate_state(m);
}
