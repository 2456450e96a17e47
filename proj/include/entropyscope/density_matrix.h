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

#ifndef ENTROPYSCOPE_DENSITY_MATRIX_H
#define ENTROPYSCOPE_DENSITY_MATRIX_H

#include <vector>

#include "entropyscope/linalg.h"

namespace entropyscope {

/// Numerical thresholds shared by validation and the spectral oracles.
struct Tolerances {
    double hermitian = 1e-10;
    double trace = 1e-10;
    double psd = 1e-10;
    /// Eigenvalues below this are treated as exact zeros by the entropy oracles.
    double zero_eigenvalue = 1e-12;
    double trace_preserving = 1e-10;
};

/// Eigenvalues in descending order with matching eigenvector columns.
struct Spectrum {
    std::vector<double> eigenvalues;
    Matrix eigenvectors;

    Matrix reconstruct() const;
    double min_eigenvalue() const;
};

/// Spectrum of a Hermitian matrix (only the lower triangle is read).
Spectrum hermitian_spectrum(const Matrix &m);

/// A Hermitian, unit-trace, positive semidefinite matrix of power-of-two
/// dimension. Instances only come out of validate_state, so holding one is
/// proof that the invariants were checked.
class DensityMatrix {
   public:
    const Matrix &matrix() const {
        return matrix_;
    }
    const Spectrum &spectrum() const {
        return spectrum_;
    }
    size_t dim() const {
        return static_cast<size_t>(matrix_.rows());
    }
    int num_qubits() const {
        return num_qubits_;
    }
    cplx operator()(size_t row, size_t col) const {
        return matrix_(row, col);
    }

   private:
    DensityMatrix(Matrix matrix, Spectrum spectrum, int num_qubits);
    friend DensityMatrix validate_state(const Matrix &raw, const Tolerances &tol);

    Matrix matrix_;
    Spectrum spectrum_;
    int num_qubits_;
};

/// Checks dimension, Hermiticity, trace and positivity (in that order) and
/// throws an Error naming the first violated invariant and its magnitude.
DensityMatrix validate_state(const Matrix &raw, const Tolerances &tol = Tolerances{});

DensityMatrix maximally_mixed(int num_qubits);
DensityMatrix computational_zero(int num_qubits);

}  // namespace entropyscope

#endif
