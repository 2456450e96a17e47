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

#ifndef ENTROPYSCOPE_LINALG_H
#define ENTROPYSCOPE_LINALG_H

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace entropyscope {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

// Qubit 0 is the most significant bit of a basis index throughout the
// library, so kron(a, b) places `a` on the lower-numbered qubits.

bool is_power_of_two(size_t value);

/// Number of qubits for a power-of-two dimension.
int qubit_count_for_dim(size_t dim);

Matrix kron(const Matrix &a, const Matrix &b);

/// The permutation exchanging two n-qubit registers, acting on 2n qubits.
Matrix swap_operator(int n);

/// Permutation exchanging registers `a` and `b` among `num_registers`
/// n-qubit registers.
Matrix register_swap(int num_registers, int n, int a, int b);

/// Traces out the trailing tensor factor, keeping a leading factor of
/// dimension `keep_dim`.
Matrix partial_trace_trailing(const Matrix &m, size_t keep_dim);

double max_abs_diff(const Matrix &a, const Matrix &b);

/// max |a - e^{i phi} b| with the unit phase fitted on the largest-magnitude
/// entry of `b`.
double max_abs_diff_up_to_phase(const Matrix &a, const Matrix &b);

/// Largest entry of |U U^dagger - I|.
double unitarity_defect(const Matrix &u);

/// Sum of singular values.
double trace_norm(const Matrix &m);

Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();
Matrix hadamard();
Matrix ry(double theta);
Matrix rz(double theta);

}  // namespace entropyscope

#endif
