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

#include "entropyscope/linalg.h"

#include <cmath>

#include "entropyscope/error.h"

using namespace entropyscope;

bool entropyscope::is_power_of_two(size_t value) {
    return value != 0 && (value & (value - 1)) == 0;
}

int entropyscope::qubit_count_for_dim(size_t dim) {
    if (!is_power_of_two(dim)) {
        throw Error(ErrorKind::BadDimension, "dimension " + std::to_string(dim) + " is not a power of two");
    }
    int n = 0;
    while ((size_t{1} << n) < dim) {
        n++;
    }
    return n;
}

Matrix entropyscope::kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Matrix entropyscope::swap_operator(int n) {
    return register_swap(2, n, 0, 1);
}

Matrix entropyscope::register_swap(int num_registers, int n, int a, int b) {
    if (a < 0 || b < 0 || a >= num_registers || b >= num_registers) {
        throw Error(ErrorKind::InvalidArgument, "register index out of range");
    }
    size_t reg_dim = size_t{1} << n;
    size_t mask = reg_dim - 1;
    size_t dim = size_t{1} << (n * num_registers);
    auto shift = [&](int r) {
        return n * (num_registers - 1 - r);
    };
    Matrix out = Matrix::Zero(dim, dim);
    for (size_t idx = 0; idx < dim; idx++) {
        size_t va = (idx >> shift(a)) & mask;
        size_t vb = (idx >> shift(b)) & mask;
        size_t swapped = idx;
        swapped &= ~(mask << shift(a));
        swapped &= ~(mask << shift(b));
        swapped |= vb << shift(a);
        swapped |= va << shift(b);
        out(swapped, idx) = 1.0;
    }
    return out;
}

Matrix entropyscope::partial_trace_trailing(const Matrix &m, size_t keep_dim) {
    size_t total = m.rows();
    if (keep_dim == 0 || total % keep_dim != 0 || m.rows() != m.cols()) {
        throw Error(ErrorKind::DimMismatch, "cannot split dimension " + std::to_string(total) + " by " +
                                                std::to_string(keep_dim));
    }
    size_t traced = total / keep_dim;
    Matrix out = Matrix::Zero(keep_dim, keep_dim);
    for (size_t i = 0; i < keep_dim; i++) {
        for (size_t j = 0; j < keep_dim; j++) {
            cplx acc = 0;
            for (size_t k = 0; k < traced; k++) {
                acc += m(i * traced + k, j * traced + k);
            }
            out(i, j) = acc;
        }
    }
    return out;
}

double entropyscope::max_abs_diff(const Matrix &a, const Matrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorKind::DimMismatch, "matrix shapes differ");
    }
    return (a - b).cwiseAbs().maxCoeff();
}

double entropyscope::max_abs_diff_up_to_phase(const Matrix &a, const Matrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorKind::DimMismatch, "matrix shapes differ");
    }
    Eigen::Index bi = 0;
    Eigen::Index bj = 0;
    b.cwiseAbs().maxCoeff(&bi, &bj);
    cplx phase = 1.0;
    if (std::abs(b(bi, bj)) > 0 && std::abs(a(bi, bj)) > 0) {
        phase = a(bi, bj) / b(bi, bj);
        phase /= std::abs(phase);
    }
    return (a - phase * b).cwiseAbs().maxCoeff();
}

double entropyscope::unitarity_defect(const Matrix &u) {
    Matrix id = Matrix::Identity(u.rows(), u.cols());
    return (u * u.adjoint() - id).cwiseAbs().maxCoeff();
}

double entropyscope::trace_norm(const Matrix &m) {
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues().sum();
}

Matrix entropyscope::pauli_x() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

Matrix entropyscope::pauli_y() {
    Matrix m(2, 2);
    m << 0, cplx(0, -1), cplx(0, 1), 0;
    return m;
}

Matrix entropyscope::pauli_z() {
    Matrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

Matrix entropyscope::hadamard() {
    double h = 1.0 / std::sqrt(2.0);
    Matrix m(2, 2);
    m << h, h, h, -h;
    return m;
}

Matrix entropyscope::ry(double theta) {
    double c = std::cos(theta / 2);
    double s = std::sin(theta / 2);
    Matrix m(2, 2);
    m << c, -s, s, c;
    return m;
}

Matrix entropyscope::rz(double theta) {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = std::polar(1.0, -theta / 2);
    m(1, 1) = std::polar(1.0, theta / 2);
    return m;
}
