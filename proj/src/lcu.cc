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


#include "entropyscope/lcu.h"

#include <cmath>

#include "entropyscope/error.h"

using namespace entropyscope;

Matrix entropyscope::swap_exp_exact(int n, double dt) {
    size_t dim = size_t{1} << (2 * n);
    return std::cos(dt) * Matrix::Identity(dim, dim) - cplx(0, std::sin(dt)) * swap_operator(n);
}

int entropyscope::select_sign(double dt) {
    return dt > 0 ? 1 : -1;
}

LcuAngles entropyscope::lcu_angles(double dt) {
    double c = std::cos(dt);
    if (!(c > 0)) {
        throw Error(ErrorKind::BadDt, "cos(dt) must be positive, got dt = " + std::to_string(dt));
    }
    double s = std::abs(std::sin(dt));
    LcuAngles out;
    out.alpha = c + s;
    out.theta1 = 2.0 * std::acos(out.alpha / 2.0);
    out.theta2 = 2.0 * std::atan2(std::sqrt(s), std::sqrt(c));
    return out;
}

Matrix entropyscope::build_W(int n, double dt) {
    LcuAngles ang = lcu_angles(dt);
    size_t reg = size_t{1} << (2 * n);
    Matrix id_reg = Matrix::Identity(reg, reg);
    Matrix id2 = Matrix::Identity(2, 2);
    Matrix p0 = Matrix::Zero(2, 2);
    p0(0, 0) = 1;
    Matrix p1 = Matrix::Zero(2, 2);
    p1(1, 1) = 1;

    Matrix r1 = kron(kron(ry(ang.theta1), id2), id_reg);
    Matrix oc_r2 = kron(kron(p0, ry(ang.theta2)), id_reg) + kron(kron(p1, id2), id_reg);
    cplx phase = cplx(0, -1) * static_cast<double>(select_sign(dt));
    Matrix select = kron(id2, kron(p0, id_reg) + kron(p1, phase * swap_operator(n)));
    Matrix r2_dag = kron(kron(id2, ry(-ang.theta2)), id_reg);
    return r2_dag * select * oc_r2 * r1;
}

Matrix entropyscope::build_A(int n, double dt) {
    Matrix w = build_W(n, dt);
    Eigen::Index dim = w.rows();
    Eigen::Index reg = dim / 4;
    Matrix reflect = Matrix::Identity(dim, dim);
    reflect.topLeftCorner(reg, reg) *= -1.0;
    return -(w * reflect * w.adjoint() * reflect * w);
}

Matrix entropyscope::ancilla_zero_block(const Matrix &op, int n) {
    Eigen::Index reg = Eigen::Index{1} << (2 * n);
    if (op.rows() != 4 * reg || op.cols() != 4 * reg) {
        throw Error(ErrorKind::DimMismatch, "operator is not on 2 + 2n qubits");
    }
    return op.topLeftCorner(reg, reg);
}

double entropyscope::ancilla_leakage(const Matrix &op, const Matrix &state, int n) {
    Eigen::Index reg = Eigen::Index{1} << (2 * n);
    if (state.rows() != reg || op.rows() != 4 * reg) {
        throw Error(ErrorKind::DimMismatch, "state and operator sizes do not match");
    }
    Matrix full = Matrix::Zero(4 * reg, 4 * reg);
    full.topLeftCorner(reg, reg) = state;
    Matrix out = op * full * op.adjoint();
    double kept = out.topLeftCorner(reg, reg).trace().real();
    return std::abs(out.trace().real() - kept);
}
