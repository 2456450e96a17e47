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


#include "entropyscope/decompose.h"

#include <numbers>

#include "entropyscope/error.h"
#include "entropyscope/lcu.h"

using namespace entropyscope;

namespace {

constexpr double kPi = std::numbers::pi;

// Anti-controlled Ry(theta) on a2, active when a1 is |0>.
void append_oc_r2(GateList &out, const RegisterLayout &lay, double theta) {
    out.x(lay.a1());
    out.ry(lay.a2(), theta);
    out.cnot(lay.a1(), lay.a2());
    out.ry(lay.a2(), -theta / 2);
    out.cnot(lay.a1(), lay.a2());
    out.ry(lay.a2(), -theta / 2);
    out.x(lay.a1());
}

// Controlled swap of main and copy, conditioned on measure AND a2 through the
// Toffoli work qubit.
void append_controlled_swap(GateList &out, const RegisterLayout &lay) {
    append_toffoli(out, lay.measure(), lay.a2(), lay.toffoli());
    for (int j = 0; j < lay.n; j++) {
        out.cnot(lay.copy(j), lay.main(j));
        append_toffoli(out, lay.toffoli(), lay.main(j), lay.copy(j));
        out.cnot(lay.copy(j), lay.main(j));
    }
    append_toffoli(out, lay.measure(), lay.a2(), lay.toffoli());
}

// Phase (-i sgn) on |measure=1, a2=1>, or its conjugate when `dagger`.
void append_select_phase(GateList &out, const RegisterLayout &lay, int sgn, bool dagger) {
    int effective = dagger ? -sgn : sgn;
    append_controlled_s(out, lay.measure(), lay.a2());
    if (effective > 0) {
        out.cz(lay.measure(), lay.a2());
    }
}

void append_controlled_w(GateList &out, const RegisterLayout &lay, const LcuAngles &ang, int sgn) {
    out.cry(lay.measure(), lay.a1(), ang.theta1);
    append_oc_r2(out, lay, ang.theta2);
    append_controlled_swap(out, lay);
    append_select_phase(out, lay, sgn, false);
    out.ry(lay.a2(), -ang.theta2);
}

void append_controlled_w_dagger(GateList &out, const RegisterLayout &lay, const LcuAngles &ang, int sgn) {
    out.ry(lay.a2(), ang.theta2);
    append_controlled_swap(out, lay);
    append_select_phase(out, lay, sgn, true);
    append_oc_r2(out, lay, -ang.theta2);
    out.cry(lay.measure(), lay.a1(), -ang.theta1);
}

// Controlled (I - 2P): phase -1 on |measure=1, a1=0, a2=0>.
void append_reflection(GateList &out, const RegisterLayout &lay) {
    out.x(lay.a1());
    out.cz(lay.measure(), lay.a1());
    append_ccz(out, lay.measure(), lay.a1(), lay.a2());
    out.x(lay.a1());
}

// Controlled -(I - 2P): phase -1 on |measure=1> unless a1 = a2 = 0.
void append_negated_reflection(GateList &out, const RegisterLayout &lay) {
    out.cz(lay.measure(), lay.a1());
    out.x(lay.a1());
    append_ccz(out, lay.measure(), lay.a1(), lay.a2());
    out.x(lay.a1());
}

}  // namespace

void entropyscope::append_toffoli(GateList &out, int c1, int c2, int target) {
    out.h(target);
    out.cnot(c2, target);
    out.tdg(target);
    out.cnot(c1, target);
    out.t(target);
    out.cnot(c2, target);
    out.tdg(target);
    out.cnot(c1, target);
    out.t(c2);
    out.t(target);
    out.h(target);
    out.cnot(c1, c2);
    out.t(c1);
    out.tdg(c2);
    out.cnot(c1, c2);
}

void entropyscope::append_controlled_s(GateList &out, int control, int target) {
    out.t(control);
    out.rz(target, kPi / 2);
    out.cnot(control, target);
    out.rz(target, -kPi / 4);
    out.cnot(control, target);
    out.rz(target, -kPi / 4);
}

void entropyscope::append_ccz(GateList &out, int a, int b, int target) {
    out.h(target);
    append_toffoli(out, a, b, target);
    out.h(target);
}

GateList entropyscope::decompose_controlled_A(int n, double dt) {
    LcuAngles ang = lcu_angles(dt);
    int sgn = select_sign(dt);
    RegisterLayout lay{n};
    GateList out(lay.total());
    append_controlled_w(out, lay, ang, sgn);
    append_reflection(out, lay);
    append_controlled_w_dagger(out, lay, ang, sgn);
    append_negated_reflection(out, lay);
    append_controlled_w(out, lay, ang, sgn);
    return out;
}

Matrix entropyscope::controlled_A_on_layout(int n, double dt) {
    RegisterLayout lay{n};
    Matrix a = build_A(n, dt);
    Eigen::Index d = a.rows();
    Matrix ctrl = Matrix::Identity(2 * d, 2 * d);
    ctrl.bottomRightCorner(d, d) = a;
    std::vector<int> qubits{lay.measure(), lay.a1(), lay.a2()};
    for (int j = 0; j < n; j++) {
        qubits.push_back(lay.main(j));
    }
    for (int j = 0; j < n; j++) {
        qubits.push_back(lay.copy(j));
    }
    return embed_operator(ctrl, qubits, lay.total());
}

Matrix entropyscope::clean_ancilla_columns(const Matrix &u, int n) {
    if (u.cols() != (Eigen::Index{1} << RegisterLayout{n}.total())) {
        throw Error(ErrorKind::DimMismatch, "matrix does not act on the segment layout");
    }
    // The three ancillas are the trailing qubits, so clean columns are every
    // eighth one.
    Eigen::Index count = u.cols() / 8;
    Matrix out(u.rows(), count);
    for (Eigen::Index k = 0; k < count; k++) {
        out.col(k) = u.col(8 * k);
    }
    return out;
}
