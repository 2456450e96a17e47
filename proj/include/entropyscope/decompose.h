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


#ifndef ENTROPYSCOPE_DECOMPOSE_H
#define ENTROPYSCOPE_DECOMPOSE_H

#include <vector>

#include "entropyscope/gates.h"

namespace entropyscope {

/// Qubit assignment for one Hadamard-test segment: the measure qubit, the
/// main register, the fresh copy register, the Toffoli work qubit and the two
/// LCU ancillas, in that order.
struct RegisterLayout {
    int n = 1;

    int measure() const {
        return 0;
    }
    int main(int j) const {
        return 1 + j;
    }
    int copy(int j) const {
        return 1 + n + j;
    }
    int toffoli() const {
        return 2 * n + 1;
    }
    int a1() const {
        return 2 * n + 2;
    }
    int a2() const {
        return 2 * n + 3;
    }
    int total() const {
        return 2 * n + 4;
    }
};

/// Appends the standard six-CNOT Clifford+T network for a Toffoli gate.
void append_toffoli(GateList &out, int c1, int c2, int target);

/// Appends controlled-S as T on the control and Rz rotations around two CNOTs.
void append_controlled_s(GateList &out, int control, int target);

/// Appends a doubly controlled Z on (a, b, target) via H-Toffoli-H.
void append_ccz(GateList &out, int a, int b, int target);

/// Primitive-gate list for controlled-A with the measure qubit as control.
/// Correct on inputs whose Toffoli and LCU ancillas start in |0>.
GateList decompose_controlled_A(int n, double dt);

/// Matrix-level controlled-A embedded in the same layout, for comparison.
Matrix controlled_A_on_layout(int n, double dt);

/// Columns of `u` whose Toffoli and LCU ancilla bits are all zero.
Matrix clean_ancilla_columns(const Matrix &u, int n);

}  // namespace entropyscope

#endif
