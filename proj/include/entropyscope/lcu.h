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


#ifndef ENTROPYSCOPE_LCU_H
#define ENTROPYSCOPE_LCU_H

#include "entropyscope/linalg.h"

namespace entropyscope {

// Matrix-level construction of e^{-iS dt} from a linear combination of I and
// the swap S. Operators built here act on the qubit order (a1, a2, main,
// copy), so the ancilla |00> block is the top-left 4^n x 4^n block.

/// cos(dt) I - i sin(dt) S on two n-qubit registers.
Matrix swap_exp_exact(int n, double dt);

/// Sign used by select(S). Zero maps to -1, matching the rule that the
/// controlled-Z of the decomposition only appears for dt > 0.
int select_sign(double dt);

struct LcuAngles {
    double alpha = 0;
    /// Ry angle with cos(theta1 / 2) = alpha / 2.
    double theta1 = 0;
    /// Ry angle with R2|0> = sqrt(cos/alpha)|0> + sqrt(|sin|/alpha)|1>.
    double theta2 = 0;
};

/// Throws BadDt unless cos(dt) > 0.
LcuAngles lcu_angles(double dt);

Matrix build_W(int n, double dt);

/// -W (I - 2P) W^dagger (I - 2P) W with P the ancilla |00> projector.
Matrix build_A(int n, double dt);

/// Top-left block <00| op |00> of an operator in (a1, a2, main, copy) order.
Matrix ancilla_zero_block(const Matrix &op, int n);

/// Population left outside the ancilla |00> subspace after applying op to
/// |00><00| (x) state.
double ancilla_leakage(const Matrix &op, const Matrix &state, int n);

}  // namespace entropyscope

#endif
