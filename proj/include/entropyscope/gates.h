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

#ifndef ENTROPYSCOPE_GATES_H
#define ENTROPYSCOPE_GATES_H

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "entropyscope/linalg.h"

namespace entropyscope {

enum class GateKind { H, X, Z, S, T, TDG, RY, RZ, CNOT, CZ, CS, CRY, TOFFOLI };

std::string_view gate_kind_name(GateKind kind);
GateKind parse_gate_kind(std::string_view name);
int gate_arity(GateKind kind);
bool gate_has_angle(GateKind kind);

/// Controls come first in `qubits`; the last listed qubit is the target.
struct Gate {
    GateKind kind = GateKind::H;
    std::array<int, 3> qubits{0, 0, 0};
    double theta = 0;

    int arity() const {
        return gate_arity(kind);
    }
    /// Local 2^arity unitary with qubits[0] as the most significant bit.
    Matrix local_matrix() const;
    bool operator==(const Gate &other) const = default;
};

class GateList {
   public:
    explicit GateList(int qubit_count);

    void append(const Gate &gate);
    void append(const GateList &other);

    void h(int q);
    void x(int q);
    void z(int q);
    void s(int q);
    void t(int q);
    void tdg(int q);
    void ry(int q, double theta);
    void rz(int q, double theta);
    void cnot(int control, int target);
    void cz(int a, int b);
    void cs(int control, int target);
    void cry(int control, int target, double theta);
    void toffoli(int c1, int c2, int target);

    int qubit_count() const {
        return qubit_count_;
    }
    const std::vector<Gate> &gates() const {
        return gates_;
    }
    size_t size() const {
        return gates_.size();
    }

    /// Dense unitary of the whole sequence on qubit_count qubits.
    Matrix assemble() const;

    /// One gate per line: KIND q0 [q1 [q2]] [theta].
    std::string to_text() const;
    static GateList from_text(std::string_view text, int qubit_count);

   private:
    int qubit_count_;
    std::vector<Gate> gates_;
};

/// m <- G m for a gate acting on some qubits of a num_qubits register.
void apply_gate_left(Matrix &m, const Gate &gate, int num_qubits);

/// rho <- G rho G^dagger.
void apply_gate_conjugate(Matrix &rho, const Gate &gate, int num_qubits);

/// Embeds an operator on the ordered qubit list `qubits` (first entry most
/// significant) into a register of num_qubits qubits, identity elsewhere.
Matrix embed_operator(const Matrix &op, const std::vector<int> &qubits, int num_qubits);

}  // namespace entropyscope

#endif
