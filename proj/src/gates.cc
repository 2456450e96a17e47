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

#include "entropyscope/gates.h"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "entropyscope/error.h"

using namespace entropyscope;

namespace {

struct KindInfo {
    GateKind kind;
    const char *name;
    int arity;
    bool angle;
};

constexpr KindInfo kKinds[] = {
    {GateKind::H, "H", 1, false},          {GateKind::X, "X", 1, false},
    {GateKind::Z, "Z", 1, false},          {GateKind::S, "S", 1, false},
    {GateKind::T, "T", 1, false},          {GateKind::TDG, "TDG", 1, false},
    {GateKind::RY, "RY", 1, true},         {GateKind::RZ, "RZ", 1, true},
    {GateKind::CNOT, "CNOT", 2, false},    {GateKind::CZ, "CZ", 2, false},
    {GateKind::CS, "CS", 2, false},        {GateKind::CRY, "CRY", 2, true},
    {GateKind::TOFFOLI, "TOFFOLI", 3, false},
};

const KindInfo &info(GateKind kind) {
    for (const auto &k : kKinds) {
        if (k.kind == kind) {
            return k;
        }
    }
    throw Error(ErrorKind::InvalidArgument, "unknown gate kind");
}

Matrix controlled(const Matrix &u) {
    Eigen::Index d = u.rows();
    Matrix out = Matrix::Identity(2 * d, 2 * d);
    out.bottomRightCorner(d, d) = u;
    return out;
}

Matrix diag2(cplx a, cplx b) {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

}  // namespace

std::string_view entropyscope::gate_kind_name(GateKind kind) {
    return info(kind).name;
}

GateKind entropyscope::parse_gate_kind(std::string_view name) {
    for (const auto &k : kKinds) {
        if (name == k.name) {
            return k.kind;
        }
    }
    throw Error(ErrorKind::BadInput, "unknown gate kind '" + std::string(name) + "'");
}

int entropyscope::gate_arity(GateKind kind) {
    return info(kind).arity;
}

bool entropyscope::gate_has_angle(GateKind kind) {
    return info(kind).angle;
}

Matrix Gate::local_matrix() const {
    const double quarter = std::numbers::pi / 4;
    switch (kind) {
        case GateKind::H:
            return hadamard();
        case GateKind::X:
            return pauli_x();
        case GateKind::Z:
            return pauli_z();
        case GateKind::S:
            return diag2(1, cplx(0, 1));
        case GateKind::T:
            return diag2(1, std::polar(1.0, quarter));
        case GateKind::TDG:
            return diag2(1, std::polar(1.0, -quarter));
        case GateKind::RY:
            return ry(theta);
        case GateKind::RZ:
            return rz(theta);
        case GateKind::CNOT:
            return controlled(pauli_x());
        case GateKind::CZ:
            return controlled(pauli_z());
        case GateKind::CS:
            return controlled(diag2(1, cplx(0, 1)));
        case GateKind::CRY:
            return controlled(ry(theta));
        case GateKind::TOFFOLI:
            return controlled(controlled(pauli_x()));
    }
    throw Error(ErrorKind::InvalidArgument, "unknown gate kind");
}

GateList::GateList(int qubit_count) : qubit_count_(qubit_count) {
    if (qubit_count < 1 || qubit_count > 16) {
        throw Error(ErrorKind::InvalidArgument, "gate list qubit count out of range");
    }
}

void GateList::append(const Gate &gate) {
    int a = gate.arity();
    for (int i = 0; i < a; i++) {
        if (gate.qubits[i] < 0 || gate.qubits[i] >= qubit_count_) {
            throw Error(ErrorKind::InvalidArgument, "gate qubit index " + std::to_string(gate.qubits[i]) +
                                                        " outside register of " + std::to_string(qubit_count_));
        }
        for (int j = 0; j < i; j++) {
            if (gate.qubits[i] == gate.qubits[j]) {
                throw Error(ErrorKind::InvalidArgument, "gate acts twice on qubit " + std::to_string(gate.qubits[i]));
            }
        }
    }
    Gate g = gate;
    for (int i = a; i < 3; i++) {
        g.qubits[i] = 0;
    }
    if (!gate_has_angle(g.kind)) {
        g.theta = 0;
    }
    gates_.push_back(g);
}

void GateList::append(const GateList &other) {
    if (other.qubit_count_ != qubit_count_) {
        throw Error(ErrorKind::DimMismatch, "gate lists have different registers");
    }
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

void GateList::h(int q) {
    append({GateKind::H, {q}, 0});
}
void GateList::x(int q) {
    append({GateKind::X, {q}, 0});
}
void GateList::z(int q) {
    append({GateKind::Z, {q}, 0});
}
void GateList::s(int q) {
    append({GateKind::S, {q}, 0});
}
void GateList::t(int q) {
    append({GateKind::T, {q}, 0});
}
void GateList::tdg(int q) {
    append({GateKind::TDG, {q}, 0});
}
void GateList::ry(int q, double theta) {
    append({GateKind::RY, {q}, theta});
}
void GateList::rz(int q, double theta) {
    append({GateKind::RZ, {q}, theta});
}
void GateList::cnot(int control, int target) {
    append({GateKind::CNOT, {control, target}, 0});
}
void GateList::cz(int a, int b) {
    append({GateKind::CZ, {a, b}, 0});
}
void GateList::cs(int control, int target) {
    append({GateKind::CS, {control, target}, 0});
}
void GateList::cry(int control, int target, double theta) {
    append({GateKind::CRY, {control, target}, theta});
}
void GateList::toffoli(int c1, int c2, int target) {
    append({GateKind::TOFFOLI, {c1, c2, target}, 0});
}

Matrix GateList::assemble() const {
    size_t dim = size_t{1} << qubit_count_;
    Matrix u = Matrix::Identity(dim, dim);
    for (const auto &g : gates_) {
        apply_gate_left(u, g, qubit_count_);
    }
    return u;
}

std::string GateList::to_text() const {
    std::ostringstream out;
    for (const auto &g : gates_) {
        out << gate_kind_name(g.kind);
        for (int i = 0; i < g.arity(); i++) {
            out << ' ' << g.qubits[i];
        }
        if (gate_has_angle(g.kind)) {
            char buf[40];
            std::snprintf(buf, sizeof(buf), " %.17g", g.theta);
            out << buf;
        }
        out << '\n';
    }
    return out.str();
}

GateList GateList::from_text(std::string_view text, int qubit_count) {
    GateList out(qubit_count);
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        std::istringstream fields(line);
        std::string name;
        fields >> name;
        Gate g;
        g.kind = parse_gate_kind(name);
        for (int i = 0; i < g.arity(); i++) {
            if (!(fields >> g.qubits[i])) {
                throw Error(ErrorKind::BadInput, "line " + std::to_string(line_no) + ": missing qubit index");
            }
        }
        if (gate_has_angle(g.kind) && !(fields >> g.theta)) {
            throw Error(ErrorKind::BadInput, "line " + std::to_string(line_no) + ": missing angle");
        }
        std::string extra;
        if (fields >> extra) {
            throw Error(ErrorKind::BadInput, "line " + std::to_string(line_no) + ": trailing field '" + extra + "'");
        }
        out.append(g);
    }
    return out;
}

void entropyscope::apply_gate_left(Matrix &m, const Gate &gate, int num_qubits) {
    int a = gate.arity();
    size_t local_dim = size_t{1} << a;
    std::array<size_t, 3> masks{};
    size_t all = 0;
    for (int i = 0; i < a; i++) {
        masks[i] = size_t{1} << (num_qubits - 1 - gate.qubits[i]);
        all |= masks[i];
    }
    std::array<size_t, 8> offsets{};
    for (size_t local = 0; local < local_dim; local++) {
        size_t off = 0;
        for (int i = 0; i < a; i++) {
            if ((local >> (a - 1 - i)) & 1) {
                off |= masks[i];
            }
        }
        offsets[local] = off;
    }
    Matrix u = gate.local_matrix();
    size_t dim = size_t{1} << num_qubits;
    std::array<cplx, 8> in{};
    for (Eigen::Index col = 0; col < m.cols(); col++) {
        for (size_t base = 0; base < dim; base++) {
            if (base & all) {
                continue;
            }
            for (size_t r = 0; r < local_dim; r++) {
                in[r] = m(base | offsets[r], col);
            }
            for (size_t r = 0; r < local_dim; r++) {
                cplx acc = 0;
                for (size_t c = 0; c < local_dim; c++) {
                    acc += u(r, c) * in[c];
                }
                m(base | offsets[r], col) = acc;
            }
        }
    }
}

void entropyscope::apply_gate_conjugate(Matrix &rho, const Gate &gate, int num_qubits) {
    apply_gate_left(rho, gate, num_qubits);
    rho.adjointInPlace();
    apply_gate_left(rho, gate, num_qubits);
    rho.adjointInPlace();
}

Matrix entropyscope::embed_operator(const Matrix &op, const std::vector<int> &qubits, int num_qubits) {
    int a = static_cast<int>(qubits.size());
    if (op.rows() != (Eigen::Index{1} << a) || op.cols() != op.rows()) {
        throw Error(ErrorKind::DimMismatch, "operator size does not match its qubit list");
    }
    size_t dim = size_t{1} << num_qubits;
    size_t all = 0;
    std::vector<size_t> masks(a);
    for (int i = 0; i < a; i++) {
        if (qubits[i] < 0 || qubits[i] >= num_qubits) {
            throw Error(ErrorKind::InvalidArgument, "qubit index out of range");
        }
        masks[i] = size_t{1} << (num_qubits - 1 - qubits[i]);
        all |= masks[i];
    }
    auto local_of = [&](size_t idx) {
        size_t local = 0;
        for (int i = 0; i < a; i++) {
            local = (local << 1) | ((idx & masks[i]) ? 1 : 0);
        }
        return local;
    };
    Matrix out = Matrix::Zero(dim, dim);
    for (size_t r = 0; r < dim; r++) {
        for (size_t c = 0; c < dim; c++) {
            if ((r & ~all) == (c & ~all)) {
                out(r, c) = op(local_of(r), local_of(c));
            }
        }
    }
    return out;
}
