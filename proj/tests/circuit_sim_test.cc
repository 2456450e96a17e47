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


#include <cmath>
#include <numbers>

#include "gtest/gtest.h"

#include "entropyscope/decompose.h"
#include "entropyscope/error.h"
#include "entropyscope/gates.h"
#include "entropyscope/hadamard_test.h"
#include "entropyscope/lcu.h"
#include "entropyscope/oracles.h"
#include "entropyscope/random_state.h"

using namespace entropyscope;

namespace {

const double kDts[] = {0.05, -0.05, 0.2, -0.2, 0.5, -0.5};

DensityMatrix reference() {
    Matrix m(2, 2);
    m << 0.48786, 0.0094, 0.0094, 0.51214;
    return validate_state(m);
}

}  // namespace

TEST(gates, kinds_and_validation) {
    EXPECT_EQ(gate_arity(GateKind::TOFFOLI), 3);
    EXPECT_EQ(gate_arity(GateKind::CRY), 2);
    EXPECT_TRUE(gate_has_angle(GateKind::RZ));
    EXPECT_FALSE(gate_has_angle(GateKind::CS));
    for (GateKind k : {GateKind::H, GateKind::TDG, GateKind::CNOT, GateKind::CRY, GateKind::TOFFOLI}) {
        EXPECT_EQ(parse_gate_kind(gate_kind_name(k)), k);
    }
    GateList g(3);
    EXPECT_THROW(g.cnot(0, 0), Error);
    EXPECT_THROW(g.h(3), Error);
    EXPECT_THROW(g.toffoli(0, 1, -1), Error);
    EXPECT_THROW(GateList(0), Error);
}

TEST(gates, assembled_unitary_is_unitary) {
    GateList g(3);
    g.h(0);
    g.cry(0, 2, 0.7);
    g.toffoli(0, 2, 1);
    g.cs(1, 0);
    g.rz(2, -1.3);
    g.tdg(1);
    EXPECT_LE(unitarity_defect(g.assemble()), 1e-9);
}

TEST(gates, text_round_trip) {
    GateList g = decompose_controlled_A(1, 0.3);
    GateList back = GateList::from_text(g.to_text(), g.qubit_count());
    EXPECT_EQ(back.gates(), g.gates());
    EXPECT_THROW(GateList::from_text("FOO 0\n", 2), Error);
    EXPECT_THROW(GateList::from_text("CNOT 0\n", 2), Error);
}

TEST(gates, conjugation_matches_assembly) {
    GateList g(2);
    g.h(0);
    g.cnot(0, 1);
    g.ry(1, 0.4);
    DensityMatrix rho = random_state_with_floor(2, 0.05, 8);
    Matrix m = rho.matrix();
    for (const Gate &gate : g.gates()) {
        apply_gate_conjugate(m, gate, 2);
    }
    Matrix u = g.assemble();
    EXPECT_LE(max_abs_diff(m, u * rho.matrix() * u.adjoint()), 1e-12);
}

TEST(gates, toffoli_and_controlled_phases) {
    GateList tof(3);
    append_toffoli(tof, 0, 1, 2);
    GateList ref(3);
    ref.toffoli(0, 1, 2);
    EXPECT_LE(max_abs_diff_up_to_phase(tof.assemble(), ref.assemble()), 1e-12);

    GateList cs(2);
    append_controlled_s(cs, 0, 1);
    GateList cs_ref(2);
    cs_ref.cs(0, 1);
    EXPECT_LE(max_abs_diff_up_to_phase(cs.assemble(), cs_ref.assemble()), 1e-12);

    GateList ccz(3);
    append_ccz(ccz, 0, 1, 2);
    Matrix expected = Matrix::Identity(8, 8);
    expected(7, 7) = -1;
    EXPECT_LE(max_abs_diff_up_to_phase(ccz.assemble(), expected), 1e-12);
}

TEST(lcu, swap_exponential) {
    EXPECT_LE(max_abs_diff(swap_exp_exact(1, 0.0), Matrix::Identity(4, 4)), 1e-15);
    Matrix expected = (Matrix::Identity(4, 4) - cplx(0, 1) * swap_operator(1)) / std::sqrt(2.0);
    EXPECT_LE(max_abs_diff(swap_exp_exact(1, std::numbers::pi / 4), expected), 1e-15);
    EXPECT_LE(unitarity_defect(swap_exp_exact(2, 0.37)), 1e-12);
}

TEST(lcu, select_sign_and_angles) {
    EXPECT_EQ(select_sign(0.3), 1);
    EXPECT_EQ(select_sign(-0.3), -1);
    EXPECT_EQ(select_sign(0.0), -1);
    EXPECT_THROW(lcu_angles(2.0), Error);
}

TEST(lcu, W_block_is_half_the_exponential) {
    for (int n : {1, 2}) {
        for (double dt : kDts) {
            Matrix w = build_W(n, dt);
            EXPECT_LE(unitarity_defect(w), 1e-12);
            EXPECT_LE(max_abs_diff(ancilla_zero_block(w, n), swap_exp_exact(n, dt) / 2.0), 1e-10);
        }
    }
}

TEST(lcu, amplification_is_exact) {
    EXPECT_LE(max_abs_diff(ancilla_zero_block(build_A(1, 0.0), 1), Matrix::Identity(4, 4)), 1e-12);
    EXPECT_LE(max_abs_diff(ancilla_zero_block(build_A(1, 0.3), 1), swap_exp_exact(1, 0.3)), 1e-10);
    for (int n : {1, 2}) {
        for (double dt : kDts) {
            Matrix a = build_A(n, dt);
            EXPECT_LE(max_abs_diff(ancilla_zero_block(a, n), swap_exp_exact(n, dt)), 1e-10);
            DensityMatrix rho = random_state_with_floor(2 * n, 0.0, 3);
            EXPECT_LE(ancilla_leakage(a, rho.matrix(), n), 1e-10);
        }
    }
}

TEST(decompose, layout) {
    RegisterLayout lay{2};
    EXPECT_EQ(lay.measure(), 0);
    EXPECT_EQ(lay.main(1), 2);
    EXPECT_EQ(lay.copy(0), 3);
    EXPECT_EQ(lay.toffoli(), 5);
    EXPECT_EQ(lay.a2(), 7);
    EXPECT_EQ(lay.total(), 8);
}

TEST(decompose, gates_match_matrix_level) {
    for (double dt : {0.3, 0.05, -0.05, 0.2, -0.2, 0.5, -0.5, 0.0}) {
        GateList g = decompose_controlled_A(1, dt);
        Matrix assembled = clean_ancilla_columns(g.assemble(), 1);
        Matrix reference = clean_ancilla_columns(controlled_A_on_layout(1, dt), 1);
        EXPECT_LE(max_abs_diff_up_to_phase(assembled, reference), 1e-9) << "dt=" << dt;
    }
}

TEST(decompose, gate_count_constant_per_segment) {
    for (int n : {1, 2}) {
        long long positive = segment_gate_count(n, 0.3);
        long long negative = segment_gate_count(n, -0.3);
        EXPECT_EQ(static_cast<long long>(decompose_controlled_A(n, 0.3).size()), positive);
        EXPECT_EQ(static_cast<long long>(decompose_controlled_A(n, -0.3).size()), negative);
        for (double dt : {0.01, 0.1, 0.5}) {
            EXPECT_EQ(segment_gate_count(n, dt), positive);
            EXPECT_EQ(segment_gate_count(n, -dt), negative);
        }
        EXPECT_EQ(segment_gate_count(n, 0.0), 0);
    }
    // Controlled swaps grow linearly in n.
    long long c1 = segment_gate_count(1, 0.3);
    long long c2 = segment_gate_count(2, 0.3);
    long long c3 = segment_gate_count(3, 0.3);
    EXPECT_EQ(c3 - c2, c2 - c1);
}

TEST(hadamard_test, zero_time_and_pure_state) {
    DensityMatrix rho = reference();
    for (int Q : {1, 3, 8}) {
        for (SimLevel level : {SimLevel::Matrix, SimLevel::Gate}) {
            EXPECT_NEAR(hadamard_test_expectation(rho, 0.0, Q, level).expectation, 1.0, 1e-12);
        }
    }
    for (double t : {0.4, 1.0}) {
        EXPECT_NEAR(hadamard_test_expectation(computational_zero(1), t, 1, SimLevel::Matrix).expectation,
                    std::cos(t), 1e-12);
    }
}

TEST(hadamard_test, levels_agree) {
    for (uint64_t seed = 1; seed <= 3; seed++) {
        DensityMatrix rho = random_state_with_floor(1, 0.1, seed);
        for (double t : {0.7, -1.1}) {
            for (int Q : {1, 2}) {
                double m = hadamard_test_expectation(rho, t, Q, SimLevel::Matrix).expectation;
                double g = hadamard_test_expectation(rho, t, Q, SimLevel::Gate).expectation;
                EXPECT_NEAR(m, g, 1e-10);
            }
        }
    }
}

TEST(hadamard_test, reset_matches_monolithic) {
    for (uint64_t seed = 1; seed <= 5; seed++) {
        DensityMatrix rho = random_state_with_floor(1, 0.0, seed);
        for (int Q = 1; Q <= 3; Q++) {
            for (double t : {0.5, 1.0, -2.0}) {
                double reset = hadamard_test_expectation(rho, t, Q, SimLevel::Matrix).expectation;
                EXPECT_NEAR(reset, hadamard_test_monolithic(rho, t, Q), 1e-10);
            }
        }
    }
}

TEST(hadamard_test, segmentation_bound) {
    for (uint64_t seed = 1; seed <= 20; seed++) {
        DensityMatrix rho = random_state_with_floor(1 + static_cast<int>(seed % 2), 0.0, 40 + seed);
        for (double t : {0.5, 1.0, std::numbers::pi / 2}) {
            for (int Q : {1, 4, 16}) {
                double e = hadamard_test_expectation(rho, t, Q, SimLevel::Matrix).expectation;
                EXPECT_LE(std::abs(e - trace_cos_exact(rho, t)), 2 * t * t / Q);
            }
        }
    }
}

TEST(hadamard_test, tally) {
    DensityMatrix rho = reference();
    long long per_segment = segment_gate_count(1, 0.2);
    for (int Q : {1, 2, 5}) {
        HadamardTestResult m = hadamard_test_expectation(rho, 0.2 * Q, Q, SimLevel::Matrix);
        EXPECT_EQ(m.tally.copies_used, Q + 1);
        HadamardTestResult g = hadamard_test_expectation(rho, 0.2 * Q, Q, SimLevel::Gate);
        EXPECT_EQ(g.tally.copies_used, Q + 1);
        EXPECT_EQ(g.tally.primitive_gates, Q * per_segment + 2);
    }
    ResourceTally a{2, 10, 5};
    ResourceTally b{3, 1, 1};
    ResourceTally sum = a;
    sum += b;
    EXPECT_EQ(sum, (ResourceTally{5, 11, 6}));
    EXPECT_EQ(a * 3, (ResourceTally{6, 30, 15}));
}

TEST(hadamard_test, invalid_arguments) {
    EXPECT_THROW(hadamard_test_expectation(reference(), 1.0, 0, SimLevel::Matrix), Error);
    EXPECT_THROW(parse_sim_level("tensor"), Error);
}

TEST(sampling, shots) {
    EXPECT_EQ(sample_shots(1.0, 1000, 5), 1.0);
    EXPECT_EQ(sample_shots(-1.0, 1000, 5), -1.0);
    EXPECT_EQ(sample_shots(0.3, 500, 9), sample_shots(0.3, 500, 9));
    int outside = 0;
    for (uint64_t seed = 1; seed <= 100; seed++) {
        if (std::abs(sample_shots(0.0, 10000, seed)) > 0.05) {
            outside++;
        }
    }
    EXPECT_EQ(outside, 0);
    EXPECT_THROW(sample_shots(0.0, 0, 1), Error);
}

TEST(sampling, swap_test) {
    EXPECT_NEAR(swap_test_expectation(computational_zero(1)), 1.0, 1e-12);
    EXPECT_NEAR(swap_test_expectation(maximally_mixed(1)), 0.5, 1e-12);
    EXPECT_NEAR(swap_test_expectation(reference()), 0.500471479200, 1e-9);
    EXPECT_NEAR(estimate_purity_swap_test(computational_zero(1), 1000, 1), 1.0, 1e-12);
    // Hoeffding at 10^5 shots and failure probability 1e-6: the purity error
    // is half the +-1 mean error.
    double bound = 0.5 * std::sqrt(2 * std::log(2e6) / 1e5);
    EXPECT_NEAR(estimate_purity_swap_test(maximally_mixed(1), 100000, 3), 0.5, bound);
    EXPECT_NEAR(estimate_purity_swap_test(reference(), 100000, 4), 0.500471479200, bound);
}

TEST(trace_norm_inequality, second_order_remainder) {
    Rng rng(31);
    for (int trial = 0; trial < 100; trial++) {
        DensityMatrix rho = random_state_with_floor(1 + trial % 3, 0.0, 900 + trial);
        double t = rng.uniform_open_zero();
        const Spectrum &sp = rho.spectrum();
        Eigen::VectorXcd d(sp.eigenvalues.size());
        for (size_t k = 0; k < sp.eigenvalues.size(); k++) {
            double x = sp.eigenvalues[k] * t;
            d[k] = std::exp(cplx(0, -x)) - 1.0 + cplx(0, x);
        }
        Matrix remainder = sp.eigenvectors * d.asDiagonal() * sp.eigenvectors.adjoint();
        EXPECT_LE(trace_norm(remainder), std::sqrt(2.0) * t * t / 2);
    }
}
