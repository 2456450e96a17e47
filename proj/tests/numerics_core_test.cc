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
#include <cstdio>
#include <filesystem>
#include <numbers>

#include "gtest/gtest.h"

#include "entropyscope/channels.h"
#include "entropyscope/density_matrix.h"
#include "entropyscope/error.h"
#include "entropyscope/oracles.h"
#include "entropyscope/random_state.h"
#include "entropyscope/rng.h"
#include "entropyscope/state_io.h"

using namespace entropyscope;

namespace {

// Spectral values frozen from tests/oracles/derive_values.py.
constexpr double kRefVonNeumann = 0.692675627234;
constexpr double kRefRenyi2 = 0.692204666466;
constexpr double kRefPurity = 0.500471479200;

Matrix mat2(cplx a, cplx b, cplx c, cplx d) {
    Matrix m(2, 2);
    m << a, b, c, d;
    return m;
}

DensityMatrix reference() {
    return validate_state(mat2(0.48786, 0.0094, 0.0094, 0.51214));
}

ErrorKind kind_of(const Matrix &m) {
    try {
        validate_state(m);
    } catch (const Error &e) {
        return e.kind();
    }
    ADD_FAILURE() << "validate_state accepted an invalid matrix";
    return ErrorKind::BadInput;
}

}  // namespace

TEST(validate_state, accepts_valid_states) {
    DensityMatrix pure = validate_state(mat2(1, 0, 0, 0));
    EXPECT_EQ(pure.num_qubits(), 1);
    DensityMatrix ref = reference();
    EXPECT_EQ(ref.dim(), 2u);
    EXPECT_NEAR(ref.spectrum().eigenvalues[0] + ref.spectrum().eigenvalues[1], 1.0, 1e-12);
    EXPECT_GE(ref.spectrum().eigenvalues[0], ref.spectrum().eigenvalues[1]);
}

TEST(validate_state, names_violated_invariant) {
    EXPECT_EQ(kind_of(mat2(0.6, 0, 0, 0.5)), ErrorKind::TraceNotOne);
    EXPECT_EQ(kind_of(mat2(0.5, 0.1, 0.2, 0.5)), ErrorKind::NotHermitian);
    EXPECT_EQ(kind_of(mat2(0.5, 0.6, 0.6, 0.5)), ErrorKind::NotPSD);
    EXPECT_EQ(kind_of(Matrix::Identity(3, 3) / 3.0), ErrorKind::BadDimension);
    EXPECT_EQ(kind_of(Matrix(2, 3)), ErrorKind::BadDimension);
    EXPECT_EQ(kind_of(mat2(NAN, 0, 0, 0.5)), ErrorKind::BadInput);
}

TEST(validate_state, checks_hermiticity_before_trace) {
    // Both invariants are broken; the first in check order is reported.
    EXPECT_EQ(kind_of(mat2(0.7, 0.3, 0.0, 0.7)), ErrorKind::NotHermitian);
}

TEST(validate_state, message_carries_magnitude) {
    try {
        validate_state(mat2(0.6, 0, 0, 0.5));
        FAIL();
    } catch (const Error &e) {
        std::string msg = e.what();
        EXPECT_NE(msg.find("TraceNotOne"), std::string::npos);
        EXPECT_NE(msg.find("0.1"), std::string::npos);
    }
}

TEST(spectrum, reconstructs_input) {
    for (uint64_t seed = 1; seed <= 10; seed++) {
        DensityMatrix rho = random_state_with_floor(2, 0.05, seed);
        EXPECT_LE(max_abs_diff(rho.spectrum().reconstruct(), rho.matrix()), 1e-9);
        double sum = 0;
        for (double v : rho.spectrum().eigenvalues) {
            sum += v;
        }
        EXPECT_NEAR(sum, 1.0, 1e-9);
    }
}

TEST(oracles, von_neumann) {
    EXPECT_NEAR(von_neumann_exact(maximally_mixed(1)), std::log(2.0), 1e-12);
    EXPECT_NEAR(von_neumann_exact(computational_zero(2)), 0.0, 1e-12);
    EXPECT_NEAR(von_neumann_exact(reference()), kRefVonNeumann, 1e-9);
}

TEST(oracles, renyi) {
    EXPECT_NEAR(renyi_exact(maximally_mixed(1), 2.0), std::log(2.0), 1e-12);
    for (double alpha : {0.5, 2.0, 3.0}) {
        EXPECT_NEAR(renyi_exact(computational_zero(1), alpha), 0.0, 1e-12);
    }
    EXPECT_NEAR(renyi_exact(reference(), 2.0), kRefRenyi2, 1e-9);
    EXPECT_NEAR(renyi_exact(maximally_mixed(2), 2.0, 2.0), 2.0, 1e-12);
    EXPECT_THROW(renyi_exact(reference(), 1.0), Error);
    EXPECT_THROW(renyi_exact(reference(), -0.5), Error);
    EXPECT_THROW(renyi_exact(reference(), 2.0, 1.0), Error);
}

TEST(oracles, trace_cos_and_purity) {
    EXPECT_NEAR(trace_cos_exact(reference(), 0.0), 1.0, 1e-12);
    for (double t : {0.3, 1.0, 2.5}) {
        EXPECT_NEAR(trace_cos_exact(maximally_mixed(1), t), std::cos(t / 2), 1e-12);
        EXPECT_NEAR(trace_cos_exact(computational_zero(1), t), std::cos(t), 1e-12);
    }
    EXPECT_NEAR(purity_exact(computational_zero(1)), 1.0, 1e-12);
    EXPECT_NEAR(purity_exact(maximally_mixed(1)), 0.5, 1e-12);
    EXPECT_NEAR(purity_exact(reference()), kRefPurity, 1e-9);
}

TEST(oracles, entropy_range_and_renyi_monotone) {
    for (uint64_t seed = 1; seed <= 20; seed++) {
        int n = 1 + static_cast<int>(seed % 3);
        DensityMatrix rho = random_state_with_floor(n, 0.0, seed);
        double s = von_neumann_exact(rho);
        EXPECT_GE(s, -1e-12);
        EXPECT_LE(s, n * std::log(2.0) + 1e-12);
        double prev = INFINITY;
        for (double alpha : {0.3, 0.5, 0.9, 1.1, 2.0, 3.0, 5.0}) {
            double r = renyi_exact(rho, alpha);
            EXPECT_LE(r, prev + 1e-12) << "seed " << seed << " alpha " << alpha;
            prev = r;
        }
    }
}

TEST(channels, trace_preserving_checks) {
    EXPECT_THROW(KrausChannel({Matrix::Identity(2, 2) * 0.5}), Error);
    EXPECT_THROW(KrausChannel({}), Error);
    EXPECT_THROW(amplitude_damping(1.2), Error);
    EXPECT_THROW(depolarizing(-0.1), Error);
}

TEST(channels, identity_and_full_damping) {
    DensityMatrix rho = reference();
    EXPECT_LE(max_abs_diff(apply_channel(rho, depolarizing(0.0)).matrix(), rho.matrix()), 1e-14);
    DensityMatrix damped = apply_channel(rho, amplitude_damping(1.0));
    EXPECT_LE(max_abs_diff(damped.matrix(), computational_zero(1).matrix()), 1e-14);
}

TEST(channels, depolarizing_noise_state) {
    DensityMatrix rho = validate_state(mat2(0.5398, -0.1217, -0.1217, 0.4602));
    DensityMatrix out = apply_channel(rho, depolarizing(0.15));
    Matrix expected = mat2(0.53184, -0.09736, -0.09736, 0.46816);
    EXPECT_LE(max_abs_diff(out.matrix(), expected), 1e-12);
}

TEST(channels, names_round_trip) {
    for (ChannelFamily f : {ChannelFamily::AmplitudeDamping, ChannelFamily::Depolarizing}) {
        EXPECT_EQ(parse_channel_family(channel_family_name(f)), f);
    }
    EXPECT_THROW(parse_channel_family("bitflip"), Error);
}

TEST(channels, dimension_mismatch) {
    EXPECT_THROW(apply_channel(maximally_mixed(2), depolarizing(0.1)), Error);
}

TEST(random_state, floor_respected) {
    for (uint64_t seed = 1; seed <= 30; seed++) {
        for (int n : {1, 2, 3}) {
            double floor = 0.7 / (1 << n);
            DensityMatrix rho = random_state_with_floor(n, floor, seed);
            EXPECT_GE(rho.spectrum().min_eigenvalue(), floor - 1e-10);
        }
    }
    DensityMatrix seven = random_state_with_floor(1, 0.35, 7);
    EXPECT_GE(seven.spectrum().min_eigenvalue(), 0.35 - 1e-10);
}

TEST(random_state, edge_cases) {
    DensityMatrix mm = random_state_with_floor(1, 0.5, 3);
    EXPECT_LE(max_abs_diff(mm.matrix(), maximally_mixed(1).matrix()), 1e-10);
    try {
        random_state_with_floor(2, 0.3, 1);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::InfeasibleFloor);
    }
    EXPECT_THROW(random_state_with_floor(0, 0.1, 1), Error);
}

TEST(random_state, deterministic_per_seed) {
    EXPECT_EQ(max_abs_diff(random_state_with_floor(2, 0.1, 42).matrix(),
                           random_state_with_floor(2, 0.1, 42).matrix()),
              0.0);
    EXPECT_GT(max_abs_diff(random_state_with_floor(2, 0.1, 42).matrix(),
                           random_state_with_floor(2, 0.1, 43).matrix()),
              1e-6);
}

TEST(rng, streams_are_reproducible_and_distinct) {
    Rng a(5);
    Rng b(5);
    for (int i = 0; i < 100; i++) {
        EXPECT_EQ(a.next_u64(), b.next_u64());
    }
    Rng root(9);
    EXPECT_NE(root.split(0).seed(), root.split(1).seed());
    EXPECT_EQ(root.split(3).seed(), Rng(9).split(3).seed());
    Rng u(11);
    for (int i = 0; i < 1000; i++) {
        double x = u.uniform();
        EXPECT_GE(x, 0.0);
        EXPECT_LT(x, 1.0);
        EXPECT_GT(u.uniform_open_zero(), 0.0);
    }
}

TEST(state_io, round_trip) {
    DensityMatrix rho = random_state_with_floor(2, 0.05, 17);
    std::string path = (std::filesystem::temp_directory_path() / "entropyscope_state_io.json").string();
    save_state(path, rho);
    DensityMatrix back = load_state(path);
    EXPECT_EQ(max_abs_diff(back.matrix(), rho.matrix()), 0.0);
    std::remove(path.c_str());
}

TEST(state_io, malformed_inputs) {
    auto kind = [](const nlohmann::json &j) {
        try {
            state_from_json(j);
        } catch (const Error &e) {
            return e.kind();
        }
        return ErrorKind::InvalidArgument;
    };
    EXPECT_EQ(kind(nlohmann::json::object()), ErrorKind::BadInput);
    EXPECT_EQ(kind({{"re", {{1, 0}, {0}}}}), ErrorKind::BadDimension);
    EXPECT_EQ(kind({{"re", {{0.5, 0.6}, {0.6, 0.5}}}}), ErrorKind::NotPSD);
    EXPECT_EQ(kind({{"re", {{1, 0}, {0, 0}}}, {"im", {{0, 0}}}}), ErrorKind::BadDimension);
    EXPECT_EQ(kind({{"re", "oops"}}), ErrorKind::BadInput);
    EXPECT_THROW(load_state("/nonexistent/entropyscope.json"), Error);
}
