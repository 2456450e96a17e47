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

#include "entropyscope/random_state.h"

#include <algorithm>
#include <cmath>

#include "entropyscope/error.h"

using namespace entropyscope;

namespace {

constexpr int kMaxRejections = 10000;

std::vector<double> dirichlet_ones(size_t dim, Rng &rng) {
    std::vector<double> out(dim);
    double total = 0;
    for (auto &v : out) {
        v = rng.exponential();
        total += v;
    }
    for (auto &v : out) {
        v /= total;
    }
    return out;
}

}  // namespace

Matrix entropyscope::haar_unitary(size_t dim, Rng &rng) {
    Matrix z(dim, dim);
    for (size_t c = 0; c < dim; c++) {
        for (size_t r = 0; r < dim; r++) {
            double re = rng.normal();
            double im = rng.normal();
            z(r, c) = cplx(re, im) / std::sqrt(2.0);
        }
    }
    Eigen::HouseholderQR<Matrix> qr(z);
    Matrix q = qr.householderQ();
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (size_t k = 0; k < dim; k++) {
        cplx d = r(k, k);
        double mag = std::abs(d);
        cplx phase = mag > 0 ? d / mag : cplx(1, 0);
        q.col(k) *= phase;
    }
    return q;
}

DensityMatrix entropyscope::random_state_with_floor(int n, double lambda_floor, uint64_t seed) {
    Rng rng(seed);
    return random_state_with_floor(n, lambda_floor, rng);
}

DensityMatrix entropyscope::random_state_with_floor(int n, double lambda_floor, Rng &rng) {
    if (n < 1 || n > 10) {
        throw Error(ErrorKind::BadDimension, "qubit count must be in [1, 10], got " + std::to_string(n));
    }
    size_t dim = size_t{1} << n;
    if (!(lambda_floor >= 0.0) || lambda_floor * static_cast<double>(dim) > 1.0 + 1e-15) {
        throw Error(ErrorKind::InfeasibleFloor, "floor " + std::to_string(lambda_floor) + " times dimension " +
                                                    std::to_string(dim) + " exceeds 1");
    }

    std::vector<double> lambda;
    bool accepted = false;
    for (int attempt = 0; attempt < kMaxRejections && !accepted; attempt++) {
        lambda = dirichlet_ones(dim, rng);
        accepted = *std::min_element(lambda.begin(), lambda.end()) >= lambda_floor;
    }
    if (!accepted) {
        // Affine map of a simplex point onto the floored sub-simplex.
        double slack = 1.0 - static_cast<double>(dim) * lambda_floor;
        for (auto &v : lambda) {
            v = lambda_floor + slack * v;
        }
    }

    Matrix u = haar_unitary(dim, rng);
    Eigen::VectorXd diag(dim);
    for (size_t k = 0; k < dim; k++) {
        diag[k] = lambda[k];
    }
    Matrix rho = u * diag.cast<cplx>().asDiagonal() * u.adjoint();
    rho = (rho + rho.adjoint()) * 0.5;
    // Rounding can move the trace by an ulp or two; renormalize before validating.
    rho /= rho.trace().real();
    return validate_state(rho);
}
