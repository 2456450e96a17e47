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

#include "entropyscope/oracles.h"

#include <cmath>

#include "entropyscope/error.h"

using namespace entropyscope;

void entropyscope::check_alpha(double alpha) {
    if (!std::isfinite(alpha) || alpha <= 0.0 || alpha == 1.0) {
        throw Error(ErrorKind::AlphaOutOfRange,
                    "alpha must lie in (0,1) or (1,inf), got " + std::to_string(alpha));
    }
}

double entropyscope::von_neumann_exact(const DensityMatrix &rho, const Tolerances &tol) {
    double total = 0;
    for (double lambda : rho.spectrum().eigenvalues) {
        if (lambda >= tol.zero_eigenvalue) {
            total -= lambda * std::log(lambda);
        }
    }
    return total;
}

double entropyscope::trace_power_exact(const DensityMatrix &rho, double alpha, const Tolerances &tol) {
    check_alpha(alpha);
    double total = 0;
    for (double lambda : rho.spectrum().eigenvalues) {
        if (lambda >= tol.zero_eigenvalue) {
            total += std::pow(lambda, alpha);
        }
    }
    return total;
}

double entropyscope::renyi_exact(const DensityMatrix &rho, double alpha, double log_base, const Tolerances &tol) {
    check_alpha(alpha);
    if (!(log_base > 1.0) || !std::isfinite(log_base)) {
        throw Error(ErrorKind::InvalidArgument, "log base must exceed 1, got " + std::to_string(log_base));
    }
    return std::log(trace_power_exact(rho, alpha, tol)) / std::log(log_base) / (1.0 - alpha);
}

double entropyscope::trace_cos_exact(const DensityMatrix &rho, double t) {
    double total = 0;
    for (double lambda : rho.spectrum().eigenvalues) {
        total += lambda * std::cos(lambda * t);
    }
    return total;
}

double entropyscope::purity_exact(const DensityMatrix &rho) {
    return rho.matrix().squaredNorm();
}
