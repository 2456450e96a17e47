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

#include "entropyscope/binomial.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "entropyscope/error.h"

using namespace entropyscope;

double entropyscope::gen_binomial(double beta, int k) {
    if (k < 0) {
        throw Error(ErrorKind::InvalidArgument, "binomial index must be nonnegative");
    }
    double out = 1.0;
    for (int j = 1; j <= k; j++) {
        out *= (beta - j + 1) / j;
    }
    return out;
}

double entropyscope::binomial_over_power_of_two(int l, int s) {
    if (s < 0 || s > l) {
        return 0.0;
    }
    double log_value =
        std::lgamma(l + 1.0) - std::lgamma(s + 1.0) - std::lgamma(l - s + 1.0) - l * std::numbers::ln2;
    return std::exp(log_value);
}

namespace {

// Case beta in (0, 1], k >= 2.
double small_beta_bound(double beta, int k) {
    double base = 1.0 + (beta * std::log((k + 1.0) / (double(k) * k)) + beta - 1.0) / k;
    return std::pow(base, k);
}

// Case beta > 1, k >= beta + 1.
double large_beta_bound(double beta, int k) {
    double base = 1.0 + (beta * std::log((beta + 1.0) * (beta + 1.0) / k) + 2.0) / k;
    return std::pow(base, k);
}

}  // namespace

bool BinomialBoundReport::holds(double slack) const {
    for (size_t i = 0; i < per_k.size(); i++) {
        if (actual[i] > per_k[i] + slack) {
            return false;
        }
    }
    return actual_partial_sum <= partial_sum_bound + slack;
}

BinomialBoundReport entropyscope::binomial_bounds(double beta, int K) {
    if (!std::isfinite(beta) || beta <= -1.0 || beta == 0.0) {
        throw Error(ErrorKind::BetaOutOfRange, "beta must lie in (-1,0) or (0,inf), got " + std::to_string(beta));
    }
    if (K < 1) {
        throw Error(ErrorKind::InvalidArgument, "K must be positive");
    }
    const double inf = std::numeric_limits<double>::infinity();
    BinomialBoundReport r;
    r.beta = beta;
    r.max_k = K;
    for (int k = 1; k <= K; k++) {
        double a = std::abs(gen_binomial(beta, k));
        r.actual.push_back(a);
        r.actual_partial_sum += a;
    }

    if (beta < 0) {
        r.per_k.assign(K, -beta);
        r.constant_bound_from = 1;
        r.constant_bound = -beta;
        r.partial_sum_bound = -beta * K;
    } else if (beta <= 1.0) {
        // |binom(beta, 1)| = beta exactly; the AM-GM bound starts at k = 2.
        r.per_k.push_back(beta);
        for (int k = 2; k <= K; k++) {
            r.per_k.push_back(small_beta_bound(beta, k));
        }
        r.constant_bound_from = 4;
        r.constant_bound = 1.0 / std::numbers::e;
        r.partial_sum_bound = beta;
        for (int k = 2; k <= std::min(K, 3); k++) {
            r.partial_sum_bound += r.per_k[k - 1];
        }
        r.partial_sum_bound += std::max(0, K - 3) / std::numbers::e;
    } else {
        int threshold = static_cast<int>(std::ceil(std::exp(2.0 / beta) * (beta + 1.0) * (beta + 1.0)));
        for (int k = 1; k <= K; k++) {
            r.per_k.push_back(k >= beta + 1.0 ? large_beta_bound(beta, k) : inf);
        }
        r.constant_bound_from = threshold;
        r.constant_bound = 1.0;
        double head = 0;
        for (int k = 1; k <= std::min(K, threshold); k++) {
            head += std::exp(2.0) * std::pow((beta + 1.0) * (beta + 1.0) / k, beta);
        }
        r.partial_sum_bound = head + std::max(0, K - threshold);
    }
    return r;
}
