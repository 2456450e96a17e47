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

#ifndef ENTROPYSCOPE_BINOMIAL_H
#define ENTROPYSCOPE_BINOMIAL_H

#include <vector>

namespace entropyscope {

/// Generalized binomial coefficient prod_{j=1}^k (beta - j + 1)/j.
double gen_binomial(double beta, int k);

/// binom(l, s) / 2^l, evaluated in log space.
double binomial_over_power_of_two(int l, int s);

/// Upper bounds on |binom(beta, k)| for k = 1..K. Entries where no bound of
/// the relevant case applies hold +infinity.
struct BinomialBoundReport {
    double beta = 0;
    int max_k = 0;
    /// per_k[k-1] bounds |binom(beta, k)|.
    std::vector<double> per_k;
    /// |binom(beta, k)| itself, for comparison.
    std::vector<double> actual;
    /// Smallest k from which the constant bound (|beta|, 1/e or 1) holds.
    int constant_bound_from = 1;
    double constant_bound = 0;
    /// Bound on sum_{k=1}^K |binom(beta, k)|.
    double partial_sum_bound = 0;
    double actual_partial_sum = 0;

    /// True when every finite bound dominates the actual value.
    bool holds(double slack = 1e-12) const;
};

BinomialBoundReport binomial_bounds(double beta, int K);

}  // namespace entropyscope

#endif
