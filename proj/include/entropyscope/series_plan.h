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

#ifndef ENTROPYSCOPE_SERIES_PLAN_H
#define ENTROPYSCOPE_SERIES_PLAN_H

#include <numbers>
#include <string>
#include <vector>

#include "json.hpp"

#include "entropyscope/density_matrix.h"

namespace entropyscope {

enum class Target { VonNeumann, Renyi };

/// One Fourier term f * tr(rho cos(rho t)) with t = (2s - l) pi / 2.
struct SeriesTerm {
    int s = 0;
    int l = 0;
    double t = 0;
    double f = 0;

    bool operator==(const SeriesTerm &other) const = default;
};

struct SeriesPlan {
    Target target = Target::VonNeumann;
    /// Only meaningful for Renyi plans.
    double alpha = 0;
    double lambda_floor = 0;
    /// Series approximation budget: epsilon for von Neumann, xi for Renyi.
    double epsilon_budget = 0;
    int K = 0;
    int L_floor = 0;
    /// M[l] for 0 <= l <= L_floor, already clamped to floor(l/2).
    std::vector<int> M;
    std::vector<SeriesTerm> terms;
    double l1_norm = 0;
    double constant_offset = 0;
    /// sum 1/k (von Neumann) or sum |binom(alpha-1, k)| (Renyi) over k <= K.
    double weight_sum = 0;

    /// sum_l (2 M_l + 1), the term count used for the measurement union bound.
    long long union_bound_terms() const;
    std::string target_name() const;
};

/// Smallest K with (1-Lambda)^{K+1} / (Lambda (K+1)) <= eps/4.
int choose_K_vn(double lambda_floor, double eps);

/// Smallest K with (1-Lambda)^{K+1} / Lambda <= xi/4, and at least
/// ceil(e^{2/(alpha-1)} alpha^2) when alpha > 2.
int choose_K_renyi(double alpha, double lambda_floor, double xi);

struct TruncationOrders {
    double L = 0;
    int L_floor = 0;
    std::vector<int> M;
};

TruncationOrders choose_L_and_M(int K, double weight_sum, double eps, double lambda_floor);

/// Precision needed on tr(rho^alpha) for precision eps on the Renyi entropy.
double xi_from_epsilon(double alpha, double eps, double purity);

SeriesPlan build_plan_vn(double lambda_floor, double eps);
SeriesPlan build_plan_renyi(double alpha, double lambda_floor, double xi);

/// constant_offset + sum f tr(rho cos(rho t)).
double eval_plan_exact(const SeriesPlan &plan, const DensityMatrix &rho);

/// Maps a series value to an entropy: identity for von Neumann, and
/// log_base(value) / (1 - alpha) for Renyi. Throws NonpositiveArgument when the
/// Renyi argument is not positive.
double entropy_from_series_value(const SeriesPlan &plan, double value, double log_base = std::numbers::e);

nlohmann::json plan_to_json(const SeriesPlan &plan);
SeriesPlan plan_from_json(const nlohmann::json &j);

}  // namespace entropyscope

#endif
