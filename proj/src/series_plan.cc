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

#include "entropyscope/series_plan.h"

#include <cmath>

#include "entropyscope/arcsin_series.h"
#include "entropyscope/binomial.h"
#include "entropyscope/error.h"
#include "entropyscope/oracles.h"

using namespace entropyscope;

namespace {

// Orders beyond this would mean a floor or budget far outside desk scale.
constexpr int kMaxOrder = 100000;

void check_unit_interval(double value, const char *name) {
    if (!(value > 0.0 && value < 1.0)) {
        throw Error(ErrorKind::InvalidArgument, std::string(name) + " must lie in (0,1), got " + std::to_string(value));
    }
}

std::vector<SeriesTerm> materialize_terms(const TruncationOrders &orders, const std::vector<double> &l_weights) {
    std::vector<SeriesTerm> terms;
    for (int l = 0; l <= orders.L_floor; l++) {
        int m = orders.M[l];
        int lo = std::max(0, l / 2 - m);
        int hi = std::min(l, (l + 1) / 2 + m);
        for (int s = lo; s <= hi; s++) {
            SeriesTerm term;
            term.s = s;
            term.l = l;
            term.t = (2.0 * s - l) * std::numbers::pi / 2.0;
            term.f = l_weights[l] * binomial_over_power_of_two(l, s);
            terms.push_back(term);
        }
    }
    return terms;
}

double l1_of(const std::vector<SeriesTerm> &terms) {
    double total = 0;
    for (const auto &term : terms) {
        total += std::abs(term.f);
    }
    return total;
}

}  // namespace

long long SeriesPlan::union_bound_terms() const {
    long long total = 0;
    for (int m : M) {
        total += 2LL * m + 1;
    }
    return total;
}

std::string SeriesPlan::target_name() const {
    return target == Target::VonNeumann ? "vn" : "renyi";
}

int entropyscope::choose_K_vn(double lambda_floor, double eps) {
    check_unit_interval(lambda_floor, "lambda");
    check_unit_interval(eps, "eps");
    for (int K = 1; K <= kMaxOrder; K++) {
        if (std::pow(1.0 - lambda_floor, K + 1) / (lambda_floor * (K + 1)) <= eps / 4.0) {
            return K;
        }
    }
    throw Error(ErrorKind::InfeasibleBudget, "no K up to " + std::to_string(kMaxOrder) + " meets the bound");
}

int entropyscope::choose_K_renyi(double alpha, double lambda_floor, double xi) {
    check_alpha(alpha);
    check_unit_interval(lambda_floor, "lambda");
    check_unit_interval(xi, "xi");
    int K_min = 1;
    if (alpha > 2.0) {
        K_min = static_cast<int>(std::ceil(std::exp(2.0 / (alpha - 1.0)) * alpha * alpha));
    }
    for (int K = 1; K <= kMaxOrder; K++) {
        if (std::pow(1.0 - lambda_floor, K + 1) / lambda_floor <= xi / 4.0) {
            return std::max(K, K_min);
        }
    }
    throw Error(ErrorKind::InfeasibleBudget, "no K up to " + std::to_string(kMaxOrder) + " meets the bound");
}

TruncationOrders entropyscope::choose_L_and_M(int K, double weight_sum, double eps, double lambda_floor) {
    if (K < 1 || !(weight_sum > 0) || !(eps > 0) || !(lambda_floor > 0)) {
        throw Error(ErrorKind::InvalidArgument, "truncation orders need K >= 1 and positive weight sum, eps, lambda");
    }
    double log_term = std::log(4.0 * weight_sum / eps);
    TruncationOrders out;
    out.L = std::max(0.0, log_term / (lambda_floor * lambda_floor));
    if (out.L > kMaxOrder) {
        throw Error(ErrorKind::InfeasibleBudget, "series degree L = " + std::to_string(out.L) + " is too large");
    }
    out.L_floor = static_cast<int>(std::floor(out.L));
    for (int l = 0; l <= out.L_floor; l++) {
        int m = static_cast<int>(std::ceil(std::sqrt(std::max(0.0, log_term) * l / 2.0)));
        out.M.push_back(std::min(m, l / 2));
    }
    return out;
}

double entropyscope::xi_from_epsilon(double alpha, double eps, double purity) {
    check_alpha(alpha);
    if (!(purity > 0.0 && purity <= 1.0 + 1e-12)) {
        throw Error(ErrorKind::InvalidArgument, "purity must lie in (0,1], got " + std::to_string(purity));
    }
    if (!(eps > 0)) {
        throw Error(ErrorKind::InvalidArgument, "eps must be positive");
    }
    double scale = (alpha > 1.0 && alpha <= 2.0) ? purity : std::pow(purity, alpha - 1.0);
    return std::abs(1.0 - alpha) * scale * eps / 2.0;
}

SeriesPlan entropyscope::build_plan_vn(double lambda_floor, double eps) {
    int K = choose_K_vn(lambda_floor, eps);
    double harmonic = 0;
    for (int k = 1; k <= K; k++) {
        harmonic += 1.0 / k;
    }
    TruncationOrders orders = choose_L_and_M(K, harmonic, eps, lambda_floor);
    ArcsinPowerTable table(K, orders.L_floor);
    std::vector<double> l_weights(orders.L_floor + 1, 0.0);
    for (int l = 0; l <= orders.L_floor; l++) {
        for (int k = 1; k <= K; k++) {
            l_weights[l] += table.at(k, l) / k;
        }
    }

    SeriesPlan plan;
    plan.target = Target::VonNeumann;
    plan.lambda_floor = lambda_floor;
    plan.epsilon_budget = eps;
    plan.K = K;
    plan.L_floor = orders.L_floor;
    plan.M = orders.M;
    plan.terms = materialize_terms(orders, l_weights);
    plan.l1_norm = l1_of(plan.terms);
    plan.constant_offset = 0;
    plan.weight_sum = harmonic;
    return plan;
}

SeriesPlan entropyscope::build_plan_renyi(double alpha, double lambda_floor, double xi) {
    int K = choose_K_renyi(alpha, lambda_floor, xi);
    double beta = alpha - 1.0;
    std::vector<double> signed_binomials(K + 1, 0.0);
    double weight_sum = 0;
    for (int k = 1; k <= K; k++) {
        double c = gen_binomial(beta, k);
        signed_binomials[k] = (k % 2 == 0 ? 1.0 : -1.0) * c;
        weight_sum += std::abs(c);
    }
    TruncationOrders orders = choose_L_and_M(K, weight_sum, xi, lambda_floor);
    ArcsinPowerTable table(K, orders.L_floor);
    std::vector<double> l_weights(orders.L_floor + 1, 0.0);
    for (int l = 0; l <= orders.L_floor; l++) {
        for (int k = 1; k <= K; k++) {
            l_weights[l] += table.at(k, l) * signed_binomials[k];
        }
    }

    SeriesPlan plan;
    plan.target = Target::Renyi;
    plan.alpha = alpha;
    plan.lambda_floor = lambda_floor;
    plan.epsilon_budget = xi;
    plan.K = K;
    plan.L_floor = orders.L_floor;
    plan.M = orders.M;
    plan.terms = materialize_terms(orders, l_weights);
    plan.l1_norm = l1_of(plan.terms);
    plan.constant_offset = 1.0;
    plan.weight_sum = weight_sum;
    return plan;
}

double entropyscope::eval_plan_exact(const SeriesPlan &plan, const DensityMatrix &rho) {
    double total = plan.constant_offset;
    for (const auto &term : plan.terms) {
        if (term.f != 0) {
            total += term.f * trace_cos_exact(rho, term.t);
        }
    }
    return total;
}

double entropyscope::entropy_from_series_value(const SeriesPlan &plan, double value, double log_base) {
    if (plan.target == Target::VonNeumann) {
        return value;
    }
    if (!(value > 0)) {
        throw Error(ErrorKind::NonpositiveArgument,
                    "Renyi logarithm argument is " + std::to_string(value) + ", not positive");
    }
    return std::log(value) / std::log(log_base) / (1.0 - plan.alpha);
}

nlohmann::json entropyscope::plan_to_json(const SeriesPlan &plan) {
    nlohmann::json j;
    j["target"] = plan.target_name();
    if (plan.target == Target::Renyi) {
        j["alpha"] = plan.alpha;
    }
    j["lambda"] = plan.lambda_floor;
    j["epsilon_budget"] = plan.epsilon_budget;
    j["K"] = plan.K;
    j["L"] = plan.L_floor;
    j["M"] = plan.M;
    j["weight_sum"] = plan.weight_sum;
    j["l1_norm"] = plan.l1_norm;
    j["offset"] = plan.constant_offset;
    nlohmann::json terms = nlohmann::json::array();
    for (const auto &term : plan.terms) {
        terms.push_back({{"s", term.s}, {"l", term.l}, {"t", term.t}, {"f", term.f}});
    }
    j["terms"] = terms;
    return j;
}

SeriesPlan entropyscope::plan_from_json(const nlohmann::json &j) {
    try {
        SeriesPlan plan;
        std::string target = j.at("target").get<std::string>();
        if (target == "vn") {
            plan.target = Target::VonNeumann;
        } else if (target == "renyi") {
            plan.target = Target::Renyi;
            plan.alpha = j.at("alpha").get<double>();
            check_alpha(plan.alpha);
        } else {
            throw Error(ErrorKind::BadInput, "unknown plan target '" + target + "'");
        }
        plan.lambda_floor = j.at("lambda").get<double>();
        plan.epsilon_budget = j.at("epsilon_budget").get<double>();
        plan.K = j.at("K").get<int>();
        plan.L_floor = j.at("L").get<int>();
        plan.M = j.at("M").get<std::vector<int>>();
        plan.weight_sum = j.value("weight_sum", 0.0);
        plan.constant_offset = j.at("offset").get<double>();
        for (const auto &term : j.at("terms")) {
            plan.terms.push_back({term.at("s").get<int>(), term.at("l").get<int>(), term.at("t").get<double>(),
                                  term.at("f").get<double>()});
        }
        plan.l1_norm = l1_of(plan.terms);
        double stored = j.at("l1_norm").get<double>();
        if (std::abs(stored - plan.l1_norm) > 1e-9 * std::max(1.0, stored)) {
            throw Error(ErrorKind::BadInput, "plan l1_norm does not match its terms");
        }
        if (static_cast<int>(plan.M.size()) != plan.L_floor + 1) {
            throw Error(ErrorKind::BadInput, "plan M list must have L+1 entries");
        }
        return plan;
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorKind::BadInput, std::string("malformed plan JSON: ") + e.what());
    }
}
