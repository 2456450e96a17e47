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


#ifndef ENTROPYSCOPE_ESTIMATOR_H
#define ENTROPYSCOPE_ESTIMATOR_H

#include <cstdint>
#include <map>
#include <mutex>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "entropyscope/channels.h"
#include "entropyscope/density_matrix.h"
#include "entropyscope/hadamard_test.h"
#include "entropyscope/rng.h"
#include "entropyscope/series_plan.h"

namespace entropyscope {

enum class ShotMode { Exact, Sampled };
enum class PuritySource { Oracle, SwapTest, User };

std::string_view shot_mode_name(ShotMode mode);
ShotMode parse_shot_mode(std::string_view name);
std::string_view purity_source_name(PuritySource source);
PuritySource parse_purity_source(std::string_view name);

struct EstimatorConfig {
    double epsilon = 0.2;
    double delta = 0.1;
    double lambda_floor = 0.35;
    /// Set for Renyi estimation, empty for von Neumann.
    std::optional<double> alpha;
    uint64_t seed = 1;
    SimLevel level = SimLevel::Matrix;
    ShotMode shot_mode = ShotMode::Sampled;
    PuritySource purity_source = PuritySource::Oracle;
    long long purity_shots = 100000;
    double purity_value = 0;
    double log_base = std::numbers::e;
    /// Number of importance-sampling draws; 0 means the Hoeffding count B.
    long long draws = 0;
    /// Evaluate every term with its weight instead of sampling.
    bool enumerate = false;
    /// Largest total copy count a run may request.
    double copy_ceiling = 1e13;
    int threads = 1;

    void validate() const;
    nlohmann::json to_json() const;
};

/// Hoeffding sample counts: B draws at per-draw precision eps' and failure
/// delta/2, and M shots per term at failure delta/(2N).
struct SampleCounts {
    long long B = 0;
    long long M = 0;
    double eps_prime = 0;
};

SampleCounts sample_counts(double l1_norm, double eps_budget, double delta, long long N);

/// Segment count for a term of time t at per-term precision eps'.
int segments_for(double t, double eps_prime);

/// Draws plan terms with probability |f| / ||f||_1.
class ImportanceSampler {
   public:
    explicit ImportanceSampler(const SeriesPlan &plan);

    /// Index into plan.terms.
    size_t draw(Rng &rng) const;
    double probability(size_t term) const;
    double sign(size_t term) const {
        return signs_[term];
    }
    size_t size() const {
        return signs_.size();
    }

   private:
    std::vector<double> cumulative_;
    std::vector<double> signs_;
    double total_ = 0;
};

/// Exact circuit expectations keyed by (t, Q, level). Safe to share between
/// threads and between runs on the same state.
class ExpectationCache {
   public:
    HadamardTestResult get(const DensityMatrix &rho, double t, int Q, SimLevel level);
    size_t size() const;

   private:
    mutable std::mutex mutex_;
    std::map<std::tuple<double, int, int>, HadamardTestResult> entries_;
};

struct TermRecord {
    int s = 0;
    int l = 0;
    double t = 0;
    int Q = 1;
    long long shots = 0;
    /// Contribution weight to the mean: 1/draws when sampling, |f|/||f||_1
    /// when enumerating.
    double weight = 0;
    /// sign(f) times the measured (or exact) expectation.
    double value = 0;
};

struct EstimateReport {
    Target target = Target::VonNeumann;
    double alpha = 0;
    double estimate = 0;
    /// offset + ||f||_1 * mean, before any logarithm.
    double series_value = 0;
    double standard_error = 0;
    int K = 0;
    int L = 0;
    double l1_norm = 0;
    long long N = 0;
    double eps_budget = 0;
    double eps_prime = 0;
    long long B = 0;
    long long M = 0;
    long long draws = 0;
    bool enumerated = false;
    double purity_used = 0;
    std::vector<TermRecord> records;
    ResourceTally tally;
    bool gates_applicable = false;
    uint64_t seed = 0;
    std::vector<std::string> warnings;
    nlohmann::json config;

    /// Recomputes the estimate from the records alone.
    double recompute_estimate(double log_base = std::numbers::e) const;
    nlohmann::json to_json() const;
};

/// Runs the importance-sampling estimator on an already built plan.
EstimateReport estimate_with_plan(const DensityMatrix &rho, const SeriesPlan &plan, const EstimatorConfig &cfg,
                                  ExpectationCache *cache = nullptr);

EstimateReport estimate_von_neumann(const DensityMatrix &rho, const EstimatorConfig &cfg,
                                    ExpectationCache *cache = nullptr);
EstimateReport estimate_renyi(const DensityMatrix &rho, const EstimatorConfig &cfg,
                              ExpectationCache *cache = nullptr);

/// Dispatches on cfg.alpha.
EstimateReport estimate_entropy(const DensityMatrix &rho, const EstimatorConfig &cfg,
                                ExpectationCache *cache = nullptr);

/// Plan the estimator would build for this state and configuration.
SeriesPlan plan_for(const DensityMatrix &rho, const EstimatorConfig &cfg, double *purity_used = nullptr);

struct ResourceSummary {
    long long copies = 0;
    long long gates = 0;
    bool gates_applicable = false;
    long long shots = 0;
    long long draws = 0;
    /// Worst-case scalings of the copy and gate counts, evaluated without
    /// their hidden constants and logarithmic factors.
    double copy_scale = 0;
    double gate_scale = 0;
    std::string copy_formula;
    std::string gate_formula;

    nlohmann::json to_json() const;
};

ResourceSummary resource_report(const EstimateReport &report, int num_qubits);

struct SweepRow {
    double p = 0;
    double estimate = 0;
    double oracle_noisy = 0;
    double oracle_clean = 0;
    double stderr_value = 0;
    long long copies = 0;
    long long gates = 0;
};

/// Estimates the entropy of N_p(rho) for each level. Every level reuses
/// cfg.seed, so p = 0 reproduces the plain estimate. With repeats > 1 the
/// estimate is the mean over seeds cfg.seed .. cfg.seed + repeats - 1 and the
/// standard error is taken across repeats.
std::vector<SweepRow> noise_sweep(const DensityMatrix &rho, ChannelFamily family, const std::vector<double> &levels,
                                  const EstimatorConfig &cfg, int repeats = 1);

std::string sweep_to_csv(const std::vector<SweepRow> &rows, const std::string &comment);

/// Exact entropy the configuration targets (von Neumann or Renyi).
double oracle_entropy(const DensityMatrix &rho, const EstimatorConfig &cfg);

}  // namespace entropyscope

#endif
