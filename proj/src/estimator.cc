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


#include "entropyscope/estimator.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>

#include "entropyscope/error.h"
#include "entropyscope/oracles.h"

using namespace entropyscope;

namespace {

// Stream indices split from the master seed.
constexpr uint64_t kSamplerStream = 0;
constexpr uint64_t kPurityStream = 1;
constexpr uint64_t kShotStreamBase = 16;

void check_open_unit(double v, const char *name) {
    if (!(v > 0.0 && v < 1.0)) {
        throw Error(ErrorKind::InvalidArgument, std::string(name) + " must lie in (0,1), got " + std::to_string(v));
    }
}

template <typename Fn>
void parallel_for(size_t count, int threads, Fn fn) {
    size_t workers = std::min<size_t>(std::max(1, threads), count);
    if (workers <= 1) {
        for (size_t i = 0; i < count; i++) {
            fn(i);
        }
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (size_t w = 0; w < workers; w++) {
        pool.emplace_back([&] {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= count) {
                    return;
                }
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) {
                        failure = std::current_exception();
                    }
                    next = count;
                }
            }
        });
    }
    for (auto &th : pool) {
        th.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

double log_derivative_scale(const EstimateReport &r, double log_base) {
    if (r.target == Target::VonNeumann) {
        return 1.0;
    }
    return 1.0 / std::abs((1.0 - r.alpha) * r.series_value * std::log(log_base));
}

}  // namespace

std::string_view entropyscope::shot_mode_name(ShotMode mode) {
    return mode == ShotMode::Exact ? "exact" : "sampled";
}

ShotMode entropyscope::parse_shot_mode(std::string_view name) {
    if (name == "exact") {
        return ShotMode::Exact;
    }
    if (name == "sampled") {
        return ShotMode::Sampled;
    }
    throw Error(ErrorKind::InvalidArgument, "unknown shot mode '" + std::string(name) + "'");
}

std::string_view entropyscope::purity_source_name(PuritySource source) {
    switch (source) {
        case PuritySource::Oracle:
            return "oracle";
        case PuritySource::SwapTest:
            return "swap_test";
        case PuritySource::User:
            return "user";
    }
    return "oracle";
}

PuritySource entropyscope::parse_purity_source(std::string_view name) {
    if (name == "oracle") {
        return PuritySource::Oracle;
    }
    if (name == "swap_test" || name == "swap-test") {
        return PuritySource::SwapTest;
    }
    if (name == "user") {
        return PuritySource::User;
    }
    throw Error(ErrorKind::InvalidArgument, "unknown purity source '" + std::string(name) + "'");
}

void EstimatorConfig::validate() const {
    check_open_unit(epsilon, "eps");
    check_open_unit(delta, "delta");
    check_open_unit(lambda_floor, "lambda");
    if (alpha) {
        check_alpha(*alpha);
    }
    if (!(log_base > 1.0) || !std::isfinite(log_base)) {
        throw Error(ErrorKind::InvalidArgument, "log base must exceed 1");
    }
    if (draws < 0) {
        throw Error(ErrorKind::InvalidArgument, "draw count must be nonnegative");
    }
    if (threads < 1) {
        throw Error(ErrorKind::InvalidArgument, "thread count must be positive");
    }
    if (purity_source == PuritySource::User && !(purity_value > 0.0 && purity_value <= 1.0)) {
        throw Error(ErrorKind::InvalidArgument, "user purity must lie in (0,1]");
    }
    if (purity_source == PuritySource::SwapTest && purity_shots < 1) {
        throw Error(ErrorKind::InvalidArgument, "swap-test shot count must be positive");
    }
    if (!(copy_ceiling > 0)) {
        throw Error(ErrorKind::InvalidArgument, "copy ceiling must be positive");
    }
}

nlohmann::json EstimatorConfig::to_json() const {
    nlohmann::json j;
    j["entropy"] = alpha ? "renyi" : "vn";
    if (alpha) {
        j["alpha"] = *alpha;
    }
    j["eps"] = epsilon;
    j["delta"] = delta;
    j["lambda"] = lambda_floor;
    j["seed"] = seed;
    j["level"] = sim_level_name(level);
    j["shot_mode"] = shot_mode_name(shot_mode);
    j["purity_source"] = purity_source_name(purity_source);
    if (purity_source == PuritySource::SwapTest) {
        j["purity_shots"] = purity_shots;
    }
    if (purity_source == PuritySource::User) {
        j["purity_value"] = purity_value;
    }
    j["log_base"] = log_base;
    j["draws"] = draws;
    j["enumerate"] = enumerate;
    j["copy_ceiling"] = copy_ceiling;
    return j;
}

SampleCounts entropyscope::sample_counts(double l1_norm, double eps_budget, double delta, long long N) {
    if (!(l1_norm > 0) || !(eps_budget > 0) || !(delta > 0) || N < 1) {
        throw Error(ErrorKind::InvalidArgument, "sample counts need positive l1 norm, budget, delta and N");
    }
    SampleCounts out;
    out.eps_prime = eps_budget / l1_norm;
    double ratio = l1_norm / eps_budget;
    out.B = static_cast<long long>(std::ceil(2.0 * ratio * ratio * std::log(4.0 / delta)));
    out.M = static_cast<long long>(
        std::ceil(2.0 * std::log(4.0 * static_cast<double>(N) / delta) / (out.eps_prime * out.eps_prime)));
    return out;
}

int entropyscope::segments_for(double t, double eps_prime) {
    double q = std::ceil(2.0 * t * t / eps_prime);
    if (q > 1e9) {
        throw Error(ErrorKind::InfeasibleBudget, "term at t = " + std::to_string(t) + " needs too many segments");
    }
    return std::max(1, static_cast<int>(q));
}

ImportanceSampler::ImportanceSampler(const SeriesPlan &plan) {
    double running = 0;
    for (const auto &term : plan.terms) {
        running += std::abs(term.f);
        cumulative_.push_back(running);
        signs_.push_back(term.f < 0 ? -1.0 : 1.0);
    }
    total_ = running;
    if (!(total_ > 0)) {
        throw Error(ErrorKind::InvalidArgument, "plan has no nonzero weights to sample");
    }
}

size_t ImportanceSampler::draw(Rng &rng) const {
    double u = rng.uniform() * total_;
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    size_t idx = static_cast<size_t>(it - cumulative_.begin());
    idx = std::min(idx, cumulative_.size() - 1);
    // Zero-weight terms share a cumulative value with a predecessor and are
    // never selected by upper_bound; guard against the u == total edge.
    while (idx > 0 && cumulative_[idx] == cumulative_[idx - 1]) {
        idx--;
    }
    return idx;
}

double ImportanceSampler::probability(size_t term) const {
    double prev = term == 0 ? 0.0 : cumulative_[term - 1];
    return (cumulative_[term] - prev) / total_;
}

HadamardTestResult ExpectationCache::get(const DensityMatrix &rho, double t, int Q, SimLevel level) {
    auto key = std::make_tuple(t, Q, static_cast<int>(level));
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = entries_.find(key);
        if (it != entries_.end()) {
            return it->second;
        }
    }
    HadamardTestResult r = hadamard_test_expectation(rho, t, Q, level);
    std::lock_guard<std::mutex> lock(mutex_);
    entries_.emplace(key, r);
    return r;
}

size_t ExpectationCache::size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return entries_.size();
}

double EstimateReport::recompute_estimate(double log_base) const {
    double mean = 0;
    for (const auto &r : records) {
        mean += r.weight * r.value;
    }
    double offset = target == Target::Renyi ? 1.0 : 0.0;
    double value = offset + l1_norm * mean;
    if (target == Target::VonNeumann) {
        return value;
    }
    if (!(value > 0)) {
        throw Error(ErrorKind::NonpositiveArgument, "Renyi logarithm argument is not positive");
    }
    return std::log(value) / std::log(log_base) / (1.0 - alpha);
}

nlohmann::json EstimateReport::to_json() const {
    nlohmann::json j;
    j["target"] = target == Target::VonNeumann ? "vn" : "renyi";
    if (target == Target::Renyi) {
        j["alpha"] = alpha;
        j["purity_used"] = purity_used;
    }
    j["estimate"] = estimate;
    j["series_value"] = series_value;
    j["standard_error"] = standard_error;
    j["plan"] = {{"K", K}, {"L", L}, {"l1_norm", l1_norm}, {"N", N}, {"epsilon_budget", eps_budget}};
    j["eps_prime"] = eps_prime;
    j["B"] = B;
    j["M"] = M;
    j["draws"] = draws;
    j["enumerated"] = enumerated;
    j["seed"] = seed;
    j["tally"] = {{"copies", tally.copies_used},
                  {"shots", tally.shots},
                  {"gates", gates_applicable ? nlohmann::json(tally.primitive_gates) : nlohmann::json("n/a")}};
    nlohmann::json recs = nlohmann::json::array();
    for (const auto &r : records) {
        recs.push_back({{"s", r.s},
                        {"l", r.l},
                        {"t", r.t},
                        {"Q", r.Q},
                        {"shots", r.shots},
                        {"weight", r.weight},
                        {"value", r.value}});
    }
    j["records"] = recs;
    j["warnings"] = warnings;
    j["config"] = config;
    return j;
}

SeriesPlan entropyscope::plan_for(const DensityMatrix &rho, const EstimatorConfig &cfg, double *purity_used) {
    cfg.validate();
    if (!cfg.alpha) {
        return build_plan_vn(cfg.lambda_floor, cfg.epsilon);
    }
    double purity = 0;
    switch (cfg.purity_source) {
        case PuritySource::Oracle:
            purity = purity_exact(rho);
            break;
        case PuritySource::SwapTest: {
            Rng rng = Rng(cfg.seed).split(kPurityStream);
            purity = sample_shots(swap_test_expectation(rho), cfg.purity_shots, rng);
            // A finite-shot estimate can leave (0,1]; keep it in range.
            purity = std::clamp(purity, 1.0 / static_cast<double>(rho.dim()), 1.0);
            break;
        }
        case PuritySource::User:
            purity = cfg.purity_value;
            break;
    }
    if (purity_used) {
        *purity_used = purity;
    }
    double xi = xi_from_epsilon(*cfg.alpha, cfg.epsilon, purity);
    return build_plan_renyi(*cfg.alpha, cfg.lambda_floor, xi);
}

EstimateReport entropyscope::estimate_with_plan(const DensityMatrix &rho, const SeriesPlan &plan,
                                                const EstimatorConfig &cfg, ExpectationCache *cache) {
    cfg.validate();
    ExpectationCache local_cache;
    if (!cache) {
        cache = &local_cache;
    }
    EstimateReport rep;
    rep.target = plan.target;
    rep.alpha = plan.alpha;
    rep.K = plan.K;
    rep.L = plan.L_floor;
    rep.l1_norm = plan.l1_norm;
    rep.N = plan.union_bound_terms();
    rep.eps_budget = plan.epsilon_budget;
    rep.seed = cfg.seed;
    rep.enumerated = cfg.enumerate;
    rep.gates_applicable = cfg.level == SimLevel::Gate;
    rep.config = cfg.to_json();

    double lambda_min = rho.spectrum().min_eigenvalue();
    if (lambda_min < plan.lambda_floor) {
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "minimum eigenvalue %.6g is below the floor %.6g; the accuracy guarantee does not apply",
                      lambda_min, plan.lambda_floor);
        rep.warnings.push_back(buf);
    }

    SampleCounts counts = sample_counts(plan.l1_norm, plan.epsilon_budget, cfg.delta, rep.N);
    rep.B = counts.B;
    rep.M = counts.M;
    rep.eps_prime = counts.eps_prime;

    std::vector<int> q_of(plan.terms.size(), 1);
    int q_max = 1;
    for (size_t i = 0; i < plan.terms.size(); i++) {
        if (plan.terms[i].f != 0) {
            q_of[i] = segments_for(plan.terms[i].t, counts.eps_prime);
            q_max = std::max(q_max, q_of[i]);
        }
    }

    ImportanceSampler sampler(plan);
    Rng master(cfg.seed);

    // Which terms are evaluated, and with what weight each contributes.
    std::vector<size_t> chosen;
    std::vector<double> weights;
    double projected_copies = 0;
    if (cfg.enumerate) {
        for (size_t i = 0; i < plan.terms.size(); i++) {
            if (plan.terms[i].f != 0) {
                chosen.push_back(i);
                weights.push_back(std::abs(plan.terms[i].f) / plan.l1_norm);
                projected_copies += static_cast<double>(counts.M) * (q_of[i] + 1);
            }
        }
    } else {
        long long draws = cfg.draws > 0 ? cfg.draws : counts.B;
        projected_copies = static_cast<double>(draws) * static_cast<double>(counts.M) * (q_max + 1);
        if (projected_copies <= cfg.copy_ceiling) {
            Rng sampler_rng = master.split(kSamplerStream);
            for (long long j = 0; j < draws; j++) {
                chosen.push_back(sampler.draw(sampler_rng));
                weights.push_back(1.0 / static_cast<double>(draws));
            }
        }
    }
    if (projected_copies > cfg.copy_ceiling) {
        char buf[200];
        std::snprintf(buf, sizeof(buf), "run needs up to %.4g copies of the state, above the ceiling %.4g",
                      projected_copies, cfg.copy_ceiling);
        throw Error(ErrorKind::InfeasibleBudget, buf);
    }
    rep.draws = static_cast<long long>(chosen.size());

    // Exact expectations for each distinct term, computed once.
    std::vector<size_t> distinct = chosen;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<HadamardTestResult> exact(plan.terms.size());
    parallel_for(distinct.size(), cfg.threads, [&](size_t k) {
        size_t i = distinct[k];
        exact[i] = cache->get(rho, plan.terms[i].t, q_of[i], cfg.level);
    });

    rep.records.resize(chosen.size());
    parallel_for(chosen.size(), cfg.threads, [&](size_t j) {
        size_t i = chosen[j];
        const SeriesTerm &term = plan.terms[i];
        double measured = exact[i].expectation;
        if (cfg.shot_mode == ShotMode::Sampled) {
            Rng shot_rng = master.split(kShotStreamBase + j);
            measured = sample_shots(measured, counts.M, shot_rng);
        }
        TermRecord &r = rep.records[j];
        r.s = term.s;
        r.l = term.l;
        r.t = term.t;
        r.Q = q_of[i];
        r.shots = counts.M;
        r.weight = weights[j];
        r.value = sampler.sign(i) * measured;
    });

    // Fixed-order aggregation.
    double mean = 0;
    for (size_t j = 0; j < chosen.size(); j++) {
        const TermRecord &r = rep.records[j];
        mean += r.weight * r.value;
        ResourceTally per_shot = exact[chosen[j]].tally;
        rep.tally.copies_used += per_shot.copies_used * r.shots;
        rep.tally.primitive_gates += per_shot.primitive_gates * r.shots;
        rep.tally.shots += r.shots;
    }
    if (!rep.gates_applicable) {
        rep.tally.primitive_gates = 0;
    }
    rep.series_value = plan.constant_offset + plan.l1_norm * mean;
    rep.purity_used = 0;

    // Standard error of the series value.
    double var = 0;
    if (cfg.enumerate) {
        if (cfg.shot_mode == ShotMode::Sampled) {
            for (size_t j = 0; j < chosen.size(); j++) {
                double e = exact[chosen[j]].expectation;
                var += rep.records[j].weight * rep.records[j].weight * (1.0 - e * e) / counts.M;
            }
        }
    } else if (chosen.size() > 1) {
        double sq = 0;
        for (const auto &r : rep.records) {
            sq += (r.value - mean) * (r.value - mean);
        }
        var = sq / static_cast<double>(chosen.size() - 1) / static_cast<double>(chosen.size());
    }
    double series_se = plan.l1_norm * std::sqrt(var);

    rep.estimate = entropy_from_series_value(plan, rep.series_value, cfg.log_base);
    rep.standard_error = series_se * log_derivative_scale(rep, cfg.log_base);
    return rep;
}

EstimateReport entropyscope::estimate_von_neumann(const DensityMatrix &rho, const EstimatorConfig &cfg,
                                                  ExpectationCache *cache) {
    EstimatorConfig c = cfg;
    c.alpha.reset();
    return estimate_with_plan(rho, plan_for(rho, c), c, cache);
}

EstimateReport entropyscope::estimate_renyi(const DensityMatrix &rho, const EstimatorConfig &cfg,
                                            ExpectationCache *cache) {
    if (!cfg.alpha) {
        throw Error(ErrorKind::AlphaOutOfRange, "Renyi estimation needs alpha");
    }
    double purity = 0;
    SeriesPlan plan = plan_for(rho, cfg, &purity);
    EstimateReport rep = estimate_with_plan(rho, plan, cfg, cache);
    rep.purity_used = purity;
    return rep;
}

EstimateReport entropyscope::estimate_entropy(const DensityMatrix &rho, const EstimatorConfig &cfg,
                                              ExpectationCache *cache) {
    return cfg.alpha ? estimate_renyi(rho, cfg, cache) : estimate_von_neumann(rho, cfg, cache);
}

nlohmann::json ResourceSummary::to_json() const {
    return {{"copies", copies},
            {"gates", gates_applicable ? nlohmann::json(gates) : nlohmann::json("n/a")},
            {"shots", shots},
            {"draws", draws},
            {"copy_formula", copy_formula},
            {"copy_scale", copy_scale},
            {"gate_formula", gate_formula},
            {"gate_scale", gate_scale}};
}

ResourceSummary entropyscope::resource_report(const EstimateReport &report, int num_qubits) {
    ResourceSummary s;
    for (const auto &r : report.records) {
        // Each record stands for r.shots runs of a (Q+1)-copy circuit.
        s.copies += static_cast<long long>(r.Q + 1) * r.shots;
        s.shots += r.shots;
    }
    s.gates = report.gates_applicable ? report.tally.primitive_gates : 0;
    s.gates_applicable = report.gates_applicable;
    s.draws = report.draws;
    double eps = report.config.value("eps", report.eps_budget);
    double lambda = report.config.value("lambda", 0.35);
    if (report.target == Target::VonNeumann) {
        s.copy_formula = "O~(1/(eps^5 Lambda^2))";
        s.gate_formula = "O~(n/(eps^3 Lambda^2))";
        s.copy_scale = 1.0 / (std::pow(eps, 5) * lambda * lambda);
        s.gate_scale = num_qubits / (std::pow(eps, 3) * lambda * lambda);
    } else {
        // Expressed through the trace precision xi that the run actually used.
        double xi = report.eps_budget;
        s.copy_formula = "O~(||f||^4/(xi^5 Lambda^2))";
        s.gate_formula = "O~(n ||f||^2/(xi^3 Lambda^2))";
        s.copy_scale = std::pow(report.l1_norm, 4) / (std::pow(xi, 5) * lambda * lambda);
        s.gate_scale = num_qubits * report.l1_norm * report.l1_norm / (std::pow(xi, 3) * lambda * lambda);
    }
    return s;
}

double entropyscope::oracle_entropy(const DensityMatrix &rho, const EstimatorConfig &cfg) {
    if (cfg.alpha) {
        return renyi_exact(rho, *cfg.alpha, cfg.log_base);
    }
    return von_neumann_exact(rho);
}

std::vector<SweepRow> entropyscope::noise_sweep(const DensityMatrix &rho, ChannelFamily family,
                                                const std::vector<double> &levels, const EstimatorConfig &cfg,
                                                int repeats) {
    if (repeats < 1) {
        throw Error(ErrorKind::InvalidArgument, "repeat count must be positive");
    }
    if (rho.num_qubits() != 1) {
        throw Error(ErrorKind::DimMismatch, "noise channels are single-qubit");
    }
    double clean = oracle_entropy(rho, cfg);
    std::vector<SweepRow> rows;
    for (double p : levels) {
        DensityMatrix noisy = apply_channel(rho, make_channel(family, p));
        ExpectationCache cache;
        SweepRow row;
        row.p = p;
        row.oracle_noisy = oracle_entropy(noisy, cfg);
        row.oracle_clean = clean;
        std::vector<double> estimates;
        for (int r = 0; r < repeats; r++) {
            EstimatorConfig c = cfg;
            c.seed = cfg.seed + static_cast<uint64_t>(r);
            EstimateReport rep = estimate_entropy(noisy, c, &cache);
            estimates.push_back(rep.estimate);
            row.copies += rep.tally.copies_used;
            row.gates += rep.tally.primitive_gates;
            if (repeats == 1) {
                row.stderr_value = rep.standard_error;
            }
        }
        double mean = 0;
        for (double e : estimates) {
            mean += e;
        }
        mean /= repeats;
        row.estimate = mean;
        if (repeats > 1) {
            double sq = 0;
            for (double e : estimates) {
                sq += (e - mean) * (e - mean);
            }
            row.stderr_value = std::sqrt(sq / (repeats - 1) / repeats);
        }
        rows.push_back(row);
    }
    return rows;
}

std::string entropyscope::sweep_to_csv(const std::vector<SweepRow> &rows, const std::string &comment) {
    std::ostringstream out;
    out << "# " << comment << "\n";
    out << "p,estimate,oracle_noisy,oracle_clean,stderr,copies,gates\n";
    char buf[256];
    for (const auto &r : rows) {
        std::snprintf(buf, sizeof(buf), "%.4f,%.10f,%.10f,%.10f,%.10f,%lld,%lld\n", r.p, r.estimate, r.oracle_noisy,
                      r.oracle_clean, r.stderr_value, r.copies, r.gates);
        out << buf;
    }
    return out.str();
}
