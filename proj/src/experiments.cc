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


#include "entropyscope/experiments.h"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "entropyscope/oracles.h"

using namespace entropyscope;

namespace {

DensityMatrix real_symmetric_qubit(double a, double b) {
    Matrix m(2, 2);
    m << a, b, b, 1.0 - a;
    return validate_state(m);
}

std::string header_comment(const char *figure, const ReproduceOptions &opts, long long draws) {
    std::ostringstream out;
    out << "entropyscope " << figure << " schema=v1 seed=" << opts.seed << " level=" << sim_level_name(opts.level)
        << " repeats=" << opts.repeats << " draws=" << (draws > 0 ? std::to_string(draws) : std::string("hoeffding"));
    return out.str();
}

EstimatorConfig base_config(const ReproduceOptions &opts) {
    EstimatorConfig cfg;
    cfg.epsilon = 0.2;
    cfg.delta = 0.1;
    cfg.lambda_floor = 0.35;
    cfg.level = opts.level;
    cfg.shot_mode = ShotMode::Sampled;
    cfg.draws = opts.draws;
    cfg.threads = opts.threads;
    return cfg;
}

std::string fmt(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10f", v);
    return buf;
}

}  // namespace

DensityMatrix entropyscope::reference_state() {
    return real_symmetric_qubit(0.48786, 0.0094);
}

std::vector<DensityMatrix> entropyscope::benchmark_states() {
    return {
        real_symmetric_qubit(0.37336237, -0.02597119),
        real_symmetric_qubit(0.42050704, -0.08174482),
        real_symmetric_qubit(0.58221067, -0.04587666),
        real_symmetric_qubit(0.42932114, -0.02696812),
    };
}

DensityMatrix entropyscope::noise_input_state() {
    return real_symmetric_qubit(0.5398, -0.1217);
}

std::vector<double> entropyscope::noise_levels() {
    return {0.0, 0.02, 0.04, 0.06, 0.08, 0.10, 0.12, 0.15};
}

std::vector<double> entropyscope::running_estimates(const EstimateReport &report, double log_base) {
    std::vector<double> out;
    double sum = 0;
    double offset = report.target == Target::Renyi ? 1.0 : 0.0;
    for (size_t j = 0; j < report.records.size(); j++) {
        sum += report.records[j].value;
        double value = offset + report.l1_norm * sum / static_cast<double>(j + 1);
        if (report.target == Target::VonNeumann) {
            out.push_back(value);
        } else if (value > 0) {
            out.push_back(std::log(value) / std::log(log_base) / (1.0 - report.alpha));
        } else {
            out.push_back(std::numeric_limits<double>::quiet_NaN());
        }
    }
    return out;
}

CsvFiles entropyscope::reproduce_fig3(const ReproduceOptions &opts) {
    DensityMatrix rho = reference_state();
    CsvFiles files;
    for (int renyi = 0; renyi < 2; renyi++) {
        std::ostringstream csv;
        csv << "# " << header_comment("fig3", opts, opts.draws) << " entropy=" << (renyi ? "renyi2" : "vn") << "\n";
        csv << "eps,repeat,draw,estimate,oracle\n";
        for (double eps : {0.2, 0.4}) {
            EstimatorConfig cfg = base_config(opts);
            cfg.epsilon = eps;
            if (renyi) {
                cfg.alpha = 2.0;
            }
            double oracle = oracle_entropy(rho, cfg);
            ExpectationCache cache;
            for (int r = 0; r < opts.repeats; r++) {
                cfg.seed = opts.seed + static_cast<uint64_t>(r);
                EstimateReport rep = estimate_entropy(rho, cfg, &cache);
                std::vector<double> running = running_estimates(rep);
                for (size_t j = 0; j < running.size(); j++) {
                    csv << eps << ',' << r << ',' << (j + 1) << ',' << fmt(running[j]) << ',' << fmt(oracle) << "\n";
                }
            }
        }
        files[renyi ? "fig3_renyi2.csv" : "fig3_vn.csv"] = csv.str();
    }
    return files;
}

CsvFiles entropyscope::reproduce_fig4(const ReproduceOptions &opts) {
    std::ostringstream csv;
    csv << "# " << header_comment("fig4", opts, opts.draws) << "\n";
    csv << "state,entropy,oracle,series,mean,std\n";
    std::vector<DensityMatrix> states = benchmark_states();
    for (size_t k = 0; k < states.size(); k++) {
        for (int renyi = 0; renyi < 2; renyi++) {
            EstimatorConfig cfg = base_config(opts);
            if (renyi) {
                cfg.alpha = 2.0;
            }
            SeriesPlan plan = plan_for(states[k], cfg);
            double series = entropy_from_series_value(plan, eval_plan_exact(plan, states[k]));
            ExpectationCache cache;
            std::vector<double> estimates;
            for (int r = 0; r < opts.repeats; r++) {
                cfg.seed = opts.seed + static_cast<uint64_t>(r);
                estimates.push_back(estimate_entropy(states[k], cfg, &cache).estimate);
            }
            double mean = 0;
            for (double e : estimates) {
                mean += e;
            }
            mean /= static_cast<double>(estimates.size());
            double sq = 0;
            for (double e : estimates) {
                sq += (e - mean) * (e - mean);
            }
            double sd = estimates.size() > 1 ? std::sqrt(sq / static_cast<double>(estimates.size() - 1)) : 0.0;
            csv << "rho" << (k + 1) << ',' << (renyi ? "renyi2" : "vn") << ',' << fmt(oracle_entropy(states[k], cfg))
                << ',' << fmt(series) << ',' << fmt(mean) << ',' << fmt(sd) << "\n";
        }
    }
    return {{"fig4.csv", csv.str()}};
}

CsvFiles entropyscope::reproduce_fig5(const ReproduceOptions &opts) {
    DensityMatrix rho = noise_input_state();
    CsvFiles files;
    for (ChannelFamily family : {ChannelFamily::AmplitudeDamping, ChannelFamily::Depolarizing}) {
        for (int renyi = 0; renyi < 2; renyi++) {
            EstimatorConfig cfg = base_config(opts);
            cfg.seed = opts.seed;
            if (renyi) {
                cfg.alpha = 2.0;
            }
            std::vector<SweepRow> rows = noise_sweep(rho, family, noise_levels(), cfg, opts.repeats);
            std::string name = std::string(channel_family_name(family)) + (renyi ? "_renyi2" : "_vn");
            std::string comment = header_comment("fig5", opts, opts.draws) + " channel=" +
                                  std::string(channel_family_name(family)) + " entropy=" + (renyi ? "renyi2" : "vn");
            files["fig5_" + name + ".csv"] = sweep_to_csv(rows, comment);
        }
    }
    return files;
}
