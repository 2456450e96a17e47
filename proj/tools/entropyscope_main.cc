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
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "entropyscope/error.h"
#include "entropyscope/estimator.h"
#include "entropyscope/experiments.h"
#include "entropyscope/oracles.h"
#include "entropyscope/series_plan.h"
#include "entropyscope/state_io.h"

using namespace entropyscope;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;
constexpr int kExitBudget = 4;
constexpr int kExitInternal = 5;

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::BadDimension:
        case ErrorKind::NotHermitian:
        case ErrorKind::TraceNotOne:
        case ErrorKind::NotPSD:
        case ErrorKind::DimMismatch:
        case ErrorKind::NotTracePreserving:
        case ErrorKind::BadInput:
            return kExitInput;
        case ErrorKind::InfeasibleFloor:
        case ErrorKind::InfeasibleBudget:
        case ErrorKind::NonpositiveArgument:
            return kExitBudget;
        case ErrorKind::AlphaOutOfRange:
        case ErrorKind::BetaOutOfRange:
        case ErrorKind::BadDt:
        case ErrorKind::InvalidArgument:
            return kExitUsage;
    }
    return kExitInternal;
}

struct Flags {
    std::string entropy;
    std::optional<double> alpha;
    std::optional<double> lambda;
    double eps = 0.2;
    double delta = 0.1;
    uint64_t seed = 1;
    std::string level = "matrix";
    std::string shot_mode = "sampled";
    int repeats = 1;
    std::string state;
    std::string out;
    std::string plan_file;
    bool enumerate = false;
    long long draws = 0;
    std::string purity_source = "oracle";
    std::optional<double> purity;
    long long purity_shots = 100000;
    std::optional<double> xi;
    double log_base = std::exp(1.0);
    std::optional<int> threads;
    std::string figure;
};

int worker_count(const Flags &f) {
    int n = f.threads ? *f.threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    if (const char *env = std::getenv("ENTROPYSCOPE_THREADS")) {
        try {
            int cap = std::stoi(env);
            if (cap >= 1) {
                n = std::min(n, cap);
            }
        } catch (const std::exception &) {
            throw Error(ErrorKind::InvalidArgument, "ENTROPYSCOPE_THREADS must be a positive integer");
        }
    }
    return std::max(1, n);
}

EstimatorConfig config_from(const Flags &f) {
    EstimatorConfig cfg;
    if (f.entropy == "renyi") {
        if (!f.alpha) {
            throw Error(ErrorKind::InvalidArgument, "--entropy renyi needs --alpha");
        }
        cfg.alpha = *f.alpha;
    } else if (f.alpha) {
        throw Error(ErrorKind::InvalidArgument, "--alpha only applies to --entropy renyi");
    }
    cfg.epsilon = f.eps;
    cfg.delta = f.delta;
    cfg.lambda_floor = f.lambda.value_or(0.35);
    cfg.seed = f.seed;
    cfg.level = parse_sim_level(f.level);
    cfg.shot_mode = parse_shot_mode(f.shot_mode);
    cfg.purity_source = parse_purity_source(f.purity_source);
    if (f.purity) {
        cfg.purity_source = PuritySource::User;
        cfg.purity_value = *f.purity;
    }
    cfg.purity_shots = f.purity_shots;
    cfg.log_base = f.log_base;
    cfg.draws = f.draws;
    cfg.enumerate = f.enumerate;
    cfg.threads = worker_count(f);
    cfg.validate();
    return cfg;
}

void emit(const Flags &f, const std::string &text) {
    if (f.out.empty()) {
        std::cout << text;
    } else {
        write_text_file(f.out, text);
    }
}

int cmd_plan(const Flags &f) {
    if (!f.lambda) {
        throw Error(ErrorKind::InvalidArgument, "plan needs --lambda");
    }
    EstimatorConfig cfg = config_from(f);
    SeriesPlan plan;
    if (!cfg.alpha) {
        plan = build_plan_vn(cfg.lambda_floor, cfg.epsilon);
    } else if (f.xi) {
        plan = build_plan_renyi(*cfg.alpha, cfg.lambda_floor, *f.xi);
    } else if (f.purity || !f.state.empty()) {
        double purity = f.purity ? *f.purity : purity_exact(load_state(f.state));
        plan = build_plan_renyi(*cfg.alpha, cfg.lambda_floor, xi_from_epsilon(*cfg.alpha, cfg.epsilon, purity));
    } else {
        throw Error(ErrorKind::InvalidArgument, "a Renyi plan needs --xi, --purity or --state");
    }
    emit(f, plan_to_json(plan).dump(2) + "\n");
    return kExitOk;
}

int cmd_estimate(const Flags &f) {
    if (f.state.empty()) {
        throw Error(ErrorKind::InvalidArgument, "estimate needs --state");
    }
    if (f.repeats < 1) {
        throw Error(ErrorKind::InvalidArgument, "--repeats must be positive");
    }
    EstimatorConfig cfg = config_from(f);
    std::optional<SeriesPlan> plan;
    if (!f.plan_file.empty()) {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(read_text_file(f.plan_file));
        } catch (const nlohmann::json::parse_error &e) {
            throw Error(ErrorKind::BadInput, "plan file is not valid JSON: " + std::string(e.what()));
        }
        plan = plan_from_json(j);
        if (!f.entropy.empty() && f.entropy != plan->target_name()) {
            throw Error(ErrorKind::InvalidArgument, "--entropy disagrees with the plan file target");
        }
        cfg.alpha.reset();
        if (plan->target == Target::Renyi) {
            cfg.alpha = plan->alpha;
        }
        cfg.lambda_floor = plan->lambda_floor;
    }
    DensityMatrix rho = load_state(f.state);
    double oracle = oracle_entropy(rho, cfg);

    ExpectationCache cache;
    nlohmann::json runs = nlohmann::json::array();
    double sum = 0;
    double sq = 0;
    for (int r = 0; r < f.repeats; r++) {
        EstimatorConfig c = cfg;
        c.seed = cfg.seed + static_cast<uint64_t>(r);
        EstimateReport rep = plan ? estimate_with_plan(rho, *plan, c, &cache) : estimate_entropy(rho, c, &cache);
        for (const auto &w : rep.warnings) {
            std::cerr << "warning: " << w << "\n";
        }
        nlohmann::json j = rep.to_json();
        j["resources"] = resource_report(rep, rho.num_qubits()).to_json();
        j["oracle"] = oracle;
        runs.push_back(j);
        sum += rep.estimate;
        sq += rep.estimate * rep.estimate;
    }
    double mean = sum / f.repeats;
    nlohmann::json doc;
    if (f.repeats == 1) {
        doc = runs[0];
    } else {
        doc["seed"] = cfg.seed;
        doc["repeats"] = f.repeats;
        doc["mean"] = mean;
        doc["std"] = f.repeats > 1 ? std::sqrt(std::max(0.0, (sq - f.repeats * mean * mean) / (f.repeats - 1))) : 0.0;
        doc["oracle"] = oracle;
        doc["runs"] = runs;
    }
    emit(f, doc.dump(2) + "\n");
    char line[200];
    std::snprintf(line, sizeof(line), "%s estimate %.6f (oracle %.6f, seed %llu, %d run%s)\n",
                  cfg.alpha ? "renyi" : "vn", mean, oracle, static_cast<unsigned long long>(cfg.seed), f.repeats,
                  f.repeats == 1 ? "" : "s");
    (f.out.empty() ? std::cerr : std::cout) << line;
    return kExitOk;
}

int cmd_reproduce(const Flags &f, bool draws_given, bool repeats_given) {
    ReproduceOptions opts;
    opts.seed = f.seed;
    opts.level = parse_sim_level(f.level);
    opts.threads = worker_count(f);
    opts.repeats = repeats_given ? f.repeats : (f.figure == "fig5" ? 1 : 20);
    opts.draws = draws_given ? f.draws : (f.figure == "fig5" ? 0 : 100);
    if (opts.repeats < 1 || opts.draws < 0) {
        throw Error(ErrorKind::InvalidArgument, "--repeats must be positive and --draws nonnegative");
    }
    CsvFiles files;
    if (f.figure == "fig3") {
        files = reproduce_fig3(opts);
    } else if (f.figure == "fig4") {
        files = reproduce_fig4(opts);
    } else {
        files = reproduce_fig5(opts);
    }
    std::filesystem::path dir = f.out.empty() ? std::filesystem::path(".") : std::filesystem::path(f.out);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw Error(ErrorKind::BadInput, "cannot create output directory '" + dir.string() + "'");
    }
    for (const auto &[name, text] : files) {
        write_text_file((dir / name).string(), text);
        std::cout << (dir / name).string() << "\n";
    }
    return kExitOk;
}

void add_estimator_flags(CLI::App *cmd, Flags &f) {
    cmd->add_option("--entropy", f.entropy, "Target entropy")->check(CLI::IsMember({"vn", "renyi"}));
    cmd->add_option("--alpha", f.alpha, "Renyi order");
    cmd->add_option("--lambda", f.lambda, "Eigenvalue floor");
    cmd->add_option("--eps", f.eps, "Target precision")->capture_default_str();
    cmd->add_option("--delta", f.delta, "Failure probability")->capture_default_str();
    cmd->add_option("--purity", f.purity, "Purity used to set the Renyi trace precision");
    cmd->add_option("--log-base", f.log_base, "Logarithm base for Renyi entropy");
    cmd->add_option("--out", f.out, "Output file");
    cmd->add_option("--threads", f.threads, "Worker threads (capped by ENTROPYSCOPE_THREADS)");
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Entropy estimation by simulated Hadamard-test circuits"};
    app.require_subcommand(1);
    Flags f;

    CLI::App *plan = app.add_subcommand("plan", "Build a Fourier-series plan and print it as JSON");
    add_estimator_flags(plan, f);
    plan->add_option("--xi", f.xi, "Trace precision for a Renyi plan");
    plan->add_option("--state", f.state, "State file (sets purity for a Renyi plan)");

    CLI::App *estimate = app.add_subcommand("estimate", "Run the estimator on a state file");
    add_estimator_flags(estimate, f);
    estimate->add_option("--state", f.state, "State JSON {re, im}")->required();
    estimate->add_option("--seed", f.seed, "Master seed")->capture_default_str();
    estimate->add_option("--level", f.level, "Simulation level")->check(CLI::IsMember({"matrix", "gate"}));
    estimate->add_option("--shot-mode", f.shot_mode, "Shot model")->check(CLI::IsMember({"exact", "sampled"}));
    estimate->add_option("--repeats", f.repeats, "Independent runs with consecutive seeds");
    estimate->add_option("--plan-file", f.plan_file, "Use a plan exported by 'plan'");
    estimate->add_flag("--enumerate", f.enumerate, "Evaluate every term instead of sampling");
    estimate->add_option("--draws", f.draws, "Sampling draws (default: Hoeffding count)");
    estimate->add_option("--purity-source", f.purity_source, "Purity for the Renyi precision")
        ->check(CLI::IsMember({"oracle", "swap_test", "user"}));
    estimate->add_option("--purity-shots", f.purity_shots, "Swap-test shots");

    CLI::App *reproduce = app.add_subcommand("reproduce", "Write the CSV tables of one experiment");
    reproduce->add_option("figure", f.figure, "Experiment")->required()->check(CLI::IsMember({"fig3", "fig4", "fig5"}));
    reproduce->add_option("--seed", f.seed, "Master seed")->capture_default_str();
    reproduce->add_option("--level", f.level, "Simulation level")->check(CLI::IsMember({"matrix", "gate"}));
    CLI::Option *repeats_opt = reproduce->add_option("--repeats", f.repeats, "Repeats per configuration");
    CLI::Option *draws_opt = reproduce->add_option("--draws", f.draws, "Draws per estimate (0: Hoeffding count)");
    reproduce->add_option("--out", f.out, "Output directory");
    reproduce->add_option("--threads", f.threads, "Worker threads (capped by ENTROPYSCOPE_THREADS)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (plan->parsed()) {
            return cmd_plan(f);
        }
        if (estimate->parsed()) {
            return cmd_estimate(f);
        }
        return cmd_reproduce(f, draws_opt->count() > 0, repeats_opt->count() > 0);
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
