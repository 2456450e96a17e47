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


#ifndef ENTROPYSCOPE_EXPERIMENTS_H
#define ENTROPYSCOPE_EXPERIMENTS_H

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "entropyscope/estimator.h"

namespace entropyscope {

/// Single-qubit state used for the convergence experiment.
DensityMatrix reference_state();

/// Four single-qubit states with minimum eigenvalue above 0.35.
std::vector<DensityMatrix> benchmark_states();

/// Input state and noise levels of the channel-robustness experiment.
DensityMatrix noise_input_state();
std::vector<double> noise_levels();

struct ReproduceOptions {
    uint64_t seed = 2024;
    SimLevel level = SimLevel::Matrix;
    int repeats = 20;
    /// Draws per estimate; 0 means the Hoeffding count. The convergence and
    /// benchmark experiments default to 100, the noise sweep to 0.
    long long draws = 100;
    int threads = 1;
};

/// Named CSV outputs of one experiment, keyed by file name.
using CsvFiles = std::map<std::string, std::string>;

/// Running mean after every draw for eps in {0.2, 0.4}, von Neumann and
/// alpha = 2, one series per (eps, repeat).
CsvFiles reproduce_fig3(const ReproduceOptions &opts);

/// Oracle, series value and repeat mean/std for each benchmark state.
CsvFiles reproduce_fig4(const ReproduceOptions &opts);

/// Noise sweeps for both channels and both entropies.
CsvFiles reproduce_fig5(const ReproduceOptions &opts);

/// Entropy after each draw of a sampled report (NaN while a Renyi argument
/// is not positive).
std::vector<double> running_estimates(const EstimateReport &report, double log_base = std::numbers::e);

}  // namespace entropyscope

#endif
