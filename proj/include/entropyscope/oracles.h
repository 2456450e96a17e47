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

#ifndef ENTROPYSCOPE_ORACLES_H
#define ENTROPYSCOPE_ORACLES_H

#include <numbers>

#include "entropyscope/density_matrix.h"

namespace entropyscope {

// Exact spectral values of the quantities the estimators approximate. These
// are the references every circuit and series result is tested against.

/// -sum lambda ln lambda in nats, skipping eigenvalues below the zero cutoff.
double von_neumann_exact(const DensityMatrix &rho, const Tolerances &tol = Tolerances{});

/// (1/(1-alpha)) log_base sum lambda^alpha over nonzero eigenvalues.
double renyi_exact(const DensityMatrix &rho, double alpha, double log_base = std::numbers::e,
                   const Tolerances &tol = Tolerances{});

/// sum lambda^alpha over nonzero eigenvalues, i.e. tr(rho^alpha).
double trace_power_exact(const DensityMatrix &rho, double alpha, const Tolerances &tol = Tolerances{});

/// sum lambda cos(lambda t) = tr(rho cos(rho t)).
double trace_cos_exact(const DensityMatrix &rho, double t);

/// tr(rho^2), computed as the squared Frobenius norm.
double purity_exact(const DensityMatrix &rho);

/// Throws AlphaOutOfRange unless alpha is in (0,1) or (1,inf).
void check_alpha(double alpha);

}  // namespace entropyscope

#endif
