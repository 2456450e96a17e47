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

#ifndef ENTROPYSCOPE_RANDOM_STATE_H
#define ENTROPYSCOPE_RANDOM_STATE_H

#include <cstdint>

#include "entropyscope/density_matrix.h"
#include "entropyscope/rng.h"

namespace entropyscope {

/// Haar-distributed unitary from the QR decomposition of a complex Ginibre
/// matrix, with the diagonal phases of R divided out.
Matrix haar_unitary(size_t dim, Rng &rng);

/// Random full-rank n-qubit state with every eigenvalue at least
/// lambda_floor. The spectrum is uniform on the simplex conditioned on the
/// floor (rejection sampling, with a shift-and-rescale fallback after 10^4
/// rejections) and the eigenbasis is Haar random.
DensityMatrix random_state_with_floor(int n, double lambda_floor, uint64_t seed);
DensityMatrix random_state_with_floor(int n, double lambda_floor, Rng &rng);

}  // namespace entropyscope

#endif
