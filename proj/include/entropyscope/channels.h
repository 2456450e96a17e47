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

#ifndef ENTROPYSCOPE_CHANNELS_H
#define ENTROPYSCOPE_CHANNELS_H

#include <string_view>
#include <vector>

#include "entropyscope/density_matrix.h"

namespace entropyscope {

/// A completely positive map given by Kraus operators. The constructor checks
/// that all operators share one power-of-two dimension and that the map is
/// trace preserving.
class KrausChannel {
   public:
    explicit KrausChannel(std::vector<Matrix> kraus_ops, const Tolerances &tol = Tolerances{});

    const std::vector<Matrix> &kraus_ops() const {
        return kraus_ops_;
    }
    size_t dim() const {
        return static_cast<size_t>(kraus_ops_.front().rows());
    }

   private:
    std::vector<Matrix> kraus_ops_;
};

enum class ChannelFamily { AmplitudeDamping, Depolarizing };

std::string_view channel_family_name(ChannelFamily family);
ChannelFamily parse_channel_family(std::string_view name);

/// Single-qubit amplitude damping with decay probability p.
KrausChannel amplitude_damping(double p);

/// Single-qubit depolarizing channel (1-p) rho + (p/3)(X rho X + Y rho Y + Z rho Z).
KrausChannel depolarizing(double p);

KrausChannel make_channel(ChannelFamily family, double p);

DensityMatrix apply_channel(const DensityMatrix &rho, const KrausChannel &ch,
                            const Tolerances &tol = Tolerances{});

}  // namespace entropyscope

#endif
