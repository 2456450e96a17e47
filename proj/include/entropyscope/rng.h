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

#ifndef ENTROPYSCOPE_RNG_H
#define ENTROPYSCOPE_RNG_H

#include <cstdint>
#include <random>

namespace entropyscope {

/// Seeded random source. The engine is std::mt19937_64, whose output sequence
/// is fixed by the standard; the real-valued transforms are written out here
/// because the standard distributions are implementation defined.
class Rng {
   public:
    explicit Rng(uint64_t seed);

    uint64_t next_u64() {
        return engine_();
    }
    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    /// Uniform on (0, 1].
    double uniform_open_zero();
    double normal();
    double exponential();

    /// An independent stream derived from this generator's seed and a stream
    /// index. Does not advance this generator.
    Rng split(uint64_t stream) const;

    uint64_t seed() const {
        return seed_;
    }

   private:
    uint64_t seed_;
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0;
};

uint64_t splitmix64(uint64_t x);

}  // namespace entropyscope

#endif
