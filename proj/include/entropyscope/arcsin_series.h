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

#ifndef ENTROPYSCOPE_ARCSIN_SERIES_H
#define ENTROPYSCOPE_ARCSIN_SERIES_H

#include <vector>

namespace entropyscope {

/// Taylor coefficients of arcsin(y)/(pi/2) up to degree max_l. Even degrees
/// vanish; odd ones come from a running product so no factorial is formed.
std::vector<double> arcsin_base_coeffs(int max_l);

/// Cauchy product of two coefficient lists, truncated to their common length.
std::vector<double> power_convolve(const std::vector<double> &table_k, const std::vector<double> &base);

/// Coefficients of (arcsin(y)/(pi/2))^k for 0 <= k <= max_k and degrees
/// 0 <= l <= max_l. Row 0 is the constant polynomial 1.
class ArcsinPowerTable {
   public:
    ArcsinPowerTable(int max_k, int max_l);

    double at(int k, int l) const {
        return rows_[k][l];
    }
    const std::vector<double> &row(int k) const {
        return rows_[k];
    }
    int max_k() const {
        return max_k_;
    }
    int max_l() const {
        return max_l_;
    }

   private:
    int max_k_;
    int max_l_;
    std::vector<std::vector<double>> rows_;
};

}  // namespace entropyscope

#endif
