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

#include "entropyscope/arcsin_series.h"

#include <numbers>

#include "entropyscope/error.h"

using namespace entropyscope;

std::vector<double> entropyscope::arcsin_base_coeffs(int max_l) {
    if (max_l < 0) {
        throw Error(ErrorKind::InvalidArgument, "max_l must be nonnegative");
    }
    std::vector<double> b(max_l + 1, 0.0);
    // c_m = binom(2m, m) / 4^m, built as c_m = c_{m-1} (2m-1)/(2m).
    double c = 1.0;
    for (int m = 0; 2 * m + 1 <= max_l; m++) {
        if (m > 0) {
            c *= (2.0 * m - 1.0) / (2.0 * m);
        }
        b[2 * m + 1] = (2.0 / std::numbers::pi) * c / (2.0 * m + 1.0);
    }
    return b;
}

std::vector<double> entropyscope::power_convolve(const std::vector<double> &table_k, const std::vector<double> &base) {
    if (table_k.size() != base.size()) {
        throw Error(ErrorKind::DimMismatch, "coefficient lists have different lengths");
    }
    size_t n = table_k.size();
    std::vector<double> out(n, 0.0);
    for (size_t l = 0; l < n; l++) {
        double acc = 0;
        for (size_t j = 0; j <= l; j++) {
            acc += table_k[j] * base[l - j];
        }
        out[l] = acc;
    }
    return out;
}

ArcsinPowerTable::ArcsinPowerTable(int max_k, int max_l) : max_k_(max_k), max_l_(max_l) {
    if (max_k < 0 || max_l < 0) {
        throw Error(ErrorKind::InvalidArgument, "table bounds must be nonnegative");
    }
    std::vector<double> base = arcsin_base_coeffs(max_l);
    std::vector<double> unit(max_l + 1, 0.0);
    unit[0] = 1.0;
    rows_.push_back(unit);
    for (int k = 1; k <= max_k; k++) {
        rows_.push_back(power_convolve(rows_.back(), base));
    }
}
