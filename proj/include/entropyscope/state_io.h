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

#ifndef ENTROPYSCOPE_STATE_IO_H
#define ENTROPYSCOPE_STATE_IO_H

#include <string>

#include "json.hpp"

#include "entropyscope/density_matrix.h"

namespace entropyscope {

// States are stored as {"re": [[...]], "im": [[...]]}, row major. "im" may be
// omitted for real matrices.

Matrix matrix_from_json(const nlohmann::json &j);
nlohmann::json matrix_to_json(const Matrix &m);

DensityMatrix state_from_json(const nlohmann::json &j, const Tolerances &tol = Tolerances{});
DensityMatrix load_state(const std::string &path, const Tolerances &tol = Tolerances{});
void save_state(const std::string &path, const DensityMatrix &rho);

/// Reads a whole file or throws BadInput.
std::string read_text_file(const std::string &path);
void write_text_file(const std::string &path, const std::string &contents);

}  // namespace entropyscope

#endif
