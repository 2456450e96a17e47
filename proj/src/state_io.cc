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

#include "entropyscope/state_io.h"

#include <fstream>
#include <sstream>

#include "entropyscope/error.h"

using namespace entropyscope;

namespace {

std::vector<std::vector<double>> read_rows(const nlohmann::json &j, const char *key) {
    if (!j.is_array()) {
        throw Error(ErrorKind::BadInput, std::string("field '") + key + "' must be an array of rows");
    }
    std::vector<std::vector<double>> rows;
    for (const auto &row : j) {
        if (!row.is_array()) {
            throw Error(ErrorKind::BadInput, std::string("field '") + key + "' must be an array of rows");
        }
        std::vector<double> values;
        for (const auto &x : row) {
            if (!x.is_number()) {
                throw Error(ErrorKind::BadInput, std::string("field '") + key + "' has a non-numeric entry");
            }
            values.push_back(x.get<double>());
        }
        rows.push_back(std::move(values));
    }
    return rows;
}

}  // namespace

Matrix entropyscope::matrix_from_json(const nlohmann::json &j) {
    if (!j.is_object() || !j.contains("re")) {
        throw Error(ErrorKind::BadInput, "state must be an object with field 're' (and optionally 'im')");
    }
    auto re = read_rows(j.at("re"), "re");
    std::vector<std::vector<double>> im;
    if (j.contains("im")) {
        im = read_rows(j.at("im"), "im");
    }
    size_t rows = re.size();
    size_t cols = rows == 0 ? 0 : re[0].size();
    for (const auto &r : re) {
        if (r.size() != cols) {
            throw Error(ErrorKind::BadDimension, "rows of 're' have different lengths");
        }
    }
    if (!im.empty()) {
        if (im.size() != rows) {
            throw Error(ErrorKind::BadDimension, "'re' and 'im' have different shapes");
        }
        for (const auto &r : im) {
            if (r.size() != cols) {
                throw Error(ErrorKind::BadDimension, "'re' and 'im' have different shapes");
            }
        }
    }
    Matrix m(rows, cols);
    for (size_t r = 0; r < rows; r++) {
        for (size_t c = 0; c < cols; c++) {
            m(r, c) = cplx(re[r][c], im.empty() ? 0.0 : im[r][c]);
        }
    }
    return m;
}

nlohmann::json entropyscope::matrix_to_json(const Matrix &m) {
    nlohmann::json re = nlohmann::json::array();
    nlohmann::json im = nlohmann::json::array();
    for (Eigen::Index r = 0; r < m.rows(); r++) {
        nlohmann::json rr = nlohmann::json::array();
        nlohmann::json ir = nlohmann::json::array();
        for (Eigen::Index c = 0; c < m.cols(); c++) {
            rr.push_back(m(r, c).real());
            ir.push_back(m(r, c).imag());
        }
        re.push_back(rr);
        im.push_back(ir);
    }
    return {{"re", re}, {"im", im}};
}

DensityMatrix entropyscope::state_from_json(const nlohmann::json &j, const Tolerances &tol) {
    return validate_state(matrix_from_json(j), tol);
}

std::string entropyscope::read_text_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::BadInput, "cannot open '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void entropyscope::write_text_file(const std::string &path, const std::string &contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(ErrorKind::BadInput, "cannot write '" + path + "'");
    }
    out << contents;
}

DensityMatrix entropyscope::load_state(const std::string &path, const Tolerances &tol) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_text_file(path));
    } catch (const nlohmann::json::parse_error &e) {
        throw Error(ErrorKind::BadInput, "'" + path + "' is not valid JSON: " + e.what());
    }
    return state_from_json(j, tol);
}

void entropyscope::save_state(const std::string &path, const DensityMatrix &rho) {
    write_text_file(path, matrix_to_json(rho.matrix()).dump(2) + "\n");
}
