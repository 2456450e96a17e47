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

#include "entropyscope/channels.h"

#include <cmath>

#include "entropyscope/error.h"

using namespace entropyscope;

KrausChannel::KrausChannel(std::vector<Matrix> kraus_ops, const Tolerances &tol) : kraus_ops_(std::move(kraus_ops)) {
    if (kraus_ops_.empty()) {
        throw Error(ErrorKind::BadInput, "channel needs at least one Kraus operator");
    }
    Eigen::Index d = kraus_ops_.front().rows();
    if (d == 0 || !is_power_of_two(static_cast<size_t>(d))) {
        throw Error(ErrorKind::BadDimension, "Kraus operators must have power-of-two dimension");
    }
    Matrix sum = Matrix::Zero(d, d);
    for (const auto &k : kraus_ops_) {
        if (k.rows() != d || k.cols() != d) {
            throw Error(ErrorKind::DimMismatch, "Kraus operators have inconsistent shapes");
        }
        sum += k.adjoint() * k;
    }
    double defect = (sum - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
    if (defect > tol.trace_preserving) {
        throw Error(ErrorKind::NotTracePreserving,
                    "max |sum K^dagger K - I| = " + std::to_string(defect) + " exceeds tolerance");
    }
}

std::string_view entropyscope::channel_family_name(ChannelFamily family) {
    return family == ChannelFamily::AmplitudeDamping ? "amplitude_damping" : "depolarizing";
}

ChannelFamily entropyscope::parse_channel_family(std::string_view name) {
    if (name == "amplitude_damping" || name == "amp") {
        return ChannelFamily::AmplitudeDamping;
    }
    if (name == "depolarizing" || name == "depl") {
        return ChannelFamily::Depolarizing;
    }
    throw Error(ErrorKind::InvalidArgument, "unknown channel family '" + std::string(name) + "'");
}

static void check_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw Error(ErrorKind::InvalidArgument, "noise level must lie in [0,1], got " + std::to_string(p));
    }
}

KrausChannel entropyscope::amplitude_damping(double p) {
    check_probability(p);
    Matrix d0 = Matrix::Zero(2, 2);
    d0(0, 0) = 1;
    d0(1, 1) = std::sqrt(1 - p);
    Matrix d1 = Matrix::Zero(2, 2);
    d1(0, 1) = std::sqrt(p);
    return KrausChannel({d0, d1});
}

KrausChannel entropyscope::depolarizing(double p) {
    check_probability(p);
    double a = std::sqrt(1 - p);
    double b = std::sqrt(p / 3);
    return KrausChannel({a * Matrix::Identity(2, 2), b * pauli_x(), b * pauli_y(), b * pauli_z()});
}

KrausChannel entropyscope::make_channel(ChannelFamily family, double p) {
    return family == ChannelFamily::AmplitudeDamping ? amplitude_damping(p) : depolarizing(p);
}

DensityMatrix entropyscope::apply_channel(const DensityMatrix &rho, const KrausChannel &ch, const Tolerances &tol) {
    if (ch.dim() != rho.dim()) {
        throw Error(ErrorKind::DimMismatch, "channel acts on dimension " + std::to_string(ch.dim()) +
                                                " but state has dimension " + std::to_string(rho.dim()));
    }
    Matrix out = Matrix::Zero(rho.dim(), rho.dim());
    for (const auto &k : ch.kraus_ops()) {
        out += k * rho.matrix() * k.adjoint();
    }
    return validate_state(out, tol);
}
