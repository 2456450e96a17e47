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

#include "entropyscope/error.h"

using namespace entropyscope;

std::string_view entropyscope::error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::BadDimension:
            return "BadDimension";
        case ErrorKind::NotHermitian:
            return "NotHermitian";
        case ErrorKind::TraceNotOne:
            return "TraceNotOne";
        case ErrorKind::NotPSD:
            return "NotPSD";
        case ErrorKind::DimMismatch:
            return "DimMismatch";
        case ErrorKind::NotTracePreserving:
            return "NotTracePreserving";
        case ErrorKind::InfeasibleFloor:
            return "InfeasibleFloor";
        case ErrorKind::AlphaOutOfRange:
            return "AlphaOutOfRange";
        case ErrorKind::BetaOutOfRange:
            return "BetaOutOfRange";
        case ErrorKind::BadDt:
            return "BadDt";
        case ErrorKind::InfeasibleBudget:
            return "InfeasibleBudget";
        case ErrorKind::NonpositiveArgument:
            return "NonpositiveArgument";
        case ErrorKind::InvalidArgument:
            return "InvalidArgument";
        case ErrorKind::BadInput:
            return "BadInput";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {
}
