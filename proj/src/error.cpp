// Copyright 2026 The qmcforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qmcforge/error.hpp"

namespace qmcforge {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonSquare: return "NonSquare";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NonFinite: return "NonFinite";
        case ErrorCode::WireOutOfRange: return "WireOutOfRange";
        case ErrorCode::NotAPermutation: return "NotAPermutation";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::UnknownGate: return "UnknownGate";
        case ErrorCode::BadParameters: return "BadParameters";
        case ErrorCode::ArityMismatch: return "ArityMismatch";
        case ErrorCode::ValidationFailed: return "ValidationFailed";
        case ErrorCode::CycleDetected: return "CycleDetected";
        case ErrorCode::InvalidCircuit: return "InvalidCircuit";
        case ErrorCode::NotNormalForm: return "NotNormalForm";
        case ErrorCode::OutcomeOutOfRange: return "OutcomeOutOfRange";
        case ErrorCode::InvalidQmc: return "InvalidQmc";
        case ErrorCode::ReparseError: return "ReparseError";
        case ErrorCode::BitLengthMismatch: return "BitLengthMismatch";
        case ErrorCode::BadInitialState: return "BadInitialState";
        case ErrorCode::SizeOutOfRange: return "SizeOutOfRange";
        case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

namespace {

std::string compose(ErrorCode code, const std::string& message, std::optional<std::size_t> line) {
    std::string out(to_string(code));
    if (line) {
        out += " (line " + std::to_string(*line) + ")";
    }
    out += ": ";
    out += message;
    return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message, std::optional<std::size_t> line)
    : std::runtime_error(compose(code, message, line)), code_(code), line_(line) {}

}  // namespace qmcforge
