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

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qmcforge/linalg.hpp"

namespace qmcforge {

struct GateLibraryEntry {
    std::string name;  // canonical expression, e.g. "controlled(H)" or "RZ(0.5)"
    std::size_t arity = 0;
    CMatrix matrix;
};

/// Unitary of a base library gate: I X Y Z H S T CNOT CZ SWAP CCNOT (alias
/// TOFFOLI), and the rotations RX RY RZ P taking one angle in radians.
/// Controlled gates put their control on local input 1.
CMatrix gate_matrix(std::string_view name, std::span<const double> params = {});

/// Resolve a gate expression: a base name, optionally with parameters, or a
/// combinator `controlled(G)`, `adjoint(G)`, `tensor(G1, G2, ...)`.
/// Throws UnknownGate / BadParameters / SyntaxError.
GateLibraryEntry resolve_gate(std::string_view expression);

/// Base gate names accepted by gate_matrix.
std::vector<std::string> library_gate_names();

/// |0><0| (x) I + |1><1| (x) u, the control being the most significant wire.
CMatrix controlled(const CMatrix& u);

/// Shortest decimal that reads back to the same double; integers print
/// without a decimal point and -0 prints as 0.
std::string format_real(double value);

}  // namespace qmcforge
