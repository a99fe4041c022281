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

#include <string>
#include <string_view>

#include "qmcforge/circuit.hpp"

namespace qmcforge {

/// Parse the line-oriented `.qc` format:
///
///     qubits <k>
///     gate <EXPR> <wire> [<wire> ...]
///     cgate <EXPR> <target wires...> ctrl <control wires...>
///     measure <wire>
///
/// Wires are 1-based; unmeasured wires are terminated. `#` starts a comment.
/// The returned circuit has been validated.
Circuit parse_circuit(std::string_view source_text);

/// Inverse of parse_circuit (up to node numbering). Throws InvalidCircuit when
/// the circuit routes a wire to a different output position, which the
/// format cannot express.
std::string emit_circuit_text(const Circuit& c);

Circuit load_circuit_file(const std::string& path);

}  // namespace qmcforge
