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

#include "qmcforge/linalg.hpp"
#include "qmcforge/qmc.hpp"

namespace qmcforge {

/// MATLAB-style literal: "[a, b; c, d]". Real entries use the shortest
/// round-trip decimal; complex ones are written "a+bi" / "a-bi".
std::string format_matrix(const CMatrix& m);

/// Inverse of format_matrix. Throws ReparseError (with `line`, if given) on
/// ragged rows or malformed entries.
CMatrix parse_matrix_literal(std::string_view text, std::size_t line = 0);

/// QPMC model text: `qmc` header, one `const matrix` per step / measurement
/// branch / identity, a module over integer state `s` with one guarded
/// command per state, and one label per atomic proposition. Output is a pure
/// function of the chain.
std::string emit_qpmc(const Qmc& q, std::string_view model_name);

/// Read back text produced by emit_qpmc. Only that structure is accepted.
Qmc reparse_model(std::string_view text);

/// `name` restricted to [A-Za-z0-9_], prefixed when it starts with a digit.
std::string sanitize_identifier(std::string_view name);

}  // namespace qmcforge
