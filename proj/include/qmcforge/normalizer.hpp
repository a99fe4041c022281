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
#include <string>
#include <utility>
#include <vector>

#include "qmcforge/circuit.hpp"
#include "qmcforge/linalg.hpp"

namespace qmcforge {

/// <k, [U_1..U_n], h>: every U_i acts on the whole register, wire labels
/// line up between steps, and the h measured wires sit at positions 1..h
/// after the last step.
struct SnfCircuit {
    std::size_t k = 0;
    std::vector<CMatrix> unitaries;
    std::size_t h = 0;
    /// output_order[p - 1] is the original output wire at register position p.
    std::vector<std::size_t> output_order;
    /// Human-readable origin of each step, parallel to `unitaries`.
    std::vector<std::string> labels;
};

struct SwapAccountEntry {
    std::string gate;
    std::vector<std::size_t> wires;  // register wires feeding the gate, in input order
    std::size_t binary_swaps = 0;
};

/// Binary-swap cost of routing every gate (and the final output reordering,
/// recorded as its own "output-reorder" entry) under `strategy`.
struct SwapAccount {
    SwapStrategy strategy = SwapStrategy::Composed;
    std::vector<SwapAccountEntry> per_gate;
    std::size_t total = 0;
};

struct TranslateOptions {
    SwapStrategy strategy = SwapStrategy::Composed;
    /// Keep synthesized swaps as standalone steps instead of fusing them into
    /// the neighbouring unitary.
    bool emit_swaps_as_gates = false;
};

/// Pad every gate to the full register: a gate on wires (a_1..a_d) becomes
/// U (x) I fed by a_1..a_d and then the remaining wires in ascending order.
/// Circuits already in Normal Form are returned unchanged.
Circuit to_normal_form(const Circuit& c);

/// Throws NotNormalForm unless every gate spans the whole register.
std::pair<SnfCircuit, SwapAccount> to_snf(const Circuit& c, const TranslateOptions& opts = {});

/// to_snf(to_normal_form(c)).
std::pair<SnfCircuit, SwapAccount> translate(const Circuit& c, const TranslateOptions& opts = {});

/// The aligned DAG described by an SNF tuple: step i on wires 1..k in order,
/// positions 1..h measured and the rest terminated.
Circuit snf_to_circuit(const SnfCircuit& s);

/// Throws InvalidCircuit when a step is not a 2^k unitary or h > k.
void require_well_formed(const SnfCircuit& s, double tol = kDefaultTolerances.algebraic);

/// U_n ... U_1 (identity when n = 0).
CMatrix accumulated_unitary(const SnfCircuit& s);

}  // namespace qmcforge
