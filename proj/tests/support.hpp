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
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qmcforge/circuit.hpp"
#include "qmcforge/linalg.hpp"

namespace qmcforge::testsupport {

/// Seeded circuit source for property tests: k in [1, max_k], up to
/// max_gates library gates on random distinct wires, random measured subset.
struct RandomCircuit {
    std::string text;
    Circuit circuit;
};

RandomCircuit random_circuit(std::mt19937_64& rng, std::size_t max_k = 4, std::size_t max_gates = 6);

/// Reference state-vector simulation that ignores the DAG machinery: applies
/// each gate of a `.qc` program by expanding it to the full register through
/// explicit basis-index arithmetic.
KetVector brute_force_run(const std::string& qc_text, const KetVector& input);

/// Probability that the measured wires (ascending) read `bits`, from a
/// brute-force final state.
double brute_force_probability(const KetVector& final_state, const std::vector<std::size_t>& measured,
                               const std::string& bits);

std::string golden_path(const std::string& name);
std::string circuits_path(const std::string& name);
std::string read_text(const std::string& path);

}  // namespace qmcforge::testsupport
