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
#include <vector>

#include "qmcforge/circuit.hpp"
#include "qmcforge/normalizer.hpp"

namespace qmcforge {

inline constexpr std::size_t kMinBenchSize = 3;
inline constexpr std::size_t kMaxBenchSize = 12;

/// Swap-heavy circuit of size k: gate i (0-based) is a CNOT on the wire pair
/// {i mod k + 1, (i + k/2) mod k + 1}, higher-numbered wire first, so every
/// gate needs a long routing permutation. Wire 1 is measured. Throws
/// SizeOutOfRange outside [3, 12].
Circuit gen_test_circuit(std::size_t k);
std::string gen_test_circuit_text(std::size_t k);

struct BenchOptions {
    std::size_t min_size = 3;
    std::size_t max_size = 8;
    std::size_t runs = 5;
    TranslateOptions translate;
};

struct BenchRow {
    std::size_t k = 0;
    std::vector<double> seconds;  // one per timed run
    double mean_seconds = 0.0;
    double stddev_seconds = 0.0;
    std::size_t swap_total = 0;
    std::size_t max_gate_swaps = 0;
    std::size_t peak_dimension = 0;
    std::size_t internal_states = 0;
    std::size_t terminal_states = 0;
    std::size_t model_bytes = 0;
};

struct BenchReport {
    BenchOptions options;
    std::vector<BenchRow> rows;
};

/// For each size: one untimed warm-up, then `runs` timed compiles
/// (translate, build the chain, emit the model), strictly sequential.
BenchReport run_bench(const BenchOptions& opts);

}  // namespace qmcforge
