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
#include <iosfwd>
#include <string>

#include "qmcforge/linalg.hpp"
#include "qmcforge/tolerances.hpp"

namespace qmcforge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInputError = 2;

enum class Subcommand { Validate, Compile, Simulate, Verify, Bench };
enum class ReportFormat { Text, Json };

struct RunConfig {
    Subcommand command = Subcommand::Validate;
    std::string input;
    std::string output;
    SwapStrategy strategy = SwapStrategy::Composed;
    bool emit_swaps_as_gates = false;
    Tolerances tol;
    std::uint64_t seed = 20170607;
    std::size_t random_inputs = 8;
    std::size_t bench_min = 3;
    std::size_t bench_max = 8;
    std::size_t bench_runs = 5;
    ReportFormat format = ReportFormat::Text;
    std::string initial_state;  // basis string such as "001"
    std::string state_file;     // amplitudes, one "re [im]" per line
    std::string against;        // .qpmc model to verify instead of a fresh compile
    bool show_density = false;
    std::string model_name;
};

/// Throws Error(SizeOutOfRange) unless bench sizes lie within 3..12.
void check_config(const RunConfig& cfg);

int cmd_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_compile(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_simulate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Dispatch on cfg.command; library errors become exit code 2.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace qmcforge::cli
