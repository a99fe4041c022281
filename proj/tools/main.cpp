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

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "qmcforge/error.hpp"

using namespace qmcforge;
using namespace qmcforge::cli;

namespace {

void add_translate_flags(CLI::App* sub, RunConfig& cfg, std::string& strategy) {
    sub->add_option("--strategy", strategy, "swap synthesis: composed, direct, naive-adjacent")
        ->capture_default_str();
    sub->add_flag("--emit-swaps-as-gates", cfg.emit_swaps_as_gates, "keep routing swaps as separate steps");
}

void add_format_flag(CLI::App* sub, ReportFormat& fmt) {
    const std::map<std::string, ReportFormat> names{{"text", ReportFormat::Text}, {"json", ReportFormat::Json}};
    sub->add_option("--format", fmt, "report format: text or json")
        ->transform(CLI::CheckedTransformer(names, CLI::ignore_case));
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    std::string strategy = "composed";
    double tol = cfg.tol.pipeline;

    CLI::App app{"qmcforge: compile quantum circuits into quantum Markov chains"};
    app.require_subcommand(1);

    auto* validate = app.add_subcommand("validate", "check a circuit file for well-formedness");
    validate->add_option("circuit", cfg.input, "circuit file")->required();
    add_format_flag(validate, cfg.format);

    auto* compile = app.add_subcommand("compile", "translate a circuit into a QPMC model");
    compile->add_option("circuit", cfg.input, "circuit file")->required();
    compile->add_option("-o,--output", cfg.output, "model path (default: input with .qpmc)");
    compile->add_option("--name", cfg.model_name, "model name in the header comment");
    add_translate_flags(compile, cfg, strategy);
    add_format_flag(compile, cfg.format);

    auto* simulate = app.add_subcommand("simulate", "evolve an initial state through the compiled chain");
    simulate->add_option("circuit", cfg.input, "circuit file")->required();
    auto* state_bits = simulate->add_option("--state", cfg.initial_state, "basis input, e.g. 001");
    simulate->add_option("--state-file", cfg.state_file, "amplitudes, one 're [im]' per line")->excludes(state_bits);
    simulate->add_flag("--show-density", cfg.show_density, "print terminal density matrices");
    add_translate_flags(simulate, cfg, strategy);
    add_format_flag(simulate, cfg.format);

    auto* verify = app.add_subcommand("verify", "check circuit and chain agree on sampled inputs");
    verify->add_option("circuit", cfg.input, "circuit file")->required();
    verify->add_option("--against", cfg.against, "check an existing .qpmc model instead of recompiling");
    verify->add_option("--tol", tol, "pipeline tolerance")->capture_default_str()->check(CLI::PositiveNumber);
    verify->add_option("--seed", cfg.seed, "seed for random inputs")->capture_default_str();
    verify->add_option("--random-inputs", cfg.random_inputs, "random kets besides the basis")->capture_default_str();
    auto* vbits = verify->add_option("--state", cfg.initial_state, "also print outcomes for this basis input");
    verify->add_option("--state-file", cfg.state_file, "also print outcomes for these amplitudes")->excludes(vbits);
    add_translate_flags(verify, cfg, strategy);
    add_format_flag(verify, cfg.format);

    auto* bench = app.add_subcommand("bench", "time translation on generated swap-heavy circuits");
    bench->add_option("--min", cfg.bench_min, "smallest size")->capture_default_str();
    bench->add_option("--max", cfg.bench_max, "largest size")->capture_default_str();
    bench->add_option("--runs", cfg.bench_runs, "timed runs per size")->capture_default_str()->check(
        CLI::PositiveNumber);
    bench->add_option("-o,--output", cfg.output, "write JSON results here");
    add_translate_flags(bench, cfg, strategy);
    add_format_flag(bench, cfg.format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInputError;
    }

    if (*validate) cfg.command = Subcommand::Validate;
    if (*compile) cfg.command = Subcommand::Compile;
    if (*simulate) cfg.command = Subcommand::Simulate;
    if (*verify) cfg.command = Subcommand::Verify;
    if (*bench) cfg.command = Subcommand::Bench;

    try {
        cfg.strategy = parse_swap_strategy(strategy);
    } catch (const Error& e) {
        std::cerr << "qmcforge: " << e.what() << "\n";
        return kExitInputError;
    }
    cfg.tol.pipeline = tol;
    return run(cfg, std::cout, std::cerr);
}
