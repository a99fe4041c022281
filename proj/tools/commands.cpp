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

#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "json.hpp"

#include "qmcforge/bench.hpp"
#include "qmcforge/circuit_text.hpp"
#include "qmcforge/emitter.hpp"
#include "qmcforge/error.hpp"
#include "qmcforge/log.hpp"
#include "qmcforge/normalizer.hpp"
#include "qmcforge/qmc.hpp"
#include "qmcforge/semantics.hpp"

namespace qmcforge::cli {

namespace {

using nlohmann::json;

constexpr const char* kCompileSchema = "qmcforge.compile/1";
constexpr const char* kSimulateSchema = "qmcforge.simulate/1";
constexpr const char* kVerifySchema = "qmcforge.verify/1";
constexpr const char* kBenchSchema = "qmcforge.bench/1";

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::Io, "cannot write '" + path + "'");
    out << text;
}

void require_input(const RunConfig& cfg) {
    if (cfg.input.empty()) throw Error(ErrorCode::Io, "no input circuit given");
}

TranslateOptions translate_options(const RunConfig& cfg) { return {cfg.strategy, cfg.emit_swaps_as_gates}; }

std::string model_name_for(const RunConfig& cfg) {
    if (!cfg.model_name.empty()) return sanitize_identifier(cfg.model_name);
    return sanitize_identifier(std::filesystem::path(cfg.input).stem().string());
}

json swap_account_json(const SwapAccount& acct) {
    json per_gate = json::array();
    for (const auto& e : acct.per_gate) {
        per_gate.push_back({{"gate", e.gate}, {"wires", e.wires}, {"binary_swaps", e.binary_swaps}});
    }
    return {{"strategy", std::string(to_string(acct.strategy))}, {"total", acct.total}, {"per_gate", per_gate}};
}

KetVector initial_state(const RunConfig& cfg, std::size_t k) {
    if (!cfg.state_file.empty()) {
        std::istringstream in(read_file(cfg.state_file));
        std::vector<Complex> amps;
        std::string line;
        while (std::getline(in, line)) {
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.resize(hash);
            std::istringstream ls(line);
            double re = 0.0;
            double im = 0.0;
            if (!(ls >> re)) continue;
            ls >> im;
            amps.emplace_back(re, im);
        }
        if (amps.size() != (std::size_t{1} << k)) {
            throw Error(ErrorCode::BadInitialState, "state file has " + std::to_string(amps.size()) +
                                                        " amplitudes, circuit needs " + std::to_string(std::size_t{1} << k));
        }
        KetVector ket(std::move(amps));
        if (!ket.is_normalized(cfg.tol.pipeline)) {
            throw Error(ErrorCode::BadInitialState, "state file amplitudes are not normalized");
        }
        return ket;
    }
    const std::string bits = cfg.initial_state.empty() ? std::string(k, '0') : cfg.initial_state;
    if (bits.size() != k) {
        throw Error(ErrorCode::BadInitialState, "initial state '" + bits + "' has " + std::to_string(bits.size()) +
                                                    " bit(s), circuit has " + std::to_string(k) + " wires");
    }
    return KetVector::from_bits(bits);
}

std::string fixed(double v, int digits = 12) {
    if (std::abs(v) < 0.5 * std::pow(10.0, -digits)) v = 0.0;
    std::ostringstream s;
    s << std::fixed << std::setprecision(digits) << v;
    return s.str();
}

std::string sci(double v) {
    std::ostringstream s;
    s << std::scientific << std::setprecision(3) << v;
    return s.str();
}

double clean(double v) { return std::abs(v) < 1e-15 ? 0.0 : v; }

}  // namespace

void check_config(const RunConfig& cfg) {
    if (cfg.bench_min < kMinBenchSize || cfg.bench_max > kMaxBenchSize || cfg.bench_min > cfg.bench_max) {
        throw Error(ErrorCode::SizeOutOfRange, "bench sizes must satisfy 3 <= min <= max <= 12");
    }
}

int cmd_validate(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    require_input(cfg);
    const Circuit c = load_circuit_file(cfg.input);
    const auto violations = validate(c);
    if (cfg.format == ReportFormat::Json) {
        json v = json::array();
        for (const auto& x : violations) v.push_back({{"rule", std::string(to_string(x.rule))}, {"message", x.message}});
        out << json{{"valid", violations.empty()},
                    {"qubits", c.size()},
                    {"unitaries", c.unitary_count()},
                    {"measured", c.measurement_count()},
                    {"violations", v}}
                   .dump(2)
            << "\n";
    } else if (violations.empty()) {
        out << "valid: " << c.size() << " qubit(s), " << c.unitary_count() << " gate(s), " << c.measurement_count()
            << " measured\n";
    } else {
        for (const auto& x : violations) out << to_string(x.rule) << ": " << x.message << "\n";
    }
    return violations.empty() ? kExitOk : kExitInputError;
}

int cmd_compile(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    require_input(cfg);
    const Circuit c = load_circuit_file(cfg.input);
    const auto [snf, acct] = translate(c, translate_options(cfg));
    const Qmc q = build_qmc(snf, cfg.tol);
    const std::string text = emit_qpmc(q, model_name_for(cfg));
    const std::string path =
        cfg.output.empty() ? std::filesystem::path(cfg.input).replace_extension(".qpmc").string() : cfg.output;
    write_file(path, text);
    if (log_level() >= LogLevel::Debug) {
        for (std::size_t i = 0; i < snf.labels.size(); ++i) {
            log(LogLevel::Debug, "step U" + std::to_string(i + 1) + ": " + snf.labels[i]);
        }
    }
    log(LogLevel::Info, "wrote " + path);

    if (cfg.format == ReportFormat::Json) {
        out << json{{"schema", kCompileSchema},
                    {"k", snf.k},
                    {"h", snf.h},
                    {"unitaries", snf.unitaries.size()},
                    {"internal_states", q.internal_count()},
                    {"terminal_states", q.terminal_count()},
                    {"matrix_dimension", std::size_t{1} << snf.k},
                    {"swap_account", swap_account_json(acct)},
                    {"output", path}}
                   .dump(2)
            << "\n";
        return kExitOk;
    }
    out << "model: " << path << "\n";
    out << "states: " << q.internal_count() << " internal + " << q.terminal_count() << " terminal\n";
    out << "matrix dimension: " << (std::size_t{1} << snf.k) << " x " << (std::size_t{1} << snf.k) << "\n";
    out << "binary swaps (" << to_string(acct.strategy) << "): " << acct.total << "\n";
    for (const auto& e : acct.per_gate) {
        out << "  " << e.gate << " on";
        for (auto w : e.wires) out << ' ' << w;
        out << ": " << e.binary_swaps << "\n";
    }
    return kExitOk;
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    require_input(cfg);
    const Circuit c = load_circuit_file(cfg.input);
    const KetVector psi = initial_state(cfg, c.size());
    const auto [snf, acct] = translate(c, translate_options(cfg));
    const Qmc q = build_qmc(snf, cfg.tol);
    const EvalReport rep = run_qmc(q, outer(psi));
    if (cfg.format == ReportFormat::Json) {
        json rows = json::array();
        for (const auto& t : rep.terminals) {
            json row{{"bits", t.bits}, {"probability", clean(t.probability)}};
            if (cfg.show_density) row["density"] = format_matrix(t.density);
            rows.push_back(std::move(row));
        }
        out << json{{"schema", kSimulateSchema}, {"outcomes", rows}}.dump(2) << "\n";
        return kExitOk;
    }
    out << "outcome  probability\n";
    for (const auto& t : rep.terminals) {
        out << std::left << std::setw(7) << (t.bits.empty() ? "-" : t.bits) << "  " << fixed(t.probability) << "\n";
        if (cfg.show_density) out << "  rho = " << format_matrix(t.density) << "\n";
    }
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    require_input(cfg);
    const Circuit c = load_circuit_file(cfg.input);
    const auto [snf, acct] = translate(c, translate_options(cfg));
    const Qmc q = cfg.against.empty() ? build_qmc(snf, cfg.tol) : reparse_model(read_file(cfg.against));
    log(LogLevel::Info, "verify seed " + std::to_string(cfg.seed) + ", " + std::to_string(cfg.random_inputs) +
                            " random input(s)");
    const auto inputs = standard_inputs(c.size(), cfg.random_inputs, cfg.seed);
    EquivalenceReport rep = check_equivalence(c, snf, q, inputs, cfg.tol);
    const auto rows = verify_row_stochasticity(q, cfg.tol.row);
    for (const auto& r : rows) {
        rep.failures.push_back("trace preservation: state " + r.state_name + " deviates by " + sci(r.deviation));
    }
    rep.pass = rep.pass && rows.empty();

    std::vector<TerminalResult> table;
    if (!cfg.initial_state.empty() || !cfg.state_file.empty()) {
        table = run_qmc(q, outer(initial_state(cfg, c.size()))).terminals;
    }

    if (cfg.format == ReportFormat::Json) {
        json probs = json::array();
        for (const auto& t : table) probs.push_back({{"bits", t.bits}, {"probability", clean(t.probability)}});
        out << json{{"schema", kVerifySchema},
                    {"pass", rep.pass},
                    {"seed", cfg.seed},
                    {"inputs", rep.inputs_checked},
                    {"max_deviation",
                     {{"state", rep.worst.state},
                      {"rank_one", rep.worst.rank_one},
                      {"probability", rep.worst.probability},
                      {"support", rep.worst.support},
                      {"probability_sum", rep.worst.probability_sum}}},
                    {"failures", rep.failures},
                    {"outcomes", probs}}
                   .dump(2)
            << "\n";
    } else {
        out << (rep.pass ? "PASS" : "FAIL") << ": " << rep.inputs_checked << " input(s), seed " << cfg.seed << "\n";
        out << "  state (F(C) vs U_n..U_1)        " << sci(rep.worst.state) << "\n";
        out << "  clause 1 (rank-one evolution)   " << sci(rep.worst.rank_one) << "\n";
        out << "  clause 2 (outcome probability)  " << sci(rep.worst.probability) << "\n";
        out << "  clause 2 (support)              " << sci(rep.worst.support) << "\n";
        out << "  probability sum                 " << sci(rep.worst.probability_sum) << "\n";
        for (const auto& f : rep.failures) out << "  failed " << f << "\n";
        if (!table.empty()) {
            out << "outcome  probability\n";
            for (const auto& t : table) {
                out << std::left << std::setw(7) << (t.bits.empty() ? "-" : t.bits) << "  " << fixed(t.probability)
                    << "\n";
            }
        }
    }
    return rep.pass ? kExitOk : kExitVerifyFailed;
}

int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    check_config(cfg);
    BenchOptions opts;
    opts.min_size = cfg.bench_min;
    opts.max_size = cfg.bench_max;
    opts.runs = cfg.bench_runs;
    opts.translate = translate_options(cfg);
    const BenchReport rep = run_bench(opts);

    json rows = json::array();
    for (const auto& r : rep.rows) {
        rows.push_back({{"k", r.k},
                        {"seconds", r.seconds},
                        {"mean_seconds", r.mean_seconds},
                        {"stddev_seconds", r.stddev_seconds},
                        {"swap_total", r.swap_total},
                        {"max_gate_swaps", r.max_gate_swaps},
                        {"peak_dimension", r.peak_dimension},
                        {"internal_states", r.internal_states},
                        {"terminal_states", r.terminal_states},
                        {"model_bytes", r.model_bytes}});
    }
    const json doc{{"schema", kBenchSchema},
                   {"strategy", std::string(to_string(cfg.strategy))},
                   {"emit_swaps_as_gates", cfg.emit_swaps_as_gates},
                   {"runs", cfg.bench_runs},
                   {"rows", rows}};
    if (!cfg.output.empty()) write_file(cfg.output, doc.dump(2) + "\n");

    if (cfg.format == ReportFormat::Json) {
        out << doc.dump(2) << "\n";
        return kExitOk;
    }
    out << "strategy " << to_string(cfg.strategy) << ", " << cfg.bench_runs << " run(s) per size\n";
    out << " k   mean [s]      stddev [s]    swaps  max/gate  dim   states\n";
    for (const auto& r : rep.rows) {
        out << std::right << std::setw(2) << r.k << "  " << std::scientific << std::setprecision(4) << r.mean_seconds
            << "  " << r.stddev_seconds << std::defaultfloat << "  " << std::setw(5) << r.swap_total << "  "
            << std::setw(8) << r.max_gate_swaps << "  " << std::setw(4) << r.peak_dimension << "  "
            << r.internal_states + r.terminal_states << "\n";
    }
    return kExitOk;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        switch (cfg.command) {
            case Subcommand::Validate: return cmd_validate(cfg, out, err);
            case Subcommand::Compile: return cmd_compile(cfg, out, err);
            case Subcommand::Simulate: return cmd_simulate(cfg, out, err);
            case Subcommand::Verify: return cmd_verify(cfg, out, err);
            case Subcommand::Bench: return cmd_bench(cfg, out, err);
        }
    } catch (const Error& e) {
        err << "qmcforge: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}

}  // namespace qmcforge::cli
