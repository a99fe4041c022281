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

#include "qmcforge/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <sstream>

#include "qmcforge/circuit_text.hpp"
#include "qmcforge/emitter.hpp"
#include "qmcforge/error.hpp"
#include "qmcforge/qmc.hpp"

namespace qmcforge {

std::string gen_test_circuit_text(std::size_t k) {
    if (k < kMinBenchSize || k > kMaxBenchSize) {
        throw Error(ErrorCode::SizeOutOfRange, "test circuit size " + std::to_string(k) + " outside " +
                                                   std::to_string(kMinBenchSize) + ".." +
                                                   std::to_string(kMaxBenchSize));
    }
    std::ostringstream out;
    out << "# swap-heavy test circuit of size " << k << "\n";
    out << "qubits " << k << "\n";
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t x = i % k + 1;
        const std::size_t y = (i + k / 2) % k + 1;
        out << "gate CNOT " << std::max(x, y) << ' ' << std::min(x, y) << "\n";
    }
    out << "measure 1\n";
    return out.str();
}

Circuit gen_test_circuit(std::size_t k) { return parse_circuit(gen_test_circuit_text(k)); }

BenchReport run_bench(const BenchOptions& opts) {
    if (opts.min_size < kMinBenchSize || opts.max_size > kMaxBenchSize || opts.min_size > opts.max_size) {
        throw Error(ErrorCode::SizeOutOfRange, "bench sizes must satisfy " + std::to_string(kMinBenchSize) +
                                                   " <= min <= max <= " + std::to_string(kMaxBenchSize));
    }
    if (opts.runs == 0) throw Error(ErrorCode::BadParameters, "bench needs at least one run");
    BenchReport report{opts, {}};
    using Clock = std::chrono::steady_clock;
    for (std::size_t k = opts.min_size; k <= opts.max_size; ++k) {
        const Circuit c = gen_test_circuit(k);
        BenchRow row;
        row.k = k;
        auto compile = [&] {
            auto [snf, acct] = translate(c, opts.translate);
            const Qmc q = build_qmc(snf);
            const std::string text = emit_qpmc(q, "bench" + std::to_string(k));
            row.swap_total = acct.total;
            row.max_gate_swaps = 0;
            for (const auto& e : acct.per_gate) row.max_gate_swaps = std::max(row.max_gate_swaps, e.binary_swaps);
            row.peak_dimension = std::size_t{1} << snf.k;
            row.internal_states = q.internal_count();
            row.terminal_states = q.terminal_count();
            row.model_bytes = text.size();
        };
        compile();
        for (std::size_t r = 0; r < opts.runs; ++r) {
            const auto t0 = Clock::now();
            compile();
            row.seconds.push_back(std::chrono::duration<double>(Clock::now() - t0).count());
        }
        const double n = static_cast<double>(row.seconds.size());
        row.mean_seconds = std::accumulate(row.seconds.begin(), row.seconds.end(), 0.0) / n;
        double var = 0.0;
        for (double s : row.seconds) var += (s - row.mean_seconds) * (s - row.mean_seconds);
        row.stddev_seconds = row.seconds.size() > 1 ? std::sqrt(var / (n - 1)) : 0.0;
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace qmcforge
