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

#include "qmcforge/semantics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "qmcforge/error.hpp"

namespace qmcforge {

namespace {

std::size_t declared_wire(const NodeKind& kind) {
    if (const auto* m = std::get_if<MeasurementNode>(&kind)) return m->wire;
    return std::get<TerminationNode>(kind).wire;
}

std::string terminal_bits(const QmcState& st) {
    for (const auto& l : st.labels) {
        if (l.rfind("outcome=", 0) == 0) return l.substr(8);
    }
    return {};
}

std::vector<TerminalResult> terminal_results(const Qmc& q, const CMatrix& rho_last) {
    const std::size_t last_internal = q.internal_count() - 1;
    std::vector<std::pair<std::size_t, TerminalResult>> found;
    for (const auto& t : q.transitions) {
        if (t.from != last_internal || t.to == t.from) continue;
        TerminalResult r;
        r.bits = terminal_bits(q.states.at(t.to));
        r.density = t.op.apply(rho_last);
        r.probability = trace(r.density).real();
        found.emplace_back(t.to, std::move(r));
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<TerminalResult> out;
    for (auto& f : found) out.push_back(std::move(f.second));
    return out;
}

std::string fmt(double v) {
    std::ostringstream s;
    s.precision(3);
    s << std::scientific << v;
    return s.str();
}

}  // namespace

KetVector simulate_circuit(const Circuit& c, const KetVector& input) {
    const std::size_t k = c.size();
    if (input.dim() != (std::size_t{1} << k)) {
        throw Error(ErrorCode::DimensionMismatch, "input of dimension " + std::to_string(input.dim()) + " for a " +
                                                      std::to_string(k) + "-qubit circuit");
    }
    const WireFlow flow = trace_wires(c);
    KetVector psi = input;
    for (const auto& step : flow.gates) {
        psi = apply_on_wires(std::get<UnitaryNode>(c.node(step.node)).matrix, step.wires, psi);
    }
    std::vector<std::size_t> images(k, 0);
    for (const auto& o : flow.outputs) images.at(o.wire - 1) = declared_wire(c.node(o.node));
    return permute_wires(psi, WirePermutation(std::move(images)));
}

double outcome_probability(const Circuit& c, const KetVector& input, const std::string& bits) {
    const auto wires = c.measured_wires();
    if (bits.size() != wires.size()) {
        throw Error(ErrorCode::BitLengthMismatch, "expected " + std::to_string(wires.size()) + " outcome bit(s), got " +
                                                      std::to_string(bits.size()));
    }
    for (char ch : bits) {
        if (ch != '0' && ch != '1') throw Error(ErrorCode::BitLengthMismatch, "outcome bits must be 0 or 1");
    }
    const KetVector psi = simulate_circuit(c, input);
    const std::size_t k = c.size();
    double p = 0.0;
    for (std::size_t x = 0; x < psi.dim(); ++x) {
        bool match = true;
        for (std::size_t i = 0; i < wires.size() && match; ++i) {
            match = wire_bit(x, wires[i], k) == static_cast<unsigned>(bits[i] - '0');
        }
        if (match) p += std::norm(psi[x]);
    }
    return p;
}

double EvalReport::probability_sum() const {
    double s = 0.0;
    for (const auto& t : terminals) s += t.probability;
    return s;
}

EvalReport run_qmc(const Qmc& q, const CMatrix& rho0) {
    const std::size_t dim = std::size_t{1} << q.k;
    if (rho0.rows() != dim || rho0.cols() != dim) {
        throw Error(ErrorCode::DimensionMismatch, "initial state is " + std::to_string(rho0.rows()) + "x" +
                                                      std::to_string(rho0.cols()) + ", chain acts on dimension " +
                                                      std::to_string(dim));
    }
    EvalReport report;
    CMatrix rho = rho0;
    CMatrix acc = CMatrix::identity(dim);
    for (const QmcTransition* t : internal_chain(q)) {
        rho = t->op.apply(rho);
        if (t->op.kraus.size() == 1) acc = t->op.kraus.front() * acc;
    }
    report.accumulated_unitary = std::move(acc);
    report.terminals = terminal_results(q, rho);
    return report;
}

double global_phase_distance(const KetVector& a, const KetVector& b) {
    if (a.dim() != b.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "global_phase_distance: dimensions " + std::to_string(a.dim()) +
                                                      " and " + std::to_string(b.dim()));
    }
    // The optimal phase aligns b with a; measuring the residual directly keeps
    // precision that sqrt(2 - 2|<a|b>|) would lose to cancellation.
    Complex inner{};
    for (std::size_t i = 0; i < a.dim(); ++i) inner += std::conj(b[i]) * a[i];
    const Complex phase = std::abs(inner) > 0.0 ? inner / std::abs(inner) : Complex(1.0, 0.0);
    double sq = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) sq += std::norm(a[i] - phase * b[i]);
    return std::sqrt(sq);
}

std::vector<KetVector> standard_inputs(std::size_t k, std::size_t random_count, std::uint64_t seed) {
    std::vector<KetVector> inputs;
    for (std::size_t x = 0; x < (std::size_t{1} << k); ++x) inputs.push_back(KetVector::basis(k, x));
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < random_count; ++i) inputs.push_back(random_ket(k, rng));
    return inputs;
}

EquivalenceReport check_equivalence(const Circuit& c, const SnfCircuit& s, const Qmc& q,
                                    const std::vector<KetVector>& inputs, const Tolerances& tol) {
    EquivalenceReport rep;
    const std::size_t k = s.k;
    if (c.size() != k || q.k != k || q.h != s.h || c.measurement_count() != s.h || s.output_order.size() != k) {
        rep.pass = false;
        rep.failures.push_back("structure: circuit, SNF tuple and chain disagree on k or h");
        return rep;
    }
    std::vector<const QmcTransition*> chain;
    try {
        chain = internal_chain(q);
    } catch (const Error& e) {
        rep.pass = false;
        rep.failures.push_back(std::string("structure: ") + e.what());
        return rep;
    }
    if (chain.size() != s.unitaries.size() || q.terminal_count() != (std::size_t{1} << s.h)) {
        rep.pass = false;
        rep.failures.push_back("structure: chain has " + std::to_string(chain.size()) + " steps and " +
                               std::to_string(q.terminal_count()) + " terminals, SNF tuple has " +
                               std::to_string(s.unitaries.size()) + " steps");
        return rep;
    }

    // SNF position p holds original output wire output_order[p - 1].
    std::vector<std::size_t> to_snf_images(k);
    for (std::size_t p = 1; p <= k; ++p) to_snf_images.at(s.output_order[p - 1] - 1) = p;
    const WirePermutation to_snf_order(std::move(to_snf_images));
    const std::size_t outcomes = std::size_t{1} << s.h;

    std::map<std::string, std::size_t> failed_clause_counts;
    auto record = [&](const std::string& clause, double dev, double limit, std::size_t input) {
        if (dev <= limit) return;
        if (failed_clause_counts[clause]++ == 0) {
            rep.failures.push_back(clause + ": input #" + std::to_string(input) + " deviates by " + fmt(dev) +
                                   " (limit " + fmt(limit) + ")");
        }
    };

    for (std::size_t n = 0; n < inputs.size(); ++n) {
        const KetVector& tau = inputs[n];
        if (tau.dim() != (std::size_t{1} << k)) {
            throw Error(ErrorCode::DimensionMismatch, "equivalence input of dimension " + std::to_string(tau.dim()));
        }
        ++rep.inputs_checked;

        const KetVector circuit_out = permute_wires(simulate_circuit(c, tau), to_snf_order);
        KetVector psi = tau;
        CMatrix rho = outer(tau);
        double rank_one = 0.0;
        for (std::size_t i = 0; i < chain.size(); ++i) {
            psi = apply(s.unitaries[i], psi);
            rho = chain[i]->op.apply(rho);
            rank_one = std::max(rank_one, max_abs_diff(rho, outer(psi)));
        }
        const double state = global_phase_distance(circuit_out, psi);

        double prob_dev = 0.0;
        double support = 0.0;
        double sum = 0.0;
        const auto terminals = terminal_results(q, rho);
        if (terminals.size() != outcomes) {
            rep.pass = false;
            rep.failures.push_back("structure: last internal state has " + std::to_string(terminals.size()) +
                                   " measurement branches");
            return rep;
        }
        for (std::size_t m = 0; m < outcomes; ++m) {
            const auto& t = terminals[m];
            const std::string bits = outcome_bits(m, s.h);
            const double p_circuit = outcome_probability(c, tau, bits);
            prob_dev = std::max(prob_dev, std::abs(p_circuit - t.probability));
            sum += t.probability;
            const std::size_t shift = k - s.h;
            for (std::size_t r = 0; r < t.density.rows(); ++r) {
                for (std::size_t col = 0; col < t.density.cols(); ++col) {
                    if ((r >> shift) == m && (col >> shift) == m) continue;
                    support = std::max(support, std::abs(t.density(r, col)));
                }
            }
        }
        const double sum_dev = std::abs(sum - 1.0);

        rep.worst.state = std::max(rep.worst.state, state);
        rep.worst.rank_one = std::max(rep.worst.rank_one, rank_one);
        rep.worst.probability = std::max(rep.worst.probability, prob_dev);
        rep.worst.support = std::max(rep.worst.support, support);
        rep.worst.probability_sum = std::max(rep.worst.probability_sum, sum_dev);

        record("state (F(C) vs U_n..U_1)", state, tol.pipeline, n);
        record("clause 1 (rank-one evolution)", rank_one, tol.pipeline, n);
        record("clause 2 (outcome probability)", prob_dev, tol.pipeline, n);
        record("clause 2 (post-measurement support)", support, tol.algebraic, n);
        record("probability sum", sum_dev, tol.pipeline, n);
    }
    rep.pass = rep.failures.empty();
    return rep;
}

}  // namespace qmcforge
