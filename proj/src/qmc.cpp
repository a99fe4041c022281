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

#include "qmcforge/qmc.hpp"

#include <algorithm>

#include "qmcforge/error.hpp"

namespace qmcforge {

CMatrix Superoperator::effect() const {
    if (kraus.empty()) {
        throw Error(ErrorCode::InvalidQmc, "superoperator without Kraus operators");
    }
    CMatrix acc = dagger(kraus[0]) * kraus[0];
    for (std::size_t i = 1; i < kraus.size(); ++i) acc = acc + dagger(kraus[i]) * kraus[i];
    return acc;
}

bool Superoperator::is_trace_nonincreasing(double tol) const {
    const auto ev = hermitian_eigenvalues(effect());
    return ev.empty() || ev.back() <= 1.0 + tol;
}

std::size_t Qmc::internal_count() const {
    return static_cast<std::size_t>(
        std::count_if(states.begin(), states.end(), [](const QmcState& s) { return s.kind == StateKind::Internal; }));
}

std::size_t Qmc::terminal_count() const { return states.size() - internal_count(); }

std::string outcome_bits(std::size_t outcome, std::size_t h) {
    std::string bits(h, '0');
    for (std::size_t i = 0; i < h; ++i) {
        if ((outcome >> (h - 1 - i)) & 1U) bits[i] = '1';
    }
    return bits;
}

CMatrix measurement_matrix(std::size_t h, std::size_t k, std::size_t outcome) {
    if (h > k) {
        throw Error(ErrorCode::OutcomeOutOfRange, "h = " + std::to_string(h) + " exceeds k = " + std::to_string(k));
    }
    const std::size_t outcomes = std::size_t{1} << h;
    if (outcome >= outcomes) {
        throw Error(ErrorCode::OutcomeOutOfRange,
                    "outcome " + std::to_string(outcome) + " not below 2^" + std::to_string(h));
    }
    std::vector<Complex> diag(outcomes);
    diag[outcome] = 1.0;
    return tensor(CMatrix::diagonal(diag), CMatrix::identity(std::size_t{1} << (k - h)));
}

Qmc build_qmc(const SnfCircuit& s, const Tolerances& tol) {
    require_well_formed(s, tol.algebraic);
    const std::size_t n = s.unitaries.size();
    const std::size_t outcomes = std::size_t{1} << s.h;
    Qmc q;
    q.k = s.k;
    q.h = s.h;
    for (std::size_t i = 0; i <= n; ++i) {
        const std::string step = "step=" + std::to_string(i + 1);
        q.states.push_back({"s" + std::to_string(i + 1), StateKind::Internal, {step}});
        q.atomic_propositions.insert(step);
    }
    q.atomic_propositions.insert("terminal");
    for (std::size_t m = 0; m < outcomes; ++m) {
        const std::string outcome = "outcome=" + outcome_bits(m, s.h);
        q.states.push_back({"t" + std::to_string(m), StateKind::Terminal, {"terminal", outcome}});
        q.atomic_propositions.insert(outcome);
    }
    for (std::size_t i = 0; i < n; ++i) {
        q.transitions.push_back({i, i + 1, Superoperator::of(s.unitaries[i]), "U" + std::to_string(i + 1)});
    }
    for (std::size_t m = 0; m < outcomes; ++m) {
        q.transitions.push_back({n, q.terminal_index(m), Superoperator::of(measurement_matrix(s.h, s.k, m)),
                                 "M" + std::to_string(m)});
    }
    const CMatrix id = CMatrix::identity(std::size_t{1} << s.k);
    for (std::size_t m = 0; m < outcomes; ++m) {
        const std::size_t t = q.terminal_index(m);
        q.transitions.push_back({t, t, Superoperator::of(id), "ID"});
    }
    const auto violations = verify_row_stochasticity(q, tol.row);
    if (!violations.empty()) {
        throw Error(ErrorCode::InvalidQmc, "state " + violations.front().state_name +
                                               " is not trace preserving (deviation " +
                                               std::to_string(violations.front().deviation) + ")");
    }
    return q;
}

std::vector<RowViolation> verify_row_stochasticity(const Qmc& q, double tol) {
    std::vector<RowViolation> out;
    const std::size_t dim = std::size_t{1} << q.k;
    const CMatrix id = CMatrix::identity(dim);
    for (std::size_t st = 0; st < q.states.size(); ++st) {
        CMatrix acc(dim, dim);
        for (const auto& t : q.transitions) {
            if (t.from != st) continue;
            for (const auto& kr : t.op.kraus) {
                if (kr.rows() != dim || kr.cols() != dim) {
                    out.push_back({st, q.states[st].name, 1.0});
                    continue;
                }
                acc = acc + dagger(kr) * kr;
            }
        }
        const double dev = max_abs_diff(acc, id);
        if (dev > tol) out.push_back({st, q.states[st].name, dev});
    }
    return out;
}

std::vector<const QmcTransition*> internal_chain(const Qmc& q) {
    const std::size_t internal = q.internal_count();
    std::vector<const QmcTransition*> chain;
    for (std::size_t i = 0; i + 1 < internal; ++i) {
        const QmcTransition* found = nullptr;
        for (const auto& t : q.transitions) {
            if (t.from != i) continue;
            if (t.to != i + 1 || found != nullptr) {
                throw Error(ErrorCode::InvalidQmc, "internal state " + q.states[i].name + " does not step to its successor only");
            }
            found = &t;
        }
        if (found == nullptr) {
            throw Error(ErrorCode::InvalidQmc, "internal state " + q.states[i].name + " has no outgoing transition");
        }
        chain.push_back(found);
    }
    return chain;
}

std::optional<double> compare_qmc(const Qmc& a, const Qmc& b) {
    if (a.k != b.k || a.h != b.h || a.states.size() != b.states.size() ||
        a.transitions.size() != b.transitions.size() || a.atomic_propositions != b.atomic_propositions) {
        return std::nullopt;
    }
    for (std::size_t i = 0; i < a.states.size(); ++i) {
        const auto& x = a.states[i];
        const auto& y = b.states[i];
        if (x.name != y.name || x.kind != y.kind || x.labels != y.labels) return std::nullopt;
    }
    double dev = 0.0;
    for (std::size_t i = 0; i < a.transitions.size(); ++i) {
        const auto& x = a.transitions[i];
        const auto& y = b.transitions[i];
        if (x.from != y.from || x.to != y.to || x.op_name != y.op_name || x.op.kraus.size() != y.op.kraus.size()) {
            return std::nullopt;
        }
        for (std::size_t j = 0; j < x.op.kraus.size(); ++j) {
            const auto& p = x.op.kraus[j];
            const auto& r = y.op.kraus[j];
            if (p.rows() != r.rows() || p.cols() != r.cols()) return std::nullopt;
            dev = std::max(dev, max_abs_diff(p, r));
        }
    }
    return dev;
}

}  // namespace qmcforge
