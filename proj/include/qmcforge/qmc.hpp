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
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qmcforge/linalg.hpp"
#include "qmcforge/normalizer.hpp"

namespace qmcforge {

/// Completely positive map rho -> sum K rho K^dagger in Kraus form.
struct Superoperator {
    std::vector<CMatrix> kraus;

    static Superoperator of(CMatrix k) { return Superoperator{{std::move(k)}}; }

    std::size_t dim() const { return kraus.empty() ? 0 : kraus.front().rows(); }
    CMatrix apply(const CMatrix& rho) const { return apply_kraus(kraus, rho); }
    /// sum K^dagger K
    CMatrix effect() const;
    /// Largest eigenvalue of effect() is at most 1 + tol.
    bool is_trace_nonincreasing(double tol = kDefaultTolerances.row) const;
};

enum class StateKind { Internal, Terminal };

struct QmcState {
    std::string name;  // s1..s{n+1}, t0..t{2^h - 1}
    StateKind kind = StateKind::Internal;
    std::set<std::string> labels;
};

struct QmcTransition {
    std::size_t from = 0;
    std::size_t to = 0;
    Superoperator op;
    std::string op_name;  // U1.., M0.., ID
};

/// Superoperator-weighted Markov chain. States are numbered internal first
/// (s1 = 0 .. s{n+1} = n) then terminal (t0 = n+1 ..); state 0 is initial.
struct Qmc {
    std::size_t k = 0;
    std::size_t h = 0;
    std::vector<QmcState> states;
    std::vector<QmcTransition> transitions;
    std::set<std::string> atomic_propositions;

    std::size_t internal_count() const;
    std::size_t terminal_count() const;
    /// Index of terminal t_i.
    std::size_t terminal_index(std::size_t outcome) const { return internal_count() + outcome; }
};

/// Outcome bits b_1..b_h of `outcome`, most significant first.
std::string outcome_bits(std::size_t outcome, std::size_t h);

/// (|i><i| on h qubits) (x) I_{2^(k-h)}. Throws OutcomeOutOfRange.
CMatrix measurement_matrix(std::size_t h, std::size_t k, std::size_t outcome);

/// Chain s1 -> .. -> s{n+1} labelled SO(U_i), measurement branches
/// s{n+1} -> t_i labelled {M~_i}, identity self-loops on terminals.
/// Throws InvalidQmc if the result violates trace preservation.
Qmc build_qmc(const SnfCircuit& s, const Tolerances& tol = kDefaultTolerances);

struct RowViolation {
    std::size_t state = 0;
    std::string state_name;
    double deviation = 0.0;  // max-norm of sum K^dagger K - I
};

std::vector<RowViolation> verify_row_stochasticity(const Qmc& q, double tol = kDefaultTolerances.row);

/// Internal transitions s_i -> s_{i+1} in chain order; throws InvalidQmc if
/// the internal states do not form a simple chain.
std::vector<const QmcTransition*> internal_chain(const Qmc& q);

/// Largest Kraus-matrix deviation between two chains with identical states,
/// labels and transition structure; nullopt when the structure differs.
std::optional<double> compare_qmc(const Qmc& a, const Qmc& b);

}  // namespace qmcforge
