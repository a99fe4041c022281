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
#include <string>
#include <vector>

#include "qmcforge/circuit.hpp"
#include "qmcforge/linalg.hpp"
#include "qmcforge/normalizer.hpp"
#include "qmcforge/qmc.hpp"

namespace qmcforge {

/// F(C)(input): the register just before the output nodes, with position w
/// holding the value that reaches the output node declared on wire w.
KetVector simulate_circuit(const Circuit& c, const KetVector& input);

/// M(C)(input, bits): Born-rule probability of reading `bits` on the measured
/// wires, listed in ascending wire order. Throws BitLengthMismatch.
double outcome_probability(const Circuit& c, const KetVector& input, const std::string& bits);

struct TerminalResult {
    std::string bits;
    CMatrix density;  // unnormalized, trace = probability
    double probability = 0.0;
};

struct EvalReport {
    std::vector<TerminalResult> terminals;  // t0 .. t{2^h - 1}
    CMatrix accumulated_unitary;            // U_n ... U_1
    double probability_sum() const;
};

/// Push rho0 through the chain and every measurement branch.
EvalReport run_qmc(const Qmc& q, const CMatrix& rho0);

/// min over theta of || a - e^{i theta} b ||_2 for normalized inputs.
double global_phase_distance(const KetVector& a, const KetVector& b);

/// Standard complex Gaussian vector normalized; deterministic in `rng`.
template <class Rng>
KetVector random_ket(std::size_t qubits, Rng& rng);

/// Every computational basis state of a k-qubit register followed by
/// `random_count` random kets drawn from `seed`.
std::vector<KetVector> standard_inputs(std::size_t k, std::size_t random_count, std::uint64_t seed);

struct ClauseDeviation {
    double state = 0.0;        // F(C) vs U_n..U_1 (global-phase distance)
    double rank_one = 0.0;     // chain densities vs |psi_i><psi_i|
    double probability = 0.0;  // M(C) vs terminal traces
    double support = 0.0;      // largest entry outside the outcome block
    double probability_sum = 0.0;  // |sum of terminal probabilities - 1|
};

struct EquivalenceReport {
    bool pass = true;
    std::size_t inputs_checked = 0;
    ClauseDeviation worst;
    std::vector<std::string> failures;  // one line per failed clause / input
};

/// Compare a circuit against its SNF tuple and its chain on every input.
EquivalenceReport check_equivalence(const Circuit& c, const SnfCircuit& s, const Qmc& q,
                                    const std::vector<KetVector>& inputs, const Tolerances& tol = kDefaultTolerances);

}  // namespace qmcforge

#include <random>

namespace qmcforge {

template <class Rng>
KetVector random_ket(std::size_t qubits, Rng& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Complex> a(std::size_t{1} << qubits);
    for (auto& x : a) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        x = Complex(re, im);
    }
    return KetVector(std::move(a)).normalized();
}

}  // namespace qmcforge
