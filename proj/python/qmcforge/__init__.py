# Copyright 2026 The qmcforge Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Compile quantum circuits into quantum Markov chains and check the result."""

from ._core import (
    Circuit,
    EquivalenceReport,
    Qmc,
    QmcforgeError,
    SnfCircuit,
    SwapAccount,
    SwapAccountEntry,
    SwapStrategy,
    TerminalResult,
    build_qmc,
    check_equivalence,
    compare_qmc,
    emit_qpmc,
    format_matrix,
    gate_matrix,
    gen_test_circuit,
    gen_test_circuit_text,
    generalized_swap,
    load_circuit,
    measurement_matrix,
    outcome_probability,
    parse_circuit,
    reparse_model,
    run_qmc,
    simulate_circuit,
    translate,
)


def compile_text(text, strategy=SwapStrategy.COMPOSED, name="model"):
    """Circuit source to QPMC model text in one call."""
    snf, _ = translate(parse_circuit(text), strategy)
    return emit_qpmc(build_qmc(snf), name)


__all__ = [n for n in dir() if not n.startswith("_")]
