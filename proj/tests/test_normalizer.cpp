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

#include <gtest/gtest.h>

#include <random>

#include "qmcforge/bench.hpp"
#include "qmcforge/circuit_text.hpp"
#include "qmcforge/error.hpp"
#include "qmcforge/gates.hpp"
#include "qmcforge/normalizer.hpp"
#include "qmcforge/semantics.hpp"
#include "support.hpp"

using namespace qmcforge;

namespace {

const CMatrix I2 = CMatrix::identity(2);

// The SNF product applied to `in`, with the output reorder undone so that
// position w holds output wire w again.
KetVector snf_state(const SnfCircuit& s, const KetVector& in) {
    const KetVector raw = apply(accumulated_unitary(s), in);
    std::vector<std::size_t> images(s.k);
    for (std::size_t p = 1; p <= s.k; ++p) images[p - 1] = s.output_order[p - 1];
    return permute_wires(raw, WirePermutation(images));
}

}  // namespace

TEST(NormalForm, DeutschPadsSingleWireGate) {
    const Circuit c = parse_circuit("qubits 2\ngate H 1\ngate H 2\ngate CNOT 2 1\ngate H 1\nmeasure 1\n");
    const Circuit nf = to_normal_form(c);
    EXPECT_TRUE(nf.is_normal_form());
    EXPECT_FALSE(c.is_normal_form());
    const WireFlow f = trace_wires(nf);
    ASSERT_EQ(f.gates.size(), 4u);
    const auto& last = std::get<UnitaryNode>(nf.node(f.gates[3].node));
    EXPECT_EQ(last.dim, 2u);
    EXPECT_EQ(last.label, "tensor(H, I)");
    EXPECT_EQ(max_abs_diff(last.matrix, tensor(gate_matrix("H"), I2)), 0.0);
    EXPECT_EQ(f.gates[3].wires, (std::vector<std::size_t>{1, 2}));
}

TEST(NormalForm, FixpointOnNormalForm) {
    const Circuit c = parse_circuit("qubits 2\ngate tensor(H,H) 1 2\ngate CNOT 1 2\nmeasure 1\n");
    ASSERT_TRUE(c.is_normal_form());
    const Circuit nf = to_normal_form(c);
    ASSERT_EQ(nf.nodes().size(), c.nodes().size());
    EXPECT_EQ(nf.edges(), c.edges());
    for (std::size_t i = 0; i < c.nodes().size(); ++i) {
        if (const auto* u = std::get_if<UnitaryNode>(&c.node(i))) {
            EXPECT_EQ(max_abs_diff(u->matrix, std::get<UnitaryNode>(nf.node(i)).matrix), 0.0);
        }
    }
    // idempotent
    EXPECT_EQ(to_normal_form(nf).edges(), nf.edges());
}

TEST(NormalForm, XOnThirdWire) {
    const Circuit c = parse_circuit("qubits 3\ngate X 3\n");
    const auto [snf, acct] = translate(c);
    ASSERT_EQ(snf.unitaries.size(), 1u);
    const CMatrix expect = tensor(tensor(I2, I2), gate_matrix("X"));
    for (std::size_t i = 0; i < 8; ++i) {
        const KetVector b = KetVector::basis(3, i);
        EXPECT_EQ(max_abs_diff(as_column(apply(snf.unitaries[0], b)), as_column(apply(expect, b))), 0.0) << i;
    }
    EXPECT_EQ(acct.total, 2u);  // composed routing of wire 3 to the front is a 3-cycle
}

TEST(Snf, RequiresNormalForm) {
    const Circuit c = parse_circuit("qubits 2\ngate H 1\n");
    try {
        to_snf(c);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotNormalForm);
    }
}

TEST(Snf, DeutschShape) {
    const Circuit c = load_circuit_file(testsupport::circuits_path("deutsch.qc"));
    const auto [snf, acct] = translate(c);
    EXPECT_EQ(snf.k, 2u);
    EXPECT_EQ(snf.h, 1u);
    ASSERT_EQ(snf.unitaries.size(), 3u);
    EXPECT_EQ(max_abs_diff(snf.unitaries[0], tensor(gate_matrix("H"), gate_matrix("H"))), 0.0);
    EXPECT_EQ(max_abs_diff(snf.unitaries[1], gate_matrix("CNOT")), 0.0);
    EXPECT_EQ(max_abs_diff(snf.unitaries[2], tensor(gate_matrix("H"), I2)), 0.0);
    EXPECT_EQ(snf.output_order, (std::vector<std::size_t>{1, 2}));
    EXPECT_EQ(acct.total, 0u);
}

TEST(Snf, NoPermutationNoSwaps) {
    const Circuit c = parse_circuit("qubits 3\ngate CCNOT 1 2 3\ngate tensor(H, X) 1 2\nmeasure 1\n");
    for (auto strat : {SwapStrategy::Composed, SwapStrategy::NaiveAdjacent, SwapStrategy::Direct}) {
        const auto [snf, acct] = translate(c, {strat, false});
        EXPECT_EQ(acct.total, 0u);
        ASSERT_EQ(snf.unitaries.size(), 2u);
        EXPECT_EQ(max_abs_diff(snf.unitaries[0], gate_matrix("CCNOT")), 0.0);
        EXPECT_EQ(max_abs_diff(snf.unitaries[1], tensor(tensor(gate_matrix("H"), gate_matrix("X")), I2)), 0.0);
    }
}

TEST(Snf, GateOnWiresThreeOne) {
    const Circuit c = parse_circuit("qubits 3\ngate CNOT 3 1\nmeasure 1\nmeasure 2\nmeasure 3\n");
    const auto [comp, comp_acct] = translate(c, {SwapStrategy::Composed, false});
    const auto [dir, dir_acct] = translate(c, {SwapStrategy::Direct, false});
    ASSERT_EQ(comp_acct.per_gate.size(), 1u);
    EXPECT_GE(comp_acct.per_gate[0].binary_swaps, 1u);
    EXPECT_EQ(comp_acct.per_gate[0].wires, (std::vector<std::size_t>{3, 1, 2}));
    EXPECT_EQ(dir_acct.total, 0u);
    // routing sends (3, 1) to (1, 2)
    const std::size_t wires[] = {3, 1};
    const auto p = WirePermutation::bring_to_front(3, wires);
    EXPECT_EQ(p(3), 1u);
    EXPECT_EQ(p(1), 2u);
    for (std::size_t i = 0; i < 8; ++i) {
        const KetVector b = KetVector::basis(3, i);
        const KetVector a = snf_state(comp, b);
        EXPECT_LE(max_abs_diff(as_column(a), as_column(snf_state(dir, b))), 1e-15);
        EXPECT_LE(max_abs_diff(as_column(a), as_column(simulate_circuit(c, b))), 1e-15);
        // control is wire 3
        const std::size_t expect = (i & 1U) ? (i ^ 0b100) : i;
        EXPECT_EQ(a[expect], Complex(1.0, 0.0));
    }
}

TEST(Snf, MeasuredWiresMoveFirst) {
    const Circuit c = parse_circuit("qubits 3\ngate X 3\nmeasure 3\n");
    const auto [snf, acct] = translate(c);
    EXPECT_EQ(snf.h, 1u);
    EXPECT_EQ(snf.output_order, (std::vector<std::size_t>{3, 1, 2}));
    ASSERT_FALSE(acct.per_gate.empty());
    EXPECT_EQ(acct.per_gate.back().gate, "output-reorder");
    // |000> -> X on wire 3 -> measured wire at position 1 reads 1
    const KetVector out = apply(accumulated_unitary(snf), KetVector::from_bits("000"));
    EXPECT_EQ(out[0b100], Complex(1.0, 0.0));
}

TEST(Snf, ReorderWithoutGates) {
    const auto [snf, acct] = translate(parse_circuit("qubits 2\nmeasure 2\n"));
    ASSERT_EQ(snf.unitaries.size(), 1u);
    EXPECT_EQ(max_abs_diff(snf.unitaries[0], gate_matrix("SWAP")), 0.0);
    EXPECT_EQ(acct.total, 1u);
}

TEST(Snf, EmptyCircuit) {
    const auto [snf, acct] = translate(parse_circuit("qubits 3\n"));
    EXPECT_EQ(snf.k, 3u);
    EXPECT_TRUE(snf.unitaries.empty());
    EXPECT_EQ(snf.h, 0u);
    EXPECT_EQ(acct.total, 0u);
    EXPECT_EQ(max_abs_diff(accumulated_unitary(snf), CMatrix::identity(8)), 0.0);
}

TEST(Snf, GroverShape) {
    const Circuit c = load_circuit_file(testsupport::circuits_path("grover.qc"));
    const auto [snf, acct] = translate(c);
    EXPECT_EQ(snf.k, 3u);
    EXPECT_EQ(snf.h, 2u);
    EXPECT_EQ(snf.unitaries.size(), c.unitary_count());
    // with swaps as separate steps the chain grows by exactly the swap count
    const auto [split, split_acct] = translate(c, {SwapStrategy::Composed, true});
    EXPECT_EQ(split.unitaries.size(), c.unitary_count() + 2 * split_acct.total);
    EXPECT_LE(max_abs_diff(accumulated_unitary(split), accumulated_unitary(snf)), 1e-12);
}

TEST(Snf, SwapsAsGatesPreserveProduct) {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 40; ++i) {
        const auto rc = testsupport::random_circuit(rng);
        const CMatrix fused = accumulated_unitary(translate(rc.circuit).first);
        for (auto strat : {SwapStrategy::Composed, SwapStrategy::Direct, SwapStrategy::NaiveAdjacent}) {
            const auto [split, acct] = translate(rc.circuit, {strat, true});
            EXPECT_LE(max_abs_diff(accumulated_unitary(split), fused), 1e-12) << rc.text;
            for (const auto& u : split.unitaries) EXPECT_TRUE(is_unitary(u));
        }
    }
}

TEST(Snf, SemanticsMatchDagSimulation) {
    std::mt19937_64 rng(1234);
    for (int i = 0; i < 60; ++i) {
        const auto rc = testsupport::random_circuit(rng);
        const auto [snf, acct] = translate(rc.circuit);
        require_well_formed(snf);
        for (const auto& in : standard_inputs(rc.circuit.size(), 2, 5 + i)) {
            EXPECT_LE(global_phase_distance(simulate_circuit(rc.circuit, in), snf_state(snf, in)), 1e-9)
                << rc.text;
        }
    }
}

TEST(Snf, SnfToCircuitIsAligned) {
    const Circuit c = load_circuit_file(testsupport::circuits_path("grover.qc"));
    const auto [snf, acct] = translate(c);
    const Circuit aligned = snf_to_circuit(snf);
    EXPECT_TRUE(validate(aligned).empty());
    EXPECT_TRUE(aligned.is_normal_form());
    const auto [again, again_acct] = to_snf(aligned);
    EXPECT_EQ(again_acct.total, 0u);
    ASSERT_EQ(again.unitaries.size(), snf.unitaries.size());
    for (std::size_t i = 0; i < snf.unitaries.size(); ++i) {
        EXPECT_EQ(max_abs_diff(again.unitaries[i], snf.unitaries[i]), 0.0);
    }
}

TEST(Snf, WellFormedness) {
    SnfCircuit s{2, {CMatrix::identity(2)}, 1, {1, 2}, {"I"}};
    EXPECT_THROW(require_well_formed(s), Error);
    SnfCircuit h{1, {gate_matrix("H")}, 2, {1}, {"H"}};
    EXPECT_THROW(require_well_formed(h), Error);
}

TEST(SwapAccount, NaiveCostsOnTestCircuits) {
    std::size_t previous = 0;
    for (std::size_t k = 3; k <= 8; ++k) {
        const auto [snf, acct] = translate(gen_test_circuit(k), {SwapStrategy::NaiveAdjacent, false});
        for (const auto& e : acct.per_gate) EXPECT_LE(e.binary_swaps, k * (k - 1) / 2);
        EXPECT_GT(acct.total, previous);
        previous = acct.total;
    }
}
