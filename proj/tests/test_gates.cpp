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

#include <cmath>

#include "qmcforge/error.hpp"
#include "qmcforge/gates.hpp"
#include "qmcforge/linalg.hpp"

using namespace qmcforge;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorCode::Io;
}

}  // namespace

TEST(GateMatrix, Hadamard) {
    const CMatrix h = gate_matrix("H");
    const double r = 1.0 / std::sqrt(2.0);
    EXPECT_NEAR(std::abs(h(0, 0) - r), 0.0, 2e-16);
    EXPECT_NEAR(std::abs(h(0, 1) - r), 0.0, 2e-16);
    EXPECT_NEAR(std::abs(h(1, 0) - r), 0.0, 2e-16);
    EXPECT_NEAR(std::abs(h(1, 1) + r), 0.0, 2e-16);
}

TEST(GateMatrix, CnotOnOneZero) {
    const KetVector out = apply(gate_matrix("CNOT"), KetVector::from_bits("10"));
    EXPECT_EQ(out[0b11], Complex(1.0, 0.0));
}

TEST(GateMatrix, ToffoliFixesAllButTop) {
    const CMatrix t = gate_matrix("CCNOT");
    for (std::size_t i = 0; i < 8; ++i) {
        const std::size_t j = i >= 6 ? (i ^ 1U) : i;
        EXPECT_EQ(apply(t, KetVector::basis(3, i))[j], Complex(1.0, 0.0)) << i;
    }
    EXPECT_EQ(max_abs_diff(gate_matrix("TOFFOLI"), t), 0.0);
}

TEST(GateMatrix, Rotations) {
    const double a[] = {M_PI};
    // RX(pi) = -iX
    const CMatrix rx = gate_matrix("RX", a);
    EXPECT_NEAR(std::abs(rx(0, 1) - Complex(0.0, -1.0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(rx(0, 0)), 0.0, 1e-15);
    const double half[] = {M_PI / 2};
    EXPECT_LE(max_abs_diff(gate_matrix("P", half), gate_matrix("S")), 1e-15);
    EXPECT_EQ(code_of([] { gate_matrix("RZ"); }), ErrorCode::BadParameters);
    EXPECT_EQ(code_of([] { gate_matrix("FOO"); }), ErrorCode::UnknownGate);
    const double one[] = {1.0};
    EXPECT_EQ(code_of([&] { gate_matrix("H", one); }), ErrorCode::BadParameters);
}

TEST(ResolveGate, Combinators) {
    const auto c = resolve_gate("controlled(X)");
    EXPECT_EQ(c.arity, 2u);
    EXPECT_EQ(max_abs_diff(c.matrix, gate_matrix("CNOT")), 0.0);

    const auto cc = resolve_gate("controlled(controlled(X))");
    EXPECT_EQ(max_abs_diff(cc.matrix, gate_matrix("CCNOT")), 0.0);

    const auto a = resolve_gate("adjoint(S)");
    EXPECT_LE(max_abs_diff(a.matrix * gate_matrix("S"), CMatrix::identity(2)), 1e-15);

    const auto t = resolve_gate("tensor( H , X )");
    EXPECT_EQ(t.arity, 2u);
    EXPECT_EQ(t.name, "tensor(H, X)");
    EXPECT_EQ(max_abs_diff(t.matrix, tensor(gate_matrix("H"), gate_matrix("X"))), 0.0);

    const auto r = resolve_gate("RZ(0.5)");
    EXPECT_EQ(r.name, "RZ(0.5)");
    EXPECT_EQ(r.arity, 1u);
}

TEST(ResolveGate, Errors) {
    EXPECT_EQ(code_of([] { resolve_gate("controlled(X"); }), ErrorCode::SyntaxError);
    EXPECT_EQ(code_of([] { resolve_gate("NOPE"); }), ErrorCode::UnknownGate);
    EXPECT_EQ(code_of([] { resolve_gate("RX(abc)"); }), ErrorCode::BadParameters);
    EXPECT_EQ(code_of([] { resolve_gate("RX(1, 2)"); }), ErrorCode::BadParameters);
}

TEST(FormatReal, ShortestRoundTrip) {
    EXPECT_EQ(format_real(1.0), "1");
    EXPECT_EQ(format_real(-0.0), "0");
    EXPECT_EQ(format_real(0.5), "0.5");
    EXPECT_EQ(format_real(1.0 / std::sqrt(2.0)), "0.7071067811865475");
    EXPECT_EQ(format_real(gate_matrix("H")(0, 0).real()), "0.7071067811865476");
    EXPECT_EQ(format_real(1e-20), "1e-20");
}
