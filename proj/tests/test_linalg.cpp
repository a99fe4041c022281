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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "qmcforge/error.hpp"
#include "qmcforge/gates.hpp"
#include "qmcforge/linalg.hpp"
#include "qmcforge/qmc.hpp"

using namespace qmcforge;

namespace {

const double r2 = 1.0 / std::sqrt(2.0);

CMatrix H() { return gate_matrix("H"); }
CMatrix X() { return gate_matrix("X"); }
CMatrix diag(std::vector<Complex> d) { return CMatrix::diagonal(d); }

CMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
    std::normal_distribution<double> g;
    std::vector<Complex> e(n * n);
    for (auto& x : e) x = Complex(g(rng), g(rng));
    return CMatrix(n, n, std::move(e));
}

// Independent oracle for a wire permutation: move bit of wire w to position perm(w).
std::size_t permuted_index(std::size_t idx, const std::vector<std::size_t>& images) {
    const std::size_t k = images.size();
    std::size_t out = 0;
    for (std::size_t w = 1; w <= k; ++w) {
        const std::size_t bit = (idx >> (k - w)) & 1U;
        out |= bit << (k - images[w - 1]);
    }
    return out;
}

}  // namespace

TEST(Tensor, IdentityWithIdentity) {
    EXPECT_EQ(max_abs_diff(tensor(CMatrix::identity(2), CMatrix::identity(2)), CMatrix::identity(4)), 0.0);
}

TEST(Tensor, BitFlipOnFirstFactor) {
    const KetVector out = apply(tensor(X(), CMatrix::identity(2)), KetVector::from_bits("00"));
    EXPECT_EQ(max_abs_diff(as_column(out), as_column(KetVector::from_bits("10"))), 0.0);
}

TEST(Tensor, HadamardPairOnZeroZero) {
    const KetVector out = apply(tensor(H(), H()), KetVector::from_bits("00"));
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(std::abs(out[i] - Complex(0.5, 0.0)), 0.0, 1e-15);
}

TEST(Tensor, MixedProductProperty) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t da = trial % 2 == 0 ? 2 : 4;
        const std::size_t db = trial % 3 == 0 ? 4 : 2;
        const CMatrix a = random_matrix(rng, da), b = random_matrix(rng, db);
        const CMatrix c = random_matrix(rng, da), d = random_matrix(rng, db);
        EXPECT_LE(max_abs_diff(tensor(a, b) * tensor(c, d), tensor(a * c, b * d)), 1e-12);
    }
}

TEST(Dagger, Examples) {
    EXPECT_EQ(max_abs_diff(dagger(CMatrix::identity(2)), CMatrix::identity(2)), 0.0);
    EXPECT_EQ(max_abs_diff(dagger(H()), H()), 0.0);
    const Complex i(0.0, 1.0);
    EXPECT_EQ(max_abs_diff(dagger(diag({i, -i})), diag({-i, i})), 0.0);
}

TEST(Trace, Examples) {
    EXPECT_EQ(trace(CMatrix::identity(4)), Complex(4.0, 0.0));
    EXPECT_EQ(trace(outer(KetVector::basis(1, 0))), Complex(1.0, 0.0));
    EXPECT_THROW(trace(CMatrix(2, 3)), Error);
    try {
        trace(CMatrix(2, 3));
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NonSquare);
    }
}

TEST(Matmul, Examples) {
    EXPECT_LE(max_abs_diff(H() * H(), CMatrix::identity(2)), 1e-15);
    EXPECT_EQ(max_abs_diff(X() * as_column(KetVector::basis(1, 0)), as_column(KetVector::basis(1, 1))), 0.0);
    EXPECT_EQ(max_abs_diff(gate_matrix("CNOT") * as_column(KetVector::from_bits("10")),
                           as_column(KetVector::from_bits("11"))),
              0.0);
    EXPECT_THROW(matmul(CMatrix(2, 3), CMatrix(2, 3)), Error);
}

TEST(Matrix, RejectsNonFinite) {
    EXPECT_THROW(CMatrix(1, 1, {Complex(std::nan(""), 0.0)}), Error);
    EXPECT_THROW(CMatrix(1, 1, {Complex(0.0, INFINITY)}), Error);
}

TEST(Superop, Examples) {
    const CMatrix rho = outer(KetVector::basis(1, 0));
    EXPECT_EQ(max_abs_diff(apply_superop(CMatrix::identity(2), rho), rho), 0.0);
    const CMatrix plus = apply_superop(H(), rho);
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) EXPECT_NEAR(plus(r, c).real(), 0.5, 1e-15);
    EXPECT_EQ(max_abs_diff(apply_superop(X(), rho), outer(KetVector::basis(1, 1))), 0.0);
}

TEST(Unitary, Examples) {
    EXPECT_TRUE(is_unitary(H(), 1e-12));
    EXPECT_FALSE(is_unitary(scale(CMatrix::identity(2), 2.0), 1e-12));
}

TEST(Unitary, WholeLibrary) {
    const double angles[] = {0.3};
    for (const auto& name : library_gate_names()) {
        const bool rot = name == "RX" || name == "RY" || name == "RZ" || name == "P";
        const CMatrix u = rot ? gate_matrix(name, angles) : gate_matrix(name);
        EXPECT_TRUE(is_unitary(u, 1e-12)) << name;
    }
}

TEST(Density, Checks) {
    EXPECT_TRUE(is_density(outer(KetVector::from_bits("01"))));
    EXPECT_FALSE(is_density(CMatrix::identity(2)));  // trace 2
    EXPECT_FALSE(is_density(diag({1.5, -0.5})));
    const auto ev = hermitian_eigenvalues(diag({3.0, -1.0, 2.0}));
    ASSERT_EQ(ev.size(), 3u);
    EXPECT_NEAR(ev[0], -1.0, 1e-12);
    EXPECT_NEAR(ev[2], 3.0, 1e-12);
}

TEST(BinarySwap, Examples) {
    auto basis = [](const char* b) { return as_column(KetVector::from_bits(b)); };
    EXPECT_EQ(max_abs_diff(binary_swap(2, 1, 2) * basis("01"), basis("10")), 0.0);
    EXPECT_EQ(max_abs_diff(binary_swap(3, 2, 2), CMatrix::identity(8)), 0.0);
    EXPECT_EQ(max_abs_diff(binary_swap(3, 1, 3) * basis("100"), basis("001")), 0.0);
    // all 8 basis states: bits 1 and 3 exchange, bit 2 stays
    for (std::size_t i = 0; i < 8; ++i) {
        const std::size_t j = (i & 0b010) | ((i >> 2) & 1U) | ((i & 1U) << 2);
        EXPECT_EQ(max_abs_diff(binary_swap(3, 1, 3) * as_column(KetVector::basis(3, i)),
                               as_column(KetVector::basis(3, j))),
                  0.0);
    }
    EXPECT_THROW(binary_swap(3, 0, 2), Error);
    EXPECT_THROW(binary_swap(3, 1, 4), Error);
}

TEST(WirePermutation, Construction) {
    EXPECT_THROW(WirePermutation({1, 1, 2}), Error);
    EXPECT_THROW(WirePermutation({0, 1}), Error);
    const std::size_t wires[] = {3, 1};
    const auto p = WirePermutation::bring_to_front(3, wires);
    EXPECT_EQ(p(3), 1u);
    EXPECT_EQ(p(1), 2u);
    EXPECT_EQ(p(2), 3u);
    EXPECT_TRUE((p.inverse() == WirePermutation({3, 1, 2})));
    EXPECT_TRUE(WirePermutation::identity(4).is_identity());
}

TEST(GeneralizedSwap, Examples) {
    const auto id = generalized_swap(WirePermutation::identity(3), SwapStrategy::Composed);
    EXPECT_EQ(id.binary_swaps, 0u);
    EXPECT_EQ(max_abs_diff(id.matrix, CMatrix::identity(8)), 0.0);

    const auto t = generalized_swap(WirePermutation({2, 1}), SwapStrategy::Composed);
    EXPECT_EQ(max_abs_diff(t.matrix, binary_swap(2, 1, 2)), 0.0);
    EXPECT_EQ(t.binary_swaps, 1u);

    const WirePermutation cycle({2, 3, 1});
    EXPECT_EQ(max_abs_diff(generalized_swap(cycle, SwapStrategy::Composed).matrix,
                           generalized_swap(cycle, SwapStrategy::Direct).matrix),
              0.0);
}

// Every permutation of k <= 4 wires (and a sample at k = 5): each strategy
// agrees with index arithmetic, and the swap counts respect their bounds.
TEST(GeneralizedSwap, StrategiesAgreeWithEnumeration) {
    std::mt19937_64 rng(11);
    for (std::size_t k = 1; k <= 5; ++k) {
        std::vector<std::size_t> images(k);
        std::iota(images.begin(), images.end(), std::size_t{1});
        std::vector<std::vector<std::size_t>> perms;
        if (k <= 4) {
            do perms.push_back(images);
            while (std::next_permutation(images.begin(), images.end()));
        } else {
            for (int s = 0; s < 30; ++s) {
                std::shuffle(images.begin(), images.end(), rng);
                perms.push_back(images);
            }
        }
        for (const auto& im : perms) {
            const WirePermutation p(im);
            std::size_t inversions = 0;
            for (std::size_t a = 0; a < k; ++a)
                for (std::size_t b = a + 1; b < k; ++b) inversions += im[a] > im[b];
            for (auto strat : {SwapStrategy::Composed, SwapStrategy::Direct, SwapStrategy::NaiveAdjacent}) {
                const auto syn = generalized_swap(p, strat);
                for (std::size_t i = 0; i < (std::size_t{1} << k); ++i) {
                    const std::size_t j = permuted_index(i, im);
                    ASSERT_EQ(syn.matrix(j, i), Complex(1.0, 0.0)) << to_string(strat);
                }
                const auto seq = swap_decomposition(p, strat);
                EXPECT_EQ(seq.size(), syn.binary_swaps);
                if (strat == SwapStrategy::Direct) EXPECT_EQ(syn.binary_swaps, 0u);
                if (strat == SwapStrategy::Composed) EXPECT_LE(syn.binary_swaps, k - 1);
                if (strat == SwapStrategy::NaiveAdjacent) {
                    EXPECT_EQ(syn.binary_swaps, inversions);
                    for (const auto& [a, b] : seq) EXPECT_EQ(b, a + 1);
                }
            }
        }
    }
}

TEST(Permute, MatchesGeneralizedSwap) {
    std::mt19937_64 rng(3);
    std::normal_distribution<double> g;
    std::vector<Complex> a(16);
    for (auto& x : a) x = Complex(g(rng), g(rng));
    const KetVector ket = KetVector(a).normalized();
    const WirePermutation p({3, 1, 4, 2});
    EXPECT_LE(max_abs_diff(as_column(permute_wires(ket, p)),
                           as_column(apply(generalized_swap(p, SwapStrategy::Direct).matrix, ket))),
              1e-15);
}

TEST(ApplyOnWires, MatchesPaddedOperator) {
    // CNOT with control on wire 3, target on wire 1 of a 3-wire register
    const std::size_t wires[] = {3, 1};
    for (std::size_t i = 0; i < 8; ++i) {
        const KetVector out = apply_on_wires(gate_matrix("CNOT"), wires, KetVector::basis(3, i));
        const std::size_t expect = (i & 1U) ? (i ^ 0b100) : i;
        EXPECT_EQ(out[expect], Complex(1.0, 0.0));
    }
}

TEST(Lesssim, Examples) {
    const CMatrix m0 = measurement_matrix(2, 3, 0);
    const CMatrix m3 = measurement_matrix(2, 3, 3);
    const CMatrix id = CMatrix::identity(8);
    std::mt19937_64 rng(5);
    std::normal_distribution<double> g;
    std::vector<Complex> a(8);
    for (auto& x : a) x = Complex(g(rng), g(rng));
    const CMatrix rho = outer(KetVector(a).normalized());
    EXPECT_TRUE(lesssim_at(std::span(&m0, 1), std::span(&id, 1), rho));
    const CMatrix u = gate_matrix("CCNOT");
    EXPECT_TRUE(lesssim_at(std::span(&u, 1), std::span(&u, 1), rho));
    const CMatrix grover_final = outer(KetVector::from_bits("111"));
    EXPECT_FALSE(lesssim_at(std::span(&m3, 1), std::span(&m0, 1), grover_final));
}

TEST(Ket, Basics) {
    EXPECT_THROW(KetVector::from_bits("012"), Error);
    EXPECT_THROW(KetVector(std::vector<Complex>(3)), Error);
    EXPECT_EQ(KetVector::from_bits("110").qubits(), 3u);
    EXPECT_NEAR(KetVector(std::vector<Complex>{r2, r2}).norm(), 1.0, 1e-15);
    EXPECT_EQ(qubit_count(64), 6u);
    EXPECT_THROW(qubit_count(6), Error);
}
