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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "qmcforge/tolerances.hpp"

namespace qmcforge {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Immutable once constructed; every
/// operation below returns a fresh value.
class CMatrix {
public:
    CMatrix() = default;
    /// Zero matrix.
    CMatrix(std::size_t rows, std::size_t cols);
    /// Throws DimensionMismatch if entries.size() != rows * cols, NonFinite on
    /// NaN or infinite components.
    CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    static CMatrix identity(std::size_t n);
    static CMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
    static CMatrix diagonal(std::span<const Complex> diag);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool empty() const noexcept { return entries_.empty(); }

    const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    std::span<const Complex> entries() const noexcept { return entries_; }

    /// Copy of the entries, for building a modified matrix.
    std::vector<Complex> to_vector() const { return entries_; }

    friend bool operator==(const CMatrix&, const CMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

/// State vector over `qubits()` wires; wire 1 is the most significant bit of
/// the basis index.
class KetVector {
public:
    KetVector() = default;
    /// Throws DimensionMismatch unless the length is a power of two.
    explicit KetVector(std::vector<Complex> amplitudes);

    static KetVector basis(std::size_t qubits, std::size_t index);
    /// "011" -> |011>. Throws BadInitialState on anything but 0/1 digits.
    static KetVector from_bits(std::string_view bits);

    std::size_t dim() const noexcept { return amplitudes_.size(); }
    std::size_t qubits() const noexcept { return qubits_; }
    const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }
    std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }

    double norm() const;
    KetVector normalized() const;
    bool is_normalized(double tol = kDefaultTolerances.algebraic) const;

private:
    std::vector<Complex> amplitudes_;
    std::size_t qubits_ = 0;
};

/// Bit of wire `wire` (1-based) in basis index `index` of a `k`-wire register.
constexpr unsigned wire_bit(std::size_t index, std::size_t wire, std::size_t k) {
    return static_cast<unsigned>((index >> (k - wire)) & 1U);
}

/// log2 of a power-of-two dimension; throws DimensionMismatch otherwise.
std::size_t qubit_count(std::size_t dim);

CMatrix tensor(const CMatrix& a, const CMatrix& b);
CMatrix dagger(const CMatrix& a);
Complex trace(const CMatrix& a);
CMatrix matmul(const CMatrix& a, const CMatrix& b);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator+(const CMatrix& a, const CMatrix& b);
CMatrix operator-(const CMatrix& a, const CMatrix& b);
CMatrix scale(const CMatrix& a, Complex factor);

KetVector apply(const CMatrix& u, const KetVector& ket);
/// |ket><ket|
CMatrix outer(const KetVector& ket);
/// Column matrix holding the amplitudes.
CMatrix as_column(const KetVector& ket);

/// U rho U^dagger.
CMatrix apply_superop(const CMatrix& u, const CMatrix& rho);
/// sum_i K_i rho K_i^dagger.
CMatrix apply_kraus(std::span<const CMatrix> kraus, const CMatrix& rho);

/// Largest entrywise modulus of a - b.
double max_abs_diff(const CMatrix& a, const CMatrix& b);
double max_abs(const CMatrix& a);

bool is_unitary(const CMatrix& a, double tol = kDefaultTolerances.algebraic);
bool is_hermitian(const CMatrix& a, double tol = kDefaultTolerances.algebraic);
/// Hermitian, unit trace and eigenvalues >= -tol.psd.
bool is_density(const CMatrix& a, const Tolerances& tol = kDefaultTolerances);

/// Ascending eigenvalues of a Hermitian matrix (Hermitian part is used).
std::vector<double> hermitian_eigenvalues(const CMatrix& a);

/// tr(e(rho)) <= tr(f(rho)) + tol at this particular rho. A pointwise witness
/// only; the universally quantified order is not decided here.
bool lesssim_at(std::span<const CMatrix> e, std::span<const CMatrix> f, const CMatrix& rho,
                double tol = kDefaultTolerances.algebraic);

/// Bijection on wires {1..k}. `image(w)` is the position wire w is sent to.
class WirePermutation {
public:
    WirePermutation() = default;
    /// images[w - 1] = image of wire w. Throws NotAPermutation.
    explicit WirePermutation(std::vector<std::size_t> images);

    static WirePermutation identity(std::size_t k);
    /// Permutation moving the listed wires to positions 1..m in listed order,
    /// followed by the remaining wires in ascending order.
    static WirePermutation bring_to_front(std::size_t k, std::span<const std::size_t> wires);

    std::size_t size() const noexcept { return images_.size(); }
    std::size_t operator()(std::size_t wire) const { return images_[wire - 1]; }
    std::span<const std::size_t> images() const noexcept { return images_; }
    WirePermutation inverse() const;
    bool is_identity() const;

    friend bool operator==(const WirePermutation&, const WirePermutation&) = default;

private:
    std::vector<std::size_t> images_;
};

enum class SwapStrategy {
    Composed,       // selection sort, at most k-1 transpositions
    Direct,         // one-pass permutation matrix, no binary swaps
    NaiveAdjacent,  // adjacent transpositions, up to k(k-1)/2
};

std::string_view to_string(SwapStrategy s);
/// Accepts "composed", "direct", "naive-adjacent". Throws BadParameters.
SwapStrategy parse_swap_strategy(std::string_view text);

/// 2^k permutation matrix exchanging wires i and j.
CMatrix binary_swap(std::size_t k, std::size_t i, std::size_t j);

/// Transpositions (applied first to last) realizing `perm` under `strategy`.
/// Empty for Direct.
std::vector<std::pair<std::size_t, std::size_t>> swap_decomposition(const WirePermutation& perm,
                                                                    SwapStrategy strategy);

struct SwapSynthesis {
    CMatrix matrix;
    std::size_t binary_swaps = 0;
};

/// Matrix taking |b_1..b_k> to the ket whose position perm(w) holds b_w.
SwapSynthesis generalized_swap(const WirePermutation& perm, SwapStrategy strategy);

/// Apply a 2^m-dimensional `u` to the listed wires of `ket` (first listed wire
/// is the most significant local bit).
KetVector apply_on_wires(const CMatrix& u, std::span<const std::size_t> wires, const KetVector& ket);

/// Reorder the wires of `ket` so that position perm(w) holds wire w.
KetVector permute_wires(const KetVector& ket, const WirePermutation& perm);

}  // namespace qmcforge
