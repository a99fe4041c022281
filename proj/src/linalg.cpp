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

#include "qmcforge/linalg.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qmcforge/error.hpp"

namespace qmcforge {

namespace {

void require_same_shape(const CMatrix& a, const CMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorCode::DimensionMismatch,
                    std::string(op) + ": " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                        " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
}

void require_square(const CMatrix& a, const char* op) {
    if (!a.is_square()) {
        throw Error(ErrorCode::NonSquare, std::string(op) + ": matrix is " + std::to_string(a.rows()) + "x" +
                                              std::to_string(a.cols()));
    }
}

bool is_finite(const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

CMatrix::CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(rows_ * cols_) + " entries, got " +
                                                      std::to_string(entries_.size()));
    }
    if (!std::all_of(entries_.begin(), entries_.end(), is_finite)) {
        throw Error(ErrorCode::NonFinite, "matrix entry is NaN or infinite");
    }
}

CMatrix CMatrix::identity(std::size_t n) {
    std::vector<Complex> e(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        e[i * n + i] = 1.0;
    }
    return CMatrix(n, n, std::move(e));
}

CMatrix CMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    std::vector<Complex> e;
    e.reserve(r * c);
    for (const auto& row : rows) {
        if (row.size() != c) {
            throw Error(ErrorCode::DimensionMismatch, "ragged row in matrix literal");
        }
        e.insert(e.end(), row.begin(), row.end());
    }
    return CMatrix(r, c, std::move(e));
}

CMatrix CMatrix::diagonal(std::span<const Complex> diag) {
    const std::size_t n = diag.size();
    std::vector<Complex> e(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        e[i * n + i] = diag[i];
    }
    return CMatrix(n, n, std::move(e));
}

KetVector::KetVector(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
    qubits_ = qubit_count(amplitudes_.size());
    if (!std::all_of(amplitudes_.begin(), amplitudes_.end(), is_finite)) {
        throw Error(ErrorCode::NonFinite, "amplitude is NaN or infinite");
    }
}

KetVector KetVector::basis(std::size_t qubits, std::size_t index) {
    const std::size_t dim = std::size_t{1} << qubits;
    if (index >= dim) {
        throw Error(ErrorCode::BadInitialState,
                    "basis index " + std::to_string(index) + " out of range for " + std::to_string(qubits) + " qubits");
    }
    std::vector<Complex> a(dim);
    a[index] = 1.0;
    return KetVector(std::move(a));
}

KetVector KetVector::from_bits(std::string_view bits) {
    if (bits.empty()) {
        throw Error(ErrorCode::BadInitialState, "empty basis-state string");
    }
    std::size_t index = 0;
    for (char ch : bits) {
        if (ch != '0' && ch != '1') {
            throw Error(ErrorCode::BadInitialState, "basis-state string must contain only 0 and 1: '" +
                                                        std::string(bits) + "'");
        }
        index = (index << 1) | static_cast<std::size_t>(ch - '0');
    }
    return basis(bits.size(), index);
}

double KetVector::norm() const {
    double s = 0.0;
    for (const auto& a : amplitudes_) {
        s += std::norm(a);
    }
    return std::sqrt(s);
}

KetVector KetVector::normalized() const {
    const double n = norm();
    if (n == 0.0) {
        throw Error(ErrorCode::BadInitialState, "cannot normalize the zero vector");
    }
    std::vector<Complex> a(amplitudes_);
    for (auto& x : a) {
        x /= n;
    }
    return KetVector(std::move(a));
}

bool KetVector::is_normalized(double tol) const {
    double s = 0.0;
    for (const auto& a : amplitudes_) {
        s += std::norm(a);
    }
    return std::abs(s - 1.0) <= tol;
}

std::size_t qubit_count(std::size_t dim) {
    if (dim == 0 || (dim & (dim - 1)) != 0) {
        throw Error(ErrorCode::DimensionMismatch, "dimension " + std::to_string(dim) + " is not a power of two");
    }
    std::size_t k = 0;
    while ((std::size_t{1} << k) < dim) {
        ++k;
    }
    return k;
}

CMatrix tensor(const CMatrix& a, const CMatrix& b) {
    const std::size_t r = a.rows() * b.rows();
    const std::size_t c = a.cols() * b.cols();
    std::vector<Complex> e(r * c);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex{}) {
                continue;
            }
            for (std::size_t p = 0; p < b.rows(); ++p) {
                for (std::size_t q = 0; q < b.cols(); ++q) {
                    e[(i * b.rows() + p) * c + (j * b.cols() + q)] = aij * b(p, q);
                }
            }
        }
    }
    return CMatrix(r, c, std::move(e));
}

CMatrix dagger(const CMatrix& a) {
    std::vector<Complex> e(a.rows() * a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            e[j * a.rows() + i] = std::conj(a(i, j));
        }
    }
    return CMatrix(a.cols(), a.rows(), std::move(e));
}

Complex trace(const CMatrix& a) {
    require_square(a, "trace");
    Complex t{};
    for (std::size_t i = 0; i < a.rows(); ++i) {
        t += a(i, i);
    }
    return t;
}

CMatrix matmul(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows()) {
        throw Error(ErrorCode::DimensionMismatch, "matmul: " + std::to_string(a.rows()) + "x" +
                                                      std::to_string(a.cols()) + " times " +
                                                      std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
    const std::size_t n = a.rows();
    const std::size_t m = b.cols();
    std::vector<Complex> e(n * m);
    const auto bs = b.entries();
    // i-k-j order; zero entries of `a` are skipped, which makes permutation
    // and padded-gate products close to O(n^2).
    for (std::size_t i = 0; i < n; ++i) {
        Complex* row = e.data() + i * m;
        for (std::size_t p = 0; p < a.cols(); ++p) {
            const Complex aip = a(i, p);
            if (aip == Complex{}) {
                continue;
            }
            const Complex* brow = bs.data() + p * m;
            for (std::size_t j = 0; j < m; ++j) {
                row[j] += aip * brow[j];
            }
        }
    }
    return CMatrix(n, m, std::move(e));
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) { return matmul(a, b); }

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
    require_same_shape(a, b, "add");
    std::vector<Complex> e = a.to_vector();
    const auto be = b.entries();
    for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] += be[i];
    }
    return CMatrix(a.rows(), a.cols(), std::move(e));
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
    require_same_shape(a, b, "subtract");
    std::vector<Complex> e = a.to_vector();
    const auto be = b.entries();
    for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] -= be[i];
    }
    return CMatrix(a.rows(), a.cols(), std::move(e));
}

CMatrix scale(const CMatrix& a, Complex factor) {
    std::vector<Complex> e = a.to_vector();
    for (auto& x : e) {
        x *= factor;
    }
    return CMatrix(a.rows(), a.cols(), std::move(e));
}

KetVector apply(const CMatrix& u, const KetVector& ket) {
    if (u.cols() != ket.dim() || u.rows() != ket.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "apply: " + std::to_string(u.rows()) + "x" +
                                                      std::to_string(u.cols()) + " on dimension " +
                                                      std::to_string(ket.dim()));
    }
    std::vector<Complex> out(ket.dim());
    for (std::size_t i = 0; i < u.rows(); ++i) {
        Complex s{};
        for (std::size_t j = 0; j < u.cols(); ++j) {
            s += u(i, j) * ket[j];
        }
        out[i] = s;
    }
    return KetVector(std::move(out));
}

CMatrix outer(const KetVector& ket) {
    const std::size_t n = ket.dim();
    std::vector<Complex> e(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            e[i * n + j] = ket[i] * std::conj(ket[j]);
        }
    }
    return CMatrix(n, n, std::move(e));
}

CMatrix as_column(const KetVector& ket) {
    return CMatrix(ket.dim(), 1, std::vector<Complex>(ket.amplitudes().begin(), ket.amplitudes().end()));
}

CMatrix apply_superop(const CMatrix& u, const CMatrix& rho) {
    require_square(u, "apply_superop");
    require_square(rho, "apply_superop");
    if (u.rows() != rho.rows()) {
        throw Error(ErrorCode::DimensionMismatch, "apply_superop: operator dimension " + std::to_string(u.rows()) +
                                                      " vs state dimension " + std::to_string(rho.rows()));
    }
    return u * rho * dagger(u);
}

CMatrix apply_kraus(std::span<const CMatrix> kraus, const CMatrix& rho) {
    if (kraus.empty()) {
        throw Error(ErrorCode::DimensionMismatch, "apply_kraus: empty Kraus list");
    }
    CMatrix acc = apply_superop(kraus[0], rho);
    for (std::size_t i = 1; i < kraus.size(); ++i) {
        acc = acc + apply_superop(kraus[i], rho);
    }
    return acc;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
    require_same_shape(a, b, "max_abs_diff");
    double m = 0.0;
    const auto ae = a.entries();
    const auto be = b.entries();
    for (std::size_t i = 0; i < ae.size(); ++i) {
        m = std::max(m, std::abs(ae[i] - be[i]));
    }
    return m;
}

double max_abs(const CMatrix& a) {
    double m = 0.0;
    for (const auto& x : a.entries()) {
        m = std::max(m, std::abs(x));
    }
    return m;
}

bool is_unitary(const CMatrix& a, double tol) {
    require_square(a, "is_unitary");
    return max_abs_diff(dagger(a) * a, CMatrix::identity(a.rows())) <= tol;
}

bool is_hermitian(const CMatrix& a, double tol) {
    require_square(a, "is_hermitian");
    return max_abs_diff(a, dagger(a)) <= tol;
}

std::vector<double> hermitian_eigenvalues(const CMatrix& a) {
    require_square(a, "hermitian_eigenvalues");
    const auto n = static_cast<Eigen::Index>(a.rows());
    Eigen::MatrixXcd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            const auto ui = static_cast<std::size_t>(i);
            const auto uj = static_cast<std::size_t>(j);
            m(i, j) = 0.5 * (a(ui, uj) + std::conj(a(uj, ui)));
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();
    return std::vector<double>(ev.data(), ev.data() + ev.size());
}

bool is_density(const CMatrix& a, const Tolerances& tol) {
    if (!a.is_square() || !is_hermitian(a, tol.algebraic)) {
        return false;
    }
    if (std::abs(trace(a) - Complex{1.0}) > tol.algebraic) {
        return false;
    }
    const auto ev = hermitian_eigenvalues(a);
    return ev.empty() || ev.front() >= -tol.psd;
}

bool lesssim_at(std::span<const CMatrix> e, std::span<const CMatrix> f, const CMatrix& rho, double tol) {
    const double te = trace(apply_kraus(e, rho)).real();
    const double tf = trace(apply_kraus(f, rho)).real();
    return te <= tf + tol;
}

WirePermutation::WirePermutation(std::vector<std::size_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (std::size_t v : images_) {
        if (v < 1 || v > images_.size() || seen[v]) {
            throw Error(ErrorCode::NotAPermutation, "images do not form a bijection on {1.." +
                                                        std::to_string(images_.size()) + "}");
        }
        seen[v] = true;
    }
}

WirePermutation WirePermutation::identity(std::size_t k) {
    std::vector<std::size_t> im(k);
    std::iota(im.begin(), im.end(), std::size_t{1});
    return WirePermutation(std::move(im));
}

WirePermutation WirePermutation::bring_to_front(std::size_t k, std::span<const std::size_t> wires) {
    std::vector<std::size_t> im(k, 0);
    std::size_t next = 1;
    for (std::size_t w : wires) {
        if (w < 1 || w > k) {
            throw Error(ErrorCode::WireOutOfRange, "wire " + std::to_string(w) + " outside 1.." + std::to_string(k));
        }
        if (im[w - 1] != 0) {
            throw Error(ErrorCode::NotAPermutation, "wire " + std::to_string(w) + " listed twice");
        }
        im[w - 1] = next++;
    }
    for (std::size_t w = 1; w <= k; ++w) {
        if (im[w - 1] == 0) {
            im[w - 1] = next++;
        }
    }
    return WirePermutation(std::move(im));
}

WirePermutation WirePermutation::inverse() const {
    std::vector<std::size_t> inv(images_.size());
    for (std::size_t w = 1; w <= images_.size(); ++w) {
        inv[images_[w - 1] - 1] = w;
    }
    return WirePermutation(std::move(inv));
}

bool WirePermutation::is_identity() const {
    for (std::size_t w = 1; w <= images_.size(); ++w) {
        if (images_[w - 1] != w) {
            return false;
        }
    }
    return true;
}

std::string_view to_string(SwapStrategy s) {
    switch (s) {
        case SwapStrategy::Composed: return "composed";
        case SwapStrategy::Direct: return "direct";
        case SwapStrategy::NaiveAdjacent: return "naive-adjacent";
    }
    return "composed";
}

SwapStrategy parse_swap_strategy(std::string_view text) {
    if (text == "composed") return SwapStrategy::Composed;
    if (text == "direct") return SwapStrategy::Direct;
    if (text == "naive-adjacent" || text == "naive") return SwapStrategy::NaiveAdjacent;
    throw Error(ErrorCode::BadParameters, "unknown swap strategy '" + std::string(text) + "'");
}

CMatrix binary_swap(std::size_t k, std::size_t i, std::size_t j) {
    if (i < 1 || i > k || j < 1 || j > k) {
        throw Error(ErrorCode::WireOutOfRange, "binary_swap(" + std::to_string(k) + ", " + std::to_string(i) +
                                                   ", " + std::to_string(j) + ")");
    }
    const std::size_t dim = std::size_t{1} << k;
    std::vector<Complex> e(dim * dim);
    const std::size_t shift_i = k - i;
    const std::size_t shift_j = k - j;
    for (std::size_t x = 0; x < dim; ++x) {
        const std::size_t bi = (x >> shift_i) & 1U;
        const std::size_t bj = (x >> shift_j) & 1U;
        std::size_t y = x;
        if (bi != bj) {
            y ^= (std::size_t{1} << shift_i) | (std::size_t{1} << shift_j);
        }
        e[y * dim + x] = 1.0;
    }
    return CMatrix(dim, dim, std::move(e));
}

std::vector<std::pair<std::size_t, std::size_t>> swap_decomposition(const WirePermutation& perm,
                                                                    SwapStrategy strategy) {
    std::vector<std::pair<std::size_t, std::size_t>> swaps;
    if (strategy == SwapStrategy::Direct) {
        return swaps;
    }
    const std::size_t k = perm.size();
    const WirePermutation target = perm.inverse();  // target(p) = wire wanted at position p
    // at[p] = wire currently sitting at position p; where[w] = position of wire w
    std::vector<std::size_t> at(k + 1);
    std::vector<std::size_t> where(k + 1);
    for (std::size_t p = 1; p <= k; ++p) {
        at[p] = p;
        where[p] = p;
    }
    auto exchange = [&](std::size_t p, std::size_t q) {
        std::swap(at[p], at[q]);
        where[at[p]] = p;
        where[at[q]] = q;
        swaps.emplace_back(p, q);
    };
    for (std::size_t p = 1; p <= k; ++p) {
        const std::size_t want = target(p);
        std::size_t q = where[want];
        if (q == p) {
            continue;
        }
        if (strategy == SwapStrategy::Composed) {
            exchange(p, q);
        } else {
            for (; q > p; --q) {
                exchange(q - 1, q);
            }
        }
    }
    return swaps;
}

SwapSynthesis generalized_swap(const WirePermutation& perm, SwapStrategy strategy) {
    const std::size_t k = perm.size();
    const std::size_t dim = std::size_t{1} << k;
    if (strategy == SwapStrategy::Direct) {
        std::vector<Complex> e(dim * dim);
        for (std::size_t x = 0; x < dim; ++x) {
            std::size_t y = 0;
            for (std::size_t w = 1; w <= k; ++w) {
                y |= static_cast<std::size_t>(wire_bit(x, w, k)) << (k - perm(w));
            }
            e[y * dim + x] = 1.0;
        }
        return {CMatrix(dim, dim, std::move(e)), 0};
    }
    const auto swaps = swap_decomposition(perm, strategy);
    CMatrix m = CMatrix::identity(dim);
    for (const auto& [p, q] : swaps) {
        m = binary_swap(k, p, q) * m;
    }
    return {std::move(m), swaps.size()};
}

KetVector apply_on_wires(const CMatrix& u, std::span<const std::size_t> wires, const KetVector& ket) {
    const std::size_t k = ket.qubits();
    const std::size_t m = wires.size();
    const std::size_t local_dim = std::size_t{1} << m;
    if (u.rows() != local_dim || u.cols() != local_dim) {
        throw Error(ErrorCode::DimensionMismatch, "apply_on_wires: " + std::to_string(u.rows()) +
                                                      "-dimensional gate on " + std::to_string(m) + " wires");
    }
    std::size_t mask = 0;
    std::vector<std::size_t> shift(m);
    for (std::size_t j = 0; j < m; ++j) {
        if (wires[j] < 1 || wires[j] > k) {
            throw Error(ErrorCode::WireOutOfRange, "apply_on_wires: wire " + std::to_string(wires[j]));
        }
        shift[j] = k - wires[j];
        mask |= std::size_t{1} << shift[j];
    }
    auto spread = [&](std::size_t base, std::size_t local) {
        std::size_t idx = base;
        for (std::size_t j = 0; j < m; ++j) {
            if ((local >> (m - 1 - j)) & 1U) {
                idx |= std::size_t{1} << shift[j];
            }
        }
        return idx;
    };
    std::vector<Complex> out(ket.dim());
    std::vector<Complex> in_local(local_dim);
    for (std::size_t base = 0; base < ket.dim(); ++base) {
        if (base & mask) {
            continue;
        }
        for (std::size_t l = 0; l < local_dim; ++l) {
            in_local[l] = ket[spread(base, l)];
        }
        for (std::size_t r = 0; r < local_dim; ++r) {
            Complex s{};
            for (std::size_t c = 0; c < local_dim; ++c) {
                s += u(r, c) * in_local[c];
            }
            out[spread(base, r)] = s;
        }
    }
    return KetVector(std::move(out));
}

KetVector permute_wires(const KetVector& ket, const WirePermutation& perm) {
    const std::size_t k = ket.qubits();
    if (perm.size() != k) {
        throw Error(ErrorCode::DimensionMismatch, "permute_wires: permutation on " + std::to_string(perm.size()) +
                                                      " wires for a " + std::to_string(k) + "-wire state");
    }
    std::vector<Complex> out(ket.dim());
    for (std::size_t x = 0; x < ket.dim(); ++x) {
        std::size_t y = 0;
        for (std::size_t w = 1; w <= k; ++w) {
            y |= static_cast<std::size_t>(wire_bit(x, w, k)) << (k - perm(w));
        }
        out[y] = ket[x];
    }
    return KetVector(std::move(out));
}

}  // namespace qmcforge
