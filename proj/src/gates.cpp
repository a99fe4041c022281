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

#include "qmcforge/gates.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

#include "qmcforge/error.hpp"

namespace qmcforge {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
const Complex kI{0.0, 1.0};

std::string upper(std::string_view s) {
    std::string out(s);
    for (auto& ch : out) {
        ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    }
    return out;
}

void expect_params(std::string_view name, std::span<const double> params, std::size_t n) {
    if (params.size() != n) {
        throw Error(ErrorCode::BadParameters, "gate " + std::string(name) + " takes " + std::to_string(n) +
                                                  " parameter(s), got " + std::to_string(params.size()));
    }
}

CMatrix permutation_from(std::size_t dim, const std::vector<std::size_t>& image_of_column) {
    std::vector<Complex> e(dim * dim);
    for (std::size_t c = 0; c < dim; ++c) {
        e[image_of_column[c] * dim + c] = 1.0;
    }
    return CMatrix(dim, dim, std::move(e));
}

// Recursive-descent parser over a gate expression.
class ExprParser {
public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    GateLibraryEntry parse_all() {
        GateLibraryEntry g = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) {
            fail("unexpected '" + std::string(text_.substr(pos_)) + "'");
        }
        return g;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw Error(ErrorCode::SyntaxError, "gate expression '" + std::string(text_) + "': " + why);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool peek(char ch) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == ch;
    }

    void expect(char ch) {
        if (!peek(ch)) {
            fail(std::string("expected '") + ch + "'");
        }
        ++pos_;
    }

    std::string identifier() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected a gate name");
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    double number() {
        skip_ws();
        const char* first = text_.data() + pos_;
        const char* last = text_.data() + text_.size();
        if (first != last && *first == '+') {
            ++first;
        }
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc{} || ptr == first) {
            throw Error(ErrorCode::BadParameters, "gate expression '" + std::string(text_) + "': expected a number");
        }
        if (!std::isfinite(v)) {
            throw Error(ErrorCode::BadParameters, "gate parameter must be finite");
        }
        pos_ = static_cast<std::size_t>(ptr - text_.data());
        return v;
    }

    GateLibraryEntry parse_expr() {
        const std::string name = identifier();
        if (name == "controlled" || name == "adjoint" || name == "tensor") {
            expect('(');
            std::vector<GateLibraryEntry> args{parse_expr()};
            while (peek(',')) {
                ++pos_;
                args.push_back(parse_expr());
            }
            expect(')');
            return combine(name, std::move(args));
        }
        std::vector<double> params;
        std::string canonical = upper(name);
        if (canonical == "TOFFOLI") {
            canonical = "CCNOT";
        }
        if (peek('(')) {
            ++pos_;
            params.push_back(number());
            while (peek(',')) {
                ++pos_;
                params.push_back(number());
            }
            expect(')');
        }
        CMatrix m = gate_matrix(canonical, params);
        if (!params.empty()) {
            canonical += "(";
            for (std::size_t i = 0; i < params.size(); ++i) {
                canonical += (i ? ", " : "") + format_real(params[i]);
            }
            canonical += ")";
        }
        const std::size_t arity = qubit_count(m.rows());
        return {canonical, arity, std::move(m)};
    }

    GateLibraryEntry combine(const std::string& op, std::vector<GateLibraryEntry> args) {
        if (op != "tensor" && args.size() != 1) {
            throw Error(ErrorCode::BadParameters, op + " takes exactly one gate");
        }
        if (op == "controlled") {
            return {"controlled(" + args[0].name + ")", args[0].arity + 1, controlled(args[0].matrix)};
        }
        if (op == "adjoint") {
            return {"adjoint(" + args[0].name + ")", args[0].arity, dagger(args[0].matrix)};
        }
        std::string name = "tensor(";
        CMatrix m = args[0].matrix;
        std::size_t arity = args[0].arity;
        name += args[0].name;
        for (std::size_t i = 1; i < args.size(); ++i) {
            m = tensor(m, args[i].matrix);
            arity += args[i].arity;
            name += ", " + args[i].name;
        }
        name += ")";
        return {name, arity, std::move(m)};
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string format_real(double value) {
    if (value == 0.0) {
        return "0";
    }
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    if (ec != std::errc{}) {
        throw Error(ErrorCode::NonFinite, "cannot format number");
    }
    return std::string(buf, ptr);
}

CMatrix controlled(const CMatrix& u) {
    const std::size_t n = u.rows();
    std::vector<Complex> e(4 * n * n);
    const std::size_t dim = 2 * n;
    for (std::size_t i = 0; i < n; ++i) {
        e[i * dim + i] = 1.0;
        for (std::size_t j = 0; j < n; ++j) {
            e[(n + i) * dim + (n + j)] = u(i, j);
        }
    }
    return CMatrix(dim, dim, std::move(e));
}

std::vector<std::string> library_gate_names() {
    return {"I", "X", "Y", "Z", "H", "S", "T", "CNOT", "CZ", "SWAP", "CCNOT", "RX", "RY", "RZ", "P"};
}

CMatrix gate_matrix(std::string_view name_in, std::span<const double> params) {
    const std::string name = upper(name_in);
    const bool rotation = name == "RX" || name == "RY" || name == "RZ" || name == "P";
    if (rotation) {
        expect_params(name, params, 1);
        const double t = params[0];
        const double c = std::cos(t / 2);
        const double s = std::sin(t / 2);
        if (name == "RX") return CMatrix::from_rows({{c, -kI * s}, {-kI * s, c}});
        if (name == "RY") return CMatrix::from_rows({{c, -s}, {s, c}});
        if (name == "RZ") return CMatrix::from_rows({{std::exp(-kI * (t / 2)), 0.0}, {0.0, std::exp(kI * (t / 2))}});
        return CMatrix::from_rows({{1.0, 0.0}, {0.0, std::exp(kI * t)}});
    }
    if (name == "I" || name == "X" || name == "Y" || name == "Z" || name == "H" || name == "S" || name == "T" ||
        name == "CNOT" || name == "CZ" || name == "SWAP" || name == "CCNOT" || name == "TOFFOLI") {
        expect_params(name, params, 0);
    }
    if (name == "I") return CMatrix::identity(2);
    if (name == "X") return CMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
    if (name == "Y") return CMatrix::from_rows({{0.0, -kI}, {kI, 0.0}});
    if (name == "Z") return CMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
    if (name == "H") return CMatrix::from_rows({{kInvSqrt2, kInvSqrt2}, {kInvSqrt2, -kInvSqrt2}});
    if (name == "S") return CMatrix::from_rows({{1.0, 0.0}, {0.0, kI}});
    if (name == "T") return CMatrix::from_rows({{1.0, 0.0}, {0.0, std::polar(1.0, std::numbers::pi / 4)}});
    if (name == "CNOT") return controlled(gate_matrix("X"));
    if (name == "CZ") return controlled(gate_matrix("Z"));
    if (name == "SWAP") return permutation_from(4, {0, 2, 1, 3});
    if (name == "CCNOT" || name == "TOFFOLI") return controlled(controlled(gate_matrix("X")));
    throw Error(ErrorCode::UnknownGate, "unknown gate '" + std::string(name_in) + "'");
}

GateLibraryEntry resolve_gate(std::string_view expression) {
    return ExprParser(expression).parse_all();
}

}  // namespace qmcforge
