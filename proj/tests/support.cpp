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

#include "support.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qmcforge/circuit_text.hpp"
#include "qmcforge/gates.hpp"

#ifndef QMCFORGE_SOURCE_DIR
#error "QMCFORGE_SOURCE_DIR must be defined by the build"
#endif

namespace qmcforge::testsupport {

namespace {

struct PoolGate {
    const char* expr;
    std::size_t arity;
    bool angle;
};

constexpr PoolGate kPool[] = {
    {"H", 1, false},     {"X", 1, false},    {"Y", 1, false},          {"Z", 1, false},
    {"S", 1, false},     {"T", 1, false},    {"adjoint(T)", 1, false}, {"RX", 1, true},
    {"RY", 1, true},     {"RZ", 1, true},    {"P", 1, true},           {"CNOT", 2, false},
    {"CZ", 2, false},    {"SWAP", 2, false}, {"controlled(H)", 2, false}, {"tensor(H, S)", 2, false},
    {"CCNOT", 3, false},
};

// Gates applied as `cgate` carry their controls separately.
constexpr PoolGate kControlled[] = {{"X", 1, false}, {"RY", 1, true}, {"H", 1, false}};

}  // namespace

RandomCircuit random_circuit(std::mt19937_64& rng, std::size_t max_k, std::size_t max_gates) {
    std::uniform_int_distribution<std::size_t> pick_k(1, max_k);
    std::uniform_int_distribution<std::size_t> pick_n(0, max_gates);
    std::uniform_real_distribution<double> angle(-3.0, 3.0);
    const std::size_t k = pick_k(rng);
    const std::size_t n = pick_n(rng);

    std::ostringstream out;
    out << "qubits " << k << "\n";
    std::vector<std::size_t> wires(k);
    std::iota(wires.begin(), wires.end(), std::size_t{1});
    for (std::size_t g = 0; g < n; ++g) {
        std::shuffle(wires.begin(), wires.end(), rng);
        const bool as_cgate = k >= 2 && std::uniform_int_distribution<int>(0, 4)(rng) == 0;
        if (as_cgate) {
            const PoolGate& pg = kControlled[std::uniform_int_distribution<std::size_t>(0, 2)(rng)];
            const std::size_t controls = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(2, k - 1))(rng);
            out << "cgate " << pg.expr;
            if (pg.angle) out << '(' << format_real(angle(rng)) << ')';
            out << ' ' << wires[0] << " ctrl";
            for (std::size_t c = 0; c < controls; ++c) out << ' ' << wires[1 + c];
            out << "\n";
            continue;
        }
        std::vector<const PoolGate*> fits;
        for (const auto& pg : kPool) {
            if (pg.arity <= k) fits.push_back(&pg);
        }
        const PoolGate& pg = *fits[std::uniform_int_distribution<std::size_t>(0, fits.size() - 1)(rng)];
        out << "gate " << pg.expr;
        if (pg.angle) out << '(' << format_real(angle(rng)) << ')';
        for (std::size_t i = 0; i < pg.arity; ++i) out << ' ' << wires[i];
        out << "\n";
    }
    for (std::size_t w = 1; w <= k; ++w) {
        if (std::uniform_int_distribution<int>(0, 1)(rng) == 1) out << "measure " << w << "\n";
    }
    RandomCircuit rc{out.str(), {}};
    rc.circuit = parse_circuit(rc.text);
    return rc;
}

KetVector brute_force_run(const std::string& qc_text, const KetVector& input) {
    std::istringstream in(qc_text);
    std::string line;
    std::size_t k = 0;
    std::vector<Complex> amp(input.dim());
    for (std::size_t i = 0; i < input.dim(); ++i) amp[i] = input[i];
    while (std::getline(in, line)) {
        line = line.substr(0, line.find('#'));
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "qubits") {
            ls >> k;
            if ((std::size_t{1} << k) != amp.size()) throw std::invalid_argument("input size does not match qubits");
            continue;
        }
        if (kw != "gate" && kw != "cgate") continue;
        // Gate expressions may contain spaces, but only inside parentheses.
        std::string expr;
        int depth = 0;
        char ch;
        ls >> std::ws;
        while (ls.get(ch)) {
            if (ch == '(') ++depth;
            if (ch == ')') --depth;
            if (depth == 0 && std::isspace(static_cast<unsigned char>(ch))) break;
            expr += ch;
        }
        std::vector<std::size_t> targets, controls;
        bool ctrl = false;
        std::string tok;
        while (ls >> tok) {
            if (tok == "ctrl") {
                ctrl = true;
                continue;
            }
            (ctrl ? controls : targets).push_back(std::stoul(tok));
        }
        const CMatrix u = resolve_gate(expr).matrix;
        std::vector<std::size_t> local = controls;
        local.insert(local.end(), targets.begin(), targets.end());
        const std::size_t cdim = std::size_t{1} << controls.size();
        std::vector<Complex> next(amp.size(), Complex(0.0, 0.0));
        for (std::size_t i = 0; i < amp.size(); ++i) {
            if (amp[i] == Complex(0.0, 0.0)) continue;
            std::size_t li = 0;
            for (std::size_t w : local) li = (li << 1) | ((i >> (k - w)) & 1U);
            // Controls are handled here by index arithmetic rather than by
            // the controlled() matrix: only the all-ones block sees u.
            const bool fire = controls.empty() || (li >> targets.size()) == cdim - 1;
            if (!fire) {
                next[i] += amp[i];
                continue;
            }
            const std::size_t tdim = std::size_t{1} << targets.size();
            const std::size_t ti = li & (tdim - 1);
            for (std::size_t to = 0; to < tdim; ++to) {
                const Complex a = u(to, ti);
                if (a == Complex(0.0, 0.0)) continue;
                std::size_t j = i;
                for (std::size_t b = 0; b < targets.size(); ++b) {
                    const std::size_t shift = k - targets[b];
                    const std::size_t bit = (to >> (targets.size() - 1 - b)) & 1U;
                    j = (j & ~(std::size_t{1} << shift)) | (bit << shift);
                }
                next[j] += a * amp[i];
            }
        }
        amp = std::move(next);
    }
    return KetVector(std::move(amp));
}

double brute_force_probability(const KetVector& final_state, const std::vector<std::size_t>& measured,
                               const std::string& bits) {
    const std::size_t k = final_state.qubits();
    double p = 0.0;
    for (std::size_t i = 0; i < final_state.dim(); ++i) {
        bool match = true;
        for (std::size_t m = 0; m < measured.size(); ++m) {
            if (((i >> (k - measured[m])) & 1U) != static_cast<std::size_t>(bits[m] - '0')) match = false;
        }
        if (match) p += std::norm(final_state[i]);
    }
    return p;
}

std::string golden_path(const std::string& name) { return std::string(QMCFORGE_SOURCE_DIR) + "/tests/golden/" + name; }

std::string circuits_path(const std::string& name) { return std::string(QMCFORGE_SOURCE_DIR) + "/circuits/" + name; }

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace qmcforge::testsupport
