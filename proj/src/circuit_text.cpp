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

#include "qmcforge/circuit_text.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "qmcforge/error.hpp"
#include "qmcforge/gates.hpp"

namespace qmcforge {

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;
    std::size_t line = 0;

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r')) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    std::string_view word() {
        skip_ws();
        const std::size_t start = pos;
        while (pos < text.size() && text[pos] != ' ' && text[pos] != '\t' && text[pos] != '\r') ++pos;
        return text.substr(start, pos - start);
    }
    // A gate expression may contain spaces inside its parentheses.
    std::string_view expression() {
        skip_ws();
        const std::size_t start = pos;
        int depth = 0;
        while (pos < text.size()) {
            const char ch = text[pos];
            if (ch == '(') ++depth;
            if (ch == ')') --depth;
            if (depth == 0 && (ch == ' ' || ch == '\t' || ch == '\r')) break;
            ++pos;
        }
        if (depth != 0) throw Error(ErrorCode::SyntaxError, "unbalanced parentheses in gate expression", line);
        return text.substr(start, pos - start);
    }
};

std::size_t parse_count(std::string_view token, std::size_t line, const char* what) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
        throw Error(ErrorCode::SyntaxError, std::string("expected ") + what + ", got '" + std::string(token) + "'", line);
    }
    return v;
}

struct Builder {
    std::size_t k = 0;
    std::vector<NodeKind> nodes;
    std::vector<Edge> edges;
    struct Port {
        NodeId node;
        std::size_t s_label;
    };
    std::vector<Port> frontier;  // per wire, 1-based
    std::vector<bool> measured;
    std::vector<std::size_t> measure_line;

    void start(std::size_t qubits) {
        k = qubits;
        frontier.assign(k + 1, {0, 0});
        measured.assign(k + 1, false);
        measure_line.assign(k + 1, 0);
        for (std::size_t w = 1; w <= k; ++w) {
            nodes.emplace_back(QubitNode{w});
            frontier[w] = {w - 1, 1};
        }
    }

    void check_wires(const std::vector<std::size_t>& wires, std::size_t line) const {
        std::vector<bool> seen(k + 1, false);
        for (std::size_t w : wires) {
            if (w < 1 || w > k) {
                throw Error(ErrorCode::WireOutOfRange,
                            "wire " + std::to_string(w) + " outside 1.." + std::to_string(k), line);
            }
            if (seen[w]) throw Error(ErrorCode::SyntaxError, "wire " + std::to_string(w) + " listed twice", line);
            if (measured[w]) {
                throw Error(ErrorCode::SyntaxError,
                            "wire " + std::to_string(w) + " was measured on line " + std::to_string(measure_line[w]) +
                                "; mid-circuit measurement is not supported",
                            line);
            }
            seen[w] = true;
        }
    }

    void add_gate(GateLibraryEntry gate, const std::vector<std::size_t>& wires, std::size_t line) {
        if (gate.arity != wires.size()) {
            throw Error(ErrorCode::ArityMismatch,
                        gate.name + " acts on " + std::to_string(gate.arity) + " wire(s), " +
                            std::to_string(wires.size()) + " given",
                        line);
        }
        check_wires(wires, line);
        const NodeId id = nodes.size();
        nodes.emplace_back(UnitaryNode{gate.arity, std::move(gate.name), std::move(gate.matrix)});
        for (std::size_t j = 0; j < wires.size(); ++j) {
            const Port p = frontier[wires[j]];
            edges.push_back({p.node, id, p.s_label, j + 1});
            frontier[wires[j]] = {id, j + 1};
        }
    }

    Circuit finish() {
        for (std::size_t w = 1; w <= k; ++w) {
            const NodeId id = nodes.size();
            if (measured[w]) {
                nodes.emplace_back(MeasurementNode{w});
            } else {
                nodes.emplace_back(TerminationNode{w});
            }
            edges.push_back({frontier[w].node, id, frontier[w].s_label, 1});
        }
        return Circuit(std::move(nodes), std::move(edges));
    }
};

std::string strip_comment(std::string_view line) {
    const auto hash = line.find('#');
    return std::string(line.substr(0, hash));
}

}  // namespace

Circuit parse_circuit(std::string_view source_text) {
    Builder b;
    bool have_header = false;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= source_text.size()) {
        const std::size_t end = std::min(source_text.find('\n', start), source_text.size());
        ++line_no;
        const std::string line = strip_comment(source_text.substr(start, end - start));
        start = end + 1;
        Cursor cur{line, 0, line_no};
        if (cur.done()) continue;
        const std::string_view keyword = cur.word();
        if (keyword == "qubits") {
            if (have_header) throw Error(ErrorCode::SyntaxError, "duplicate 'qubits' declaration", line_no);
            const std::size_t k = parse_count(cur.word(), line_no, "a qubit count");
            if (k == 0) throw Error(ErrorCode::SyntaxError, "a circuit needs at least one qubit", line_no);
            if (!cur.done()) throw Error(ErrorCode::SyntaxError, "trailing tokens after qubit count", line_no);
            b.start(k);
            have_header = true;
            continue;
        }
        if (!have_header) {
            throw Error(ErrorCode::SyntaxError, "expected 'qubits <k>' before '" + std::string(keyword) + "'", line_no);
        }
        if (keyword == "gate" || keyword == "cgate") {
            const std::string_view expr = cur.expression();
            if (expr.empty()) throw Error(ErrorCode::SyntaxError, "missing gate name", line_no);
            GateLibraryEntry gate = [&] {
                try {
                    return resolve_gate(expr);
                } catch (const Error& e) {
                    throw Error(e.code(), e.what(), line_no);
                }
            }();
            std::vector<std::size_t> targets;
            std::vector<std::size_t> controls;
            bool in_controls = false;
            while (!cur.done()) {
                const std::string_view tok = cur.word();
                if (keyword == "cgate" && tok == "ctrl") {
                    if (in_controls) throw Error(ErrorCode::SyntaxError, "'ctrl' given twice", line_no);
                    in_controls = true;
                    continue;
                }
                (in_controls ? controls : targets).push_back(parse_count(tok, line_no, "a wire index"));
            }
            if (keyword == "cgate") {
                if (!in_controls || controls.empty()) {
                    throw Error(ErrorCode::SyntaxError, "cgate needs 'ctrl <wires...>'", line_no);
                }
                for (std::size_t i = 0; i < controls.size(); ++i) {
                    gate = GateLibraryEntry{"controlled(" + gate.name + ")", gate.arity + 1, controlled(gate.matrix)};
                }
                controls.insert(controls.end(), targets.begin(), targets.end());
                targets = std::move(controls);
            }
            if (targets.empty()) throw Error(ErrorCode::SyntaxError, "gate without wires", line_no);
            b.add_gate(std::move(gate), targets, line_no);
            continue;
        }
        if (keyword == "measure") {
            const std::size_t w = parse_count(cur.word(), line_no, "a wire index");
            if (!cur.done()) throw Error(ErrorCode::SyntaxError, "measure takes exactly one wire", line_no);
            b.check_wires({w}, line_no);
            b.measured[w] = true;
            b.measure_line[w] = line_no;
            continue;
        }
        throw Error(ErrorCode::SyntaxError, "unknown statement '" + std::string(keyword) + "'", line_no);
    }
    if (!have_header) throw Error(ErrorCode::SyntaxError, "missing 'qubits <k>' declaration", line_no);
    Circuit c = b.finish();
    require_valid(c);
    return c;
}

std::string emit_circuit_text(const Circuit& c) {
    require_valid(c);
    const WireFlow flow = trace_wires(c);
    std::ostringstream out;
    out << "qubits " << c.size() << "\n";
    for (const auto& step : flow.gates) {
        const auto& u = std::get<UnitaryNode>(c.node(step.node));
        out << "gate " << u.label;
        for (std::size_t w : step.wires) out << ' ' << w;
        out << "\n";
    }
    for (const auto& o : flow.outputs) {
        const NodeKind& kind = c.node(o.node);
        const std::size_t declared =
            std::holds_alternative<MeasurementNode>(kind) ? std::get<MeasurementNode>(kind).wire
                                                          : std::get<TerminationNode>(kind).wire;
        if (declared != o.wire) {
            throw Error(ErrorCode::InvalidCircuit, "output on wire " + std::to_string(declared) +
                                                       " receives register wire " + std::to_string(o.wire));
        }
    }
    for (std::size_t w : c.measured_wires()) out << "measure " << w << "\n";
    return out.str();
}

Circuit load_circuit_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_circuit(buf.str());
}

}  // namespace qmcforge
