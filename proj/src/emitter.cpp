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

#include "qmcforge/emitter.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <sstream>
#include <vector>

#include "qmcforge/error.hpp"
#include "qmcforge/gates.hpp"

namespace qmcforge {

namespace {

std::string format_entry(const Complex& z) {
    const double re = z.real();
    const double im = z.imag();
    if (im == 0.0) return format_real(re);
    std::string s = format_real(re);
    s += im < 0 ? '-' : '+';
    s += format_real(std::abs(im));
    s += 'i';
    return s;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

[[noreturn]] void reparse_fail(const std::string& why, std::size_t line) {
    throw Error(ErrorCode::ReparseError, why, line == 0 ? std::nullopt : std::optional<std::size_t>(line));
}

bool read_real(const char*& p, const char* end, double& out) {
    const char* start = p;
    if (p != end && *p == '+') ++p;
    auto [ptr, ec] = std::from_chars(p, end, out);
    if (ec != std::errc{} || ptr == p) {
        p = start;
        return false;
    }
    p = ptr;
    return true;
}

Complex parse_entry(std::string_view tok, std::size_t line) {
    tok = trim(tok);
    const char* p = tok.data();
    const char* end = p + tok.size();
    double a = 0.0;
    if (!read_real(p, end, a)) reparse_fail("malformed matrix entry '" + std::string(tok) + "'", line);
    if (p == end) return {a, 0.0};
    if (*p == 'i' && p + 1 == end) return {0.0, a};
    if (*p == '+' || *p == '-') {
        const double sign = *p == '-' ? -1.0 : 1.0;
        ++p;
        double b = 0.0;
        if (read_real(p, end, b) && p != end && *p == 'i' && p + 1 == end) return {a, sign * b};
    }
    reparse_fail("malformed matrix entry '" + std::string(tok) + "'", line);
}

// "outcome=01" <-> "outcome_01"
std::string label_to_identifier(const std::string& prop) {
    std::string out = prop;
    for (auto& ch : out) {
        if (ch == '=') ch = '_';
    }
    return out;
}

std::string identifier_to_label(std::string_view id) {
    std::string out(id);
    for (const char* prefix : {"outcome_", "step_"}) {
        const std::string_view pre(prefix);
        if (out.compare(0, pre.size(), pre) == 0) {
            out[pre.size() - 1] = '=';
            break;
        }
    }
    return out;
}

struct Line {
    std::size_t number;
    std::string text;
};

std::vector<Line> significant_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t start = 0;
    std::size_t number = 0;
    while (start <= text.size()) {
        const std::size_t end = std::min(text.find('\n', start), text.size());
        ++number;
        std::string_view raw = text.substr(start, end - start);
        start = end + 1;
        const auto comment = raw.find("//");
        if (comment != std::string_view::npos) raw = raw.substr(0, comment);
        raw = trim(raw);
        if (!raw.empty()) lines.push_back({number, std::string(raw)});
    }
    return lines;
}

std::size_t parse_index(std::string_view tok, std::size_t line) {
    tok = trim(tok);
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
        reparse_fail("expected a state index, got '" + std::string(tok) + "'", line);
    }
    return v;
}

bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

}  // namespace

std::string format_matrix(const CMatrix& m) {
    std::string out = "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r) out += "; ";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) out += ", ";
            out += format_entry(m(r, c));
        }
    }
    out += "]";
    return out;
}

CMatrix parse_matrix_literal(std::string_view text, std::size_t line) {
    text = trim(text);
    if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
        reparse_fail("matrix literal must be enclosed in [ ]", line);
    }
    text = text.substr(1, text.size() - 2);
    std::vector<Complex> entries;
    std::size_t cols = 0;
    std::size_t rows = 0;
    std::size_t row_start = 0;
    while (row_start <= text.size()) {
        const std::size_t row_end = std::min(text.find(';', row_start), text.size());
        const std::string_view row = text.substr(row_start, row_end - row_start);
        row_start = row_end + 1;
        std::size_t count = 0;
        std::size_t start = 0;
        while (start <= row.size()) {
            const std::size_t end = std::min(row.find(',', start), row.size());
            entries.push_back(parse_entry(row.substr(start, end - start), line));
            ++count;
            start = end + 1;
        }
        if (rows == 0) {
            cols = count;
        } else if (count != cols) {
            reparse_fail("row " + std::to_string(rows + 1) + " has " + std::to_string(count) + " entries, expected " +
                             std::to_string(cols),
                         line);
        }
        ++rows;
    }
    return CMatrix(rows, cols, std::move(entries));
}

std::string sanitize_identifier(std::string_view name) {
    std::string out;
    for (char ch : name) {
        out += (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_') ? ch : '_';
    }
    if (out.empty() || std::isdigit(static_cast<unsigned char>(out.front()))) out = "m_" + out;
    return out;
}

std::string emit_qpmc(const Qmc& q, std::string_view model_name) {
    const std::size_t internal = q.internal_count();
    const std::size_t last = q.states.size() - 1;
    std::ostringstream out;
    out << "// " << sanitize_identifier(model_name) << ": " << internal << " internal and " << q.terminal_count()
        << " terminal states over " << q.k << " qubit(s), " << q.h << " measured\n";
    out << "qmc\n\n";

    // kraus matrix name per transition, declared in first-use order
    std::map<std::string, const CMatrix*> declared;
    std::vector<std::string> order;
    std::vector<std::vector<std::string>> names(q.transitions.size());
    for (std::size_t i = 0; i < q.transitions.size(); ++i) {
        const auto& t = q.transitions[i];
        for (std::size_t j = 0; j < t.op.kraus.size(); ++j) {
            std::string name = sanitize_identifier(t.op_name);
            if (t.op.kraus.size() > 1) name += "_" + std::to_string(j + 1);
            auto it = declared.find(name);
            if (it == declared.end()) {
                declared.emplace(name, &t.op.kraus[j]);
                order.push_back(name);
            } else if (!(*it->second == t.op.kraus[j])) {
                throw Error(ErrorCode::InvalidQmc, "operator name '" + name + "' used for two different matrices");
            }
            names[i].push_back(std::move(name));
        }
    }
    for (const auto& name : order) {
        out << "const matrix " << name << " = " << format_matrix(*declared.at(name)) << ";\n";
    }

    out << "\nmodule " << sanitize_identifier(model_name) << "\n";
    out << "  s : [0.." << last << "] init 0;\n\n";
    for (std::size_t st = 0; st < q.states.size(); ++st) {
        out << "  [] s=" << st << " ->";
        bool first = true;
        for (std::size_t i = 0; i < q.transitions.size(); ++i) {
            const auto& t = q.transitions[i];
            if (t.from != st) continue;
            out << (first ? " " : " + ") << "<<";
            for (std::size_t j = 0; j < names[i].size(); ++j) out << (j ? ", " : "") << names[i][j];
            out << ">> : (s'=" << t.to << ")";
            first = false;
        }
        if (first) {
            throw Error(ErrorCode::InvalidQmc, "state " + q.states[st].name + " has no outgoing transition");
        }
        out << ";\n";
    }
    out << "endmodule\n\n";

    for (const auto& prop : q.atomic_propositions) {
        std::vector<std::size_t> holders;
        for (std::size_t st = 0; st < q.states.size(); ++st) {
            if (q.states[st].labels.count(prop)) holders.push_back(st);
        }
        out << "label \"" << label_to_identifier(prop) << "\" = ";
        if (holders.empty()) {
            out << "false";
        } else {
            for (std::size_t i = 0; i < holders.size(); ++i) out << (i ? " | " : "") << "s=" << holders[i];
        }
        out << ";\n";
    }
    out << "\n// reachability of an outcome, e.g.: qprob(Q=? [ F \"" << label_to_identifier("outcome=" +
                                                                                        outcome_bits(0, q.h))
        << "\" ], rho0)\n";
    return out.str();
}

Qmc reparse_model(std::string_view text) {
    const auto lines = significant_lines(text);
    std::size_t i = 0;
    auto at_end = [&] { return i >= lines.size(); };
    auto line_no = [&] { return at_end() ? (lines.empty() ? 0 : lines.back().number) : lines[i].number; };

    if (at_end() || lines[i].text != "qmc") reparse_fail("expected 'qmc' header", line_no());
    ++i;

    std::map<std::string, CMatrix> constants;
    while (!at_end() && starts_with(lines[i].text, "const matrix ")) {
        const std::string& t = lines[i].text;
        const auto eq = t.find('=');
        if (eq == std::string::npos || t.back() != ';') reparse_fail("malformed constant declaration", lines[i].number);
        const std::string name(trim(std::string_view(t).substr(13, eq - 13)));
        if (name.empty() || constants.count(name)) reparse_fail("bad or duplicate constant '" + name + "'", lines[i].number);
        constants.emplace(name, parse_matrix_literal(std::string_view(t).substr(eq + 1, t.size() - eq - 2),
                                                     lines[i].number));
        ++i;
    }

    if (at_end() || !starts_with(lines[i].text, "module ")) reparse_fail("expected 'module'", line_no());
    ++i;

    std::size_t last = 0;
    {
        if (at_end()) reparse_fail("expected state variable declaration", line_no());
        const std::string& t = lines[i].text;
        const std::string prefix = "s : [0..";
        const std::string suffix = "] init 0;";
        if (!starts_with(t, prefix) || t.size() < prefix.size() + suffix.size() ||
            t.compare(t.size() - suffix.size(), suffix.size(), suffix) != 0) {
            reparse_fail("expected 's : [0..N] init 0;'", lines[i].number);
        }
        last = parse_index(std::string_view(t).substr(prefix.size(), t.size() - prefix.size() - suffix.size()),
                           lines[i].number);
        ++i;
    }
    const std::size_t state_count = last + 1;

    struct Branch {
        std::size_t from, to;
        std::vector<std::string> names;
        std::size_t line;
    };
    std::vector<Branch> branches;
    std::vector<bool> guarded(state_count, false);
    while (!at_end() && lines[i].text != "endmodule") {
        const std::string& t = lines[i].text;
        const std::size_t ln = lines[i].number;
        if (!starts_with(t, "[] s=") || t.back() != ';') reparse_fail("expected a guarded command", ln);
        const auto arrow = t.find("->");
        if (arrow == std::string::npos) reparse_fail("missing '->'", ln);
        const std::size_t from = parse_index(std::string_view(t).substr(5, arrow - 5), ln);
        if (from >= state_count) reparse_fail("guard on state " + std::to_string(from) + " outside range", ln);
        if (guarded[from]) reparse_fail("state " + std::to_string(from) + " guarded twice", ln);
        guarded[from] = true;
        std::string_view rest = std::string_view(t).substr(arrow + 2, t.size() - arrow - 3);
        while (true) {
            rest = trim(rest);
            if (!starts_with(rest, "<<")) reparse_fail("expected '<<' superoperator", ln);
            const auto close = rest.find(">>");
            if (close == std::string_view::npos) reparse_fail("unterminated '<<'", ln);
            Branch b{from, 0, {}, ln};
            std::string_view ops = rest.substr(2, close - 2);
            std::size_t start = 0;
            while (start <= ops.size()) {
                const std::size_t end = std::min(ops.find(',', start), ops.size());
                b.names.emplace_back(trim(ops.substr(start, end - start)));
                start = end + 1;
            }
            rest = trim(rest.substr(close + 2));
            const std::string_view target_prefix = ": (s'=";
            if (!starts_with(rest, target_prefix)) reparse_fail("expected ': (s'=N)'", ln);
            rest = rest.substr(target_prefix.size());
            const auto paren = rest.find(')');
            if (paren == std::string_view::npos) reparse_fail("unterminated update", ln);
            b.to = parse_index(rest.substr(0, paren), ln);
            if (b.to >= state_count) reparse_fail("update to state " + std::to_string(b.to) + " outside range", ln);
            branches.push_back(std::move(b));
            rest = trim(rest.substr(paren + 1));
            if (rest.empty()) break;
            if (rest.front() != '+') reparse_fail("expected '+' between branches", ln);
            rest.remove_prefix(1);
        }
        ++i;
    }
    if (at_end()) reparse_fail("missing 'endmodule'", line_no());
    ++i;
    for (std::size_t st = 0; st < state_count; ++st) {
        if (!guarded[st]) reparse_fail("state " + std::to_string(st) + " has no guarded command", line_no());
    }

    std::map<std::string, std::vector<std::size_t>> label_states;
    while (!at_end()) {
        const std::string& t = lines[i].text;
        const std::size_t ln = lines[i].number;
        if (!starts_with(t, "label \"") || t.back() != ';') reparse_fail("unexpected '" + t + "'", ln);
        const auto close = t.find('"', 7);
        const auto eq = t.find('=', close == std::string::npos ? 7 : close);
        if (close == std::string::npos || eq == std::string::npos) reparse_fail("malformed label", ln);
        const std::string prop = identifier_to_label(std::string_view(t).substr(7, close - 7));
        auto& holders = label_states[prop];
        std::string_view expr = trim(std::string_view(t).substr(eq + 1, t.size() - eq - 2));
        if (expr != "false") {
            std::size_t start = 0;
            while (start <= expr.size()) {
                const std::size_t end = std::min(expr.find('|', start), expr.size());
                std::string_view term = trim(expr.substr(start, end - start));
                if (!starts_with(term, "s=")) reparse_fail("label terms must be 's=N'", ln);
                const std::size_t st = parse_index(term.substr(2), ln);
                if (st >= state_count) reparse_fail("label on state outside range", ln);
                holders.push_back(st);
                start = end + 1;
            }
        }
        ++i;
    }

    Qmc q;
    std::vector<bool> terminal(state_count, false);
    if (auto it = label_states.find("terminal"); it != label_states.end()) {
        for (std::size_t st : it->second) terminal[st] = true;
    }
    std::size_t internal = 0;
    for (std::size_t st = 0; st < state_count; ++st) {
        if (terminal[st]) continue;
        if (st != internal) reparse_fail("internal states must precede terminal states", 0);
        ++internal;
    }
    for (std::size_t st = 0; st < state_count; ++st) {
        QmcState s;
        s.kind = terminal[st] ? StateKind::Terminal : StateKind::Internal;
        s.name = terminal[st] ? "t" + std::to_string(st - internal) : "s" + std::to_string(st + 1);
        q.states.push_back(std::move(s));
    }
    for (const auto& [prop, holders] : label_states) {
        q.atomic_propositions.insert(prop);
        for (std::size_t st : holders) q.states[st].labels.insert(prop);
    }

    std::size_t dim = 0;
    for (const auto& b : branches) {
        QmcTransition t{b.from, b.to, {}, b.names.front()};
        if (b.names.size() > 1) {
            const auto& n = b.names.front();
            const auto us = n.rfind('_');
            t.op_name = us == std::string::npos ? n : n.substr(0, us);
        }
        for (const auto& n : b.names) {
            auto it = constants.find(n);
            if (it == constants.end()) reparse_fail("undefined matrix '" + n + "'", b.line);
            if (!it->second.is_square() || (dim != 0 && it->second.rows() != dim)) {
                reparse_fail("matrix '" + n + "' has inconsistent dimensions", b.line);
            }
            dim = it->second.rows();
            t.op.kraus.push_back(it->second);
        }
        q.transitions.push_back(std::move(t));
    }
    const std::size_t terminals = state_count - internal;
    try {
        q.k = dim == 0 ? 0 : qubit_count(dim);
        q.h = qubit_count(terminals);
    } catch (const Error&) {
        reparse_fail("state space does not match a 2^k register with 2^h outcomes", 0);
    }
    return q;
}

}  // namespace qmcforge
