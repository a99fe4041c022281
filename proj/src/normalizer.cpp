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

#include "qmcforge/normalizer.hpp"

#include <algorithm>

#include "qmcforge/error.hpp"

namespace qmcforge {

namespace {

std::size_t declared_wire(const NodeKind& kind) {
    if (const auto* m = std::get_if<MeasurementNode>(&kind)) return m->wire;
    return std::get<TerminationNode>(kind).wire;
}

std::string swap_label(std::size_t i, std::size_t j) {
    return "swap(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

// Appends the steps realizing P^-1 * core * P (or just `core` when P is the
// identity), where P routes the register into the gate's local order.
void push_routed(SnfCircuit& s, SwapAccount& acct, const std::string& label, const CMatrix& core,
                 const WirePermutation& routing, const TranslateOptions& opts) {
    const SwapSynthesis syn = generalized_swap(routing, opts.strategy);
    std::vector<std::size_t> fed(routing.size());
    for (std::size_t w = 1; w <= routing.size(); ++w) fed[routing(w) - 1] = w;
    acct.per_gate.push_back({label, std::move(fed), syn.binary_swaps});
    acct.total += syn.binary_swaps;
    if (routing.is_identity()) {
        s.unitaries.push_back(core);
        s.labels.push_back(label);
        return;
    }
    if (!opts.emit_swaps_as_gates) {
        s.unitaries.push_back(dagger(syn.matrix) * core * syn.matrix);
        s.labels.push_back(label);
        return;
    }
    const std::size_t k = routing.size();
    if (opts.strategy == SwapStrategy::Direct) {
        s.unitaries.push_back(syn.matrix);
        s.labels.push_back("route");
        s.unitaries.push_back(core);
        s.labels.push_back(label);
        s.unitaries.push_back(dagger(syn.matrix));
        s.labels.push_back("unroute");
        return;
    }
    const auto swaps = swap_decomposition(routing, opts.strategy);
    for (const auto& [i, j] : swaps) {
        s.unitaries.push_back(binary_swap(k, i, j));
        s.labels.push_back(swap_label(i, j));
    }
    s.unitaries.push_back(core);
    s.labels.push_back(label);
    for (auto it = swaps.rbegin(); it != swaps.rend(); ++it) {
        s.unitaries.push_back(binary_swap(k, it->first, it->second));
        s.labels.push_back(swap_label(it->first, it->second));
    }
}

}  // namespace

Circuit to_normal_form(const Circuit& c) {
    require_valid(c);
    if (c.is_normal_form()) {
        return c;
    }
    const std::size_t k = c.size();
    const WireFlow flow = trace_wires(c);
    std::vector<NodeKind> nodes = c.nodes();
    std::vector<Edge> edges;

    struct Port {
        NodeId node;
        std::size_t s_label;
    };
    std::vector<Port> frontier(k + 1, {0, 0});
    for (NodeId id = 0; id < nodes.size(); ++id) {
        if (const auto* q = std::get_if<QubitNode>(&nodes[id])) frontier[q->wire] = {id, 1};
    }
    for (const auto& step : flow.gates) {
        auto& u = std::get<UnitaryNode>(nodes[step.node]);
        std::vector<std::size_t> wires = step.wires;
        if (u.dim < k) {
            std::vector<bool> used(k + 1, false);
            for (std::size_t w : wires) used[w] = true;
            for (std::size_t w = 1; w <= k; ++w) {
                if (!used[w]) wires.push_back(w);
            }
            std::string label = "tensor(" + u.label;
            for (std::size_t i = u.dim; i < k; ++i) label += ", I";
            label += ")";
            u = UnitaryNode{k, std::move(label), tensor(u.matrix, CMatrix::identity(std::size_t{1} << (k - u.dim)))};
        }
        for (std::size_t j = 0; j < wires.size(); ++j) {
            const Port p = frontier[wires[j]];
            edges.push_back({p.node, step.node, p.s_label, j + 1});
            frontier[wires[j]] = {step.node, j + 1};
        }
    }
    for (const auto& o : flow.outputs) {
        const Port p = frontier[o.wire];
        edges.push_back({p.node, o.node, p.s_label, 1});
    }
    return Circuit(std::move(nodes), std::move(edges));
}

std::pair<SnfCircuit, SwapAccount> to_snf(const Circuit& c, const TranslateOptions& opts) {
    require_valid(c);
    if (!c.is_normal_form()) {
        throw Error(ErrorCode::NotNormalForm, "every Unitary node must act on all " + std::to_string(c.size()) + " wires");
    }
    const std::size_t k = c.size();
    const WireFlow flow = trace_wires(c);
    SnfCircuit s;
    s.k = k;
    SwapAccount acct;
    acct.strategy = opts.strategy;

    for (const auto& step : flow.gates) {
        const auto& u = std::get<UnitaryNode>(c.node(step.node));
        push_routed(s, acct, u.label, u.matrix, WirePermutation::bring_to_front(k, step.wires), opts);
    }

    // Measured outputs first, then terminated ones, each by ascending wire.
    std::vector<OutputStep> measured;
    std::vector<OutputStep> terminated;
    for (const auto& o : flow.outputs) {
        (std::holds_alternative<MeasurementNode>(c.node(o.node)) ? measured : terminated).push_back(o);
    }
    auto by_declared = [&](const OutputStep& a, const OutputStep& b) {
        return declared_wire(c.node(a.node)) < declared_wire(c.node(b.node));
    };
    std::sort(measured.begin(), measured.end(), by_declared);
    std::sort(terminated.begin(), terminated.end(), by_declared);
    s.h = measured.size();
    std::vector<std::size_t> arriving;
    for (const auto* group : {&measured, &terminated}) {
        for (const auto& o : *group) {
            arriving.push_back(o.wire);
            s.output_order.push_back(declared_wire(c.node(o.node)));
        }
    }

    const WirePermutation reorder = WirePermutation::bring_to_front(k, arriving);
    if (!reorder.is_identity()) {
        const SwapSynthesis syn = generalized_swap(reorder, opts.strategy);
        acct.per_gate.push_back({"output-reorder", arriving, syn.binary_swaps});
        acct.total += syn.binary_swaps;
        if (opts.emit_swaps_as_gates && opts.strategy != SwapStrategy::Direct) {
            for (const auto& [i, j] : swap_decomposition(reorder, opts.strategy)) {
                s.unitaries.push_back(binary_swap(k, i, j));
                s.labels.push_back(swap_label(i, j));
            }
        } else if (opts.emit_swaps_as_gates || s.unitaries.empty()) {
            s.unitaries.push_back(syn.matrix);
            s.labels.push_back("output-reorder");
        } else {
            s.unitaries.back() = syn.matrix * s.unitaries.back();
            s.labels.back() += " + output-reorder";
        }
    }
    return {std::move(s), std::move(acct)};
}

std::pair<SnfCircuit, SwapAccount> translate(const Circuit& c, const TranslateOptions& opts) {
    return to_snf(to_normal_form(c), opts);
}

Circuit snf_to_circuit(const SnfCircuit& s) {
    require_well_formed(s);
    const std::size_t k = s.k;
    std::vector<NodeKind> nodes;
    std::vector<Edge> edges;
    for (std::size_t w = 1; w <= k; ++w) nodes.emplace_back(QubitNode{w});
    std::vector<NodeId> prev(k + 1);
    for (std::size_t w = 1; w <= k; ++w) prev[w] = w - 1;
    for (std::size_t i = 0; i < s.unitaries.size(); ++i) {
        const NodeId id = nodes.size();
        const std::string label = i < s.labels.size() ? s.labels[i] : "U" + std::to_string(i + 1);
        nodes.emplace_back(UnitaryNode{k, label, s.unitaries[i]});
        for (std::size_t w = 1; w <= k; ++w) {
            const bool from_qubit = prev[w] < k;
            edges.push_back({prev[w], id, from_qubit ? 1 : w, w});
            prev[w] = id;
        }
    }
    for (std::size_t w = 1; w <= k; ++w) {
        const NodeId id = nodes.size();
        if (w <= s.h) {
            nodes.emplace_back(MeasurementNode{w});
        } else {
            nodes.emplace_back(TerminationNode{w});
        }
        const bool from_qubit = prev[w] < k;
        edges.push_back({prev[w], id, from_qubit ? 1 : w, 1});
    }
    return Circuit(std::move(nodes), std::move(edges));
}

void require_well_formed(const SnfCircuit& s, double tol) {
    if (s.h > s.k) {
        throw Error(ErrorCode::InvalidCircuit, "h = " + std::to_string(s.h) + " exceeds k = " + std::to_string(s.k));
    }
    const std::size_t dim = std::size_t{1} << s.k;
    for (std::size_t i = 0; i < s.unitaries.size(); ++i) {
        const CMatrix& u = s.unitaries[i];
        if (u.rows() != dim || u.cols() != dim) {
            throw Error(ErrorCode::InvalidCircuit, "step " + std::to_string(i + 1) + " is " + std::to_string(u.rows()) +
                                                       "x" + std::to_string(u.cols()) + ", expected " +
                                                       std::to_string(dim));
        }
        if (!is_unitary(u, tol)) {
            throw Error(ErrorCode::InvalidCircuit, "step " + std::to_string(i + 1) + " is not unitary");
        }
    }
}

CMatrix accumulated_unitary(const SnfCircuit& s) {
    CMatrix acc = CMatrix::identity(std::size_t{1} << s.k);
    for (const auto& u : s.unitaries) acc = u * acc;
    return acc;
}

}  // namespace qmcforge
