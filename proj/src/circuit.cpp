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

#include "qmcforge/circuit.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "qmcforge/error.hpp"

namespace qmcforge {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// 0 = input, 1 = gate, 2 = output
int stage(const NodeKind& k) {
    return std::visit(overloaded{[](const QubitNode&) { return 0; }, [](const UnitaryNode&) { return 1; },
                                 [](const MeasurementNode&) { return 2; }, [](const TerminationNode&) { return 2; }},
                      k);
}

std::string node_name(NodeId id) { return "node " + std::to_string(id); }

bool labels_exact(std::vector<std::size_t> labels, std::size_t n) {
    std::sort(labels.begin(), labels.end());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] != i + 1) {
            return false;
        }
    }
    return labels.size() == n;
}

}  // namespace

std::string_view to_string(Rule r) {
    switch (r) {
        case Rule::Condition1: return "Condition1";
        case Rule::Condition2: return "Condition2";
        case Rule::Condition3: return "Condition3";
        case Rule::Condition4: return "Condition4";
        case Rule::Condition5: return "Condition5";
        case Rule::Acyclic: return "Acyclic";
        case Rule::WireAssignment: return "WireAssignment";
        case Rule::DanglingEdge: return "DanglingEdge";
    }
    return "Unknown";
}

Circuit::Circuit(std::vector<NodeKind> nodes, std::vector<Edge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)), in_(nodes_.size()), out_(nodes_.size()) {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.source < nodes_.size()) out_[e.source].push_back(i);
        if (e.target < nodes_.size()) in_[e.target].push_back(i);
    }
    size_ = static_cast<std::size_t>(
        std::count_if(nodes_.begin(), nodes_.end(), [](const NodeKind& k) { return std::holds_alternative<QubitNode>(k); }));
}

std::size_t Circuit::unitary_count() const {
    return static_cast<std::size_t>(std::count_if(nodes_.begin(), nodes_.end(), [](const NodeKind& k) {
        return std::holds_alternative<UnitaryNode>(k);
    }));
}

std::size_t Circuit::measurement_count() const {
    return static_cast<std::size_t>(std::count_if(nodes_.begin(), nodes_.end(), [](const NodeKind& k) {
        return std::holds_alternative<MeasurementNode>(k);
    }));
}

std::vector<Edge> Circuit::incoming(NodeId id) const {
    std::vector<Edge> out;
    for (std::size_t i : in_.at(id)) out.push_back(edges_[i]);
    std::sort(out.begin(), out.end(), [](const Edge& a, const Edge& b) { return a.t_label < b.t_label; });
    return out;
}

std::vector<Edge> Circuit::outgoing(NodeId id) const {
    std::vector<Edge> out;
    for (std::size_t i : out_.at(id)) out.push_back(edges_[i]);
    std::sort(out.begin(), out.end(), [](const Edge& a, const Edge& b) { return a.s_label < b.s_label; });
    return out;
}

std::vector<std::size_t> Circuit::measured_wires() const {
    std::vector<std::size_t> wires;
    for (const auto& n : nodes_) {
        if (const auto* m = std::get_if<MeasurementNode>(&n)) wires.push_back(m->wire);
    }
    std::sort(wires.begin(), wires.end());
    return wires;
}

bool Circuit::is_normal_form() const {
    return std::all_of(nodes_.begin(), nodes_.end(), [this](const NodeKind& k) {
        const auto* u = std::get_if<UnitaryNode>(&k);
        return u == nullptr || u->dim == size_;
    });
}

std::vector<Violation> validate(const Circuit& c) {
    std::vector<Violation> v;
    const auto& nodes = c.nodes();
    const std::size_t k = c.size();

    for (std::size_t i = 0; i < c.edges().size(); ++i) {
        const Edge& e = c.edges()[i];
        if (e.source >= nodes.size() || e.target >= nodes.size()) {
            v.push_back({Rule::DanglingEdge, std::nullopt, i, "edge " + std::to_string(i) + " references a missing node"});
        }
    }
    if (!v.empty()) {
        return v;
    }

    std::vector<std::size_t> qubit_wires;
    std::vector<std::size_t> output_wires;
    for (NodeId id = 0; id < nodes.size(); ++id) {
        const auto in = c.incoming(id);
        const auto out = c.outgoing(id);
        std::vector<std::size_t> t_labels;
        std::vector<std::size_t> s_labels;
        for (const auto& e : in) t_labels.push_back(e.t_label);
        for (const auto& e : out) s_labels.push_back(e.s_label);

        std::visit(
            overloaded{
                [&](const QubitNode& q) {
                    qubit_wires.push_back(q.wire);
                    if (!in.empty() || out.size() != 1) {
                        v.push_back({Rule::Condition1, id, std::nullopt,
                                     node_name(id) + ": Qubit needs In = 0, Out = 1, has In = " +
                                         std::to_string(in.size()) + ", Out = " + std::to_string(out.size())});
                    }
                },
                [&](const UnitaryNode& u) {
                    std::string why;
                    if (u.dim == 0) {
                        why = "dim must be positive";
                    } else if (in.size() != u.dim || out.size() != u.dim) {
                        why = "In = " + std::to_string(in.size()) + ", Out = " + std::to_string(out.size()) +
                              ", dim = " + std::to_string(u.dim);
                    } else if (u.matrix.rows() != (std::size_t{1} << u.dim) || !u.matrix.is_square()) {
                        why = "matrix is " + std::to_string(u.matrix.rows()) + "x" + std::to_string(u.matrix.cols()) +
                              ", expected 2^" + std::to_string(u.dim);
                    } else if (!is_unitary(u.matrix)) {
                        why = "matrix is not unitary";
                    }
                    if (!why.empty()) {
                        v.push_back({Rule::Condition2, id, std::nullopt, node_name(id) + " (" + u.label + "): " + why});
                    }
                },
                [&](const MeasurementNode& m) {
                    output_wires.push_back(m.wire);
                    if (in.size() != 1 || !out.empty()) {
                        v.push_back({Rule::Condition3, id, std::nullopt,
                                     node_name(id) + ": Measurement needs In = 1, Out = 0"});
                    }
                },
                [&](const TerminationNode& t) {
                    output_wires.push_back(t.wire);
                    if (in.size() != 1 || !out.empty()) {
                        v.push_back({Rule::Condition4, id, std::nullopt,
                                     node_name(id) + ": Termination needs In = 1, Out = 0"});
                    }
                },
            },
            nodes[id]);

        if (!labels_exact(t_labels, in.size())) {
            v.push_back({Rule::Condition5, id, std::nullopt, node_name(id) + ": incoming T labels are not {1..In}"});
        }
        if (!labels_exact(s_labels, out.size())) {
            v.push_back({Rule::Condition5, id, std::nullopt, node_name(id) + ": outgoing S labels are not {1..Out}"});
        }
    }

    auto check_wires = [&](std::vector<std::size_t> wires, const char* what) {
        if (!labels_exact(std::move(wires), k)) {
            v.push_back({Rule::WireAssignment, std::nullopt, std::nullopt,
                         std::string(what) + " wires do not form {1.." + std::to_string(k) + "}"});
        }
    };
    check_wires(qubit_wires, "Qubit");
    check_wires(output_wires, "Measurement/Termination");

    try {
        topo_order(c);
    } catch (const Error&) {
        v.push_back({Rule::Acyclic, std::nullopt, std::nullopt, "circuit graph contains a cycle"});
    }
    return v;
}

std::vector<NodeId> topo_order(const Circuit& c) {
    const auto& nodes = c.nodes();
    std::vector<std::size_t> pending(nodes.size(), 0);
    for (const auto& e : c.edges()) {
        if (e.target < nodes.size()) ++pending[e.target];
    }
    // (stage, id) keeps inputs first, outputs last and breaks ties by id.
    using Key = std::pair<int, NodeId>;
    std::priority_queue<Key, std::vector<Key>, std::greater<>> ready;
    for (NodeId id = 0; id < nodes.size(); ++id) {
        if (pending[id] == 0) ready.emplace(stage(nodes[id]), id);
    }
    std::vector<NodeId> order;
    order.reserve(nodes.size());
    while (!ready.empty()) {
        const NodeId id = ready.top().second;
        ready.pop();
        order.push_back(id);
        for (const auto& e : c.outgoing(id)) {
            if (--pending[e.target] == 0) ready.emplace(stage(nodes[e.target]), e.target);
        }
    }
    if (order.size() != nodes.size()) {
        throw Error(ErrorCode::CycleDetected, "no topological order: the circuit graph has a cycle");
    }
    // Outputs may become ready before later gates; move them to the end.
    std::stable_partition(order.begin(), order.end(), [&](NodeId id) { return stage(nodes[id]) < 2; });
    std::stable_partition(order.begin(), order.end(), [&](NodeId id) { return stage(nodes[id]) < 1; });
    return order;
}

void require_valid(const Circuit& c) {
    const auto v = validate(c);
    if (!v.empty()) {
        throw Error(ErrorCode::ValidationFailed, std::string(to_string(v.front().rule)) + ": " + v.front().message);
    }
}

WireFlow trace_wires(const Circuit& c) {
    WireFlow flow;
    // register wire carried by each edge, indexed like c.edges()
    std::vector<std::size_t> carried(c.edges().size(), 0);
    auto edge_index = [&](const Edge& e) {
        const auto& all = c.edges();
        return static_cast<std::size_t>(std::find(all.begin(), all.end(), e) - all.begin());
    };
    std::vector<std::vector<std::size_t>> out_edges(c.nodes().size());
    std::vector<std::vector<std::size_t>> in_edges(c.nodes().size());
    for (NodeId id = 0; id < c.nodes().size(); ++id) {
        for (const auto& e : c.outgoing(id)) out_edges[id].push_back(edge_index(e));
        for (const auto& e : c.incoming(id)) in_edges[id].push_back(edge_index(e));
    }
    for (NodeId id : topo_order(c)) {
        const NodeKind& kind = c.node(id);
        if (const auto* q = std::get_if<QubitNode>(&kind)) {
            for (std::size_t ei : out_edges[id]) carried[ei] = q->wire;
        } else if (std::holds_alternative<UnitaryNode>(kind)) {
            GateStep step{id, {}};
            for (std::size_t ei : in_edges[id]) step.wires.push_back(carried[ei]);
            const auto& outs = out_edges[id];
            for (std::size_t j = 0; j < outs.size() && j < step.wires.size(); ++j) carried[outs[j]] = step.wires[j];
            flow.gates.push_back(std::move(step));
        } else {
            flow.outputs.push_back({id, in_edges[id].empty() ? 0 : carried[in_edges[id].front()]});
        }
    }
    return flow;
}

}  // namespace qmcforge
