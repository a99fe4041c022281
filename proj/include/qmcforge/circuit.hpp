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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qmcforge/linalg.hpp"

namespace qmcforge {

using NodeId = std::size_t;

/// Input node carrying register wire `wire` (1-based).
struct QubitNode {
    std::size_t wire = 0;
};

/// Gate node; `label` is the resolvable gate expression, `matrix` is
/// 2^dim-dimensional.
struct UnitaryNode {
    std::size_t dim = 0;
    std::string label;
    CMatrix matrix;
};

/// Output node; `wire` is its position in the output register.
struct MeasurementNode {
    std::size_t wire = 0;
};

struct TerminationNode {
    std::size_t wire = 0;
};

using NodeKind = std::variant<QubitNode, UnitaryNode, MeasurementNode, TerminationNode>;

struct Edge {
    NodeId source = 0;
    NodeId target = 0;
    std::size_t s_label = 0;  // output position at the source
    std::size_t t_label = 0;  // input position at the target

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Labeled DAG of Qubit / Unitary / Measurement / Termination nodes. Node ids
/// are indices into `nodes`.
class Circuit {
public:
    Circuit() = default;
    Circuit(std::vector<NodeKind> nodes, std::vector<Edge> edges);

    const std::vector<NodeKind>& nodes() const noexcept { return nodes_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const NodeKind& node(NodeId id) const { return nodes_.at(id); }

    /// Number of Qubit nodes.
    std::size_t size() const noexcept { return size_; }
    std::size_t unitary_count() const;
    std::size_t measurement_count() const;

    /// Edges entering `id`, ordered by t_label.
    std::vector<Edge> incoming(NodeId id) const;
    /// Edges leaving `id`, ordered by s_label.
    std::vector<Edge> outgoing(NodeId id) const;

    /// Output wires of Measurement nodes, ascending.
    std::vector<std::size_t> measured_wires() const;

    bool is_normal_form() const;

private:
    std::vector<NodeKind> nodes_;
    std::vector<Edge> edges_;
    std::size_t size_ = 0;
    std::vector<std::vector<std::size_t>> in_;   // edge indices per node
    std::vector<std::vector<std::size_t>> out_;
};

enum class Rule {
    Condition1,  // Qubit nodes: In = 0, Out = 1
    Condition2,  // Unitary nodes: In = Out = dim, unitary of size 2^dim
    Condition3,  // Measurement nodes: In = 1, Out = 0
    Condition4,  // Termination nodes: In = 1, Out = 0
    Condition5,  // edge labels cover {1..In} and {1..Out} exactly
    Acyclic,
    WireAssignment,  // Qubit / output wires each form {1..k}
    DanglingEdge,
};

std::string_view to_string(Rule r);

struct Violation {
    Rule rule;
    std::optional<NodeId> node;
    std::optional<std::size_t> edge;
    std::string message;
};

/// Empty iff the circuit is well formed.
std::vector<Violation> validate(const Circuit& c);

/// Qubit nodes, then Unitary nodes in dependency order, then output nodes;
/// ties go to the lowest node id. Throws CycleDetected.
std::vector<NodeId> topo_order(const Circuit& c);

/// Throws ValidationFailed naming the first violated rule.
void require_valid(const Circuit& c);

/// One Unitary node with the register wires feeding its inputs, in T-label
/// order.
struct GateStep {
    NodeId node = 0;
    std::vector<std::size_t> wires;
};

struct OutputStep {
    NodeId node = 0;
    std::size_t wire = 0;  // register wire arriving at the node
};

/// Register-wire routing through a circuit in topological order. Qubit node
/// for wire w starts on register wire w; output S label j of a gate continues
/// on the register wire of its input T label j.
struct WireFlow {
    std::vector<GateStep> gates;
    std::vector<OutputStep> outputs;
};

WireFlow trace_wires(const Circuit& c);

}  // namespace qmcforge
