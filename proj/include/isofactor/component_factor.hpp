#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "isofactor/fractional_factor.hpp"
#include "isofactor/graph.hpp"

namespace isofactor {

/// C_{2i+1} with i*(n-m) < m.
struct OddCircuit {
    std::int64_t index = 1;
    friend bool operator==(const OddCircuit&, const OddCircuit&) = default;
};

/// A tree in the edge-minimal family for n/m.
struct FamilyTree {
    friend bool operator==(const FamilyTree&, const FamilyTree&) = default;
};

struct Invalid {
    std::string reason;
    friend bool operator==(const Invalid&, const Invalid&) = default;
};

using ComponentKind = std::variant<OddCircuit, FamilyTree, Invalid>;

std::string describe(const ComponentKind& kind);

struct ClassifiedComponent {
    VertexSet vertices;
    ComponentKind kind;
};

/// Either a spanning factor split into classified components, or a witness
/// set S with m*iso(G-S) > n*|S|.
struct FactorReport {
    std::optional<Graph> factor;
    std::vector<ClassifiedComponent> components;
    std::optional<VertexSet> witness;
};

/// Inclusion-minimal spanning subgraph that still satisfies the condition.
/// Edges are tried in ascending order and deleted whenever the rest still
/// satisfies it; passes repeat until one deletes nothing. nullopt iff g fails.
std::optional<Graph> minimal_factor(const Graph& g, const FamilyParams& params);

/// c must be connected.
ComponentKind classify_component(const Graph& c, const FamilyParams& params);

/// Throws InternalError if a component of the minimal factor is Invalid.
FactorReport find_component_factor(const Graph& g, const FamilyParams& params);

enum class StructureViolation {
    none,
    even_circuit,
    circuits_share_vertex,
    circuits_joined_by_path,
    circuit_with_leaf,
};

std::string to_string(StructureViolation v);

struct StructureReport {
    StructureViolation violation = StructureViolation::none;
    /// Circuits are closed vertex sequences (first == last); paths are open.
    std::vector<std::vector<Vertex>> evidence;

    bool ok() const noexcept { return violation == StructureViolation::none; }
};

/// Passes iff every component is a tree or an odd circuit. Otherwise reports,
/// in this priority, an even circuit, two circuits with a common vertex, two
/// disjoint circuits in one component (with a joining path), or a circuit
/// sharing a component with a degree-1 vertex. Two circuits sharing an edge
/// always span an even circuit, so that case reports the even circuit.
StructureReport verify_minimal_structure(const Graph& f);

/// Every edge gets ceil(m/2)/m, so each degree sum is 2*ceil(m/2)/m <= (m+1)/m <= n/m.
FractionalAssignment assign_circuit(const Graph& c, const FamilyParams& params);

}  // namespace isofactor
