#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "isofactor/rational.hpp"

namespace isofactor {

using Vertex = int;
using VertexSet = std::vector<Vertex>;  // sorted ascending, no duplicates

/// Unordered vertex pair, stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    bool has(Vertex x) const noexcept { return u == x || v == x; }
    Vertex other(Vertex x) const noexcept { return x == u ? v : u; }

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple undirected graph on vertices 0..vertex_count-1. Immutable;
/// edges are kept sorted so that edge indices are stable and deterministic.
class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count);  // edgeless

    /// Duplicates collapse; loops and out-of-range endpoints throw InputError.
    static Graph build(int vertex_count, std::span<const std::pair<Vertex, Vertex>> edge_list);
    static Graph build(int vertex_count, std::initializer_list<std::pair<Vertex, Vertex>> edge_list);
    static Graph from_edges(int vertex_count, std::span<const Edge> edges);

    int vertex_count() const noexcept { return vertex_count_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(std::size_t index) const { return edges_.at(index); }

    const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
    bool adjacent(Vertex a, Vertex b) const;

    /// Position of {a, b} in edges(), if present.
    std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;
    /// Indices into edges() of the edges incident with v.
    const std::vector<std::size_t>& incident_edges(Vertex v) const { return incidence_.at(static_cast<std::size_t>(v)); }

    /// Neighbourhood bitmask; only defined for graphs with at most 64 vertices.
    std::uint64_t neighbor_mask(Vertex v) const { return masks_.at(static_cast<std::size_t>(v)); }
    bool has_masks() const noexcept { return vertex_count_ <= 64; }

    bool contains(Vertex v) const noexcept { return v >= 0 && v < vertex_count_; }

    Graph without_edge(const Edge& e) const;
    Graph with_edge(const Edge& e) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
    }

private:
    void index();

    int vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<std::vector<std::size_t>> incidence_;
    std::vector<std::uint64_t> masks_;
};

/// Graph with edge multiplicities and no loops.
class MultiGraph {
public:
    explicit MultiGraph(int vertex_count = 0) : vertex_count_(vertex_count) {}

    int vertex_count() const noexcept { return vertex_count_; }
    const std::map<Edge, int>& multiplicities() const noexcept { return mult_; }
    int multiplicity(const Edge& e) const;
    void add(const Edge& e, int count = 1);
    int degree(Vertex v) const;

    friend bool operator==(const MultiGraph&, const MultiGraph&) = default;

private:
    int vertex_count_;
    std::map<Edge, int> mult_;
};

/// The pair (n, m) with 0 < m < n; the threshold is n/m.
class FamilyParams {
public:
    FamilyParams(std::int64_t n, std::int64_t m);

    std::int64_t n() const noexcept { return n_; }
    std::int64_t m() const noexcept { return m_; }
    Rational threshold() const { return Rational(n_, m_); }

    /// Odd circuit C_{2i+1} is admissible iff i*(n-m) < m.
    bool circuit_index_allowed(std::int64_t i) const noexcept { return i >= 1 && i * (n_ - m_) < m_; }

    friend bool operator==(const FamilyParams&, const FamilyParams&) = default;

private:
    std::int64_t n_;
    std::int64_t m_;
};

/// Sides of a tree's 2-colouring with 0 < |B| <= |A|.
struct Bipartition {
    VertexSet A;
    VertexSet B;

    bool in_A(Vertex v) const;
    bool in_B(Vertex v) const { return !in_A(v); }
    bool balanced() const noexcept { return A.size() == B.size(); }
    /// Same colouring with the side names exchanged.
    Bipartition swapped() const { return {B, A}; }

    friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

struct Component {
    VertexSet vertices;  // original labels, ascending
    Graph graph;         // induced subgraph, vertex i <-> vertices[i]
};

Graph build_graph(int vertex_count, std::span<const std::pair<Vertex, Vertex>> edge_list);

/// Number of vertices outside S whose neighbours all lie in S.
int iso_count(const Graph& g, std::span<const Vertex> s);
int iso_count(const Graph& g, std::uint64_t s_mask);

/// Connected components, ordered by smallest vertex.
std::vector<Component> components(const Graph& g);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
/// Connected and 2-regular.
bool is_circuit(const Graph& g);

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Parity colouring from vertex 0, larger side named A; ties keep vertex 0 in A.
Bipartition bipartition(const Graph& tree);

VertexSet leaves(const Graph& g);

VertexSet mask_to_set(std::uint64_t mask);
std::uint64_t set_to_mask(std::span<const Vertex> s);

}  // namespace isofactor
