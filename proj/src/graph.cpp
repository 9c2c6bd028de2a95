#include "isofactor/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <string>

#include "isofactor/errors.hpp"

namespace isofactor {

Graph::Graph(int vertex_count) : vertex_count_(vertex_count) {
    if (vertex_count < 0) throw InputError("negative vertex count");
    index();
}

Graph Graph::build(int vertex_count, std::span<const std::pair<Vertex, Vertex>> edge_list) {
    if (vertex_count < 0) throw InputError("negative vertex count");
    std::vector<Edge> edges;
    edges.reserve(edge_list.size());
    for (auto [a, b] : edge_list) {
        if (a < 0 || a >= vertex_count || b < 0 || b >= vertex_count)
            throw InputError("edge (" + std::to_string(a) + "," + std::to_string(b) + ") has an endpoint out of range");
        if (a == b) throw InputError("loop edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
        edges.emplace_back(a, b);
    }
    return from_edges(vertex_count, edges);
}

Graph Graph::build(int vertex_count, std::initializer_list<std::pair<Vertex, Vertex>> edge_list) {
    return build(vertex_count, std::span<const std::pair<Vertex, Vertex>>(edge_list.begin(), edge_list.size()));
}

Graph Graph::from_edges(int vertex_count, std::span<const Edge> edges) {
    Graph g;
    g.vertex_count_ = vertex_count;
    g.edges_.assign(edges.begin(), edges.end());
    for (const Edge& e : g.edges_) {
        if (e.u == e.v) throw InputError("loop edge at vertex " + std::to_string(e.u));
        if (e.u < 0 || e.v >= vertex_count) throw InputError("edge endpoint out of range");
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
    g.index();
    return g;
}

void Graph::index() {
    auto n = static_cast<std::size_t>(vertex_count_);
    adjacency_.assign(n, {});
    incidence_.assign(n, {});
    masks_.assign(n, 0);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
        incidence_[e.u].push_back(i);
        incidence_[e.v].push_back(i);
        if (has_masks()) {
            masks_[e.u] |= std::uint64_t{1} << e.v;
            masks_[e.v] |= std::uint64_t{1} << e.u;
        }
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::adjacent(Vertex a, Vertex b) const { return edge_index(a, b).has_value(); }

std::optional<std::size_t> Graph::edge_index(Vertex a, Vertex b) const {
    if (!contains(a) || !contains(b) || a == b) return std::nullopt;
    Edge key(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
}

Graph Graph::without_edge(const Edge& e) const {
    std::vector<Edge> rest;
    rest.reserve(edges_.size());
    for (const Edge& f : edges_)
        if (f != e) rest.push_back(f);
    return from_edges(vertex_count_, rest);
}

Graph Graph::with_edge(const Edge& e) const {
    std::vector<Edge> more = edges_;
    more.push_back(e);
    return from_edges(vertex_count_, more);
}

int MultiGraph::multiplicity(const Edge& e) const {
    auto it = mult_.find(e);
    return it == mult_.end() ? 0 : it->second;
}

void MultiGraph::add(const Edge& e, int count) {
    if (e.u == e.v) throw InputError("loop edge in multigraph");
    if (e.u < 0 || e.v >= vertex_count_) throw InputError("multigraph edge endpoint out of range");
    if (count < 1) throw InputError("multiplicity must be positive");
    mult_[e] += count;
}

int MultiGraph::degree(Vertex v) const {
    int d = 0;
    for (const auto& [e, k] : mult_)
        if (e.has(v)) d += k;
    return d;
}

FamilyParams::FamilyParams(std::int64_t n, std::int64_t m) : n_(n), m_(m) {
    if (m <= 0 || n <= m)
        throw InputError("family parameters need 0 < m < n (got n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")");
}

bool Bipartition::in_A(Vertex v) const { return std::binary_search(A.begin(), A.end(), v); }

Graph build_graph(int vertex_count, std::span<const std::pair<Vertex, Vertex>> edge_list) {
    return Graph::build(vertex_count, edge_list);
}

int iso_count(const Graph& g, std::span<const Vertex> s) {
    std::vector<char> in_s(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex v : s) {
        if (!g.contains(v)) throw InputError("vertex " + std::to_string(v) + " is not in the graph");
        in_s[v] = 1;
    }
    int count = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (in_s[v]) continue;
        bool isolated = std::all_of(g.neighbors(v).begin(), g.neighbors(v).end(), [&](Vertex w) { return in_s[w] != 0; });
        count += isolated ? 1 : 0;
    }
    return count;
}

int iso_count(const Graph& g, std::uint64_t s_mask) {
    int count = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        std::uint64_t bit = std::uint64_t{1} << v;
        if ((s_mask & bit) == 0 && (g.neighbor_mask(v) & ~s_mask) == 0) ++count;
    }
    return count;
}

std::vector<Component> components(const Graph& g) {
    std::vector<int> label(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<Component> out;
    for (Vertex start = 0; start < g.vertex_count(); ++start) {
        if (label[start] >= 0) continue;
        VertexSet members;
        std::queue<Vertex> frontier;
        frontier.push(start);
        label[start] = static_cast<int>(out.size());
        while (!frontier.empty()) {
            Vertex v = frontier.front();
            frontier.pop();
            members.push_back(v);
            for (Vertex w : g.neighbors(v)) {
                if (label[w] < 0) {
                    label[w] = label[start];
                    frontier.push(w);
                }
            }
        }
        std::sort(members.begin(), members.end());
        Graph sub = induced_subgraph(g, members);
        out.push_back({std::move(members), std::move(sub)});
    }
    return out;
}

bool is_connected(const Graph& g) { return g.vertex_count() <= 1 || components(g).size() == 1; }

bool is_tree(const Graph& g) {
    return g.vertex_count() >= 1 && g.edge_count() + 1 == static_cast<std::size_t>(g.vertex_count()) && is_connected(g);
}

bool is_circuit(const Graph& g) {
    if (g.vertex_count() < 3) return false;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 2) return false;
    return is_connected(g);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    std::vector<int> position(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (!g.contains(vertices[i])) throw InputError("vertex out of range in induced_subgraph");
        position[vertices[i]] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (position[e.u] >= 0 && position[e.v] >= 0) edges.emplace_back(position[e.u], position[e.v]);
    return Graph::from_edges(static_cast<int>(vertices.size()), edges);
}

Bipartition bipartition(const Graph& tree) {
    if (tree.vertex_count() < 2) throw InputError("bipartition needs a tree with at least 2 vertices");
    if (!is_tree(tree)) throw InputError("bipartition input is not a tree");
    std::vector<int> colour(static_cast<std::size_t>(tree.vertex_count()), -1);
    std::queue<Vertex> frontier;
    colour[0] = 0;
    frontier.push(0);
    while (!frontier.empty()) {
        Vertex v = frontier.front();
        frontier.pop();
        for (Vertex w : tree.neighbors(v)) {
            if (colour[w] < 0) {
                colour[w] = 1 - colour[v];
                frontier.push(w);
            }
        }
    }
    VertexSet even, odd;
    for (Vertex v = 0; v < tree.vertex_count(); ++v) (colour[v] == 0 ? even : odd).push_back(v);
    if (odd.size() > even.size()) return {odd, even};
    return {even, odd};
}

VertexSet leaves(const Graph& g) {
    VertexSet out;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 1) out.push_back(v);
    return out;
}

VertexSet mask_to_set(std::uint64_t mask) {
    VertexSet out;
    while (mask != 0) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

std::uint64_t set_to_mask(std::span<const Vertex> s) {
    std::uint64_t mask = 0;
    for (Vertex v : s) mask |= std::uint64_t{1} << v;
    return mask;
}

}  // namespace isofactor
