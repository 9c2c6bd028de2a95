#include "isofactor/component_factor.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

#include "isofactor/errors.hpp"
#include "isofactor/iso_toughness.hpp"
#include "isofactor/tree_family.hpp"

namespace isofactor {

namespace {

// Biconnected components as edge lists (Tarjan, edge stack).
class BlockFinder {
public:
    explicit BlockFinder(const Graph& g)
        : g_(g), disc_(static_cast<std::size_t>(g.vertex_count()), -1), low_(disc_) {
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (disc_[v] < 0) visit(v, -1);
    }

    std::vector<std::vector<Edge>> take() { return std::move(blocks_); }

private:
    void visit(Vertex u, Vertex parent) {
        disc_[u] = low_[u] = timer_++;
        for (Vertex w : g_.neighbors(u)) {
            if (w == parent) continue;
            if (disc_[w] < 0) {
                stack_.emplace_back(u, w);
                visit(w, u);
                low_[u] = std::min(low_[u], low_[w]);
                if (low_[w] >= disc_[u]) {
                    std::vector<Edge> block;
                    const Edge cut(u, w);
                    while (true) {
                        Edge e = stack_.back();
                        stack_.pop_back();
                        block.push_back(e);
                        if (e == cut) break;
                    }
                    std::sort(block.begin(), block.end());
                    blocks_.push_back(std::move(block));
                }
            } else if (disc_[w] < disc_[u]) {
                stack_.emplace_back(u, w);
                low_[u] = std::min(low_[u], disc_[w]);
            }
        }
    }

    const Graph& g_;
    std::vector<int> disc_;
    std::vector<int> low_;
    int timer_ = 0;
    std::vector<Edge> stack_;
    std::vector<std::vector<Edge>> blocks_;
};

VertexSet block_vertices(const std::vector<Edge>& block) {
    std::set<Vertex> vs;
    for (const Edge& e : block) {
        vs.insert(e.u);
        vs.insert(e.v);
    }
    return {vs.begin(), vs.end()};
}

// Closed walk around a 2-regular connected edge set, starting at its smallest vertex.
std::vector<Vertex> walk_circuit(const Graph& cycle, Vertex start) {
    std::vector<Vertex> seq{start};
    Vertex prev = start;
    Vertex cur = cycle.neighbors(start).front();
    while (cur != start) {
        seq.push_back(cur);
        const auto& nb = cycle.neighbors(cur);
        Vertex next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
    }
    seq.push_back(start);
    return seq;
}

// Any circuit through the edges of bg reachable from start (bg has a circuit).
std::vector<Vertex> find_circuit(const Graph& bg, Vertex start) {
    std::vector<Vertex> parent(static_cast<std::size_t>(bg.vertex_count()), -1);
    std::vector<int> depth(static_cast<std::size_t>(bg.vertex_count()), -1);
    std::vector<std::pair<Vertex, std::size_t>> stack{{start, 0}};
    depth[start] = 0;
    while (!stack.empty()) {
        auto& [u, next] = stack.back();
        if (next == bg.neighbors(u).size()) {
            stack.pop_back();
            continue;
        }
        Vertex w = bg.neighbors(u)[next++];
        if (w == parent[u]) continue;
        if (depth[w] >= 0) {
            if (depth[w] > depth[u]) continue;
            std::vector<Vertex> seq;
            for (Vertex x = u; x != w; x = parent[x]) seq.push_back(x);
            seq.push_back(w);
            std::reverse(seq.begin(), seq.end());
            seq.push_back(w);
            return seq;
        }
        parent[w] = u;
        depth[w] = depth[u] + 1;
        stack.emplace_back(w, 0);
    }
    throw InternalError("block expected to contain a circuit");
}

// A 2-connected block that is not a single circuit contains a theta; two of
// its three paths have equal parity and close an even circuit.
std::vector<Vertex> even_circuit_in_block(const Graph& bg, Vertex start) {
    std::vector<Vertex> circuit = find_circuit(bg, start);
    const std::size_t len = circuit.size() - 1;
    if (len % 2 == 0) return circuit;

    std::vector<int> position(static_cast<std::size_t>(bg.vertex_count()), -1);
    std::set<Edge> circuit_edges;
    for (std::size_t i = 0; i < len; ++i) {
        position[circuit[i]] = static_cast<int>(i);
        circuit_edges.emplace(circuit[i], circuit[i + 1]);
    }

    // ear x - w ... z - y, internally disjoint from the circuit, y != x
    std::vector<Vertex> ear;
    for (std::size_t i = 0; i < len && ear.empty(); ++i) {
        const Vertex x = circuit[i];
        for (Vertex w : bg.neighbors(x)) {
            if (circuit_edges.contains(Edge(x, w))) continue;
            if (position[w] >= 0) {
                ear = {x, w};
                break;
            }
            std::vector<Vertex> parent(static_cast<std::size_t>(bg.vertex_count()), -2);
            std::queue<Vertex> frontier;
            frontier.push(w);
            parent[w] = -1;
            while (!frontier.empty() && ear.empty()) {
                Vertex z = frontier.front();
                frontier.pop();
                for (Vertex y : bg.neighbors(z)) {
                    if (position[y] >= 0) {
                        if (y == x) continue;
                        std::vector<Vertex> back;
                        for (Vertex t = z; t != -1; t = parent[t]) back.push_back(t);
                        ear.push_back(x);
                        ear.insert(ear.end(), back.rbegin(), back.rend());
                        ear.push_back(y);
                        break;
                    }
                    if (parent[y] == -2) {
                        parent[y] = z;
                        frontier.push(y);
                    }
                }
            }
            if (!ear.empty()) break;
        }
    }
    if (ear.empty()) throw InternalError("non-circuit block without an ear");

    const Vertex x = ear.front(), y = ear.back();
    const std::size_t i = static_cast<std::size_t>(position[x]);
    const std::size_t j = static_cast<std::size_t>(position[y]);
    const std::size_t forward = (j + len - i) % len;  // edges on the arc x -> y
    const std::size_t ear_len = ear.size() - 1;
    std::vector<Vertex> out;
    if (forward % 2 == ear_len % 2) {
        for (std::size_t k = 0; k <= forward; ++k) out.push_back(circuit[(i + k) % len]);
        for (auto it = ear.rbegin() + 1; it != ear.rend(); ++it) out.push_back(*it);
    } else {
        for (std::size_t k = 0; k <= len - forward; ++k) out.push_back(circuit[(j + k) % len]);
        for (auto it = ear.begin() + 1; it != ear.end(); ++it) out.push_back(*it);
    }
    return out;
}

std::vector<Vertex> shortest_path_between(const Graph& g, const VertexSet& from, const VertexSet& to) {
    std::vector<Vertex> parent(static_cast<std::size_t>(g.vertex_count()), -2);
    std::queue<Vertex> frontier;
    for (Vertex v : from) {
        parent[v] = -1;
        frontier.push(v);
    }
    while (!frontier.empty()) {
        Vertex u = frontier.front();
        frontier.pop();
        if (std::binary_search(to.begin(), to.end(), u)) {
            std::vector<Vertex> path;
            for (Vertex t = u; t != -1; t = parent[t]) path.push_back(t);
            std::reverse(path.begin(), path.end());
            return path;
        }
        for (Vertex w : g.neighbors(u)) {
            if (parent[w] == -2) {
                parent[w] = u;
                frontier.push(w);
            }
        }
    }
    return {};
}

// Only the components touching e can change when e is removed.
bool removal_keeps_condition(const Graph& without, const Edge& e, const FamilyParams& params) {
    for (const Component& c : components(without)) {
        if (!std::binary_search(c.vertices.begin(), c.vertices.end(), e.u) &&
            !std::binary_search(c.vertices.begin(), c.vertices.end(), e.v))
            continue;
        if (!satisfies_condition(c.graph, params)) return false;
    }
    return true;
}

}  // namespace

std::string describe(const ComponentKind& kind) {
    if (const auto* circuit = std::get_if<OddCircuit>(&kind)) return "circuit " + std::to_string(2 * circuit->index + 1);
    if (std::holds_alternative<FamilyTree>(kind)) return "tree";
    return "invalid " + std::get<Invalid>(kind).reason;
}

std::optional<Graph> minimal_factor(const Graph& g, const FamilyParams& params) {
    if (!satisfies_condition(g, params)) return std::nullopt;
    Graph f = g;
    bool deleted = true;
    while (deleted) {
        deleted = false;
        const std::vector<Edge> current = f.edges();
        for (const Edge& e : current) {
            Graph candidate = f.without_edge(e);
            if (removal_keeps_condition(candidate, e, params)) {
                f = std::move(candidate);
                deleted = true;
            }
        }
    }
    return f;
}

ComponentKind classify_component(const Graph& c, const FamilyParams& params) {
    if (!is_connected(c)) return Invalid{"not connected"};
    if (is_circuit(c)) {
        const int size = c.vertex_count();
        if (size % 2 == 0) return Invalid{"even circuit C_" + std::to_string(size)};
        const std::int64_t i = (size - 1) / 2;
        if (!params.circuit_index_allowed(i))
            return Invalid{"circuit C_" + std::to_string(size) + " has i*(n-m) >= m"};
        return OddCircuit{i};
    }
    if (is_tree(c)) {
        if (is_member(c, params).member) return FamilyTree{};
        return Invalid{"tree not in the family"};
    }
    return Invalid{"neither a circuit nor a tree"};
}

FactorReport find_component_factor(const Graph& g, const FamilyParams& params) {
    FactorReport report;
    std::optional<Graph> f = minimal_factor(g, params);
    if (!f) {
        report.witness = check_condition(g, params).witness;
        return report;
    }
    for (Component& part : components(*f)) {
        ComponentKind kind = classify_component(part.graph, params);
        if (const auto* bad = std::get_if<Invalid>(&kind)) {
            std::string where;
            for (Vertex v : part.vertices) where += " " + std::to_string(v);
            throw InternalError("minimal factor has a component outside the family (" + bad->reason +
                                "), vertices:" + where);
        }
        report.components.push_back({std::move(part.vertices), std::move(kind)});
    }
    report.factor = std::move(f);
    return report;
}

std::string to_string(StructureViolation v) {
    switch (v) {
        case StructureViolation::none: return "none";
        case StructureViolation::even_circuit: return "even-circuit";
        case StructureViolation::circuits_share_vertex: return "circuits-share-vertex";
        case StructureViolation::circuits_joined_by_path: return "circuits-joined-by-path";
        case StructureViolation::circuit_with_leaf: return "circuit-with-leaf";
    }
    return "unknown";
}

StructureReport verify_minimal_structure(const Graph& f) {
    struct OddBlock {
        std::vector<Vertex> circuit;
        VertexSet vertices;
        int component;
    };

    std::vector<int> component_of(static_cast<std::size_t>(f.vertex_count()), -1);
    const std::vector<Component> parts = components(f);
    for (std::size_t c = 0; c < parts.size(); ++c)
        for (Vertex v : parts[c].vertices) component_of[v] = static_cast<int>(c);

    std::vector<OddBlock> odd_blocks;
    for (const std::vector<Edge>& block : BlockFinder(f).take()) {
        if (block.size() == 1) continue;
        VertexSet vs = block_vertices(block);
        Graph bg = Graph::from_edges(f.vertex_count(), block);
        if (block.size() == vs.size() && vs.size() % 2 == 1) {
            odd_blocks.push_back({walk_circuit(bg, vs.front()), vs, component_of[vs.front()]});
            continue;
        }
        std::vector<Vertex> even = block.size() == vs.size() ? walk_circuit(bg, vs.front())
                                                             : even_circuit_in_block(bg, vs.front());
        return {StructureViolation::even_circuit, {even}};
    }

    for (std::size_t a = 0; a < odd_blocks.size(); ++a) {
        for (std::size_t b = a + 1; b < odd_blocks.size(); ++b) {
            VertexSet common;
            std::set_intersection(odd_blocks[a].vertices.begin(), odd_blocks[a].vertices.end(),
                                  odd_blocks[b].vertices.begin(), odd_blocks[b].vertices.end(),
                                  std::back_inserter(common));
            if (!common.empty())
                return {StructureViolation::circuits_share_vertex, {odd_blocks[a].circuit, odd_blocks[b].circuit}};
        }
    }
    for (std::size_t a = 0; a < odd_blocks.size(); ++a) {
        for (std::size_t b = a + 1; b < odd_blocks.size(); ++b) {
            if (odd_blocks[a].component != odd_blocks[b].component) continue;
            return {StructureViolation::circuits_joined_by_path,
                    {odd_blocks[a].circuit, odd_blocks[b].circuit,
                     shortest_path_between(f, odd_blocks[a].vertices, odd_blocks[b].vertices)}};
        }
    }
    for (const OddBlock& block : odd_blocks) {
        for (Vertex v : parts[static_cast<std::size_t>(block.component)].vertices)
            if (f.degree(v) == 1) return {StructureViolation::circuit_with_leaf, {block.circuit, {v}}};
    }
    return {};
}

FractionalAssignment assign_circuit(const Graph& c, const FamilyParams& params) {
    if (!is_circuit(c)) throw InputError("assign_circuit needs a circuit");
    if (c.vertex_count() % 2 == 0) throw InputError("assign_circuit needs an odd circuit");
    const std::int64_t i = (c.vertex_count() - 1) / 2;
    if (!params.circuit_index_allowed(i))
        throw InputError("circuit C_" + std::to_string(c.vertex_count()) + " is not admissible for these parameters");
    const std::int64_t m = params.m();
    return FractionalAssignment(c, std::vector<Rational>(c.edge_count(), Rational((m + 1) / 2, m)));
}

}  // namespace isofactor
