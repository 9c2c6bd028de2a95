#include "isofactor/graph_enum.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "isofactor/errors.hpp"

namespace isofactor {

namespace {

void require_small(const Graph& g) {
    if (g.vertex_count() > kMaxCanonicalVertices)
        throw CapacityError("canonical form limited to " + std::to_string(kMaxCanonicalVertices) + " vertices");
}

int pair_bit(int n, int i, int j) {
    // position of (i, j), i < j, in row-major upper-triangle order
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::uint64_t permuted_code(const Graph& g, const std::vector<int>& perm) {
    const int n = g.vertex_count();
    std::uint64_t code = 0;
    for (const Edge& e : g.edges()) {
        int a = perm[e.u], b = perm[e.v];
        if (a > b) std::swap(a, b);
        code |= std::uint64_t{1} << (pair_bit(n, a, b));
    }
    return code;
}

Graph graph_from_code(int n, std::uint64_t code) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((code >> pair_bit(n, i, j)) & 1U) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

std::pair<std::uint64_t, std::vector<int>> best_permutation(const Graph& g) {
    require_small(g);
    std::vector<int> perm(static_cast<std::size_t>(g.vertex_count()));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = permuted_code(g, perm);
    std::vector<int> best_perm = perm;
    while (std::next_permutation(perm.begin(), perm.end())) {
        std::uint64_t c = permuted_code(g, perm);
        if (c > best) {
            best = c;
            best_perm = perm;
        }
    }
    return {best, best_perm};
}

}  // namespace

std::uint64_t adjacency_code(const Graph& g) {
    require_small(g);
    std::vector<int> identity(static_cast<std::size_t>(g.vertex_count()));
    std::iota(identity.begin(), identity.end(), 0);
    return permuted_code(g, identity);
}

std::uint64_t canonical_code(const Graph& g) { return best_permutation(g).first; }

Graph canonical_graph(const Graph& g) {
    return graph_from_code(g.vertex_count(), best_permutation(g).first);
}

std::vector<Graph> nonisomorphic_graphs(int n) {
    if (n < 0) throw InputError("negative vertex count");
    if (n > 7) throw CapacityError("graph enumeration limited to 7 vertices");
    if (n == 0) return {Graph(0)};
    std::map<std::uint64_t, Graph> found;
    for (const Graph& base : nonisomorphic_graphs(n - 1)) {
        const Vertex fresh = n - 1;
        for (std::uint64_t nbrs = 0; nbrs < (std::uint64_t{1} << (n - 1)); ++nbrs) {
            std::vector<Edge> edges = base.edges();
            for (Vertex v : mask_to_set(nbrs)) edges.emplace_back(v, fresh);
            Graph candidate = Graph::from_edges(n, edges);
            std::uint64_t code = canonical_code(candidate);
            if (!found.contains(code)) found.emplace(code, graph_from_code(n, code));
        }
    }
    std::vector<Graph> out;
    out.reserve(found.size());
    for (auto& [code, g] : found) out.push_back(std::move(g));
    return out;
}

std::vector<Graph> connected_graphs_up_to(int max_n) {
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n)
        for (Graph& g : nonisomorphic_graphs(n))
            if (is_connected(g)) out.push_back(std::move(g));
    return out;
}

std::vector<Graph> nonisomorphic_graphs_by_labeling(int n) {
    if (n > 6) throw CapacityError("labeled enumeration limited to 6 vertices");
    const int pairs = n * (n - 1) / 2;
    std::map<std::uint64_t, Graph> found;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
        Graph g = graph_from_code(n, code);
        std::uint64_t canon = canonical_code(g);
        if (!found.contains(canon)) found.emplace(canon, graph_from_code(n, canon));
    }
    std::vector<Graph> out;
    for (auto& [code, g] : found) out.push_back(std::move(g));
    return out;
}

}  // namespace isofactor
