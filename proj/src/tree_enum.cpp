#include "isofactor/tree_enum.hpp"

#include <algorithm>
#include <map>

#include "isofactor/errors.hpp"

namespace isofactor {

namespace {

VertexSet centres(const Graph& tree) {
    const int n = tree.vertex_count();
    if (n <= 2) {
        VertexSet all;
        for (Vertex v = 0; v < n; ++v) all.push_back(v);
        return all;
    }
    std::vector<int> degree(static_cast<std::size_t>(n));
    VertexSet layer;
    for (Vertex v = 0; v < n; ++v) {
        degree[v] = tree.degree(v);
        if (degree[v] == 1) layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        remaining -= static_cast<int>(layer.size());
        VertexSet next;
        for (Vertex leaf : layer) {
            for (Vertex w : tree.neighbors(leaf)) {
                if (--degree[w] == 1) next.push_back(w);
            }
            degree[leaf] = 0;
        }
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

// Encodings of every subtree when rooted at root.
std::vector<std::string> encode_all(const Graph& tree, Vertex root) {
    std::vector<std::string> enc(static_cast<std::size_t>(tree.vertex_count()));
    std::vector<Vertex> parent(static_cast<std::size_t>(tree.vertex_count()), -1);
    std::vector<Vertex> order{root};
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (Vertex w : tree.neighbors(order[i])) {
            if (w == parent[order[i]]) continue;
            parent[w] = order[i];
            order.push_back(w);
        }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        std::vector<std::string> kids;
        for (Vertex w : tree.neighbors(*it))
            if (w != parent[*it]) kids.push_back(enc[w]);
        std::sort(kids.begin(), kids.end());
        std::string s = "(";
        for (const std::string& k : kids) s += k;
        s += ")";
        enc[*it] = std::move(s);
    }
    return enc;
}

Vertex canonical_root(const Graph& tree, std::string* encoding) {
    Vertex best_root = -1;
    std::string best;
    for (Vertex c : centres(tree)) {
        std::string e = encode_all(tree, c)[c];
        if (best_root < 0 || e < best) {
            best = std::move(e);
            best_root = c;
        }
    }
    if (encoding) *encoding = std::move(best);
    return best_root;
}

void require_tree(const Graph& tree) {
    if (!is_tree(tree)) throw InputError("input is not a tree");
}

}  // namespace

std::string tree_canonical_string(const Graph& tree) {
    require_tree(tree);
    std::string out;
    canonical_root(tree, &out);
    return out;
}

Graph canonical_tree(const Graph& tree) {
    require_tree(tree);
    const Vertex root = canonical_root(tree, nullptr);
    const std::vector<std::string> enc = encode_all(tree, root);
    std::vector<int> label(static_cast<std::size_t>(tree.vertex_count()), -1);
    std::vector<Edge> edges;
    int next_label = 0;
    // preorder with children sorted by encoding
    std::vector<std::pair<Vertex, Vertex>> stack{{root, -1}};
    while (!stack.empty()) {
        auto [v, parent] = stack.back();
        stack.pop_back();
        label[v] = next_label++;
        if (parent >= 0) edges.emplace_back(label[parent], label[v]);
        std::vector<Vertex> kids;
        for (Vertex w : tree.neighbors(v))
            if (w != parent) kids.push_back(w);
        std::stable_sort(kids.begin(), kids.end(), [&](Vertex a, Vertex b) { return enc[a] < enc[b]; });
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.emplace_back(*it, v);
    }
    return Graph::from_edges(tree.vertex_count(), edges);
}

std::vector<Graph> nonisomorphic_trees(int n) {
    if (n < 1) throw InputError("trees need at least one vertex");
    if (n == 1) return {Graph(1)};
    std::map<std::string, Graph> found;
    for (const Graph& base : nonisomorphic_trees(n - 1)) {
        for (Vertex v = 0; v < base.vertex_count(); ++v) {
            std::vector<Edge> edges = base.edges();
            edges.emplace_back(v, n - 1);
            Graph grown = Graph::from_edges(n, edges);
            std::string key = tree_canonical_string(grown);
            if (!found.contains(key)) found.emplace(std::move(key), canonical_tree(grown));
        }
    }
    std::vector<Graph> out;
    out.reserve(found.size());
    for (auto& [key, g] : found) out.push_back(std::move(g));
    return out;
}

std::vector<Graph> labeled_trees(int n) {
    if (n < 2) throw InputError("labeled tree enumeration needs n >= 2");
    if (n > 9) throw CapacityError("labeled tree enumeration limited to 9 vertices");
    std::vector<Graph> out;
    if (n == 2) {
        out.push_back(Graph::build(2, {{0, 1}}));
        return out;
    }
    const int len = n - 2;
    std::vector<int> seq(static_cast<std::size_t>(len), 0);
    while (true) {
        std::vector<int> degree(static_cast<std::size_t>(n), 1);
        for (int x : seq) ++degree[x];
        std::vector<Edge> edges;
        for (int x : seq) {
            Vertex leaf = 0;
            while (degree[leaf] != 1) ++leaf;
            edges.emplace_back(leaf, x);
            --degree[leaf];
            --degree[x];
        }
        Vertex a = -1, b = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (degree[v] == 1) (a < 0 ? a : b) = v;
        }
        edges.emplace_back(a, b);
        out.push_back(Graph::from_edges(n, edges));

        int i = len - 1;
        while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }
    return out;
}

}  // namespace isofactor
