#pragma once

#include <cstdint>
#include <vector>

#include "isofactor/graph.hpp"

namespace isofactor {

// Small-graph generation for exhaustive checks. Canonical forms are found by
// trying every vertex permutation, so these are limited to 8 vertices.

inline constexpr int kMaxCanonicalVertices = 8;

/// Upper-triangle adjacency bits of g, row-major: bit k <-> k-th pair (i<j).
std::uint64_t adjacency_code(const Graph& g);

/// Maximum adjacency_code over all relabelings; equal iff isomorphic.
std::uint64_t canonical_code(const Graph& g);

/// The relabeling of g that attains canonical_code.
Graph canonical_graph(const Graph& g);

/// Pairwise non-isomorphic graphs on exactly n vertices, in canonical form,
/// sorted by canonical code. Built by vertex extension from n-1; n <= 7.
std::vector<Graph> nonisomorphic_graphs(int n);

/// Connected members of nonisomorphic_graphs(k) for 1 <= k <= max_n.
std::vector<Graph> connected_graphs_up_to(int max_n);

/// Every labeled graph on n vertices, reduced by canonical code. Slower
/// independent route used to cross-check nonisomorphic_graphs.
std::vector<Graph> nonisomorphic_graphs_by_labeling(int n);

}  // namespace isofactor
