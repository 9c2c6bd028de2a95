#pragma once

#include <string>
#include <vector>

#include "isofactor/graph.hpp"

namespace isofactor {

/// AHU encoding rooted at the centre (the smaller encoding for two centres).
/// Equal strings iff the trees are isomorphic.
std::string tree_canonical_string(const Graph& tree);

/// Relabels by preorder from the canonical root, children in encoding order.
Graph canonical_tree(const Graph& tree);

/// Non-isomorphic trees on exactly n >= 1 vertices, canonical and sorted by
/// canonical string. Grown by attaching a leaf to every vertex of every tree
/// on n-1 vertices.
std::vector<Graph> nonisomorphic_trees(int n);

/// All n^(n-2) labeled trees on n >= 2 vertices, decoded from Prüfer sequences.
std::vector<Graph> labeled_trees(int n);

}  // namespace isofactor
