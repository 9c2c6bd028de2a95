#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isofactor/fractional_factor.hpp"
#include "isofactor/graph.hpp"
#include "isofactor/rational.hpp"

namespace isofactor {

// Membership in the family of edge-minimal trees satisfying the n/m
// isolated-vertex condition, decided through the bipartition {A, B}
// (|B| <= |A|): T is a member iff m|A| <= n|B| and, for every edge e,
// m|T_e ∩ A| > n|T_e ∩ B|, where T_e is the side of T - e holding e's
// A-endpoint. When |A| = |B| both orientations are tried.

struct MembershipCertificate {
    enum class Failure { none, single_vertex, global_bound, edge_bound };

    bool member = false;
    /// The orientation that succeeded, or the default one on failure.
    Bipartition orientation;
    Failure failure = Failure::none;
    std::optional<Edge> failing_edge;  // for edge_bound
    /// |T_e ∩ A| - (n/m)|T_e ∩ B| per edge, in tree.edges() order.
    std::vector<Rational> margins;
};

/// Throws InputError unless tree is a tree. A single vertex is a non-member.
MembershipCertificate is_member(const Graph& tree, const FamilyParams& params);

/// Straight from the definition: tree satisfies the condition and every
/// T - e violates it (exhaustive subset checks).
bool is_member_by_definition(const Graph& tree, const FamilyParams& params, int max_vertices = 20);

/// h(e) = |T_e ∩ A| - (|A|/|B|)|T_e ∩ B|. Gives d^h = 1 on A and |A|/|B| on B.
FractionalAssignment canonical_assignment(const Graph& tree, const FamilyParams& params);

/// The factor with d^h(a) = 1 on A, d^h(b) = n/m on B - {x} and
/// d^h(x) = n/m + |A| - (n/m)|B|, every value in {1/m, ..., 1}.
///
/// Rooted at x, each non-root vertex has its target degree pinned, so the
/// value on its parent edge is forced: target minus the values already on its
/// child edges. Processing leaves upward fixes every edge; the root's degree
/// is then checked against the formula. Any off-grid, zero, or over-one value
/// throws InternalError, since a member always admits such a factor.
FractionalAssignment pinned_assignment(const Graph& tree, const FamilyParams& params, Vertex x);

struct CorollaryCheck {
    bool applicable = true;
    bool holds = true;
    std::string evidence;  // set when it fails
};

struct CorollaryReport {
    CorollaryCheck leaves_in_a;        // T = K_{1,1} or Leaf(T) ⊆ A
    CorollaryCheck a_degree;           // d(a) <= m on A
    CorollaryCheck b_degree;           // d(b) <= n on B
    CorollaryCheck core_leaf_degree;   // d(x) = floor(n/m) + 1 on Leaf(T - Leaf(T))
    CorollaryCheck order_divisibility; // n ≡ 1 (mod m), non-star: m|A| = n|B|, (n+m) | |V|

    bool all_hold() const;
};

/// Evaluates the five properties for a given orientation; no membership needed.
CorollaryReport evaluate_corollary(const Graph& tree, const FamilyParams& params, const Bipartition& orientation);

/// Member trees only (InputError otherwise); a failing property on a member
/// throws InternalError.
CorollaryReport corollary_report(const Graph& tree, const FamilyParams& params);

bool is_star(const Graph& tree);

/// k = 1: base degrees in {1, 3}; subdivide every edge, then hang a new
/// pendant edge on every original leaf.
/// k >= 2: the non-leaf core must be non-empty with odd core degrees
/// d_core(v) <= 2k+1 and 2|leaf neighbours| + d_core(v) <= 2k+1; subdivide
/// every core edge, then give each core vertex with d_core = 2l+1 < 2k+1
/// k - l - |leaf neighbours| new pendant edges.
/// Base vertices keep their labels; subdivision vertices follow in edge
/// order, then pendant vertices in order of their attachment vertex.
Graph construct_blown_tree(const Graph& base, int k);

inline constexpr int kDefaultTreeEnumerationCap = 10;

/// Non-isomorphic members on 2..max_vertices vertices in canonical form,
/// ordered by vertex count, then canonical string.
std::vector<Graph> enumerate_members(const FamilyParams& params, int max_vertices,
                                     int cap = kDefaultTreeEnumerationCap);

}  // namespace isofactor
