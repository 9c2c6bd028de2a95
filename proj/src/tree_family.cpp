#include "isofactor/tree_family.hpp"

#include <algorithm>
#include <string>

#include "isofactor/errors.hpp"
#include "isofactor/iso_toughness.hpp"
#include "isofactor/tree_enum.hpp"

namespace isofactor {

namespace {

struct SideCount {
    std::int64_t a = 0;
    std::int64_t b = 0;
};

struct RootedTree {
    std::vector<Vertex> parent;
    std::vector<Vertex> order;  // breadth-first from the root
};

RootedTree root_at(const Graph& tree, Vertex root) {
    RootedTree rt{std::vector<Vertex>(static_cast<std::size_t>(tree.vertex_count()), -1), {root}};
    for (std::size_t i = 0; i < rt.order.size(); ++i) {
        const Vertex v = rt.order[i];
        for (Vertex w : tree.neighbors(v)) {
            if (w == rt.parent[v]) continue;
            rt.parent[w] = v;
            rt.order.push_back(w);
        }
    }
    return rt;
}

// |T_e ∩ A| and |T_e ∩ B| for every edge, indexed like tree.edges().
std::vector<SideCount> edge_sides(const Graph& tree, const Bipartition& bp) {
    const RootedTree rt = root_at(tree, 0);
    std::vector<SideCount> below(static_cast<std::size_t>(tree.vertex_count()));
    for (auto it = rt.order.rbegin(); it != rt.order.rend(); ++it) {
        const Vertex v = *it;
        (bp.in_A(v) ? below[v].a : below[v].b) += 1;
        if (rt.parent[v] >= 0) {
            below[rt.parent[v]].a += below[v].a;
            below[rt.parent[v]].b += below[v].b;
        }
    }
    const auto total_a = static_cast<std::int64_t>(bp.A.size());
    const auto total_b = static_cast<std::int64_t>(bp.B.size());
    std::vector<SideCount> out;
    out.reserve(tree.edge_count());
    for (const Edge& e : tree.edges()) {
        const Vertex child = rt.parent[e.u] == e.v ? e.u : e.v;
        if (bp.in_A(child)) {
            out.push_back(below[child]);
        } else {
            out.push_back({total_a - below[child].a, total_b - below[child].b});
        }
    }
    return out;
}

MembershipCertificate evaluate(const Graph& tree, const FamilyParams& params, const Bipartition& bp) {
    MembershipCertificate cert;
    cert.orientation = bp;
    const std::int64_t n = params.n(), m = params.m();
    const std::vector<SideCount> sides = edge_sides(tree, bp);
    for (const SideCount& s : sides) cert.margins.push_back(Rational(s.a) - params.threshold() * Rational(s.b));

    if (m * static_cast<std::int64_t>(bp.A.size()) > n * static_cast<std::int64_t>(bp.B.size())) {
        cert.failure = MembershipCertificate::Failure::global_bound;
        return cert;
    }
    for (std::size_t i = 0; i < sides.size(); ++i) {
        if (m * sides[i].a <= n * sides[i].b) {
            cert.failure = MembershipCertificate::Failure::edge_bound;
            cert.failing_edge = tree.edge(i);
            return cert;
        }
    }
    cert.member = true;
    return cert;
}

MembershipCertificate require_member(const Graph& tree, const FamilyParams& params, const char* what) {
    MembershipCertificate cert = is_member(tree, params);
    if (!cert.member) throw InputError(std::string(what) + " needs a member tree");
    return cert;
}

void fail(CorollaryCheck& check, std::string evidence) {
    check.holds = false;
    if (check.evidence.empty()) check.evidence = std::move(evidence);
}

std::string vertex_text(Vertex v) { return "vertex " + std::to_string(v); }

}  // namespace

MembershipCertificate is_member(const Graph& tree, const FamilyParams& params) {
    if (!is_tree(tree)) throw InputError("is_member needs a tree");
    if (tree.vertex_count() == 1) {
        MembershipCertificate cert;
        cert.orientation = {{0}, {}};
        cert.failure = MembershipCertificate::Failure::single_vertex;
        return cert;
    }
    const Bipartition bp = bipartition(tree);
    MembershipCertificate cert = evaluate(tree, params, bp);
    if (!cert.member && bp.balanced()) {
        MembershipCertificate alt = evaluate(tree, params, bp.swapped());
        if (alt.member) return alt;
    }
    return cert;
}

bool is_member_by_definition(const Graph& tree, const FamilyParams& params, int max_vertices) {
    if (!is_tree(tree)) throw InputError("is_member_by_definition needs a tree");
    const CheckOptions exhaustive{CheckMode::exhaustive, max_vertices};
    if (!check_condition(tree, params, exhaustive).holds) return false;
    for (const Edge& e : tree.edges())
        if (check_condition(tree.without_edge(e), params, exhaustive).holds) return false;
    return true;
}

FractionalAssignment canonical_assignment(const Graph& tree, const FamilyParams& params) {
    const MembershipCertificate cert = require_member(tree, params, "canonical_assignment");
    const Bipartition& bp = cert.orientation;
    const Rational ratio(static_cast<std::int64_t>(bp.A.size()), static_cast<std::int64_t>(bp.B.size()));
    std::vector<Rational> values;
    for (const SideCount& s : edge_sides(tree, bp)) values.push_back(Rational(s.a) - ratio * Rational(s.b));
    return FractionalAssignment(tree, std::move(values));
}

FractionalAssignment pinned_assignment(const Graph& tree, const FamilyParams& params, Vertex x) {
    const MembershipCertificate cert = require_member(tree, params, "pinned_assignment");
    const Bipartition& bp = cert.orientation;
    if (!tree.contains(x) || !bp.in_B(x)) throw InputError("pinned vertex " + std::to_string(x) + " is not in B");

    const Rational threshold = params.threshold();
    const Rational step(1, params.m());
    const RootedTree rt = root_at(tree, x);
    std::vector<Rational> values(tree.edge_count());
    std::vector<Rational> child_sum(static_cast<std::size_t>(tree.vertex_count()));
    for (auto it = rt.order.rbegin(); it != rt.order.rend(); ++it) {
        const Vertex v = *it;
        if (v == x) continue;
        const Rational target = bp.in_A(v) ? Rational(1) : threshold;
        const Rational value = target - child_sum[v];
        if (value <= Rational(0) || value > Rational(1) || !(value / step).is_integer())
            throw InternalError("pinned propagation produced " + value.to_string() + " above " + vertex_text(v));
        values[*tree.edge_index(v, rt.parent[v])] = value;
        child_sum[rt.parent[v]] += value;
    }
    const Rational expected =
        threshold + Rational(static_cast<std::int64_t>(bp.A.size())) -
        threshold * Rational(static_cast<std::int64_t>(bp.B.size()));
    if (child_sum[x] != expected)
        throw InternalError("pinned root degree " + child_sum[x].to_string() + " differs from " + expected.to_string());
    return FractionalAssignment(tree, std::move(values));
}

bool CorollaryReport::all_hold() const {
    for (const CorollaryCheck* c : {&leaves_in_a, &a_degree, &b_degree, &core_leaf_degree, &order_divisibility})
        if (c->applicable && !c->holds) return false;
    return true;
}

bool is_star(const Graph& tree) {
    if (tree.vertex_count() < 2) return false;
    for (Vertex v = 0; v < tree.vertex_count(); ++v)
        if (tree.degree(v) == tree.vertex_count() - 1) return true;
    return false;
}

CorollaryReport evaluate_corollary(const Graph& tree, const FamilyParams& params, const Bipartition& bp) {
    CorollaryReport report;
    const std::int64_t n = params.n(), m = params.m();

    if (tree.vertex_count() != 2) {
        for (Vertex leaf : leaves(tree))
            if (!bp.in_A(leaf)) fail(report.leaves_in_a, "leaf " + std::to_string(leaf) + " lies in B");
    }
    for (Vertex a : bp.A)
        if (tree.degree(a) > m) fail(report.a_degree, vertex_text(a) + " in A has degree " + std::to_string(tree.degree(a)));
    for (Vertex b : bp.B)
        if (tree.degree(b) > n) fail(report.b_degree, vertex_text(b) + " in B has degree " + std::to_string(tree.degree(b)));

    const std::int64_t want = params.threshold().floor() + 1;
    for (Vertex v = 0; v < tree.vertex_count(); ++v) {
        if (tree.degree(v) <= 1) continue;
        int core_degree = 0;
        for (Vertex w : tree.neighbors(v)) core_degree += tree.degree(w) > 1 ? 1 : 0;
        if (core_degree == 1 && tree.degree(v) != want)
            fail(report.core_leaf_degree, vertex_text(v) + " has degree " + std::to_string(tree.degree(v)) +
                                              ", expected " + std::to_string(want));
    }

    report.order_divisibility.applicable = (n - 1) % m == 0 && !is_star(tree);
    if (report.order_divisibility.applicable) {
        const auto a = static_cast<std::int64_t>(bp.A.size()), b = static_cast<std::int64_t>(bp.B.size());
        if (m * a != n * b) fail(report.order_divisibility, "m|A| = " + std::to_string(m * a) + " but n|B| = " + std::to_string(n * b));
        if (tree.vertex_count() % (n + m) != 0)
            fail(report.order_divisibility,
                 std::to_string(tree.vertex_count()) + " vertices, not a multiple of " + std::to_string(n + m));
    }
    return report;
}

CorollaryReport corollary_report(const Graph& tree, const FamilyParams& params) {
    const MembershipCertificate cert = require_member(tree, params, "corollary_report");
    CorollaryReport report = evaluate_corollary(tree, params, cert.orientation);
    if (!report.all_hold()) throw InternalError("member tree violates a structural corollary");
    return report;
}

Graph construct_blown_tree(const Graph& base, int k) {
    if (k < 1) throw InputError("blow-up parameter k must be positive");
    if (!is_tree(base) || base.vertex_count() < 2) throw InputError("blow-up base must be a tree with at least 2 vertices");
    const int nv = base.vertex_count();
    std::vector<Edge> edges;
    int next = nv;

    if (k == 1) {
        for (Vertex v = 0; v < nv; ++v)
            if (base.degree(v) != 1 && base.degree(v) != 3)
                throw InputError(vertex_text(v) + " has degree " + std::to_string(base.degree(v)) + ", need 1 or 3");
        for (const Edge& e : base.edges()) {
            edges.emplace_back(e.u, next);
            edges.emplace_back(e.v, next);
            ++next;
        }
        for (Vertex v = 0; v < nv; ++v)
            if (base.degree(v) == 1) edges.emplace_back(v, next++);
        return Graph::from_edges(next, edges);
    }

    std::vector<int> core_degree(static_cast<std::size_t>(nv), 0), leaf_nbrs(static_cast<std::size_t>(nv), 0);
    bool any_core = false;
    for (Vertex v = 0; v < nv; ++v) {
        if (base.degree(v) == 1) continue;
        any_core = true;
        for (Vertex w : base.neighbors(v)) (base.degree(w) == 1 ? leaf_nbrs[v] : core_degree[v]) += 1;
    }
    if (!any_core) throw InputError("base has no non-leaf vertex, so the core degree condition cannot hold");
    for (Vertex v = 0; v < nv; ++v) {
        if (base.degree(v) == 1) continue;
        const int dc = core_degree[v];
        if (dc % 2 == 0 || dc > 2 * k + 1)
            throw InputError(vertex_text(v) + " has core degree " + std::to_string(dc) + ", need an odd value <= " +
                             std::to_string(2 * k + 1));
        if (2 * leaf_nbrs[v] + dc > 2 * k + 1)
            throw InputError(vertex_text(v) + " has too many leaf neighbours for k = " + std::to_string(k));
    }
    for (const Edge& e : base.edges()) {
        if (base.degree(e.u) == 1 || base.degree(e.v) == 1) {
            edges.push_back(e);
        } else {
            edges.emplace_back(e.u, next);
            edges.emplace_back(e.v, next);
            ++next;
        }
    }
    for (Vertex v = 0; v < nv; ++v) {
        if (base.degree(v) == 1) continue;
        const int l = (core_degree[v] - 1) / 2;
        if (core_degree[v] >= 2 * k + 1) continue;
        for (int i = 0; i < k - l - leaf_nbrs[v]; ++i) edges.emplace_back(v, next++);
    }
    return Graph::from_edges(next, edges);
}

std::vector<Graph> enumerate_members(const FamilyParams& params, int max_vertices, int cap) {
    if (max_vertices > cap)
        throw CapacityError("tree enumeration up to " + std::to_string(max_vertices) + " vertices exceeds cap " +
                            std::to_string(cap));
    std::vector<Graph> out;
    for (int n = 2; n <= max_vertices; ++n)
        for (Graph& tree : nonisomorphic_trees(n))
            if (is_member(tree, params).member) out.push_back(std::move(tree));
    return out;
}

}  // namespace isofactor
