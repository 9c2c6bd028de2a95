#include <algorithm>
#include <random>
#include <variant>
#include <vector>

#include "doctest.h"
#include "isofactor/component_factor.hpp"
#include "isofactor/errors.hpp"
#include "isofactor/graph_enum.hpp"
#include "isofactor/iso_toughness.hpp"
#include "isofactor/tree_family.hpp"
#include "oracles.hpp"

using namespace isofactor;

namespace {

const std::vector<std::pair<int, int>> kParams{{2, 1}, {3, 1}, {3, 2}, {5, 2}, {4, 3}, {5, 3}};

bool is_perfect_matching(const Graph& f) {
    for (Vertex v = 0; v < f.vertex_count(); ++v)
        if (f.degree(v) != 1) return false;
    return true;
}

Graph bowtie() { return Graph::build(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}); }

}  // namespace

TEST_CASE("minimal_factor examples") {
    const FamilyParams p(3, 2);
    auto c4 = minimal_factor(oracle::cycle(4), p);
    REQUIRE(c4);
    CHECK(c4->edge_count() == 2);
    CHECK(is_perfect_matching(*c4));
    CHECK(oracle::condition(*c4, 3, 2));
    for (const Edge& e : c4->edges()) CHECK_FALSE(oracle::condition(c4->without_edge(e), 3, 2));
    CHECK_FALSE(oracle::tree_member(oracle::path(4), 3, 2));

    CHECK(minimal_factor(oracle::cycle(3), p) == oracle::cycle(3));
    CHECK(minimal_factor(oracle::path(5), p) == oracle::path(5));
    CHECK_FALSE(minimal_factor(oracle::path(3), p));
}

TEST_CASE("classify_component examples") {
    const FamilyParams p(3, 2);
    CHECK(classify_component(oracle::cycle(3), p) == ComponentKind{OddCircuit{1}});
    CHECK(std::holds_alternative<Invalid>(classify_component(oracle::cycle(5), p)));
    CHECK(classify_component(oracle::path(5), p) == ComponentKind{FamilyTree{}});
    CHECK(std::holds_alternative<Invalid>(classify_component(oracle::path(3), p)));
    CHECK(std::holds_alternative<Invalid>(classify_component(oracle::cycle(4), p)));
    CHECK(classify_component(oracle::cycle(5), FamilyParams(4, 3)) == ComponentKind{OddCircuit{2}});
    CHECK(describe(OddCircuit{1}) == "circuit 3");
    CHECK(describe(FamilyTree{}) == "tree");
}

TEST_CASE("find_component_factor examples") {
    auto k4 = find_component_factor(oracle::complete(4), FamilyParams(3, 1));
    REQUIRE(k4.factor);
    for (const auto& c : k4.components) {
        CHECK(std::holds_alternative<FamilyTree>(c.kind));
        const Graph piece = induced_subgraph(*k4.factor, c.vertices);
        CHECK(is_star(piece));
        CHECK(piece.vertex_count() <= 4);
    }

    auto p3 = find_component_factor(oracle::path(3), FamilyParams(3, 2));
    CHECK_FALSE(p3.factor);
    REQUIRE(p3.witness);
    CHECK(*p3.witness == VertexSet{1});

    auto c4 = find_component_factor(oracle::cycle(4), FamilyParams(3, 2));
    REQUIRE(c4.factor);
    REQUIRE(c4.components.size() == 2);
    for (const auto& c : c4.components) {
        CHECK(c.vertices.size() == 2);
        CHECK(c.kind == ComponentKind{FamilyTree{}});
    }
}

TEST_CASE("verify_minimal_structure examples") {
    CHECK(verify_minimal_structure(Graph::build(4, {{0, 1}, {2, 3}})).ok());
    CHECK(verify_minimal_structure(oracle::cycle(5)).ok());

    auto c4 = verify_minimal_structure(oracle::cycle(4));
    CHECK(c4.violation == StructureViolation::even_circuit);
    REQUIRE(c4.evidence.size() == 1);
    CHECK(c4.evidence[0].size() == 5);
    CHECK(c4.evidence[0].front() == c4.evidence[0].back());

    auto bow = verify_minimal_structure(bowtie());
    CHECK(bow.violation == StructureViolation::circuits_share_vertex);
    CHECK(bow.evidence.size() == 2);
    CHECK(to_string(bow.violation) == "circuits-share-vertex");

    // two triangles joined by the path 2-3-4
    Graph dumbbell = Graph::build(7, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 6}});
    auto db = verify_minimal_structure(dumbbell);
    CHECK(db.violation == StructureViolation::circuits_joined_by_path);
    REQUIRE(db.evidence.size() == 3);
    std::vector<Vertex> joining = db.evidence[2];
    std::sort(joining.begin(), joining.end());
    CHECK(joining == std::vector<Vertex>{2, 3, 4});

    Graph tadpole = Graph::build(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    CHECK(verify_minimal_structure(tadpole).violation == StructureViolation::circuit_with_leaf);

    // theta graph made of three paths of length 2 between 0 and 1
    Graph theta = Graph::build(5, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}});
    auto th = verify_minimal_structure(theta);
    CHECK(th.violation == StructureViolation::even_circuit);
    REQUIRE(th.evidence.size() == 1);
    CHECK(th.evidence[0].size() % 2 == 1);

    // two triangles sharing an edge span a 4-circuit
    Graph diamond = Graph::build(4, {{0, 1}, {1, 2}, {0, 2}, {1, 3}, {2, 3}});
    CHECK(verify_minimal_structure(diamond).violation == StructureViolation::even_circuit);
}

TEST_CASE("reported circuits are genuine circuits of the graph") {
    std::mt19937 rng(12);
    for (int trial = 0; trial < 300; ++trial) {
        Graph g = oracle::random_graph(rng, 3 + trial % 8, 0.3);
        auto report = verify_minimal_structure(g);
        bool every_component_ok = true;
        for (const Component& c : components(g))
            every_component_ok = every_component_ok && (is_tree(c.graph) || (is_circuit(c.graph) && c.graph.vertex_count() % 2 == 1));
        CHECK(report.ok() == every_component_ok);
        for (const auto& seq : report.evidence)
            for (std::size_t i = 0; i + 1 < seq.size(); ++i) CHECK(g.adjacent(seq[i], seq[i + 1]));
        if (report.violation == StructureViolation::even_circuit) CHECK(report.evidence[0].size() % 2 == 1);
    }
}

TEST_CASE("assign_circuit examples") {
    auto c3 = assign_circuit(oracle::cycle(3), FamilyParams(3, 2));
    CHECK(c3.values() == std::vector<Rational>(3, Rational(1, 2)));
    CHECK(degree_sum(c3, 0) == Rational(1));
    auto c3b = assign_circuit(oracle::cycle(3), FamilyParams(4, 3));
    CHECK(c3b.values() == std::vector<Rational>(3, Rational(2, 3)));
    CHECK(degree_sum(c3b, 1) == Rational(4, 3));
    CHECK_THROWS_AS(assign_circuit(oracle::cycle(5), FamilyParams(3, 2)), InputError);
    CHECK_THROWS_AS(assign_circuit(oracle::cycle(4), FamilyParams(5, 3)), InputError);
    CHECK_THROWS_AS(assign_circuit(oracle::path(3), FamilyParams(5, 3)), InputError);
}

TEST_CASE("minimal factors on every small graph") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : nonisomorphic_graphs(n))
            for (auto [pn, pm] : kParams) {
                const FamilyParams p(pn, pm);
                const bool holds = oracle::condition(g, pn, pm);
                FactorReport report = find_component_factor(g, p);
                REQUIRE(report.factor.has_value() == holds);
                if (!holds) {
                    REQUIRE(report.witness);
                    CHECK(pm * oracle::iso(g, set_to_mask(*report.witness)) >
                          pn * static_cast<std::int64_t>(report.witness->size()));
                    continue;
                }
                const Graph& f = *report.factor;
                CHECK(f.vertex_count() == g.vertex_count());
                for (const Edge& e : f.edges()) CHECK(g.adjacent(e.u, e.v));
                for (Vertex v = 0; v < n; ++v) CHECK(f.degree(v) > 0);
                CHECK(oracle::condition(f, pn, pm));
                for (const Edge& e : f.edges()) CHECK_FALSE(oracle::condition(f.without_edge(e), pn, pm));
                CHECK(verify_minimal_structure(f).ok());
                for (const auto& c : report.components) {
                    const Graph piece = induced_subgraph(f, c.vertices);
                    if (const auto* circ = std::get_if<OddCircuit>(&c.kind)) {
                        CHECK(circ->index * (pn - pm) < pm);
                        CHECK(static_cast<std::int64_t>(piece.vertex_count()) == 2 * circ->index + 1);
                    } else {
                        REQUIRE(std::holds_alternative<FamilyTree>(c.kind));
                        CHECK(is_member(piece, p).member);
                        CHECK(oracle::tree_member(piece, pn, pm));
                    }
                }
            }
}

TEST_CASE("no denominator-m factor of a minimal factor has a zero edge") {
    int exercised = 0;
    for (int n = 2; n <= 5; ++n)
        for (const Graph& g : nonisomorphic_graphs(n))
            for (auto [pn, pm] : kParams) {
                auto f = minimal_factor(g, FamilyParams(pn, pm));
                if (!f || f->edge_count() > 7) continue;
                ++exercised;
                oracle::for_each_grid_factor(*f, pn, pm, pm, [&](const std::vector<Rational>& values) {
                    for (const Rational& r : values) CHECK(r > Rational(0));
                    return true;
                });
            }
    CHECK(exercised > 50);
}

TEST_CASE("m = 1 factors are star factors") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = oracle::random_graph(rng, 2 + trial % 10, 0.4);
        const int n = 2 + trial % 3;
        auto report = find_component_factor(g, FamilyParams(n, 1));
        if (!report.factor) continue;
        for (const auto& c : report.components) {
            const Graph piece = induced_subgraph(*report.factor, c.vertices);
            CHECK(is_star(piece));
            CHECK(piece.vertex_count() <= n + 1);
        }
    }
}
