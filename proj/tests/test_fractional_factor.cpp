#include <random>
#include <vector>

#include "doctest.h"
#include "isofactor/errors.hpp"
#include "isofactor/fractional_factor.hpp"
#include "isofactor/graph_enum.hpp"
#include "isofactor/iso_toughness.hpp"
#include "oracles.hpp"

using namespace isofactor;

namespace {

const std::vector<std::pair<int, int>> kParams{{2, 1}, {3, 1}, {3, 2}, {5, 2}, {4, 3}, {5, 3}};

FractionalAssignment uniform(const Graph& g, Rational value) {
    return FractionalAssignment(g, std::vector<Rational>(g.edge_count(), value));
}

// Direct evaluation of g|T| - d_{G-S}(T) > f|S| on a multigraph.
bool gf_violated_by(const MultiGraph& mg, int g, int f, std::uint64_t s) {
    int lhs = 0;
    for (Vertex v = 0; v < mg.vertex_count(); ++v) {
        if (oracle::in_mask(s, v)) continue;
        int d = 0;
        for (const auto& [e, k] : mg.multiplicities())
            if (e.has(v) && !oracle::in_mask(s, e.other(v))) d += k;
        if (d < g) lhs += g - d;
    }
    return lhs > f * oracle::popcount(s);
}

}  // namespace

TEST_CASE("degree sums") {
    const auto c3 = uniform(oracle::cycle(3), Rational(1, 2));
    for (Vertex v = 0; v < 3; ++v) CHECK(degree_sum(c3, v) == Rational(1));
    const auto p2 = uniform(oracle::path(2), Rational(1));
    CHECK(degree_sum(p2, 0) == Rational(1));
    CHECK(degree_sum(p2, 1) == Rational(1));
    CHECK(degree_sum(FractionalAssignment(Graph(1)), 0) == Rational(0));
}

TEST_CASE("assignments reject values outside the unit interval and non-edges") {
    CHECK_THROWS_AS(uniform(oracle::path(2), Rational(3, 2)), InputError);
    CHECK_THROWS_AS(uniform(oracle::path(2), Rational(-1, 2)), InputError);
    CHECK_THROWS_AS(FractionalAssignment(oracle::path(3), {Rational(1)}), InputError);
    FractionalAssignment h(oracle::path(3));
    CHECK_THROWS_AS(h.set(Edge(0, 2), Rational(1)), InputError);
    h.set(Edge(1, 2), Rational(1, 2));
    CHECK(h.value(Edge(1, 2)) == Rational(1, 2));
}

TEST_CASE("vertex classes") {
    FractionalAssignment p5(oracle::path(5), {Rational(1), Rational(1, 2), Rational(1, 2), Rational(1)});
    auto cls = classify_vertices(p5);
    CHECK(cls == std::vector<VertexClass>{VertexClass::minus, VertexClass::plus, VertexClass::minus,
                                          VertexClass::plus, VertexClass::minus});
    CHECK_THROWS_AS(classify_vertices(FractionalAssignment(oracle::path(2))), InputError);
}

TEST_CASE("verify_factor examples") {
    const FamilyParams p(3, 2);
    CHECK(verify_factor(uniform(oracle::cycle(3), Rational(1, 2)), p, true).ok());

    auto bad = verify_factor(uniform(oracle::path(2), Rational(1, 3)), p, true);
    int below = 0, off = 0;
    for (const auto& v : bad.violations) {
        if (v.kind == FactorViolation::Kind::below_one) {
            ++below;
            CHECK(v.value == Rational(1, 3));
        }
        if (v.kind == FactorViolation::Kind::off_grid) ++off;
        CHECK_FALSE(v.describe().empty());
    }
    CHECK(below == 2);
    CHECK(off == 1);
    CHECK(verify_factor(uniform(oracle::path(2), Rational(1, 3)), FamilyParams(3, 1), false).violations.size() == 2);

    FractionalAssignment p5(oracle::path(5), {Rational(1), Rational(1, 2), Rational(1, 2), Rational(1)});
    CHECK(verify_factor(p5, p, true).ok());
    const std::vector<Rational> sums{1, Rational(3, 2), 1, Rational(3, 2), 1};
    for (Vertex v = 0; v < 5; ++v) CHECK(degree_sum(p5, v) == sums[v]);

    auto over = verify_factor(uniform(oracle::complete(4), Rational(1)), p, true);
    REQUIRE(over.violations.size() == 4);
    CHECK(over.violations.front().kind == FactorViolation::Kind::above_threshold);
}

TEST_CASE("find_fractional_factor examples") {
    const FamilyParams p(3, 2);
    auto c3 = find_fractional_factor(oracle::cycle(3), p);
    REQUIRE(c3.factor);
    CHECK(c3.factor->values() == std::vector<Rational>(3, Rational(1, 2)));
    CHECK(verify_factor(*c3.factor, p, true).ok());

    auto p3 = find_fractional_factor(oracle::path(3), p);
    CHECK_FALSE(p3.factor);
    REQUIRE(p3.witness);
    CHECK(*p3.witness == VertexSet{1});

    auto p2 = find_fractional_factor(oracle::path(2), FamilyParams(5, 3));
    REQUIRE(p2.factor);
    CHECK(p2.factor->values() == std::vector<Rational>{Rational(1)});
}

TEST_CASE("bruteforce_factor_exists examples") {
    for (auto [n, m] : kParams) {
        auto p2 = bruteforce_factor_exists(oracle::path(2), FamilyParams(n, m));
        REQUIRE(p2);
        CHECK(p2->value(0) == Rational(1));
        CHECK_FALSE(bruteforce_factor_exists(Graph(1), FamilyParams(n, m)));
    }
    CHECK_FALSE(bruteforce_factor_exists(oracle::path(3), FamilyParams(3, 2)));
    CHECK_FALSE(oracle::any_grid_factor(oracle::path(3), 3, 2, 2));
}

TEST_CASE("bruteforce returns the lexicographically first grid factor") {
    std::mt19937 rng(4);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = oracle::random_graph(rng, 2 + trial % 4, 0.6);
        auto [n, m] = kParams[trial % kParams.size()];
        std::optional<std::vector<Rational>> first;
        oracle::for_each_grid_factor(g, n, m, m, [&](const std::vector<Rational>& v) {
            if (!first || v < *first) first = v;
            return true;
        });
        auto found = bruteforce_factor_exists(g, FamilyParams(n, m));
        CHECK(found.has_value() == first.has_value());
        if (found && first) CHECK(found->values() == *first);
    }
}

TEST_CASE("bruteforce respects its search-space cap") {
    SearchOptions opt;
    opt.max_space = 100;
    CHECK_THROWS_AS(bruteforce_factor_exists(oracle::complete(4), FamilyParams(3, 2), opt), CapacityError);
}

TEST_CASE("coarse grid factors imply denominator-m factors") {
    int exercised = 0;
    for (int n = 2; n <= 4; ++n)
        for (const Graph& g : nonisomorphic_graphs(n))
            for (auto [pn, pm] : kParams)
                for (std::int64_t d : {2, 3, 4, 6}) {
                    if (g.edge_count() > 6 && d > 3) continue;
                    SearchOptions opt;
                    opt.grid_denominator = d;
                    opt.max_space = 50'000'000;
                    if (!bruteforce_factor_exists(g, FamilyParams(pn, pm), opt)) continue;
                    ++exercised;
                    CHECK(bruteforce_factor_exists(g, FamilyParams(pn, pm)));
                    CHECK(oracle::any_grid_factor(g, pn, pm, pm));
                }
    CHECK(exercised > 100);
}

TEST_CASE("any factor bounds iso(G-S) by the degree sums over S") {
    for (int n = 2; n <= 5; ++n)
        for (const Graph& g : nonisomorphic_graphs(n))
            for (auto [pn, pm] : kParams) {
                auto res = find_fractional_factor(g, FamilyParams(pn, pm));
                if (!res.factor) continue;
                for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
                    Rational sum;
                    for (Vertex x = 0; x < n; ++x)
                        if (oracle::in_mask(s, x)) sum += degree_sum(*res.factor, x);
                    CHECK(Rational(oracle::iso(g, s)) <= sum);
                    CHECK(sum <= Rational(pn, pm) * Rational(oracle::popcount(s)));
                }
            }
}

TEST_CASE("multigraph expansion") {
    MultiGraph p2 = multigraph_expand(oracle::path(2), 2);
    CHECK(p2.multiplicities().size() == 1);
    CHECK(p2.multiplicity(Edge(0, 1)) == 2);

    MultiGraph c3 = multigraph_expand(oracle::cycle(3), 3);
    CHECK(c3.multiplicities().size() == 3);
    for (Vertex v = 0; v < 3; ++v) CHECK(c3.degree(v) == 6);

    CHECK(multigraph_expand(Graph(1), 5).multiplicities().empty());

    std::mt19937 rng(21);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = oracle::random_graph(rng, 1 + trial % 9, 0.4);
        const int m = 1 + trial % 4;
        MultiGraph e = multigraph_expand(g, m);
        for (Vertex v = 0; v < g.vertex_count(); ++v) CHECK(e.degree(v) == m * g.degree(v));
    }
}

TEST_CASE("gf_violation examples") {
    auto p3 = gf_violation(multigraph_expand(oracle::path(3), 2), 2, 3);
    REQUIRE(p3);
    CHECK(*p3 == VertexSet{1});
    CHECK(gf_violated_by(multigraph_expand(oracle::path(3), 2), 2, 3, set_to_mask(VertexSet{1})));
    CHECK_FALSE(gf_violation(multigraph_expand(oracle::path(2), 2), 2, 3));
    CHECK_FALSE(gf_violation(multigraph_expand(oracle::cycle(3), 2), 2, 3));
    CHECK_THROWS_AS(gf_violation(multigraph_expand(oracle::path(2), 2), 3, 3), InputError);
}

TEST_CASE("gf_violation returns the first violator by size then lexicographically") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + trial % 7;
        Graph g = oracle::random_graph(rng, n, 0.4);
        auto [pn, pm] = kParams[trial % kParams.size()];
        MultiGraph mg = multigraph_expand(g, pm);
        std::optional<std::uint64_t> expected;
        for (int size = 0; size <= n && !expected; ++size)
            for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
                if (oracle::popcount(s) != size || !gf_violated_by(mg, pm, pn, s)) continue;
                if (!expected || lex_less_equal_size(s, *expected)) expected = s;
            }
        auto got = gf_violation(mg, pm, pn);
        REQUIRE(got.has_value() == expected.has_value());
        if (got) CHECK(set_to_mask(*got) == *expected);
        CHECK(got.has_value() == !oracle::condition(g, pn, pm));
    }
}

TEST_CASE("factor_from_subgraph divides multiplicities by m") {
    const Graph p3 = oracle::path(3);
    MultiGraph sub(3);
    sub.add(Edge(0, 1), 2);
    sub.add(Edge(1, 2), 1);
    auto h = factor_from_subgraph(p3, sub, 2);
    CHECK(h.value(Edge(0, 1)) == Rational(1));
    CHECK(h.value(Edge(1, 2)) == Rational(1, 2));
    MultiGraph none(3);
    CHECK(factor_from_subgraph(p3, none, 3).values() == std::vector<Rational>(2, Rational(0)));

    MultiGraph heavy(3);
    heavy.add(Edge(0, 1), 3);
    CHECK_THROWS_AS(factor_from_subgraph(p3, heavy, 2), InputError);
    MultiGraph stray(3);
    stray.add(Edge(0, 2));
    CHECK_THROWS_AS(factor_from_subgraph(p3, stray, 2), InputError);
}

TEST_CASE("alternate_shift examples") {
    const Graph c4 = oracle::cycle(4);
    const std::vector<Vertex> around{0, 1, 2, 3, 0};
    auto shifted = alternate_shift(uniform(c4, Rational(1, 2)), around, Sign::minus, 2);
    CHECK(shifted.value(Edge(0, 1)) == Rational(0));
    CHECK(shifted.value(Edge(1, 2)) == Rational(1));
    CHECK(shifted.value(Edge(2, 3)) == Rational(0));
    CHECK(shifted.value(Edge(0, 3)) == Rational(1));
    for (Vertex v = 0; v < 4; ++v) CHECK(degree_sum(shifted, v) == Rational(1));

    const std::vector<Vertex> both{0, 1, 2};
    auto p3 = alternate_shift(uniform(oracle::path(3), Rational(1, 2)), both, Sign::plus, 2);
    CHECK(p3.values() == std::vector<Rational>{Rational(1), Rational(0)});
    CHECK(degree_sum(p3, 1) == Rational(1));
    CHECK(degree_sum(p3, 0) == Rational(1));
    CHECK(degree_sum(p3, 2) == Rational(0));

    const std::vector<Vertex> edge{0, 1};
    CHECK_THROWS_WITH_AS(alternate_shift(uniform(oracle::path(2), Rational(1)), edge, Sign::plus, 2),
                         doctest::Contains("(0,1)"), InputError);
}

TEST_CASE("alternate_shift rejects malformed trails") {
    const auto h = uniform(oracle::cycle(4), Rational(1, 2));
    const std::vector<Vertex> jump{0, 2};
    CHECK_THROWS_AS(alternate_shift(h, jump, Sign::plus, 2), InputError);
    const std::vector<Vertex> back{0, 1, 0};
    CHECK_THROWS_AS(alternate_shift(h, back, Sign::plus, 2), InputError);
}
