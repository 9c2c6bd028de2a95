#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "isofactor/graph.hpp"
#include "isofactor/rational.hpp"

namespace isofactor {

/// Edge weighting h: E(host) -> [0, 1], indexed like host.edges().
class FractionalAssignment {
public:
    explicit FractionalAssignment(Graph host);  // all zero
    FractionalAssignment(Graph host, std::vector<Rational> values);

    const Graph& host() const noexcept { return host_; }
    const std::vector<Rational>& values() const noexcept { return values_; }

    Rational value(std::size_t edge_index) const { return values_.at(edge_index); }
    Rational value(const Edge& e) const;
    void set(const Edge& e, Rational value);

    /// d^h(v): sum of h over the edges at v.
    Rational degree_sum(Vertex v) const;

    friend bool operator==(const FractionalAssignment&, const FractionalAssignment&) = default;

private:
    std::size_t index_of(const Edge& e) const;

    Graph host_;
    std::vector<Rational> values_;
};

inline Rational degree_sum(const FractionalAssignment& h, Vertex v) { return h.degree_sum(v); }

enum class VertexClass { plus, minus };

/// (+) where d^h(v) > 1, (-) where d^h(v) = 1; throws InputError if some d^h(v) < 1.
std::vector<VertexClass> classify_vertices(const FractionalAssignment& h);

struct FactorViolation {
    enum class Kind { below_one, above_threshold, off_grid, out_of_unit_range };
    Kind kind;
    std::optional<Vertex> vertex;  // degree bounds
    std::optional<Edge> edge;      // value constraints
    Rational value;

    std::string describe() const;
};

struct FactorCheck {
    std::vector<FactorViolation> violations;
    bool ok() const noexcept { return violations.empty(); }
};

/// Checks 1 <= d^h(v) <= n/m everywhere and, when asked, that every value is k/m.
FactorCheck verify_factor(const FractionalAssignment& h, const FamilyParams& params, bool require_denominator_m);

struct FractionalResult {
    std::optional<FractionalAssignment> factor;
    std::optional<VertexSet> witness;  // set iff factor is absent
};

/// Builds a factor with values in {0, 1/m, ..., 1} from the minimal component
/// factor (closed forms per component, 0 elsewhere); otherwise returns the
/// condition's witness set.
FractionalResult find_fractional_factor(const Graph& g, const FamilyParams& params);

inline constexpr std::uint64_t kDefaultSearchSpaceCap = 10'000'000;

struct SearchOptions {
    /// Values range over {0, 1/d, ..., 1}; defaults to d = m.
    std::optional<std::int64_t> grid_denominator;
    /// Upper bound on (d+1)^|E|.
    std::uint64_t max_space = kDefaultSearchSpaceCap;
};

/// Lexicographically first valid value vector (edges in host order, values
/// ascending), found by depth-first search that cuts branches once a vertex
/// bound is already violated. Throws CapacityError when (d+1)^|E| exceeds the cap.
std::optional<FractionalAssignment> bruteforce_factor_exists(const Graph& g, const FamilyParams& params,
                                                             const SearchOptions& options = {});

/// G*: every edge of g with multiplicity m.
MultiGraph multigraph_expand(const Graph& g, int m);

inline constexpr int kDefaultGfVertexCap = 20;

/// Brute-force search for S violating g|T| - d_{G-S}(T) <= f|S|, where
/// T = {v not in S : d_{G-S}(v) < g}. Subsets are tried by size, then
/// lexicographically; returns the first violator.
std::optional<VertexSet> gf_violation(const MultiGraph& gstar, int g, int f, int max_vertices = kDefaultGfVertexCap);

/// h(e) = k(e)/m where k(e) is the multiplicity of e in sub; sub must only use
/// pairs that are edges of g, each at most m times.
FractionalAssignment factor_from_subgraph(const Graph& g, const MultiGraph& sub, int m);

enum class Sign { plus, minus };

/// Adds +1/m and -1/m alternately along a trail given as its vertex sequence
/// (v0, v1, ..., vl), starting with first_sign on v0v1. The trail may not
/// repeat an edge. Throws InputError if a value would leave [0, 1].
FractionalAssignment alternate_shift(const FractionalAssignment& h, std::span<const Vertex> trail, Sign first_sign,
                                     std::int64_t m);

}  // namespace isofactor
