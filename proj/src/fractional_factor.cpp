#include "isofactor/fractional_factor.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <set>
#include <string>
#include <variant>

#include "isofactor/component_factor.hpp"
#include "isofactor/errors.hpp"
#include "isofactor/tree_family.hpp"

namespace isofactor {

namespace {

const Rational kZero(0);
const Rational kOne(1);

std::string edge_text(const Edge& e) { return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")"; }

void require_unit(const Edge& e, const Rational& value) {
    if (value < kZero || value > kOne)
        throw InputError("value " + value.to_string() + " on edge " + edge_text(e) + " is outside [0, 1]");
}

std::uint64_t saturating_power(std::uint64_t base, std::size_t exponent) {
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < exponent; ++i) {
        if (out > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
        out *= base;
    }
    return out;
}

// Degrees are tracked in units of 1/d.
class GridSearch {
public:
    GridSearch(const Graph& g, const FamilyParams& params, std::int64_t d)
        : g_(g), n_(params.n()), m_(params.m()), d_(d), units_(static_cast<std::size_t>(g.vertex_count()), 0),
          remaining_(static_cast<std::size_t>(g.vertex_count()), 0), choice_(g.edge_count(), 0) {
        for (Vertex v = 0; v < g.vertex_count(); ++v) remaining_[v] = g.degree(v);
    }

    bool run() {
        for (Vertex v = 0; v < g_.vertex_count(); ++v)
            if (!feasible(v)) return false;
        return descend(0);
    }

    std::vector<Rational> values() const {
        std::vector<Rational> out;
        out.reserve(choice_.size());
        for (std::int64_t k : choice_) out.emplace_back(k, d_);
        return out;
    }

private:
    bool feasible(Vertex v) const {
        if (m_ * units_[v] > n_ * d_) return false;
        return units_[v] + remaining_[v] * d_ >= d_;
    }

    bool descend(std::size_t index) {
        if (index == g_.edge_count()) return true;
        const Edge& e = g_.edge(index);
        --remaining_[e.u];
        --remaining_[e.v];
        for (std::int64_t k = 0; k <= d_; ++k) {
            units_[e.u] += k;
            units_[e.v] += k;
            choice_[index] = k;
            if (feasible(e.u) && feasible(e.v) && descend(index + 1)) return true;
            units_[e.u] -= k;
            units_[e.v] -= k;
        }
        ++remaining_[e.u];
        ++remaining_[e.v];
        return false;
    }

    const Graph& g_;
    std::int64_t n_, m_, d_;
    std::vector<std::int64_t> units_;
    std::vector<std::int64_t> remaining_;
    std::vector<std::int64_t> choice_;
};

}  // namespace

FractionalAssignment::FractionalAssignment(Graph host)
    : host_(std::move(host)), values_(host_.edge_count(), Rational(0)) {}

FractionalAssignment::FractionalAssignment(Graph host, std::vector<Rational> values)
    : host_(std::move(host)), values_(std::move(values)) {
    if (values_.size() != host_.edge_count()) throw InputError("assignment needs one value per host edge");
    for (std::size_t i = 0; i < values_.size(); ++i) require_unit(host_.edge(i), values_[i]);
}

std::size_t FractionalAssignment::index_of(const Edge& e) const {
    auto index = host_.edge_index(e.u, e.v);
    if (!index) throw InputError("edge " + edge_text(e) + " is not in the host graph");
    return *index;
}

Rational FractionalAssignment::value(const Edge& e) const { return values_[index_of(e)]; }

void FractionalAssignment::set(const Edge& e, Rational value) {
    require_unit(e, value);
    values_[index_of(e)] = value;
}

Rational FractionalAssignment::degree_sum(Vertex v) const {
    if (!host_.contains(v)) throw InputError("vertex " + std::to_string(v) + " is not in the host graph");
    Rational sum;
    for (std::size_t i : host_.incident_edges(v)) sum += values_[i];
    return sum;
}

std::vector<VertexClass> classify_vertices(const FractionalAssignment& h) {
    std::vector<VertexClass> out;
    out.reserve(static_cast<std::size_t>(h.host().vertex_count()));
    for (Vertex v = 0; v < h.host().vertex_count(); ++v) {
        Rational d = h.degree_sum(v);
        if (d < kOne) throw InputError("vertex " + std::to_string(v) + " has d^h < 1");
        out.push_back(d > kOne ? VertexClass::plus : VertexClass::minus);
    }
    return out;
}

std::string FactorViolation::describe() const {
    switch (kind) {
        case Kind::below_one:
            return "vertex " + std::to_string(*vertex) + ": degree sum " + value.to_string() + " < 1";
        case Kind::above_threshold:
            return "vertex " + std::to_string(*vertex) + ": degree sum " + value.to_string() + " exceeds n/m";
        case Kind::off_grid:
            return "edge " + edge_text(*edge) + ": value " + value.to_string() + " is not a multiple of 1/m";
        case Kind::out_of_unit_range:
            return "edge " + edge_text(*edge) + ": value " + value.to_string() + " outside [0, 1]";
    }
    return {};
}

FactorCheck verify_factor(const FractionalAssignment& h, const FamilyParams& params, bool require_denominator_m) {
    FactorCheck check;
    const Rational threshold = params.threshold();
    const Graph& g = h.host();
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const Rational& value = h.value(i);
        if (value < kZero || value > kOne)
            check.violations.push_back({FactorViolation::Kind::out_of_unit_range, std::nullopt, g.edge(i), value});
        if (require_denominator_m && params.m() % value.denominator() != 0)
            check.violations.push_back({FactorViolation::Kind::off_grid, std::nullopt, g.edge(i), value});
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        Rational d = h.degree_sum(v);
        if (d < kOne) check.violations.push_back({FactorViolation::Kind::below_one, v, std::nullopt, d});
        if (d > threshold) check.violations.push_back({FactorViolation::Kind::above_threshold, v, std::nullopt, d});
    }
    return check;
}

FractionalResult find_fractional_factor(const Graph& g, const FamilyParams& params) {
    FactorReport report = find_component_factor(g, params);
    if (!report.factor) return {std::nullopt, report.witness};

    FractionalAssignment h(g);
    for (const ClassifiedComponent& part : report.components) {
        Graph piece = induced_subgraph(*report.factor, part.vertices);
        FractionalAssignment local = std::visit(
            [&](const auto& kind) -> FractionalAssignment {
                using Kind = std::decay_t<decltype(kind)>;
                if constexpr (std::is_same_v<Kind, OddCircuit>) {
                    return assign_circuit(piece, params);
                } else if constexpr (std::is_same_v<Kind, FamilyTree>) {
                    MembershipCertificate cert = is_member(piece, params);
                    return pinned_assignment(piece, params, cert.orientation.B.front());
                } else {
                    throw InternalError("component factor reported an invalid component: " + kind.reason);
                }
            },
            part.kind);
        for (std::size_t i = 0; i < piece.edge_count(); ++i) {
            const Edge& e = piece.edge(i);
            h.set(Edge(part.vertices[e.u], part.vertices[e.v]), local.value(i));
        }
    }
    return {std::move(h), std::nullopt};
}

std::optional<FractionalAssignment> bruteforce_factor_exists(const Graph& g, const FamilyParams& params,
                                                             const SearchOptions& options) {
    const std::int64_t d = options.grid_denominator.value_or(params.m());
    if (d < 1) throw InputError("grid denominator must be positive");
    const std::uint64_t space = saturating_power(static_cast<std::uint64_t>(d) + 1, g.edge_count());
    if (space > options.max_space)
        throw CapacityError("value search space " + std::to_string(d + 1) + "^" + std::to_string(g.edge_count()) +
                            " exceeds cap " + std::to_string(options.max_space));
    GridSearch search(g, params, d);
    if (!search.run()) return std::nullopt;
    return FractionalAssignment(g, search.values());
}

MultiGraph multigraph_expand(const Graph& g, int m) {
    if (m < 1) throw InputError("expansion multiplicity must be at least 1");
    MultiGraph out(g.vertex_count());
    for (const Edge& e : g.edges()) out.add(e, m);
    return out;
}

std::optional<VertexSet> gf_violation(const MultiGraph& gstar, int g, int f, int max_vertices) {
    if (g < 0 || g >= f) throw InputError("gf_violation needs 0 <= g < f");
    const int nv = gstar.vertex_count();
    if (nv > std::min(max_vertices, 62))
        throw CapacityError("gf_violation: " + std::to_string(nv) + " vertices exceeds cap " + std::to_string(max_vertices));

    // criterion for one S, as a bitmask
    auto violates = [&](std::uint64_t s) {
        std::vector<std::int64_t> degree(static_cast<std::size_t>(nv), 0);
        for (const auto& [e, k] : gstar.multiplicities()) {
            const bool u_in = (s >> e.u) & 1U, v_in = (s >> e.v) & 1U;
            if (!u_in && !v_in) {
                degree[e.u] += k;
                degree[e.v] += k;
            }
        }
        std::int64_t lhs = 0;
        for (Vertex v = 0; v < nv; ++v) {
            if ((s >> v) & 1U) continue;
            if (degree[v] < g) lhs += g - degree[v];
        }
        return lhs > static_cast<std::int64_t>(f) * std::popcount(s);
    };

    // subsets of each size in lexicographic order of their sorted lists
    std::vector<Vertex> combo;
    for (int size = 0; size <= nv; ++size) {
        combo.resize(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) combo[i] = i;
        while (true) {
            if (violates(set_to_mask(combo))) return combo;
            int i = size - 1;
            while (i >= 0 && combo[i] == nv - size + i) --i;
            if (i < 0) break;
            ++combo[i];
            for (int j = i + 1; j < size; ++j) combo[j] = combo[j - 1] + 1;
        }
    }
    return std::nullopt;
}

FractionalAssignment factor_from_subgraph(const Graph& g, const MultiGraph& sub, int m) {
    if (m < 1) throw InputError("m must be at least 1");
    if (sub.vertex_count() != g.vertex_count()) throw InputError("subgraph and host differ in vertex count");
    FractionalAssignment h(g);
    for (const auto& [e, k] : sub.multiplicities()) {
        if (!g.adjacent(e.u, e.v)) throw InputError("pair " + edge_text(e) + " is not an edge of the host");
        if (k > m)
            throw InputError("pair " + edge_text(e) + " used " + std::to_string(k) + " times, more than m = " +
                             std::to_string(m));
        h.set(e, Rational(k, m));
    }
    return h;
}

FractionalAssignment alternate_shift(const FractionalAssignment& h, std::span<const Vertex> trail, Sign first_sign,
                                     std::int64_t m) {
    if (m < 1) throw InputError("step denominator must be positive");
    if (trail.size() < 2) throw InputError("trail needs at least one edge");
    const Graph& g = h.host();
    const Rational step(1, m);
    std::set<Edge> used;
    FractionalAssignment out = h;
    bool add = first_sign == Sign::plus;
    for (std::size_t i = 0; i + 1 < trail.size(); ++i) {
        if (!g.adjacent(trail[i], trail[i + 1]))
            throw InputError("trail step " + std::to_string(trail[i]) + "-" + std::to_string(trail[i + 1]) +
                             " is not an edge");
        Edge e(trail[i], trail[i + 1]);
        if (!used.insert(e).second) throw InputError("trail repeats edge " + edge_text(e));
        Rational shifted = add ? out.value(e) + step : out.value(e) - step;
        if (shifted < kZero || shifted > kOne)
            throw InputError("shift moves edge " + edge_text(e) + " to " + shifted.to_string() + ", outside [0, 1]");
        out.set(e, shifted);
        add = !add;
    }
    return out;
}

}  // namespace isofactor
