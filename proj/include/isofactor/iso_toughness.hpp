#pragma once

#include <optional>
#include <string>

#include "isofactor/graph.hpp"
#include "isofactor/rational.hpp"

namespace isofactor {

enum class CheckMode {
    // S ranges over N(I) for independent sets I. For any S, I = Iso(G-S) is
    // independent with N(I) a subset of S, so iso(G-N(I)) >= iso(G-S) and
    // |N(I)| <= |S|; the maximum deficiency and its tie-broken maximizer are
    // therefore always of this form.
    reduced,
    // every S subset of V(G), including the empty set
    exhaustive,
};

inline constexpr int kDefaultExhaustiveVertexCap = 24;
inline constexpr int kDefaultReducedVertexCap = 48;

struct CheckOptions {
    CheckMode mode = CheckMode::reduced;
    std::optional<int> max_vertices;  // defaults depend on mode
};

struct ConditionVerdict {
    bool holds = true;
    /// Present iff the condition fails: a maximizer of m*iso(G-S) - n*|S|,
    /// smallest |S| first, then lexicographically smallest.
    std::optional<VertexSet> witness;
    /// max over tested S of iso(G-S) - (n/m)|S|; never negative since S = {} is tested.
    Rational worst_deficiency;
};

/// Decides iso(G-S) <= (n/m)|S| for all S. Throws CapacityError when G has
/// more vertices than the mode's cap.
ConditionVerdict check_condition(const Graph& g, const FamilyParams& params, const CheckOptions& options = {});

/// Shorthand for check_condition(...).holds in reduced mode.
bool satisfies_condition(const Graph& g, const FamilyParams& params);

/// I(G); infinite for complete graphs.
struct Toughness {
    bool infinite = true;
    Rational value;

    std::string to_string() const { return infinite ? "inf" : value.to_string(); }
    friend bool operator==(const Toughness&, const Toughness&) = default;
};

Toughness isolated_toughness(const Graph& g, int max_vertices = kDefaultExhaustiveVertexCap);

/// Lexicographic order of the sorted vertex lists of two equal-size masks.
bool lex_less_equal_size(std::uint64_t a, std::uint64_t b) noexcept;

}  // namespace isofactor
