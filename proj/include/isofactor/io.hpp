#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isofactor/component_factor.hpp"
#include "isofactor/fractional_factor.hpp"
#include "isofactor/graph.hpp"
#include "isofactor/iso_toughness.hpp"
#include "isofactor/rational.hpp"
#include "isofactor/tree_family.hpp"

namespace isofactor {

// Text formats; docs/formats.md is the schema reference.
//
// edgelist:   "p <vertices> <edges>" then one "u v" line per edge, 0-indexed.
//             Blank lines and lines starting with 'c' or '#' are skipped.
// structured: "isofactor-graph 1", "vertices <n>", "edges <k>", then k
//             "edge <u> <v> [<p/q>]" lines and optional "label <v> <text>" lines.

enum class InputFormat { edgelist, structured };

struct GraphDocument {
    int vertex_count = 0;
    std::vector<Edge> edges;
    std::vector<std::optional<std::string>> labels;  // empty, or one slot per vertex
    std::optional<std::vector<Rational>> values;     // one per edge when present

    friend bool operator==(const GraphDocument&, const GraphDocument&) = default;
};

/// Throws ParseError (with line number) on malformed input.
Graph parse_graph(std::string_view text, InputFormat format);
GraphDocument parse_document(std::string_view text);

std::string emit_document(const GraphDocument& doc);
std::string emit_edgelist(const Graph& g);

GraphDocument to_document(const Graph& g);
GraphDocument to_document(const FractionalAssignment& h);
/// Values, when present, must match the document's edge order.
FractionalAssignment assignment_from_document(const GraphDocument& doc);
Graph graph_from_document(const GraphDocument& doc);

/// Undirected dot text. Edge labels carry exact values; with a partition,
/// A vertices are drawn as circles and B vertices as boxes.
std::string emit_dot(const Graph& g, const std::optional<FractionalAssignment>& h = std::nullopt,
                     const std::optional<Bipartition>& partition = std::nullopt);

/// "{0,2,4}"; "{}" when empty.
std::string format_set(const VertexSet& s);

// Line-oriented result records, each starting with "isofactor-report 1".
std::string emit_verdict(const ConditionVerdict& verdict, const FamilyParams& params);
std::string emit_toughness(const Toughness& t);
std::string emit_factor_report(const FactorReport& report, const FamilyParams& params);
std::string emit_witness(const std::string& command, const VertexSet& witness, const FamilyParams& params);
std::string emit_certificate(const Graph& tree, const MembershipCertificate& cert, const FamilyParams& params);
/// "isofactor-catalog 1" followed by one "tree ..." line per member.
std::string emit_catalog(const std::vector<Graph>& members, const FamilyParams& params);

}  // namespace isofactor
