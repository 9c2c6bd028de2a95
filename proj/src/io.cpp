#include "isofactor/io.hpp"

#include <sstream>
#include <variant>

#include "isofactor/errors.hpp"

namespace isofactor {

namespace {

struct Line {
    std::size_t number;
    std::string text;
};

std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++number;
        std::string line(text.substr(start, end - start));
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first != std::string::npos && line[first] != '#' && line[first] != 'c') out.push_back({number, line});
        if (end == text.size()) break;
        start = end + 1;
    }
    return out;
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string t; in >> t;) out.push_back(t);
    return out;
}

long long to_int(const std::string& token, std::size_t line, const char* what) {
    std::size_t used = 0;
    long long value = 0;
    try {
        value = std::stoll(token, &used);
    } catch (const std::exception&) {
        throw ParseError(line, std::string("expected integer ") + what + ", got '" + token + "'");
    }
    if (used != token.size()) throw ParseError(line, std::string("expected integer ") + what + ", got '" + token + "'");
    return value;
}

Edge checked_edge(long long u, long long v, long long vertex_count, std::size_t line) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
        throw ParseError(line, "vertex index out of range in edge " + std::to_string(u) + " " + std::to_string(v));
    if (u == v) throw ParseError(line, "loop at vertex " + std::to_string(u));
    return Edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
}

Graph parse_edgelist(std::string_view text) {
    const std::vector<Line> lines = content_lines(text);
    if (lines.empty()) throw ParseError(1, "missing 'p <vertices> <edges>' header");
    const auto header = tokens(lines[0].text);
    if (header.size() != 3 || header[0] != "p")
        throw ParseError(lines[0].number, "expected 'p <vertices> <edges>'");
    const long long nv = to_int(header[1], lines[0].number, "vertex count");
    const long long ne = to_int(header[2], lines[0].number, "edge count");
    if (nv < 0 || ne < 0) throw ParseError(lines[0].number, "negative count in header");
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto t = tokens(lines[i].text);
        if (t.size() != 2) throw ParseError(lines[i].number, "expected 'u v'");
        edges.push_back(checked_edge(to_int(t[0], lines[i].number, "endpoint"), to_int(t[1], lines[i].number, "endpoint"),
                                     nv, lines[i].number));
    }
    if (static_cast<long long>(edges.size()) != ne) {
        const std::size_t where = lines.back().number;
        throw ParseError(where, "header declares " + std::to_string(ne) + " edges, found " + std::to_string(edges.size()));
    }
    return Graph::from_edges(static_cast<int>(nv), edges);
}

std::string edge_list_text(const Graph& g) {
    std::string out;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        if (i) out += ",";
        out += std::to_string(g.edge(i).u) + "-" + std::to_string(g.edge(i).v);
    }
    return out;
}

std::string header(const std::string& command, const std::optional<FamilyParams>& params) {
    std::string out = "isofactor-report 1\ncommand " + command + "\n";
    if (params) out += "n " + std::to_string(params->n()) + "\nm " + std::to_string(params->m()) + "\n";
    return out;
}

}  // namespace

GraphDocument parse_document(std::string_view text) {
    const std::vector<Line> lines = content_lines(text);
    if (lines.empty() || tokens(lines[0].text) != std::vector<std::string>{"isofactor-graph", "1"})
        throw ParseError(lines.empty() ? 1 : lines[0].number, "expected header 'isofactor-graph 1'");
    GraphDocument doc;
    std::optional<long long> declared_vertices, declared_edges;
    std::size_t valued = 0;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::size_t ln = lines[i].number;
        const auto t = tokens(lines[i].text);
        if (t[0] == "vertices" && t.size() == 2 && !declared_vertices) {
            declared_vertices = to_int(t[1], ln, "vertex count");
            if (*declared_vertices < 0) throw ParseError(ln, "negative vertex count");
            doc.vertex_count = static_cast<int>(*declared_vertices);
        } else if (t[0] == "edges" && t.size() == 2 && !declared_edges) {
            declared_edges = to_int(t[1], ln, "edge count");
        } else if (t[0] == "edge" && (t.size() == 3 || t.size() == 4)) {
            if (!declared_vertices) throw ParseError(ln, "'edge' before 'vertices'");
            doc.edges.push_back(checked_edge(to_int(t[1], ln, "endpoint"), to_int(t[2], ln, "endpoint"),
                                             *declared_vertices, ln));
            if (t.size() == 4) {
                if (!doc.values) doc.values.emplace();
                try {
                    doc.values->push_back(Rational::parse(t[3]));
                } catch (const InputError& e) {
                    throw ParseError(ln, e.what());
                }
                ++valued;
            }
        } else if (t[0] == "label" && t.size() >= 2) {
            if (!declared_vertices) throw ParseError(ln, "'label' before 'vertices'");
            const long long v = to_int(t[1], ln, "vertex");
            if (v < 0 || v >= *declared_vertices) throw ParseError(ln, "label for a vertex out of range");
            if (doc.labels.empty()) doc.labels.resize(static_cast<std::size_t>(doc.vertex_count));
            if (doc.labels[v]) throw ParseError(ln, "duplicate label for vertex " + std::to_string(v));
            const std::string& raw = lines[i].text;
            std::size_t pos = raw.find("label") + 5;
            pos = raw.find_first_not_of(" \t", pos);
            pos = raw.find_first_of(" \t", pos);
            doc.labels[v] = pos == std::string::npos ? std::string() : raw.substr(pos + 1);
        } else {
            throw ParseError(ln, "unrecognised line '" + lines[i].text + "'");
        }
    }
    if (!declared_vertices) throw ParseError(lines.back().number, "missing 'vertices' line");
    if (declared_edges && *declared_edges != static_cast<long long>(doc.edges.size()))
        throw ParseError(lines.back().number, "declared " + std::to_string(*declared_edges) + " edges, found " +
                                                  std::to_string(doc.edges.size()));
    if (doc.values && valued != doc.edges.size())
        throw ParseError(lines.back().number, "either every edge carries a value or none does");
    return doc;
}

Graph parse_graph(std::string_view text, InputFormat format) {
    if (format == InputFormat::edgelist) return parse_edgelist(text);
    return graph_from_document(parse_document(text));
}

std::string emit_document(const GraphDocument& doc) {
    std::ostringstream out;
    out << "isofactor-graph 1\n";
    out << "vertices " << doc.vertex_count << "\n";
    out << "edges " << doc.edges.size() << "\n";
    for (std::size_t i = 0; i < doc.edges.size(); ++i) {
        out << "edge " << doc.edges[i].u << " " << doc.edges[i].v;
        if (doc.values) out << " " << (*doc.values)[i].to_string();
        out << "\n";
    }
    for (std::size_t v = 0; v < doc.labels.size(); ++v)
        if (doc.labels[v]) out << "label " << v << " " << *doc.labels[v] << "\n";
    return out.str();
}

std::string emit_edgelist(const Graph& g) {
    std::ostringstream out;
    out << "p " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
    return out.str();
}

GraphDocument to_document(const Graph& g) {
    GraphDocument doc;
    doc.vertex_count = g.vertex_count();
    doc.edges = g.edges();
    return doc;
}

GraphDocument to_document(const FractionalAssignment& h) {
    GraphDocument doc = to_document(h.host());
    doc.values = h.values();
    return doc;
}

Graph graph_from_document(const GraphDocument& doc) { return Graph::from_edges(doc.vertex_count, doc.edges); }

FractionalAssignment assignment_from_document(const GraphDocument& doc) {
    FractionalAssignment h(graph_from_document(doc));
    if (!doc.values) return h;
    if (doc.values->size() != doc.edges.size()) throw InputError("value count differs from edge count");
    for (std::size_t i = 0; i < doc.edges.size(); ++i) h.set(doc.edges[i], (*doc.values)[i]);
    return h;
}

std::string emit_dot(const Graph& g, const std::optional<FractionalAssignment>& h,
                     const std::optional<Bipartition>& partition) {
    if (h && h->host() != g) throw InputError("dot assignment is hosted on a different graph");
    std::ostringstream out;
    out << "graph G {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v;
        if (partition) out << " [shape=" << (partition->in_A(v) ? "circle" : "box") << "]";
        out << ";\n";
    }
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        out << "  " << g.edge(i).u << " -- " << g.edge(i).v;
        if (h) out << " [label=\"" << h->value(i).to_string() << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string format_set(const VertexSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

std::string emit_verdict(const ConditionVerdict& verdict, const FamilyParams& params) {
    std::string out = header("check", params);
    out += std::string("holds ") + (verdict.holds ? "true" : "false") + "\n";
    if (verdict.witness) out += "witness " + format_set(*verdict.witness) + "\n";
    out += "deficiency " + verdict.worst_deficiency.to_string() + "\n";
    return out;
}

std::string emit_toughness(const Toughness& t) { return header("toughness", std::nullopt) + "toughness " + t.to_string() + "\n"; }

std::string emit_witness(const std::string& command, const VertexSet& witness, const FamilyParams& params) {
    return header(command, params) + "status witness\nwitness " + format_set(witness) + "\n";
}

std::string emit_factor_report(const FactorReport& report, const FamilyParams& params) {
    if (!report.factor) return emit_witness("factor", report.witness.value_or(VertexSet{}), params);
    std::string out = header("factor", params) + "status factor\n";
    out += "vertices " + std::to_string(report.factor->vertex_count()) + "\n";
    out += "components " + std::to_string(report.components.size()) + "\n";
    for (const ClassifiedComponent& c : report.components) out += "component " + describe(c.kind) + " " + format_set(c.vertices) + "\n";
    out += "edges " + std::to_string(report.factor->edge_count()) + "\n";
    for (const Edge& e : report.factor->edges()) out += "edge " + std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

std::string emit_certificate(const Graph& tree, const MembershipCertificate& cert, const FamilyParams& params) {
    std::string out = header("tree-member", params);
    out += std::string("member ") + (cert.member ? "true" : "false") + "\n";
    out += "A " + format_set(cert.orientation.A) + "\n";
    out += "B " + format_set(cert.orientation.B) + "\n";
    switch (cert.failure) {
        case MembershipCertificate::Failure::none: break;
        case MembershipCertificate::Failure::single_vertex: out += "failure single-vertex\n"; break;
        case MembershipCertificate::Failure::global_bound: out += "failure global\n"; break;
        case MembershipCertificate::Failure::edge_bound:
            out += "failure edge " + std::to_string(cert.failing_edge->u) + " " + std::to_string(cert.failing_edge->v) + "\n";
            break;
    }
    for (std::size_t i = 0; i < cert.margins.size(); ++i)
        out += "margin " + std::to_string(tree.edge(i).u) + " " + std::to_string(tree.edge(i).v) + " " +
               cert.margins[i].to_string() + "\n";
    return out;
}

std::string emit_catalog(const std::vector<Graph>& members, const FamilyParams& params) {
    std::string out = "isofactor-catalog 1\nn " + std::to_string(params.n()) + "\nm " + std::to_string(params.m()) +
                      "\ncount " + std::to_string(members.size()) + "\n";
    for (const Graph& tree : members) {
        const MembershipCertificate cert = is_member(tree, params);
        out += "tree vertices=" + std::to_string(tree.vertex_count()) + " edges=" + edge_list_text(tree) +
               " A=" + std::to_string(cert.orientation.A.size()) + " B=" + std::to_string(cert.orientation.B.size()) +
               " margins=";
        for (std::size_t i = 0; i < cert.margins.size(); ++i) out += (i ? "," : "") + cert.margins[i].to_string();
        out += "\n";
    }
    return out;
}

}  // namespace isofactor
