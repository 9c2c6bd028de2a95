#include "isofactor/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "isofactor/component_factor.hpp"
#include "isofactor/errors.hpp"
#include "isofactor/fractional_factor.hpp"
#include "isofactor/io.hpp"
#include "isofactor/iso_toughness.hpp"
#include "isofactor/tree_family.hpp"

namespace isofactor {

namespace {

struct Options {
    std::string input = "-";
    std::int64_t n = 0;
    std::int64_t m = 1;
    std::string mode = "reduced";
    std::optional<int> max_vertices;
    std::string format = "edgelist";
    std::string out_path;
    std::string emit = "record";
    int k = 0;
};

std::optional<int> env_int(const char* name) {
    const char* raw = std::getenv(name);
    if (!raw || !*raw) return std::nullopt;
    try {
        return std::stoi(raw);
    } catch (const std::exception&) {
        throw InputError(std::string("environment variable ") + name + " is not an integer");
    }
}

std::string read_input(const Options& opt, std::istream& in) {
    if (opt.input == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    std::ifstream file(opt.input);
    if (!file) throw InputError("cannot open input file '" + opt.input + "'");
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

Graph load_graph(const Options& opt, std::istream& in) {
    return parse_graph(read_input(opt, in), opt.format == "structured" ? InputFormat::structured : InputFormat::edgelist);
}

int vertex_cap(const Options& opt, int fallback) {
    if (opt.max_vertices) return *opt.max_vertices;
    return env_int("ISOFACTOR_MAX_VERTICES").value_or(fallback);
}

void require_vertices(const Graph& g, int cap) {
    if (g.vertex_count() > cap)
        throw CapacityError("graph has " + std::to_string(g.vertex_count()) + " vertices, cap is " + std::to_string(cap));
}

struct Result {
    int code;
    std::string text;
};

Result run_check(const Options& opt, std::istream& in) {
    const FamilyParams params(opt.n, opt.m);
    const Graph g = load_graph(opt, in);
    CheckOptions check;
    check.mode = opt.mode == "exhaustive" ? CheckMode::exhaustive : CheckMode::reduced;
    check.max_vertices =
        vertex_cap(opt, check.mode == CheckMode::exhaustive ? kDefaultExhaustiveVertexCap : kDefaultReducedVertexCap);
    const ConditionVerdict verdict = check_condition(g, params, check);
    return {verdict.holds ? kExitHolds : kExitFails, emit_verdict(verdict, params)};
}

Result run_toughness(const Options& opt, std::istream& in) {
    const Graph g = load_graph(opt, in);
    return {kExitHolds, emit_toughness(isolated_toughness(g, vertex_cap(opt, kDefaultExhaustiveVertexCap)))};
}

Result run_frac_factor(const Options& opt, std::istream& in) {
    const FamilyParams params(opt.n, opt.m);
    const Graph g = load_graph(opt, in);
    require_vertices(g, vertex_cap(opt, kDefaultReducedVertexCap));
    FractionalResult result = find_fractional_factor(g, params);
    if (!result.factor) return {kExitFails, emit_witness("frac-factor", *result.witness, params)};
    if (opt.emit == "dot") return {kExitHolds, emit_dot(g, result.factor)};
    return {kExitHolds, emit_document(to_document(*result.factor))};
}

Result run_factor(const Options& opt, std::istream& in) {
    const FamilyParams params(opt.n, opt.m);
    const Graph g = load_graph(opt, in);
    require_vertices(g, vertex_cap(opt, kDefaultReducedVertexCap));
    const FactorReport report = find_component_factor(g, params);
    if (!report.factor) return {kExitFails, emit_factor_report(report, params)};
    if (opt.emit == "dot") return {kExitHolds, emit_dot(*report.factor)};
    return {kExitHolds, emit_factor_report(report, params)};
}

Result run_tree_member(const Options& opt, std::istream& in) {
    const FamilyParams params(opt.n, opt.m);
    const Graph tree = load_graph(opt, in);
    const MembershipCertificate cert = is_member(tree, params);
    if (opt.emit == "dot") {
        std::optional<FractionalAssignment> h;
        if (cert.member) h = canonical_assignment(tree, params);
        std::optional<Bipartition> side;
        if (tree.vertex_count() >= 2) side = cert.orientation;
        return {cert.member ? kExitHolds : kExitFails, emit_dot(tree, h, side)};
    }
    return {cert.member ? kExitHolds : kExitFails, emit_certificate(tree, cert, params)};
}

Result run_tree_enum(const Options& opt) {
    const FamilyParams params(opt.n, opt.m);
    const int cap = env_int("ISOFACTOR_TREE_CAP").value_or(kDefaultTreeEnumerationCap);
    return {kExitHolds, emit_catalog(enumerate_members(params, *opt.max_vertices, cap), params)};
}

Result run_blow_up(const Options& opt, std::istream& in) {
    const Graph base = load_graph(opt, in);
    const Graph tree = construct_blown_tree(base, opt.k);
    if (opt.emit == "dot") return {kExitHolds, emit_dot(tree)};
    if (opt.emit == "edgelist") return {kExitHolds, emit_edgelist(tree)};
    return {kExitHolds, emit_document(to_document(tree))};
}

void add_input(CLI::App* sub, Options& opt) {
    sub->add_option("input", opt.input, "Graph file, or - for stdin")->capture_default_str();
    sub->add_option("--format", opt.format, "Input format")
        ->check(CLI::IsMember({"edgelist", "structured"}))
        ->capture_default_str();
}

void add_params(CLI::App* sub, Options& opt) {
    sub->add_option("--n", opt.n, "Threshold numerator n")->required();
    sub->add_option("--m", opt.m, "Threshold denominator m")->capture_default_str();
}

void add_output(CLI::App* sub, Options& opt, std::vector<std::string> emit_choices) {
    sub->add_option("--out", opt.out_path, "Write the result here instead of stdout");
    sub->add_option("--emit", opt.emit, "Output form")->check(CLI::IsMember(std::move(emit_choices)))->capture_default_str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Isolated-vertex conditions, fractional factors and component factors"};
    app.require_subcommand(1);

    auto* check = app.add_subcommand("check", "Decide iso(G-S) <= (n/m)|S| for all S");
    add_input(check, opt);
    add_params(check, opt);
    check->add_option("--mode", opt.mode, "Subset enumeration")
        ->check(CLI::IsMember({"reduced", "exhaustive"}))
        ->capture_default_str();
    check->add_option("--max-vertices", opt.max_vertices, "Vertex cap");
    add_output(check, opt, {"record"});

    auto* toughness = app.add_subcommand("toughness", "Isolated toughness I(G)");
    add_input(toughness, opt);
    toughness->add_option("--max-vertices", opt.max_vertices, "Vertex cap");
    add_output(toughness, opt, {"record"});

    auto* frac = app.add_subcommand("frac-factor", "Fractional [1,n/m]-factor with values k/m");
    add_input(frac, opt);
    add_params(frac, opt);
    frac->add_option("--max-vertices", opt.max_vertices, "Vertex cap");
    add_output(frac, opt, {"record", "dot"});

    auto* factor = app.add_subcommand("factor", "Component factor of odd circuits and family trees");
    add_input(factor, opt);
    add_params(factor, opt);
    factor->add_option("--max-vertices", opt.max_vertices, "Vertex cap");
    add_output(factor, opt, {"record", "dot"});

    auto* member = app.add_subcommand("tree-member", "Membership certificate for a tree");
    add_input(member, opt);
    add_params(member, opt);
    add_output(member, opt, {"record", "dot"});

    auto* tree_enum = app.add_subcommand("tree-enum", "Catalog of family trees up to a vertex bound");
    add_params(tree_enum, opt);
    tree_enum->add_option("--max-vertices", opt.max_vertices, "Largest tree order")->required();
    add_output(tree_enum, opt, {"record"});

    auto* blow_up = app.add_subcommand("blow-up", "Subdivide-and-pendant tree construction");
    add_input(blow_up, opt);
    blow_up->add_option("--k", opt.k, "Construction parameter k >= 1")->required();
    add_output(blow_up, opt, {"record", "edgelist", "dot"});

    std::vector<std::string> storage{"isofactor"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (std::string& s : storage) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitHolds : kExitUsage;
    }

    try {
        Result result{};
        if (*check) result = run_check(opt, in);
        else if (*toughness) result = run_toughness(opt, in);
        else if (*frac) result = run_frac_factor(opt, in);
        else if (*factor) result = run_factor(opt, in);
        else if (*member) result = run_tree_member(opt, in);
        else if (*tree_enum) result = run_tree_enum(opt);
        else result = run_blow_up(opt, in);

        if (opt.out_path.empty()) {
            out << result.text;
        } else {
            std::ofstream file(opt.out_path);
            if (!file) throw InputError("cannot write '" + opt.out_path + "'");
            file << result.text;
        }
        return result.code;
    } catch (const CapacityError& e) {
        err << "error capacity: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const InputError& e) {
        err << "error input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InternalError& e) {
        err << "error internal: " << e.what() << "\n";
        return kExitInternal;
    }
}

}  // namespace isofactor
