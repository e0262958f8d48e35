// Command line surface: reads signed graphs in the .sg text format from
// stdin (except `make`, `construct --recipe h-t-flows`, and `batch`),
// writes certificate/report documents to stdout.
//
// Exit codes: 0 success, 1 negative mathematical answer (no flow, not
// admissible, failed verification), 2 usage or input error, 3 resource cap.

#include "signedflow/constructions.hpp"
#include "signedflow/errors.hpp"
#include "signedflow/io.hpp"
#include "signedflow/spectrum.hpp"
#include "signedflow/structure.hpp"
#include "signedflow/switching.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace signedflow;

namespace {

constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceCap = 3;

std::string read_all(std::istream& in) {
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

SignedGraphDocument graph_from_stdin() { return parse_sg(read_all(std::cin)); }

SearchLimits limits_from_env() {
    SearchLimits limits;
    if (const char* env = std::getenv("SIGNEDFLOW_BUDGET"))
        limits.node_budget = std::strtoull(env, nullptr, 10);
    return limits;
}

std::vector<int> parse_edge_list(const std::string& text) {
    std::vector<int> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(std::stoi(item));
    return out;
}

int cmd_admissible() {
    auto doc = graph_from_stdin();
    auto res = is_flow_admissible(doc.sg);
    if (res.admissible) {
        std::cout << "admissible\n";
        return 0;
    }
    const char* why = "";
    switch (res.reason) {
        case AdmissibilityReason::SingleNegativeEdgeClass:
            why = "equivalent to a single negative edge"; break;
        case AdmissibilityReason::BridgeWithBalancedSide:
            why = "bridge with a balanced side"; break;
        case AdmissibilityReason::NoEdges: why = "no edges"; break;
        default: break;
    }
    std::cout << "not flow-admissible (" << why << ")\n";
    return kExitNegative;
}

int cmd_flow_number(const SearchLimits& limits) {
    auto doc = graph_from_stdin();
    IntegerFlowNumber f = integer_flow_number(doc.sg, limits);
    if (!f.value) {
        std::cout << "infinity\n";
        return kExitNegative;
    }
    std::cout << *f.value << "\n";
    std::cout << write_certificate(*f.witness);
    return 0;
}

int cmd_circular(const SearchLimits& limits, int q_max, bool exact) {
    auto doc = graph_from_stdin();
    int q = q_max > 0 ? q_max : default_q_max(doc.sg);
    CircularFlowNumber c = circular_flow_number(doc.sg, q, limits, exact);
    if (!c.value) {
        std::cout << "infinity\n";
        return kExitNegative;
    }
    std::cout << c.value->str() << "\n";
    std::cout << "completeness: "
              << (c.completeness == Completeness::Exact ? "exact" : "upper-bound-at-qmax")
              << " (qmax " << q << ")\n";
    std::cout << write_certificate(*c.witness);
    return 0;
}

int cmd_spectrum(const SearchLimits& limits, int q_max, bool integer) {
    auto doc = graph_from_stdin();
    SpectrumReport report =
        integer ? integer_flow_spectrum(doc.sg.graph, limits)
                : flow_spectrum(doc.sg.graph, q_max > 0 ? q_max : default_q_max(doc.sg), limits);
    std::cout << write_spectrum_report(report, doc.sg.graph);
    return report.entries.empty() ? kExitNegative : 0;
}

int cmd_x_spectrum(const SearchLimits& limits, int q_max, bool integer, const std::string& edges) {
    auto doc = graph_from_stdin();
    std::vector<int> x = parse_edge_list(edges);
    SpectrumReport report =
        integer ? integer_x_flow_spectrum(doc.sg.graph, x, limits)
                : x_flow_spectrum(doc.sg.graph, x, q_max > 0 ? q_max : default_q_max(doc.sg),
                                  limits);
    std::cout << write_spectrum_report(report, doc.sg.graph);
    return report.entries.empty() ? kExitNegative : 0;
}

int cmd_minimal_sets(const SearchLimits& limits, int q_max, const std::string& r_text,
                     int max_size) {
    auto doc = graph_from_stdin();
    Fraction r = Fraction::parse(r_text);
    int q = q_max > 0 ? q_max : default_q_max(doc.sg);
    auto sets = r_minimal_sets(doc.sg.graph, r, max_size, q, limits);
    nlohmann::ordered_json j;
    j["format"] = "signedflow-minimal-sets";
    j["r"] = r.str();
    j["max_size"] = max_size;
    j["sets"] = sets;
    std::cout << j.dump(2) << "\n";
    return sets.empty() ? kExitNegative : 0;
}

int cmd_structure(const SearchLimits& limits, bool want_oddness, bool want_resistance,
                  bool want_alpha, bool want_kotzig, int t_factor) {
    auto doc = graph_from_stdin();
    const Multigraph& g = doc.sg.graph;
    nlohmann::ordered_json j;
    j["format"] = "signedflow-structure";
    j["vertices"] = g.vertex_count();
    j["edges"] = g.edge_count();
    j["bridges"] = bridges(g);
    j["bipartite"] = is_bipartite_after_removal(g, {});
    bool all = !want_oddness && !want_resistance && !want_alpha && !want_kotzig && t_factor < 0;
    if (want_alpha || all) j["independence_number"] = independence_number(g);
    if ((want_oddness || all) && g.is_regular(3)) j["oddness"] = oddness(g, limits.node_budget).oddness;
    if ((want_resistance || all) && g.is_regular(3))
        j["resistance"] = resistance(g, limits.node_budget);
    if ((want_kotzig || all) && g.is_regular(3)) {
        auto kz = kotzig_check(g, limits.node_budget);
        j["kotzig"] = kz.has_value();
        if (kz) j["kotzig_matchings"] = {(*kz)[0], (*kz)[1], (*kz)[2]};
    }
    if (t_factor >= 1) {
        auto f = has_t_factor(g, t_factor, limits.node_budget);
        j["t_factor_t"] = t_factor;
        j["t_factor_exists"] = f.has_value();
        if (f) j["t_factor_edges"] = f->edges;
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_make(const std::string& family, int param) {
    FamilySpec spec;
    if (family == "H_t") spec.family = Family::Ht;
    else if (family == "G_n") spec.family = Family::Gn;
    else if (family == "G_t") spec.family = Family::Gt;
    else if (family == "K2_3") spec.family = Family::K23;
    else if (family == "Petersen") spec.family = Family::Petersen;
    else if (family == "Kprime_nn") spec.family = Family::KprimeNN;
    else throw std::invalid_argument("unknown family '" + family + "'");
    spec.param = param;
    SignedGraph sg = make_family(spec);
    std::cout << emit_sg({sg, family + (param > 0 ? "(" + std::to_string(param) + ")" : "")});
    return 0;
}

nlohmann::ordered_json certificate_envelope(const SignedGraph& sg, const FlowCertificate& cert) {
    nlohmann::ordered_json j;
    j["graph"] = emit_sg(SignedGraph{sg.graph, cert.sigma});
    j["negative_edges"] = cert.sigma.negative_set();
    j["certificate"] = nlohmann::ordered_json::parse(write_certificate(cert));
    return j;
}

int cmd_construct(const SearchLimits& limits, const std::string& recipe, int param,
                  const std::string& edges, const std::string& h1, const std::string& h2) {
    nlohmann::ordered_json out;
    out["format"] = "signedflow-construction";
    out["recipe"] = recipe;
    if (recipe == "h-t-flows") {
        HtFlows hf = h_t_flows(param);
        out["graph"] = emit_sg(hf.graph);
        out["integer_five_flow"] =
            nlohmann::ordered_json::parse(write_certificate(hf.integer_five_flow));
        out["circular_flow"] = nlohmann::ordered_json::parse(write_certificate(hf.circular_flow));
    } else if (recipe == "bipartite-four-flow") {
        auto doc = graph_from_stdin();
        auto r = bipartite_four_flow(doc.sg.graph, 8, limits);
        out.update(certificate_envelope({doc.sg.graph, r.sigma}, r.integer_four_flow));
        out["circular_witness"] =
            nlohmann::ordered_json::parse(write_certificate(r.circular_witness));
    } else if (recipe == "oddness-four-flow") {
        auto doc = graph_from_stdin();
        auto r = oddness_four_flow(doc.sg.graph, limits);
        out["oddness"] = r.oddness;
        out.update(certificate_envelope({doc.sg.graph, r.sigma}, r.integer_four_flow));
    } else if (recipe == "three-flow-one-factor") {
        auto doc = graph_from_stdin();
        auto r = three_flow_via_one_factor(doc.sg.graph, limits);
        out.update(certificate_envelope({doc.sg.graph, r.sigma}, r.three_flow));
    } else if (recipe == "eulerian-union-four-flow") {
        auto doc = graph_from_stdin();
        auto cert = eulerian_union_four_flow(doc.sg.graph, doc.sg.sigma, parse_edge_list(h1),
                                             parse_edge_list(h2));
        out.update(certificate_envelope(doc.sg, cert));
    } else if (recipe == "kotzig-six-flow") {
        auto doc = graph_from_stdin();
        auto kz = kotzig_check(doc.sg.graph, limits.node_budget);
        if (!kz) {
            std::cout << "not a Kotzig graph\n";
            return kExitNegative;
        }
        auto cert = kotzig_six_flow(doc.sg.graph, doc.sg.sigma, (*kz)[0], (*kz)[1], (*kz)[2]);
        out.update(certificate_envelope(doc.sg, cert));
    } else if (recipe == "induced-double") {
        auto doc = graph_from_stdin();
        IntegerFlowNumber f = integer_flow_number(doc.sg, limits);
        if (!f.value) {
            std::cout << "not flow-admissible\n";
            return kExitNegative;
        }
        std::vector<int> x = parse_edge_list(edges);
        auto dr = double_graph(doc.sg.graph, doc.sg.sigma, x);
        auto cert = induced_flow_on_double(doc.sg.graph, doc.sg.sigma, x, *f.witness);
        out["graph"] = emit_sg(dr.doubled);
        out["certificate"] = nlohmann::ordered_json::parse(write_certificate(cert));
    } else {
        throw std::invalid_argument("unknown recipe '" + recipe + "'");
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_verify(const std::string& cert_file) {
    auto doc = graph_from_stdin();
    std::ifstream in(cert_file);
    if (!in) throw std::invalid_argument("cannot open '" + cert_file + "'");
    FlowCertificate cert = read_certificate(read_all(in), doc.sg.graph);
    VerifyResult res = verify_flow(cert);
    if (!res.ok) {
        std::cout << "INVALID: " << res.violation << "\n";
        return kExitNegative;
    }
    std::cout << "verified: nowhere-zero " << cert.kind.str() << "-flow on " << "|V|="
              << cert.graph.vertex_count() << " |E|=" << cert.graph.edge_count() << "\n";
    return 0;
}

int cmd_batch(const SearchLimits& limits, const std::string& graph6_file) {
    std::ifstream in(graph6_file);
    if (!in) throw std::invalid_argument("cannot open '" + graph6_file + "'");
    auto graphs = import_graph6(read_all(in));
    int index = 0;
    for (const Multigraph& g : graphs) {
        SignedGraph sg = with_empty_signature(g);
        std::cout << index++ << " n=" << g.vertex_count() << " m=" << g.edge_count();
        IntegerFlowNumber f = integer_flow_number(sg, limits);
        if (f.value)
            std::cout << " F=" << *f.value << "\n";
        else
            std::cout << " F=infinity\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact nowhere-zero flows on signed graphs"};
    app.require_subcommand(1);
    SearchLimits limits = limits_from_env();
    std::uint64_t budget_flag = 0;
    app.add_option("--budget", budget_flag,
                   "search node budget (default 400000000; overrides the "
                   "SIGNEDFLOW_BUDGET environment variable)");

    auto* adm = app.add_subcommand("admissible", "Bouchet flow-admissibility of stdin graph");
    auto* fn = app.add_subcommand("flow-number", "integer flow number of stdin graph");
    auto* cfn = app.add_subcommand("circular-flow-number", "circular flow number of stdin graph");
    int qmax = 0;
    bool exact = false;
    cfn->add_option("--qmax", qmax, "Farey order (default 2|E|)");
    cfn->add_flag("--exact", exact, "confirm with the orientation-enumeration oracle");
    auto* spec = app.add_subcommand("spectrum", "flow spectrum over all signature classes");
    bool integer_spec = false;
    int spec_qmax = 0;
    spec->add_flag("--integer", integer_spec, "integer flow spectrum");
    spec->add_option("--qmax", spec_qmax, "Farey order (default 2|E|)");
    auto* xspec = app.add_subcommand("x-spectrum", "spectrum over signatures with N inside X");
    std::string x_edges;
    bool x_integer = false;
    int x_qmax = 0;
    xspec->add_option("--edges", x_edges, "comma-separated edge ids")->required();
    xspec->add_flag("--integer", x_integer, "integer variant");
    xspec->add_option("--qmax", x_qmax, "Farey order (default 2|E|)");
    auto* mins = app.add_subcommand("minimal-sets", "r-minimal negative sets");
    std::string r_text;
    int max_size = 3;
    int mins_qmax = 0;
    mins->add_option("--r", r_text, "target circular flow number P/Q")->required();
    mins->add_option("--max-size", max_size, "largest set size to report");
    mins->add_option("--qmax", mins_qmax, "Farey order (default 2|E|)");
    auto* str = app.add_subcommand("structure", "structural analysis of stdin graph");
    bool w_odd = false, w_res = false, w_alpha = false, w_kotzig = false;
    int t_factor = -1;
    str->add_flag("--oddness", w_odd, "oddness of a cubic graph");
    str->add_flag("--resistance", w_res, "resistance of a cubic graph");
    str->add_flag("--alpha", w_alpha, "independence number");
    str->add_flag("--kotzig", w_kotzig, "Kotzig triple of matchings");
    str->add_option("--t-factor", t_factor, "test for a t-factor");
    auto* mk = app.add_subcommand("make", "emit a named family graph as .sg");
    std::string family;
    int param = 0;
    mk->add_option("--family", family, "H_t | G_n | G_t | K2_3 | Petersen | Kprime_nn")->required();
    mk->add_option("--param", param, "family parameter");
    auto* con = app.add_subcommand("construct", "run a constructive flow recipe");
    std::string recipe, con_edges, con_h1, con_h2;
    int con_param = 0;
    con->add_option("--recipe", recipe,
                    "h-t-flows | bipartite-four-flow | oddness-four-flow | "
                    "three-flow-one-factor | eulerian-union-four-flow | kotzig-six-flow | "
                    "induced-double")
        ->required();
    con->add_option("--param", con_param, "recipe parameter (t)");
    con->add_option("--edges", con_edges, "edge list for induced-double");
    con->add_option("--h1", con_h1, "edge list of the first eulerian subgraph");
    con->add_option("--h2", con_h2, "edge list of the second eulerian subgraph");
    auto* ver = app.add_subcommand("verify", "verify a certificate file against stdin graph");
    std::string cert_file;
    ver->add_option("certfile", cert_file, "certificate document")->required();
    auto* bat = app.add_subcommand("batch", "survey a graph6 catalog");
    std::string graph6_file;
    bat->add_option("--graph6", graph6_file, "catalog file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }
    if (budget_flag > 0) limits.node_budget = budget_flag;

    try {
        if (app.got_subcommand(adm)) return cmd_admissible();
        if (app.got_subcommand(fn)) return cmd_flow_number(limits);
        if (app.got_subcommand(cfn)) return cmd_circular(limits, qmax, exact);
        if (app.got_subcommand(spec)) return cmd_spectrum(limits, spec_qmax, integer_spec);
        if (app.got_subcommand(xspec)) return cmd_x_spectrum(limits, x_qmax, x_integer, x_edges);
        if (app.got_subcommand(mins)) return cmd_minimal_sets(limits, mins_qmax, r_text, max_size);
        if (app.got_subcommand(str))
            return cmd_structure(limits, w_odd, w_res, w_alpha, w_kotzig, t_factor);
        if (app.got_subcommand(mk)) return cmd_make(family, param);
        if (app.got_subcommand(con))
            return cmd_construct(limits, recipe, con_param, con_edges, con_h1, con_h2);
        if (app.got_subcommand(ver)) return cmd_verify(cert_file);
        if (app.got_subcommand(bat)) return cmd_batch(limits, graph6_file);
    } catch (const ResourceCapError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kExitResourceCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
