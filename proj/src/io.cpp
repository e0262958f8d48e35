#include "signedflow/io.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>

namespace signedflow {

namespace {

std::string strip_comment(const std::string& line, std::optional<std::string>& name) {
    auto hash = line.find('#');
    if (hash == std::string::npos) return line;
    std::string comment = line.substr(hash + 1);
    // "# name: X" carries the optional graph name
    auto pos = comment.find_first_not_of(" \t");
    if (pos != std::string::npos && comment.compare(pos, 5, "name:") == 0 && !name) {
        std::string n = comment.substr(pos + 5);
        auto b = n.find_first_not_of(" \t");
        auto e = n.find_last_not_of(" \t\r");
        if (b != std::string::npos) name = n.substr(b, e - b + 1);
    }
    return line.substr(0, hash);
}

} // namespace

SignedGraphDocument parse_sg(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    std::optional<std::string> name;
    std::optional<int> vertex_count;
    std::vector<Edge> edges;
    std::vector<int> negatives;

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(strip_comment(line, name));
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "v") {
            if (vertex_count) throw ParseError(line_no, "duplicate 'v' line");
            int n;
            if (!(ls >> n) || n < 0) throw ParseError(line_no, "expected 'v <count>'");
            vertex_count = n;
        } else if (tag == "e") {
            if (!vertex_count) throw ParseError(line_no, "'e' line before 'v' line");
            int u, v;
            std::string sign;
            if (!(ls >> u >> v >> sign) || (sign != "+" && sign != "-"))
                throw ParseError(line_no, "expected 'e <u> <v> <+|->'");
            if (u < 0 || u >= *vertex_count || v < 0 || v >= *vertex_count)
                throw ParseError(line_no, "vertex index out of range");
            if (u == v) throw ParseError(line_no, "loops are not allowed");
            if (sign == "-") negatives.push_back(static_cast<int>(edges.size()));
            edges.push_back({u, v});
        } else {
            throw ParseError(line_no, "unknown directive '" + tag + "'");
        }
        std::string extra;
        if (ls >> extra) throw ParseError(line_no, "trailing tokens");
    }
    if (!vertex_count) throw ParseError(line_no, "missing 'v' line");
    Multigraph g(*vertex_count, std::move(edges));
    Signature s(g.edge_count(), negatives);
    return {{std::move(g), std::move(s)}, std::move(name)};
}

std::string emit_sg(const SignedGraphDocument& doc) {
    std::ostringstream out;
    if (doc.name) out << "# name: " << *doc.name << "\n";
    out << "v " << doc.sg.graph.vertex_count() << "\n";
    for (int e = 0; e < doc.sg.graph.edge_count(); ++e)
        out << "e " << doc.sg.graph.edge(e).u << " " << doc.sg.graph.edge(e).v << " "
            << (doc.sg.sigma.is_negative(e) ? "-" : "+") << "\n";
    return out.str();
}

namespace {

Multigraph decode_graph6(const std::string& line, int line_no) {
    std::size_t pos = 0;
    if (line.rfind(">>graph6<<", 0) == 0) pos = 10;
    auto next = [&]() {
        if (pos >= line.size()) throw ParseError(line_no, "truncated graph6 line");
        int c = static_cast<unsigned char>(line[pos++]);
        if (c < 63 || c > 126) throw ParseError(line_no, "invalid graph6 character");
        return c - 63;
    };
    long long n;
    int first = next();
    if (first < 63) {
        n = first;
    } else {
        long long a = next(), b = next(), c = next();
        n = (a << 12) | (b << 6) | c;
        if (n >= (1 << 18)) throw ParseError(line_no, "graph6 vertex count too large");
    }
    std::vector<Edge> edges;
    int bits_left = 0, current = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (bits_left == 0) {
                current = next();
                bits_left = 6;
            }
            --bits_left;
            if (current >> bits_left & 1) edges.push_back({i, j});
        }
    }
    return Multigraph(static_cast<int>(n), std::move(edges));
}

} // namespace

std::vector<Multigraph> import_graph6(const std::string& text) {
    std::vector<Multigraph> out;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty()) continue;
        out.push_back(decode_graph6(line, line_no));
    }
    return out;
}

namespace {

std::string fingerprint_hex(std::uint64_t fp) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fp));
    return buf;
}

std::string kind_string(const FlowKind& kind) {
    switch (kind.type) {
        case FlowKindType::Integer: return "integer";
        case FlowKindType::Circular: return "circular";
        case FlowKindType::Modular: return "modular";
    }
    return "?";
}

FlowKind parse_kind(const std::string& type, const std::string& r) {
    Fraction value = Fraction::parse(r);
    if (type == "integer") return FlowKind::integer(value.num());
    if (type == "circular") return FlowKind::circular(value);
    if (type == "modular") return FlowKind::modular(value);
    throw std::invalid_argument("unknown flow kind '" + type + "'");
}

} // namespace

std::string write_certificate(const FlowCertificate& cert) {
    nlohmann::ordered_json j;
    j["format"] = "signedflow-certificate";
    j["version"] = 1;
    j["tool_version"] = kToolVersion;
    j["kind"] = kind_string(cert.kind);
    j["r"] = cert.kind.r.str_slash();
    j["nowhere_zero"] = cert.nowhere_zero;
    j["graph_fingerprint"] = fingerprint_hex(cert.fingerprint());
    j["vertex_count"] = cert.graph.vertex_count();
    j["edge_count"] = cert.graph.edge_count();
    j["negative_edges"] = cert.sigma.negative_set();
    std::vector<std::string> orient;
    std::vector<std::string> values;
    for (int e = 0; e < cert.graph.edge_count(); ++e) {
        const Orientation& o = cert.flow.orientation;
        orient.push_back(std::string(1, o.tau(e, End::AtU) > 0 ? '+' : '-') +
                         std::string(1, o.tau(e, End::AtV) > 0 ? '+' : '-'));
        values.push_back(cert.flow.values[e].str_slash());
    }
    j["orientation"] = orient;
    j["values"] = values;
    return j.dump(2) + "\n";
}

FlowCertificate read_certificate(const std::string& text, const Multigraph& g) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (j.value("format", "") != "signedflow-certificate")
        throw std::invalid_argument("not a signedflow certificate document");
    if (j.at("graph_fingerprint").get<std::string>() != fingerprint_hex(graph_fingerprint(g)))
        throw std::invalid_argument("certificate fingerprint does not match the graph");
    if (j.at("edge_count").get<int>() != g.edge_count() ||
        j.at("vertex_count").get<int>() != g.vertex_count())
        throw std::invalid_argument("certificate graph size does not match");

    Signature s(g.edge_count(), j.at("negative_edges").get<std::vector<int>>());
    Flow f;
    f.orientation = Orientation(g.edge_count());
    auto orient = j.at("orientation").get<std::vector<std::string>>();
    auto values = j.at("values").get<std::vector<std::string>>();
    if (static_cast<int>(orient.size()) != g.edge_count() ||
        static_cast<int>(values.size()) != g.edge_count())
        throw std::invalid_argument("certificate edge data has the wrong length");
    for (int e = 0; e < g.edge_count(); ++e) {
        if (orient[e].size() != 2) throw std::invalid_argument("bad orientation entry");
        f.orientation.set_tau(e, End::AtU, orient[e][0] == '+' ? +1 : -1);
        f.orientation.set_tau(e, End::AtV, orient[e][1] == '+' ? +1 : -1);
        f.values.push_back(Fraction::parse(values[e]));
    }
    FlowKind kind = parse_kind(j.at("kind").get<std::string>(), j.at("r").get<std::string>());
    return {g, std::move(s), std::move(f), kind, j.at("nowhere_zero").get<bool>()};
}

std::string write_spectrum_report(const SpectrumReport& report, const Multigraph& g) {
    nlohmann::ordered_json j;
    j["format"] = "signedflow-spectrum";
    j["version"] = 1;
    j["tool_version"] = kToolVersion;
    j["spectrum"] = report.integer_spectrum ? "integer" : "circular";
    j["graph_fingerprint"] = fingerprint_hex(graph_fingerprint(g));
    j["classes"] = report.class_count;
    j["non_admissible_classes"] = report.non_admissible_classes;
    nlohmann::ordered_json values = nlohmann::ordered_json::array();
    for (const SpectrumEntry& entry : report.entries) {
        nlohmann::ordered_json v;
        v["value"] = entry.value.str();
        v["witness_negative_edges"] = entry.witness.negative_set();
        v["completeness"] =
            entry.completeness == Completeness::Exact ? "exact" : "upper-bound-at-qmax";
        v["certificate"] = nlohmann::ordered_json::parse(write_certificate(entry.certificate));
        values.push_back(std::move(v));
    }
    j["values"] = std::move(values);
    return j.dump(2) + "\n";
}

} // namespace signedflow
