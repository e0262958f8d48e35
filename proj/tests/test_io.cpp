#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "signedflow/constructions.hpp"
#include "signedflow/io.hpp"
#include "signedflow/search.hpp"

#include <json.hpp>

#include <random>

using namespace signedflow;
using namespace signedflow::testing;

TEST_CASE("parse_sg reads K_2^3 with one negative edge") {
    auto doc = parse_sg("v 2\ne 0 1 +\ne 0 1 +\ne 0 1 -\n");
    CHECK(doc.sg.graph.vertex_count() == 2);
    CHECK(doc.sg.graph.edge_count() == 3);
    CHECK(doc.sg.sigma.negative_set() == std::vector<int>{2});
}

TEST_CASE("sg round trip is canonical") {
    std::mt19937 rng(43);
    for (const Multigraph& g : {k4(), petersen(), k23()}) {
        Signature s(g.edge_count());
        for (int e = 0; e < g.edge_count(); ++e)
            if (rng() & 1) s.flip(e);
        SignedGraphDocument doc{{g, s}, std::string("sample")};
        std::string text = emit_sg(doc);
        auto back = parse_sg(text);
        CHECK(back.sg.graph.vertex_count() == g.vertex_count());
        CHECK(back.sg.sigma == s);
        CHECK(back.name == doc.name);
        CHECK(emit_sg(back) == text);  // canonical fixed point
    }
    // whitespace and comments are tolerated
    auto messy = parse_sg("# header\n\n  v   2\n\te 0 1 +   # inline\ne 0 1 -\n");
    CHECK(messy.sg.graph.edge_count() == 2);
    CHECK(emit_sg(messy) == "v 2\ne 0 1 +\ne 0 1 -\n");
}

TEST_CASE("parse_sg reports errors with line numbers") {
    CHECK_THROWS_WITH_AS(parse_sg("v 2\ne 0 0 +\n"), doctest::Contains("line 2"), ParseError);
    CHECK_THROWS_WITH_AS(parse_sg("v 2\ne 0 5 +\n"), doctest::Contains("line 2"), ParseError);
    CHECK_THROWS_WITH_AS(parse_sg("e 0 1 +\n"), doctest::Contains("line 1"), ParseError);
    CHECK_THROWS_AS(parse_sg("v 2\ne 0 1 *\n"), ParseError);
    CHECK_THROWS_AS(parse_sg("v 2\nq 1\n"), ParseError);
    CHECK_THROWS_AS(parse_sg(""), ParseError);
}

TEST_CASE("graph6 round trip on the simple cubic corpus") {
    for (int n : {4, 6, 8}) {
        for (const Multigraph& g : connected_cubic_multigraphs(n)) {
            bool simple = true;
            auto key = canonical_key(g);
            for (int e = 0; e < g.edge_count() && simple; ++e)
                for (int f = e + 1; f < g.edge_count() && simple; ++f)
                    if ((g.edge(e).u == g.edge(f).u && g.edge(e).v == g.edge(f).v) ||
                        (g.edge(e).u == g.edge(f).v && g.edge(e).v == g.edge(f).u))
                        simple = false;
            if (!simple) continue;
            auto decoded = import_graph6(encode_graph6(g));
            REQUIRE(decoded.size() == 1);
            CHECK(canonical_key(decoded[0]) == key);
        }
    }
}

TEST_CASE("the catalog of connected cubic graphs on 8 vertices has 5 entries") {
    // encode the generator's simple graphs as a catalog, then import it
    std::string catalog;
    for (const Multigraph& g : connected_cubic_multigraphs(8)) {
        bool simple = true;
        for (int e = 0; e < g.edge_count() && simple; ++e)
            for (int f = e + 1; f < g.edge_count() && simple; ++f)
                if ((g.edge(e).u == g.edge(f).u && g.edge(e).v == g.edge(f).v) ||
                    (g.edge(e).u == g.edge(f).v && g.edge(e).v == g.edge(f).u))
                    simple = false;
        if (simple) catalog += encode_graph6(g) + "\n";
    }
    auto graphs = import_graph6(catalog);
    CHECK(graphs.size() == 5);
    for (const Multigraph& g : graphs) {
        CHECK(g.vertex_count() == 8);
        CHECK(g.is_regular(3));
    }
}

TEST_CASE("graph6 imports the Petersen graph") {
    auto graphs = import_graph6(encode_graph6(petersen()) + "\n");
    REQUIRE(graphs.size() == 1);
    CHECK(graphs[0].vertex_count() == 10);
    CHECK(graphs[0].edge_count() == 15);
    CHECK(isomorphic(graphs[0], petersen()));
}

TEST_CASE("graph6 corner cases") {
    CHECK(import_graph6("").empty());
    CHECK(import_graph6("\n\n").empty());
    auto with_header = import_graph6(">>graph6<<" + encode_graph6(k4()) + "\n");
    CHECK(with_header.size() == 1);
    CHECK(isomorphic(with_header[0], k4()));
    CHECK_THROWS_AS(import_graph6("I\x05zzz"), ParseError);  // invalid character
    CHECK_THROWS_AS(import_graph6("I"), ParseError);         // truncated
}

TEST_CASE("certificate documents round trip and re-verify") {
    HtFlows hf = h_t_flows(2);
    for (const FlowCertificate* cert : {&hf.integer_five_flow, &hf.circular_flow}) {
        std::string text = write_certificate(*cert);
        FlowCertificate back = read_certificate(text, cert->graph);
        CHECK(verify_flow(back).ok);
        CHECK(back.kind.r == cert->kind.r);
        CHECK(back.sigma == cert->sigma);
        CHECK(back.flow.values == cert->flow.values);
        CHECK(write_certificate(back) == text);
    }
}

TEST_CASE("certificate loading rejects fingerprint mismatches") {
    HtFlows hf = h_t_flows(1);
    std::string text = write_certificate(hf.integer_five_flow);
    CHECK_THROWS_AS(read_certificate(text, k4()), std::invalid_argument);
}

TEST_CASE("a tampered certificate fails verification with the violation named") {
    auto cert = exists_integer_nzflow(with_empty_signature(k4()), 4);
    REQUIRE(cert.has_value());
    nlohmann::json j = nlohmann::json::parse(write_certificate(*cert));
    j["values"][2] = j["values"][2] == "3/1" ? "1/1" : "3/1";
    FlowCertificate back = read_certificate(j.dump(), k4());
    auto res = verify_flow(back);
    // either a range or a boundary violation, depending on the original value
    CHECK(!res.ok);
    CHECK(!res.violation.empty());
}

TEST_CASE("spectrum reports serialize to well-formed JSON") {
    auto report = integer_flow_spectrum(k23());
    std::string text = write_spectrum_report(report, k23());
    auto j = nlohmann::json::parse(text);
    CHECK(j["spectrum"] == "integer");
    CHECK(j["classes"] == 4);
    CHECK(j["values"].size() == 1);
    CHECK(j["values"][0]["value"] == "3");
}
