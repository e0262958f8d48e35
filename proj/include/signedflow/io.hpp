#pragma once

#include "signedflow/flow.hpp"
#include "signedflow/multigraph.hpp"
#include "signedflow/spectrum.hpp"

#include <optional>
#include <string>
#include <vector>

namespace signedflow {

inline constexpr const char* kToolVersion = "0.1.0";

// Signed graph text format:
//     # comments run to end of line; "# name: X" names the graph
//     v <vertex-count>
//     e <u> <v> <+|->          one line per edge, in edge id order
// Parsing is whitespace-insensitive; emission is canonical (single spaces,
// edge id order, trailing newline).
struct SignedGraphDocument {
    SignedGraph sg;
    std::optional<std::string> name;
};

struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

SignedGraphDocument parse_sg(const std::string& text);
std::string emit_sg(const SignedGraphDocument& doc);
inline std::string emit_sg(const SignedGraph& sg) { return emit_sg({sg, std::nullopt}); }

// Standard graph6 catalog lines (simple graphs; the format cannot express
// parallel edges). Edges are added column-major over the upper adjacency
// triangle, which fixes the edge ids.
std::vector<Multigraph> import_graph6(const std::string& text);

// Certificate documents are JSON with rationals as "p/q" strings. The
// graph itself is carried by fingerprint only; reading one back needs the
// graph and fails on a fingerprint mismatch. Verification of the restored
// claim is the caller's job (the verify subcommand reports it).
std::string write_certificate(const FlowCertificate& cert);
FlowCertificate read_certificate(const std::string& text, const Multigraph& g);

std::string write_spectrum_report(const SpectrumReport& report, const Multigraph& g);

} // namespace signedflow
