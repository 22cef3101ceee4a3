#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "modcert/absorb.hpp"
#include "modcert/graph.hpp"
#include "modcert/traces.hpp"

namespace modcert {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kCertificateSchema = "modcert-v1";

using NameFn = std::function<std::string(Vertex)>;

/// Names for a graph's vertices, as read from its input file.
NameFn graph_names(const Graph& g);

Json names_json(std::span<const Vertex> vertices, const NameFn& name);

/// Resolves names against the graph's id table. Throws InvalidInput on an
/// unknown or repeated name.
VertexSet resolve_names(const Graph& g, const std::vector<std::string>& names);

/// Splits "a,b,c" (whitespace around items is ignored).
std::vector<std::string> split_list(std::string_view text);

Json trace_table_json(const TraceTable& table, const NameFn& name);

/// {schema, kind, q, d, witness, core, top_bit_label, chosen_traces,
///  parity_cut_Y, residue_achieved, deleted_count}
Json certificate_json(const AbsorptionProblem& p, const Certificate& cert);

struct ParsedCertificate {
  AbsorptionProblem problem;
  Certificate certificate;
};

/// Inverse of certificate_json for a graph-backed problem. Throws ParseError
/// on schema violations and InvalidInput on names absent from the graph.
ParsedCertificate parse_certificate(const Graph& g, const Json& doc);

}  // namespace modcert
