#include "modcert/json_io.hpp"

#include "modcert/error.hpp"

namespace modcert {

NameFn graph_names(const Graph& g) {
  return [&g](Vertex v) { return g.name(v); };
}

Json names_json(std::span<const Vertex> vertices, const NameFn& name) {
  Json arr = Json::array();
  for (Vertex v : vertices) arr.push_back(name(v));
  return arr;
}

VertexSet resolve_names(const Graph& g, const std::vector<std::string>& names) {
  std::vector<Vertex> ids;
  ids.reserve(names.size());
  for (const auto& n : names) {
    const auto id = g.find(n);
    if (!id) throw InvalidInput("unknown vertex '" + n + "'");
    ids.push_back(*id);
  }
  return VertexSet(g.order(), std::move(ids));
}

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(start, end - start);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    if (!item.empty()) out.emplace_back(item);
    start = end + 1;
  }
  return out;
}

Json trace_table_json(const TraceTable& table, const NameFn& name) {
  Json doc;
  doc["core"] = names_json(table.core().members(), name);
  doc["tail_size"] = table.tail_size();
  Json traces = Json::array();
  for (const auto& [mask, entry] : table.entries()) {
    Json t;
    t["trace"] = names_json(table.members_of(mask), name);
    t["count"] = entry.count;
    t["realizers"] = names_json(entry.realizers, name);
    traces.push_back(std::move(t));
  }
  doc["traces"] = std::move(traces);
  return doc;
}

Json certificate_json(const AbsorptionProblem& p, const Certificate& cert) {
  const NameFn name = [&p](Vertex v) { return p.vertex_name(v); };
  Json doc;
  doc["schema"] = kCertificateSchema;
  const auto* del = std::get_if<DeletionCertificate>(&cert);
  doc["kind"] = del ? "deletion" : "parity_cut";
  doc["q"] = p.q();
  doc["d"] = p.lift();
  doc["witness"] = names_json(p.witness().members(), name);
  doc["core"] = names_json(p.core().members(), name);
  Json label = Json::array();
  for (std::size_t i = 0; i < p.label().size(); ++i) label.push_back(p.label().get(i) ? 1 : 0);
  doc["top_bit_label"] = std::move(label);

  Json chosen = Json::array();
  if (del) {
    for (const auto& c : del->chosen) {
      Json item;
      item["trace"] = names_json(p.table().members_of(c.trace), name);
      item["deleted_vertices"] = names_json(c.deleted, name);
      chosen.push_back(std::move(item));
    }
  }
  doc["chosen_traces"] = std::move(chosen);
  if (del) {
    doc["parity_cut_Y"] = nullptr;
    const auto residue = achieved_residue(p, *del);
    doc["residue_achieved"] = residue ? Json(*residue) : Json(nullptr);
    doc["deleted_count"] = del->deleted_count();
  } else {
    doc["parity_cut_Y"] = names_json(std::get<ParityCut>(cert).y, name);
    doc["residue_achieved"] = nullptr;
    doc["deleted_count"] = 0;
  }
  return doc;
}

namespace {

std::vector<std::string> string_list(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) throw ParseError(0, std::string("certificate: missing array '") + key + "'");
  std::vector<std::string> out;
  for (const auto& item : doc[key]) {
    if (!item.is_string()) throw ParseError(0, std::string("certificate: '") + key + "' must hold vertex names");
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::int64_t integer(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer())
    throw ParseError(0, std::string("certificate: missing integer '") + key + "'");
  return doc[key].get<std::int64_t>();
}

}  // namespace

ParsedCertificate parse_certificate(const Graph& g, const Json& doc) {
  if (!doc.is_object() || !doc.contains("schema") || doc["schema"] != kCertificateSchema)
    throw ParseError(0, "certificate: schema must be \"" + std::string(kCertificateSchema) + "\"");
  const std::int64_t q = integer(doc, "q");
  const std::int64_t d = integer(doc, "d");
  const VertexSet witness = resolve_names(g, string_list(doc, "witness"));
  const VertexSet core = resolve_names(g, string_list(doc, "core"));
  auto problem = AbsorptionProblem::from_graph(g, witness, core, q, d);

  const std::string kind = doc.value("kind", "");
  if (kind == "deletion") {
    DeletionCertificate del;
    if (!doc.contains("chosen_traces") || !doc["chosen_traces"].is_array())
      throw ParseError(0, "certificate: missing array 'chosen_traces'");
    for (const auto& item : doc["chosen_traces"]) {
      const VertexSet trace = resolve_names(g, string_list(item, "trace"));
      const VertexSet deleted = resolve_names(g, string_list(item, "deleted_vertices"));
      del.chosen.push_back({problem.table().mask_of(trace.members()), {deleted.begin(), deleted.end()}});
    }
    return {std::move(problem), std::move(del)};
  }
  if (kind == "parity_cut") {
    const VertexSet y = resolve_names(g, string_list(doc, "parity_cut_Y"));
    return {std::move(problem), ParityCut{{y.begin(), y.end()}}};
  }
  throw ParseError(0, "certificate: kind must be \"deletion\" or \"parity_cut\"");
}

}  // namespace modcert
