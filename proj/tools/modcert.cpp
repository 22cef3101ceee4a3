// modcert: command-line front end for the modular-certificate library.
//
// Exit codes: 0 success (or a deletion certificate), 1 parity cut or a
// rejected certificate, 2 parse error or invalid input, 3 internal error.

#include <bit>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "modcert/absorb.hpp"
#include "modcert/error.hpp"
#include "modcert/graph.hpp"
#include "modcert/json_io.hpp"
#include "modcert/oracle.hpp"
#include "modcert/parity.hpp"
#include "modcert/reservoir.hpp"
#include "modcert/traces.hpp"
#include "modcert/witness.hpp"

namespace {

using namespace modcert;

enum Exit : int { kOk = 0, kNegative = 1, kBadInput = 2, kInternal = 3 };

struct Options {
  std::string graph_path;
  std::string format = "edge-list";
  bool json = false;
  std::int64_t q = 2;
  std::optional<std::int64_t> lift;
  std::string core;
  std::string witness;
  std::string tail;
  std::optional<std::uint64_t> seed;
  std::size_t trials = 1000;
  std::optional<int> max_m;
  std::string cert_path;

  // reservoir
  std::size_t m = 3;
  std::optional<std::size_t> samples;
  std::optional<double> delta;
  std::string dist_path;

  // ladder-budget
  double c = 1.0;
  double a = 0.0;
  double c0 = 1.0;
  int r = 3;
};

Graph load(const Options& o) {
  const auto fmt = parse_graph_format(o.format);
  if (!fmt) throw InvalidInput("unknown --format '" + o.format + "' (expected edge-list or dimacs)");
  return load_graph_file(o.graph_path, *fmt);
}

VertexSet names_option(const Graph& g, const std::string& text, const char* flag) {
  if (text.empty()) throw InvalidInput(std::string("missing ") + flag);
  return resolve_names(g, split_list(text));
}

std::string join(std::span<const Vertex> vs, const Graph& g) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ",";
    out += g.name(vs[i]);
  }
  return out + "}";
}

void emit(const Json& doc) { std::cout << doc.dump(2) << '\n'; }

// Tail for trace-based commands: --tail if given, else witness minus core, else
// every vertex outside the core.
VertexSet tail_of(const Graph& g, const Options& o, const VertexSet& core) {
  if (!o.tail.empty()) return names_option(g, o.tail, "--tail");
  if (!o.witness.empty()) {
    const VertexSet a = names_option(g, o.witness, "--witness");
    if (!core.is_subset_of(a)) throw InvalidInput("core is not inside the witness");
    return a.minus(core);
  }
  return VertexSet::all(g.order()).minus(core);
}

AbsorptionProblem problem_of(const Graph& g, const Options& o) {
  const VertexSet a = names_option(g, o.witness, "--witness");
  const VertexSet u = names_option(g, o.core, "--core");
  return o.lift ? AbsorptionProblem::from_graph(g, a, u, o.q, *o.lift) : AbsorptionProblem::from_graph(g, a, u, o.q);
}

int cmd_parity(const Options& o) {
  const Graph g = load(o);
  const ParityPartition part = parity_partition(g);
  const bool ok = verify_even_partition(g, part.zero, part.one);
  if (!ok) throw InternalError("parity partition failed its own verification");
  if (o.json) {
    const NameFn name = graph_names(g);
    Json doc;
    doc["n"] = g.order();
    doc["zero"] = names_json(part.zero.members(), name);
    doc["one"] = names_json(part.one.members(), name);
    doc["larger"] = std::max(part.zero.size(), part.one.size());
    doc["verified"] = ok;
    emit(doc);
  } else {
    std::cout << "V0 (" << part.zero.size() << "): " << join(part.zero.members(), g) << '\n'
              << "V1 (" << part.one.size() << "): " << join(part.one.members(), g) << '\n'
              << "verified: even degrees in both parts\n";
  }
  return kOk;
}

int cmd_check_modular(const Options& o) {
  const Graph g = load(o);
  const VertexSet a = names_option(g, o.witness, "--witness");
  const ModularCheck check = is_q_modular(g, a, o.q);
  std::optional<std::int64_t> regular_degree;
  bool terminal = false;
  if (check.modular && is_power_of_two(o.q)) {
    const auto w = ModularWitness::make(g, a, o.q);
    const TerminalResult result = terminal_check(w);
    if (const auto* t = std::get_if<TerminalRegular>(&result)) {
      terminal = true;
      regular_degree = t->degree;
    }
  }
  if (o.json) {
    Json doc;
    doc["q"] = o.q;
    doc["size"] = a.size();
    doc["modular"] = check.modular;
    doc["residue"] = check.modular ? Json(check.residue) : Json(nullptr);
    doc["conflict"] = check.conflict ? Json::array({g.name(check.conflict->first), g.name(check.conflict->second)})
                                     : Json(nullptr);
    doc["terminal_regular"] = terminal;
    doc["regular_degree"] = regular_degree ? Json(*regular_degree) : Json(nullptr);
    emit(doc);
  } else if (check.modular) {
    std::cout << "q-modular with q = " << o.q << ", residue " << check.residue << '\n';
    if (terminal)
      std::cout << "|A| <= q: G[A] is regular"
                << (regular_degree ? " of degree " + std::to_string(*regular_degree) : std::string()) << '\n';
  } else {
    std::cout << "not " << o.q << "-modular: '" << g.name(check.conflict->first) << "' and '"
              << g.name(check.conflict->second) << "' differ\n";
  }
  return check.modular ? kOk : kNegative;
}

int cmd_traces(const Options& o) {
  const Graph g = load(o);
  const VertexSet u = names_option(g, o.core, "--core");
  const TraceTable table = compute_traces(g, u, tail_of(g, o, u));
  const IntVector r = rho(table);
  if (o.json) {
    Json doc = trace_table_json(table, graph_names(g));
    Json rj = Json::array();
    for (Eigen::Index i = 0; i < r.size(); ++i) rj.push_back(r(i));
    doc["rho"] = std::move(rj);
    emit(doc);
  } else {
    for (const auto& [mask, entry] : table.entries())
      std::cout << std::setw(6) << entry.count << "  " << join(table.members_of(mask), g) << '\n';
    std::cout << "rho:";
    for (Eigen::Index i = 0; i < r.size(); ++i) std::cout << ' ' << r(i);
    std::cout << '\n';
  }
  return kOk;
}

int cmd_next_bit(const Options& o) {
  const Graph g = load(o);
  const VertexSet u = names_option(g, o.core, "--core");
  const TraceTable table = compute_traces(g, u, tail_of(g, o, u));
  const IntVector r = rho(table);
  const ComplementDifference diff = complement_difference_class(table);

  int top = 1;
  if (o.max_m) {
    top = *o.max_m;
  } else {
    std::int64_t spread = 0;
    for (Eigen::Index i = 0; i < r.size(); ++i) spread = std::max(spread, std::abs(r(i) - r(0)));
    top = std::max(1, static_cast<int>(std::bit_width(static_cast<std::uint64_t>(spread))));
  }

  Json rows = Json::array();
  for (int m = 0; m <= top; ++m) {
    Json row;
    row["m"] = m;
    const NextBitResult theta = next_bit_obstruction(r, m);
    if (const auto* cls = std::get_if<QuotientClass>(&theta)) {
      const OrbitFormResult form = oriented_orbit_form(table, m);
      const auto* fcls = std::get_if<QuotientClass>(&form);
      if (fcls && !(*fcls == *cls))
        throw InternalError("next-bit: orbit form disagrees with the tail function at m = " + std::to_string(m));
      row["defined"] = true;
      row["theta_zero"] = cls->is_zero();
      row["theta"] = cls->coords.to_string();
      row["orbit_form_defined"] = fcls != nullptr;
    } else {
      row["defined"] = false;
    }
    rows.push_back(std::move(row));
  }

  if (o.json) {
    Json doc;
    Json rj = Json::array();
    for (Eigen::Index i = 0; i < r.size(); ++i) rj.push_back(r(i));
    doc["core"] = names_json(u.members(), graph_names(g));
    doc["rho"] = std::move(rj);
    doc["difference_parity_zero"] = diff.parity.is_zero();
    doc["levels"] = std::move(rows);
    emit(doc);
  } else {
    std::cout << "rho:";
    for (Eigen::Index i = 0; i < r.size(); ++i) std::cout << ' ' << r(i);
    std::cout << "\noriented difference class: " << (diff.parity.is_zero() ? "0" : "nonzero") << '\n';
    for (const auto& row : rows) {
      std::cout << "m = " << row["m"].get<int>() << ": ";
      if (!row["defined"].get<bool>())
        std::cout << "undefined (rho not constant mod 2^m)\n";
      else
        std::cout << "theta " << (row["theta_zero"].get<bool>() ? "0" : row["theta"].get<std::string>()) << '\n';
    }
  }
  return kOk;
}

const char* verdict_name(PairTraceVerdict v) {
  switch (v) {
    case PairTraceVerdict::Applies: return "applies";
    case PairTraceVerdict::Disconnected: return "disconnected";
    case PairTraceVerdict::NoOddTrace: return "no-odd-heavy-trace";
  }
  return "";
}

int cmd_pair_trace(const Options& o) {
  const Graph g = load(o);
  const VertexSet u = names_option(g, o.core, "--core");
  const TraceTable table = compute_traces(g, u, tail_of(g, o, u));
  std::vector<std::string> names;
  for (Vertex v : u) names.push_back(g.name(v));
  const PairTraceGraph h = pair_trace_graph(table, o.q, names);
  const PairTraceVerdict verdict = pair_trace_sufficiency(table, o.q);
  const RankRichOutcome rr = rank_rich_check(table, o.q);
  if (o.json) {
    Json doc;
    Json edges = Json::array();
    for (const auto& [x, y] : h.h2.edges()) edges.push_back(Json::array({h.h2.name(x), h.h2.name(y)}));
    doc["q"] = o.q;
    doc["h2_edges"] = std::move(edges);
    doc["connected"] = h.connected;
    doc["odd_heavy_trace"] = h.odd_heavy_trace;
    doc["verdict"] = verdict_name(verdict);
    doc["rank"] = rr.rank;
    doc["rank_rich"] = rr.rich;
    emit(doc);
  } else {
    std::cout << "H_2: " << h.h2.edge_count() << " edges, " << (h.connected ? "connected" : "disconnected")
              << "; odd heavy trace: " << (h.odd_heavy_trace ? "yes" : "no") << '\n'
              << "sufficient condition: " << verdict_name(verdict) << '\n'
              << "available rank " << rr.rank << " of " << (u.size() - 1) << (rr.rich ? " (rank-rich)" : "")
              << '\n';
  }
  return kOk;
}

int cmd_nd(const Options& o) {
  const Graph g = load(o);
  const NeighborhoodDiversity nd = neighborhood_diversity(g);
  if (o.json) {
    Json doc;
    doc["types"] = nd.types;
    Json classes = Json::array();
    for (const auto& cls : nd.classes) classes.push_back(names_json(cls, graph_names(g)));
    doc["classes"] = std::move(classes);
    emit(doc);
  } else {
    std::cout << "neighborhood diversity: " << nd.types << '\n';
    for (const auto& cls : nd.classes) std::cout << "  " << join(cls, g) << '\n';
  }
  return kOk;
}

int cmd_absorb(const Options& o) {
  const Graph g = load(o);
  const AbsorptionProblem p = problem_of(g, o);
  const Certificate cert = solve_core_correction(p);
  if (!verify_certificate(p, cert)) throw InternalError("absorb: emitted certificate failed verification");
  const bool deletion = std::holds_alternative<DeletionCertificate>(cert);
  if (o.json) {
    emit(certificate_json(p, cert));
  } else if (deletion) {
    const auto& del = std::get<DeletionCertificate>(cert);
    std::cout << "deletion certificate: " << del.chosen.size() << " traces, " << del.deleted_count()
              << " vertices deleted\n";
    for (const auto& c : del.chosen)
      std::cout << "  trace " << join(p.table().members_of(c.trace), g) << ": delete " << join(c.deleted, g) << '\n';
    std::cout << "core residue mod " << 2 * p.q() << ": " << *achieved_residue(p, del) << '\n';
  } else {
    std::cout << "parity cut Y = " << join(std::get<ParityCut>(cert).y, g) << '\n';
  }
  return deletion ? kOk : kNegative;
}

int cmd_verify(const Options& o) {
  const Graph g = load(o);
  std::ifstream in(o.cert_path);
  if (!in) throw InvalidInput("cannot open certificate '" + o.cert_path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("certificate: ") + e.what());
  }
  const ParsedCertificate parsed = parse_certificate(g, doc);
  bool valid = false;
  try {
    valid = verify_certificate(parsed.problem, parsed.certificate);
  } catch (const InvalidInput&) {
    valid = false;
  }
  if (o.json) {
    Json out;
    out["kind"] = doc["kind"];
    out["valid"] = valid;
    emit(out);
  } else {
    std::cout << (valid ? "certificate valid\n" : "certificate rejected\n");
  }
  return valid ? kOk : kNegative;
}

int cmd_oracle_f(const Options& o) {
  const Graph g = load(o);
  const oracle::MaxRegular f = oracle::brute_force_fG(g);
  const oracle::AlphaOmega ao = oracle::brute_force_alpha_omega(g);
  if (o.json) {
    Json doc;
    doc["n"] = g.order();
    doc["f"] = f.size;
    doc["witness"] = names_json(f.witness, graph_names(g));
    doc["alpha"] = ao.alpha;
    doc["omega"] = ao.omega;
    emit(doc);
  } else {
    std::cout << "f(G) = " << f.size << " via " << join(f.witness, g) << '\n'
              << "alpha = " << ao.alpha << ", omega = " << ao.omega << '\n';
  }
  return kOk;
}

int cmd_oracle_absorb(const Options& o) {
  const Graph g = load(o);
  const AbsorptionProblem p = problem_of(g, o);
  const oracle::AbsorptionSearch search = oracle::brute_force_absorption(p, o.seed);
  const bool engine_deletion = std::holds_alternative<DeletionCertificate>(solve_core_correction(p));
  if (engine_deletion != search.exists)
    throw InternalError("oracle-absorb: exhaustive search disagrees with the linear engine");
  Json chosen = Json::array();
  if (search.selection) {
    const auto avail = p.available_traces();
    search.selection->for_each_set(
        [&](std::size_t i) { chosen.push_back(names_json(p.table().members_of(avail[i]), graph_names(g))); });
  }
  if (o.json) {
    Json doc;
    doc["exists"] = search.exists;
    doc["selection"] = search.selection ? chosen : Json(nullptr);
    doc["engine_agrees"] = true;
    emit(doc);
  } else {
    std::cout << (search.exists ? "absorbable" : "not absorbable") << " (engine agrees)\n";
    for (const auto& t : chosen) std::cout << "  trace " << t.dump() << '\n';
  }
  return search.exists ? kOk : kNegative;
}

gf2::BitVector positions_mask(const Json& arr, std::size_t m) {
  if (!arr.is_array()) throw ParseError(0, "distribution: a trace must be an array of core positions");
  gf2::BitVector mask(m);
  for (const auto& x : arr) {
    if (!x.is_number_unsigned() || x.get<std::size_t>() >= m)
      throw ParseError(0, "distribution: core positions must be integers in [0, m)");
    mask.set(x.get<std::size_t>());
  }
  return mask;
}

// {"weights": [{"trace": [0, 2], "p": 0.25}, ...], "basis": [[1], [2], ...]}
reservoir::Explicit load_distribution(const std::string& path, std::size_t m) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open distribution '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("distribution: ") + e.what());
  }
  reservoir::Explicit ex;
  if (!doc.contains("weights") || !doc.contains("basis")) throw ParseError(0, "distribution: needs weights and basis");
  for (const auto& w : doc["weights"]) {
    if (!w.contains("trace") || !w.contains("p") || !w["p"].is_number())
      throw ParseError(0, "distribution: each weight needs trace and p");
    ex.weights.emplace_back(positions_mask(w["trace"], m), w["p"].get<double>());
  }
  for (const auto& b : doc["basis"]) ex.basis.push_back(positions_mask(b, m));
  return ex;
}

std::string bit_string(const std::vector<bool>& bits) {
  std::string s;
  s.reserve(bits.size());
  for (bool b : bits) s.push_back(b ? '1' : '0');
  return s;
}

int cmd_reservoir(const Options& o) {
  if (!o.seed) throw InvalidInput("reservoir: --seed is required");
  reservoir::ReservoirSpec spec;
  spec.m = o.m;
  spec.q = o.q;
  spec.trials = o.trials;
  spec.seed = *o.seed;
  if (!o.dist_path.empty()) spec.distribution = load_distribution(o.dist_path, o.m);
  if (o.samples) {
    spec.samples = *o.samples;
  } else if (o.delta) {
    if (!o.dist_path.empty()) throw InvalidInput("reservoir: --delta sizing applies to the uniform distribution only");
    spec.samples = reservoir::uniform_sample_size(o.m, o.q, *o.delta);
  } else {
    throw InvalidInput("reservoir: give --N or --delta");
  }
  const auto est = reservoir::estimate_availability(spec);
  if (o.json) {
    Json doc;
    doc["m"] = spec.m;
    doc["q"] = spec.q;
    doc["distribution"] = o.dist_path.empty() ? "uniform" : "explicit";
    doc["N"] = spec.samples;
    doc["trials"] = spec.trials;
    doc["seed"] = spec.seed;
    doc["rng"] = reservoir::kRngAlgorithm;
    doc["p"] = est.p;
    doc["bound"] = est.bound;
    doc["within_hypothesis"] = est.within_hypothesis;
    doc["failure_rate"] = est.failure_rate;
    doc["rank_rich_rate"] = est.rank_rich_rate;
    doc["failed"] = bit_string(est.failed);
    doc["rank_rich"] = bit_string(est.rank_rich);
    emit(doc);
  } else {
    std::cout << "m = " << spec.m << ", q = " << spec.q << ", N = " << spec.samples << ", trials = " << spec.trials
              << ", seed = " << spec.seed << '\n'
              << "basis probability p = " << est.p << (est.within_hypothesis ? "" : " (N p < 2q)") << '\n'
              << "failure rate " << est.failure_rate << " vs bound " << est.bound << '\n'
              << "rank-rich rate " << est.rank_rich_rate << '\n';
  }
  return kOk;
}

int cmd_ladder_budget(const Options& o) {
  if (!(o.c > 0) || !(o.c0 > 0)) throw InvalidInput("ladder-budget: C and C0 must be positive");
  if (o.a < 0) throw InvalidInput("ladder-budget: a must be nonnegative");
  if (o.r < 1) throw InvalidInput("ladder-budget: r must be at least 1");
  // 2 C0 prod_{j=2}^{r-1} (C 2^{j a}) 2^r, accumulated in log2.
  double log2_budget = 1.0 + std::log2(o.c0) + o.r;
  for (int j = 2; j <= o.r - 1; ++j) log2_budget += std::log2(o.c) + j * o.a;
  const double budget = std::exp2(log2_budget);
  if (o.json) {
    Json doc;
    doc["C"] = o.c;
    doc["a"] = o.a;
    doc["C0"] = o.c0;
    doc["r"] = o.r;
    doc["budget"] = std::isfinite(budget) ? Json(budget) : Json(nullptr);
    doc["log2_budget"] = log2_budget;
    emit(doc);
  } else {
    std::cout << "budget = " << budget << " (log2 = " << log2_budget << ")\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Modular obstruction certificates for regular induced subgraphs"};
  app.require_subcommand(1);
  Options o;

  auto graph_opts = [&](CLI::App* sub) {
    sub->add_option("graph", o.graph_path, "Graph file")->required();
    sub->add_option("--format", o.format, "edge-list or dimacs")->check(CLI::IsMember({"edge-list", "dimacs"}));
    sub->add_flag("--json", o.json, "Machine-readable output");
  };
  auto core_opts = [&](CLI::App* sub) {
    sub->add_option("--core", o.core, "Core vertices, comma-separated names");
    sub->add_option("--witness", o.witness, "Witness vertices, comma-separated names");
    sub->add_option("--tail", o.tail, "Tail vertices (default: witness minus core)");
  };

  auto* parity = app.add_subcommand("parity", "Even-degree parity partition");
  graph_opts(parity);

  auto* check = app.add_subcommand("check-modular", "Is the witness q-modular?");
  graph_opts(check);
  check->add_option("--witness", o.witness, "Vertex set, comma-separated names")->required();
  check->add_option("--q", o.q, "Modulus");

  auto* traces = app.add_subcommand("traces", "Trace table of a tail against a core");
  graph_opts(traces);
  core_opts(traces);

  auto* next_bit = app.add_subcommand("next-bit", "Next-bit obstruction of the tail function");
  graph_opts(next_bit);
  core_opts(next_bit);
  next_bit->add_option("--max-m", o.max_m, "Largest m to report");

  auto* pair = app.add_subcommand("pair-trace", "Pair-trace graph and rank richness");
  graph_opts(pair);
  core_opts(pair);
  pair->add_option("--q", o.q, "Modulus (power of two)");

  auto* nd = app.add_subcommand("nd", "Neighborhood diversity");
  graph_opts(nd);

  auto* absorb = app.add_subcommand("absorb", "Deletion certificate or parity cut");
  graph_opts(absorb);
  absorb->add_option("--core", o.core, "Core U")->required();
  absorb->add_option("--witness", o.witness, "q-modular witness A")->required();
  absorb->add_option("--q", o.q, "Modulus (power of two)");
  absorb->add_option("--d", o.lift, "Lift of the residue in [0, 2q)");

  auto* verify = app.add_subcommand("verify", "Re-check a certificate against a graph");
  graph_opts(verify);
  verify->add_option("certificate", o.cert_path, "Certificate JSON")->required();

  auto* oracle_f = app.add_subcommand("oracle-f", "Exhaustive f(G), alpha and omega (n <= 24)");
  graph_opts(oracle_f);

  auto* oracle_absorb = app.add_subcommand("oracle-absorb", "Exhaustive absorption search");
  graph_opts(oracle_absorb);
  oracle_absorb->add_option("--core", o.core, "Core U")->required();
  oracle_absorb->add_option("--witness", o.witness, "q-modular witness A")->required();
  oracle_absorb->add_option("--q", o.q, "Modulus (power of two)");
  oracle_absorb->add_option("--d", o.lift, "Lift of the residue in [0, 2q)");
  oracle_absorb->add_option("--seed", o.seed, "Random realizer tuples");

  auto* res = app.add_subcommand("reservoir", "Monte-Carlo availability of basis traces");
  res->add_option("--seed", o.seed, "RNG seed")->required();
  res->add_option("--m", o.m, "Core size");
  res->add_option("--q", o.q, "Modulus (power of two)");
  res->add_option("--N", o.samples, "Tail size");
  res->add_option("--delta", o.delta, "Target failure probability (uniform sizing)");
  res->add_option("--trials", o.trials, "Number of trials");
  res->add_option("--dist", o.dist_path, "Explicit distribution JSON");
  res->add_flag("--json", o.json, "Machine-readable output");

  auto* ladder = app.add_subcommand("ladder-budget", "Starting-size budget of a dyadic ladder");
  ladder->add_option("--C", o.c, "Per-step constant");
  ladder->add_option("--a", o.a, "Per-step exponent");
  ladder->add_option("--C0", o.c0, "Base constant");
  ladder->add_option("--r", o.r, "Number of steps");
  ladder->add_flag("--json", o.json, "Machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (parity->parsed()) return cmd_parity(o);
    if (check->parsed()) return cmd_check_modular(o);
    if (traces->parsed()) return cmd_traces(o);
    if (next_bit->parsed()) return cmd_next_bit(o);
    if (pair->parsed()) return cmd_pair_trace(o);
    if (nd->parsed()) return cmd_nd(o);
    if (absorb->parsed()) return cmd_absorb(o);
    if (verify->parsed()) return cmd_verify(o);
    if (oracle_f->parsed()) return cmd_oracle_f(o);
    if (oracle_absorb->parsed()) return cmd_oracle_absorb(o);
    if (res->parsed()) return cmd_reservoir(o);
    if (ladder->parsed()) return cmd_ladder_budget(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kBadInput;
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kBadInput;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInternal;
  }
  return kBadInput;
}
