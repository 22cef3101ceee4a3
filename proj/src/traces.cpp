#include "modcert/traces.hpp"

#include <algorithm>
#include <numeric>

#include "modcert/error.hpp"

namespace modcert {

TraceTable::TraceTable(VertexSet core, Map entries) : core_(std::move(core)), entries_(std::move(entries)) {
  for (auto& [mask, entry] : entries_) {
    if (mask.size() != core_.size()) throw InvalidInput("trace table: trace mask length differs from core size");
    if (entry.count != static_cast<std::int64_t>(entry.realizers.size()))
      throw InvalidInput("trace table: count does not match realizer list");
    std::sort(entry.realizers.begin(), entry.realizers.end());
    for (Vertex x : entry.realizers)
      if (core_.contains(x)) throw InvalidInput("trace table: realizer " + std::to_string(x) + " lies in the core");
  }
  std::erase_if(entries_, [](const auto& kv) { return kv.second.count == 0; });
}

std::int64_t TraceTable::count(const gf2::BitVector& trace) const {
  const auto it = entries_.find(trace);
  return it == entries_.end() ? 0 : it->second.count;
}

std::int64_t TraceTable::tail_size() const {
  std::int64_t total = 0;
  for (const auto& [mask, entry] : entries_) total += entry.count;
  return total;
}

gf2::BitVector TraceTable::mask_of(std::span<const Vertex> members) const {
  gf2::BitVector mask(core_.size());
  for (Vertex v : members) {
    const auto pos = core_.index_of(v);
    if (!pos) throw InvalidInput("trace: vertex " + std::to_string(v) + " is not in the core");
    mask.set(*pos);
  }
  return mask;
}

std::vector<Vertex> TraceTable::members_of(const gf2::BitVector& mask) const {
  std::vector<Vertex> out;
  mask.for_each_set([&](std::size_t i) { out.push_back(core_[i]); });
  return out;
}

TraceTable compute_traces(const Graph& g, const VertexSet& core, const VertexSet& tail) {
  require_in_graph(g, core, "compute_traces");
  require_in_graph(g, tail, "compute_traces");
  if (!core.disjoint_from(tail)) throw InvalidInput("compute_traces: core and tail overlap");
  TraceTable::Map entries;
  for (Vertex x : tail) {
    gf2::BitVector trace(core.size());
    for (std::size_t i = 0; i < core.size(); ++i)
      if (g.adjacent(x, core[i])) trace.set(i);
    auto& entry = entries[std::move(trace)];
    ++entry.count;
    entry.realizers.push_back(x);
  }
  return TraceTable(core, std::move(entries));
}

IntVector rho(const TraceTable& table) {
  IntVector out = IntVector::Zero(static_cast<Eigen::Index>(table.core_size()));
  for (const auto& [mask, entry] : table.entries())
    mask.for_each_set([&](std::size_t i) { out(static_cast<Eigen::Index>(i)) += entry.count; });
  return out;
}

gf2::BitVector orbit_representative(const gf2::BitVector& trace) {
  if (trace.empty() || !trace.get(0)) return trace;
  gf2::BitVector complement = trace;
  for (std::size_t i = 0; i < complement.size(); ++i) complement.flip(i);
  return complement;
}

namespace {

bool is_constant_trace(const gf2::BitVector& trace) {
  return !trace.any() || trace.count() == trace.size();
}

// Oriented differences n_B - n_{U\B}, keyed by orbit representative.
std::map<gf2::BitVector, std::int64_t, gf2::SupportOrder> orbit_differences(const TraceTable& table) {
  std::map<gf2::BitVector, std::int64_t, gf2::SupportOrder> diffs;
  for (const auto& [mask, entry] : table.entries()) {
    if (is_constant_trace(mask)) continue;
    auto rep = orbit_representative(mask);
    const bool is_rep = rep == mask;
    diffs[std::move(rep)] += is_rep ? entry.count : -entry.count;
  }
  return diffs;
}

IntVector indicator(const gf2::BitVector& mask) {
  IntVector v = IntVector::Zero(static_cast<Eigen::Index>(mask.size()));
  mask.for_each_set([&](std::size_t i) { v(static_cast<Eigen::Index>(i)) = 1; });
  return v;
}

std::int64_t pow2(int m) {
  if (m < 0 || m > 61) throw InvalidInput("exponent m must lie in [0, 61], got " + std::to_string(m));
  return std::int64_t{1} << m;
}

}  // namespace

ComplementDifference complement_difference_class(const TraceTable& table) {
  if (table.core_size() == 0) throw InvalidInput("complement_difference_class: empty core");
  ComplementDifference out;
  out.representative = IntVector::Zero(static_cast<Eigen::Index>(table.core_size()));
  gf2::BitVector parity(table.core_size());
  for (const auto& [rep, diff] : orbit_differences(table)) {
    out.representative += diff * indicator(rep);
    if (floor_mod(diff, 2) == 1) parity ^= rep;
  }
  const IntVector gap = rho(table) - out.representative;
  if (!(gap.array() == gap(0)).all())
    throw InternalError("complement_difference_class: representative differs from rho by a non-constant vector");
  out.parity = quotient_class(parity);
  return out;
}

NextBitResult next_bit_obstruction(const IntVector& rho_values, int m) {
  const std::int64_t modulus = pow2(m);
  if (rho_values.size() == 0) throw InvalidInput("next_bit_obstruction: empty core");
  if (!is_constant_mod(rho_values, modulus)) return NotConstantModulo{modulus};
  const std::int64_t c = rho_values(0);
  gf2::BitVector bits(static_cast<std::size_t>(rho_values.size()));
  for (Eigen::Index i = 0; i < rho_values.size(); ++i)
    bits.set(static_cast<std::size_t>(i), floor_mod((rho_values(i) - c) / modulus, 2) == 1);
  return quotient_class(bits);
}

OrbitFormResult oriented_orbit_form(const TraceTable& table, int m) {
  const std::int64_t modulus = pow2(m);
  if (table.core_size() == 0) throw InvalidInput("oriented_orbit_form: empty core");
  gf2::BitVector sum(table.core_size());
  for (const auto& [rep, diff] : orbit_differences(table)) {
    if (diff % modulus != 0) return DivisibilityFails{rep, diff};
    if (floor_mod(diff / modulus, 2) == 1) sum ^= rep;
  }
  return quotient_class(sum);
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.neighbors(v)) {
      if (seen[u]) continue;
      seen[u] = true;
      ++reached;
      stack.push_back(u);
    }
  }
  return reached == n;
}

PairTraceGraph pair_trace_graph(const TraceTable& table, std::int64_t q, std::vector<std::string> names) {
  const std::size_t m = table.core_size();
  if (m < 2) throw InvalidInput("pair_trace_graph: core needs at least two vertices");
  std::vector<Edge> edges;
  bool odd = false;
  for (const auto& [mask, entry] : table.entries()) {
    if (entry.count < q) continue;
    const std::size_t weight = mask.count();
    if (weight % 2 == 1) odd = true;
    if (weight == 2) {
      const auto ones = mask.ones();
      edges.emplace_back(static_cast<Vertex>(ones[0]), static_cast<Vertex>(ones[1]));
    }
  }
  PairTraceGraph out;
  out.h2 = Graph::from_edges(m, edges, std::move(names));
  out.connected = is_connected(out.h2);
  out.odd_heavy_trace = odd;
  return out;
}

namespace {

bool twins(const Graph& g, Vertex u, Vertex v) {
  gf2::BitVector a = g.row(u);
  gf2::BitVector b = g.row(v);
  a.set(v, false);
  b.set(u, false);
  return a == b;
}

}  // namespace

NeighborhoodDiversity neighborhood_diversity(const Graph& g) {
  NeighborhoodDiversity out;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto it = std::find_if(out.classes.begin(), out.classes.end(),
                           [&](const std::vector<Vertex>& cls) { return twins(g, cls.front(), v); });
    if (it == out.classes.end())
      out.classes.push_back({v});
    else
      it->push_back(v);
  }
  out.types = out.classes.size();

  // Type structure: every class is a clique or an independent set, and every
  // pair of classes is fully joined or fully separated.
  for (std::size_t i = 0; i < out.classes.size(); ++i) {
    const auto& ci = out.classes[i];
    for (std::size_t j = i; j < out.classes.size(); ++j) {
      const auto& cj = out.classes[j];
      std::size_t links = 0, pairs = 0;
      for (std::size_t a = 0; a < ci.size(); ++a)
        for (std::size_t b = (i == j ? a + 1 : 0); b < cj.size(); ++b) {
          ++pairs;
          if (g.adjacent(ci[a], cj[b])) ++links;
        }
      if (links != 0 && links != pairs)
        throw InternalError("neighborhood_diversity: twin classes are not homogeneous");
    }
  }
  return out;
}

}  // namespace modcert
