#include "modcert/absorb.hpp"

#include <algorithm>

#include "modcert/error.hpp"

namespace modcert {

AbsorptionProblem AbsorptionProblem::from_graph(const Graph& g, const VertexSet& witness, const VertexSet& core,
                                                std::int64_t q) {
  const ModularWitness w = ModularWitness::make(g, witness, q);
  return from_graph(g, witness, core, q, w.residue());
}

AbsorptionProblem AbsorptionProblem::from_graph(const Graph& g, const VertexSet& witness, const VertexSet& core,
                                                std::int64_t q, std::int64_t lift) {
  const ModularWitness w = ModularWitness::make(g, witness, q);
  require_in_graph(g, core, "absorption problem");
  if (core.empty()) throw InvalidInput("absorption problem: core is empty");
  if (!core.is_subset_of(witness)) throw InvalidInput("absorption problem: core is not inside the witness");

  AbsorptionProblem p;
  p.graph_ = &g;
  p.q_ = q;
  p.lift_ = lift;
  p.witness_ = witness;
  p.tail_ = witness.minus(core);
  p.label_ = top_bit_label(w, core, lift).labels;
  p.table_ = compute_traces(g, core, p.tail_);
  p.core_degrees_.resize(static_cast<Eigen::Index>(core.size()));
  for (std::size_t i = 0; i < core.size(); ++i) p.core_degrees_(static_cast<Eigen::Index>(i)) = w.degree(core[i]);
  p.index_tail();
  return p;
}

AbsorptionProblem AbsorptionProblem::synthetic(TraceTable table, gf2::BitVector label, std::int64_t q,
                                               std::int64_t lift) {
  if (!is_power_of_two(q)) throw InvalidInput("absorption problem: q = " + std::to_string(q) + " is not a power of two");
  if (lift < 0 || lift >= 2 * q) throw InvalidInput("absorption problem: lift outside [0, 2q)");
  if (table.core_size() == 0) throw InvalidInput("absorption problem: core is empty");
  if (label.size() != table.core_size()) throw InvalidInput("absorption problem: label length differs from core size");

  AbsorptionProblem p;
  p.q_ = q;
  p.lift_ = lift;
  std::vector<Vertex> tail;
  for (const auto& [mask, entry] : table.entries())
    tail.insert(tail.end(), entry.realizers.begin(), entry.realizers.end());
  const std::size_t universe = table.core().universe();
  p.tail_ = VertexSet(universe, tail);
  std::vector<Vertex> all(table.core().begin(), table.core().end());
  all.insert(all.end(), tail.begin(), tail.end());
  p.witness_ = VertexSet(universe, std::move(all));

  const IntVector r = rho(table);
  p.core_degrees_.resize(r.size());
  for (Eigen::Index i = 0; i < r.size(); ++i)
    p.core_degrees_(i) = lift + q * static_cast<std::int64_t>(label.get(static_cast<std::size_t>(i))) + 2 * q * r(i);
  p.label_ = std::move(label);
  p.table_ = std::move(table);
  p.index_tail();
  return p;
}

void AbsorptionProblem::index_tail() {
  for (const auto& [mask, entry] : table_.entries())
    for (Vertex x : entry.realizers) trace_of_.emplace(x, mask);
}

const Graph& AbsorptionProblem::graph() const {
  if (!graph_) throw InvalidInput("absorption problem has no graph");
  return *graph_;
}

std::vector<gf2::BitVector> AbsorptionProblem::available_traces() const {
  std::vector<gf2::BitVector> out;
  for (const auto& [mask, entry] : table_.entries())
    if (entry.count >= q_) out.push_back(mask);
  return out;
}

const gf2::BitVector& AbsorptionProblem::trace_of(Vertex v) const {
  const auto it = trace_of_.find(v);
  if (it == trace_of_.end()) throw InvalidInput("vertex " + vertex_name(v) + " is not in the tail");
  return it->second;
}

std::string AbsorptionProblem::vertex_name(Vertex v) const {
  if (graph_ && v < graph_->order()) return graph_->name(v);
  return std::to_string(v);
}

IntVector AbsorptionProblem::core_degrees_after(const VertexSet& deleted) const {
  if (!deleted.is_subset_of(tail_)) throw InvalidInput("deleted vertices must lie in the tail");
  const VertexSet& u = core();
  if (graph_) {
    const VertexSet kept = witness_.minus(deleted);
    IntVector deg(static_cast<Eigen::Index>(u.size()));
    for (std::size_t i = 0; i < u.size(); ++i)
      deg(static_cast<Eigen::Index>(i)) = static_cast<std::int64_t>((graph_->row(u[i]) & kept.mask()).count());
    return deg;
  }
  IntVector deg = core_degrees_;
  for (Vertex x : deleted)
    trace_of(x).for_each_set([&](std::size_t i) { deg(static_cast<Eigen::Index>(i)) -= 1; });
  return deg;
}

VertexSet DeletionCertificate::deleted_set(std::size_t universe) const {
  std::vector<Vertex> all;
  for (const auto& c : chosen) all.insert(all.end(), c.deleted.begin(), c.deleted.end());
  return VertexSet(universe, std::move(all));
}

std::size_t DeletionCertificate::deleted_count() const {
  std::size_t n = 0;
  for (const auto& c : chosen) n += c.deleted.size();
  return n;
}

CorrectionSystem correction_system(const AbsorptionProblem& p) {
  CorrectionSystem sys;
  sys.available = p.available_traces();
  std::vector<gf2::BitVector> columns;
  columns.reserve(sys.available.size());
  for (const auto& b : sys.available) columns.push_back(quotient_coords(b));
  sys.matrix = gf2::BitMatrix::from_columns(columns, p.core().size() - 1);
  sys.target = quotient_coords(p.label());
  return sys;
}

Certificate solve_core_correction(const AbsorptionProblem& p) {
  const CorrectionSystem sys = correction_system(p);
  const auto result = gf2::solve_or_dual(sys.matrix, sys.target);

  Certificate cert;
  if (const auto* sol = std::get_if<gf2::Solution>(&result)) {
    DeletionCertificate del;
    sol->x.for_each_set([&](std::size_t j) {
      const auto& realizers = p.table().entries().at(sys.available[j]).realizers;
      del.chosen.push_back({sys.available[j], {realizers.begin(), realizers.begin() + p.q()}});
    });
    cert = std::move(del);
  } else {
    const auto& y = std::get<gf2::Dual>(result).y;
    const VertexSet& u = p.core();
    ParityCut cut;
    // Quotient coordinate i belongs to core position i + 1.
    y.for_each_set([&](std::size_t i) { cut.y.push_back(u[i + 1]); });
    if (cut.y.size() % 2 == 1) cut.y.insert(cut.y.begin(), u[0]);
    cert = std::move(cut);
  }

  if (!verify_certificate(p, cert)) throw InternalError("solve_core_correction: emitted certificate fails verification");
  return cert;
}

namespace {

void check_tuples(const AbsorptionProblem& p, const DeletionCertificate& cert) {
  std::vector<Vertex> seen;
  for (const auto& c : cert.chosen) {
    if (static_cast<std::int64_t>(c.deleted.size()) != p.q())
      throw InvalidInput("deletion certificate: tuple of size " + std::to_string(c.deleted.size()) +
                         ", expected q = " + std::to_string(p.q()));
    for (Vertex x : c.deleted) {
      if (!p.tail().contains(x)) throw InvalidInput("deletion certificate: vertex " + p.vertex_name(x) + " is not in the tail");
      seen.push_back(x);
    }
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw InvalidInput("deletion certificate: tuples are not disjoint");
}

}  // namespace

std::optional<std::int64_t> achieved_residue(const AbsorptionProblem& p, const DeletionCertificate& cert) {
  check_tuples(p, cert);
  const IntVector deg = p.core_degrees_after(cert.deleted_set(p.witness().universe()));
  if (!is_constant_mod(deg, 2 * p.q())) return std::nullopt;
  return floor_mod(deg(0), 2 * p.q());
}

bool verify_deletion_certificate(const AbsorptionProblem& p, const DeletionCertificate& cert) {
  return achieved_residue(p, cert).has_value();
}

bool verify_parity_cut(const AbsorptionProblem& p, const ParityCut& cut) {
  const VertexSet& u = p.core();
  gf2::BitVector y(u.size());
  for (Vertex v : cut.y) {
    const auto pos = u.index_of(v);
    if (!pos) throw InvalidInput("parity cut: vertex " + p.vertex_name(v) + " is not in the core");
    if (y.get(*pos)) throw InvalidInput("parity cut: duplicate vertex " + p.vertex_name(v));
    y.set(*pos);
  }
  if (y.count() % 2 != 0) return false;
  if (!gf2::dot(y, p.label())) return false;
  for (const auto& b : p.available_traces())
    if (gf2::dot(y, b)) return false;
  return true;
}

bool verify_certificate(const AbsorptionProblem& p, const Certificate& cert) {
  if (const auto* del = std::get_if<DeletionCertificate>(&cert)) return verify_deletion_certificate(p, *del);
  return verify_parity_cut(p, std::get<ParityCut>(cert));
}

AllTailOutcome all_tail_identity_check(const AbsorptionProblem& p) {
  gf2::BitVector correction(p.core().size());
  for (const auto& [mask, entry] : p.table().entries()) {
    if (entry.count % p.q() != 0) return {false, AllTailOutcome::Failure::Divisibility};
    if ((entry.count / p.q()) % 2 == 1) correction ^= mask;
  }
  if (quotient_coords(correction) != quotient_coords(p.label())) return {false, AllTailOutcome::Failure::Identity};

  if (!is_constant_mod(p.core_degrees_after(p.tail()), 2 * p.q()))
    throw InternalError("all_tail_identity_check: identity holds but U is not 2q-modular after deleting the tail");
  return {true, AllTailOutcome::Failure::None};
}

std::vector<Vertex> self_layer_check(const AbsorptionProblem& p, const DeletionCertificate& cert) {
  const Graph& g = p.graph();
  const auto residue = achieved_residue(p, cert);
  if (!residue) throw InvalidInput("self_layer_check: certificate does not verify");
  const VertexSet kept = p.witness().minus(cert.deleted_set(p.witness().universe()));
  std::vector<Vertex> violators;
  for (Vertex y : kept) {
    if (p.core().contains(y)) continue;
    const auto deg = static_cast<std::int64_t>((g.row(y) & kept.mask()).count());
    if (floor_mod(deg, 2 * p.q()) != *residue) violators.push_back(y);
  }
  return violators;
}

RankRichOutcome rank_rich_check(const TraceTable& table, std::int64_t q) {
  if (table.core_size() == 0) throw InvalidInput("rank_rich_check: empty core");
  std::vector<gf2::BitVector> available, columns;
  for (const auto& [mask, entry] : table.entries()) {
    if (entry.count < q) continue;
    available.push_back(mask);
    columns.push_back(quotient_coords(mask));
  }
  const auto m = gf2::BitMatrix::from_columns(columns, table.core_size() - 1);
  RankRichOutcome out;
  for (std::size_t j : gf2::pivot_columns(m)) out.spanning.push_back(available[j]);
  out.rank = out.spanning.size();
  out.rich = out.rank == table.core_size() - 1;
  return out;
}

RankRichOutcome rank_rich_check(const AbsorptionProblem& p) { return rank_rich_check(p.table(), p.q()); }

PairTraceVerdict pair_trace_sufficiency(const TraceTable& table, std::int64_t q) {
  const PairTraceGraph h2 = pair_trace_graph(table, q);
  PairTraceVerdict verdict = PairTraceVerdict::Applies;
  if (!h2.connected)
    verdict = PairTraceVerdict::Disconnected;
  else if (table.core_size() % 2 == 0 && !h2.odd_heavy_trace)
    verdict = PairTraceVerdict::NoOddTrace;
  if (verdict == PairTraceVerdict::Applies && !rank_rich_check(table, q).rich)
    throw InternalError("pair_trace_sufficiency: connected pair traces do not span the quotient");
  return verdict;
}

PairTraceVerdict pair_trace_sufficiency(const AbsorptionProblem& p) { return pair_trace_sufficiency(p.table(), p.q()); }

std::optional<std::vector<TwinBlock>> twin_tail_decompose(const AbsorptionProblem& p) {
  std::vector<TwinBlock> blocks;
  const auto q = static_cast<std::size_t>(p.q());
  for (const auto& [mask, entry] : p.table().entries()) {
    if (entry.realizers.size() % q != 0) return std::nullopt;
    for (std::size_t i = 0; i < entry.realizers.size(); i += q)
      blocks.push_back({mask, {entry.realizers.begin() + static_cast<std::ptrdiff_t>(i),
                               entry.realizers.begin() + static_cast<std::ptrdiff_t>(i + q)}});
  }
  return blocks;
}

BasisTailOutcome basis_tail_check(const AbsorptionProblem& p, const std::vector<std::vector<Vertex>>& blocks,
                                  std::optional<Vertex> base) {
  const VertexSet& u = p.core();
  const Vertex u0 = base.value_or(u[0]);
  const auto base_pos = u.index_of(u0);
  if (!base_pos) throw InvalidInput("basis_tail_check: distinguished vertex is not in the core");

  std::vector<Vertex> covered;
  std::vector<gf2::BitVector> traces;
  for (const auto& block : blocks) {
    if (static_cast<std::int64_t>(block.size()) != p.q())
      throw InvalidInput("basis_tail_check: block of size " + std::to_string(block.size()) + ", expected q");
    const gf2::BitVector& t = p.trace_of(block.front());
    for (Vertex x : block)
      if (p.trace_of(x) != t) throw InvalidInput("basis_tail_check: block mixes traces");
    covered.insert(covered.end(), block.begin(), block.end());
    traces.push_back(t);
  }
  std::sort(covered.begin(), covered.end());
  if (!std::equal(covered.begin(), covered.end(), p.tail().begin(), p.tail().end()))
    throw InvalidInput("basis_tail_check: blocks do not partition the tail");

  std::vector<std::size_t> singleton_blocks(u.size(), 0);
  gf2::BitVector remainder(u.size());
  for (const auto& t : traces) {
    if (t.count() == 1 && *t.first_set() != *base_pos)
      ++singleton_blocks[*t.first_set()];
    else
      remainder ^= t;
  }

  const bool b0 = p.label().get(*base_pos);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i == *base_pos) continue;
    if ((singleton_blocks[i] % 2 == 1) != (p.label().get(i) != b0))
      return {false, BasisTailOutcome::Failure::SingletonParity};
  }
  if (quotient_coords(remainder).any()) return {false, BasisTailOutcome::Failure::Remainder};

  if (!is_constant_mod(p.core_degrees_after(p.tail()), 2 * p.q()))
    throw InternalError("basis_tail_check: conditions hold but U is not 2q-modular after deleting the tail");
  return {true, BasisTailOutcome::Failure::None};
}

}  // namespace modcert
