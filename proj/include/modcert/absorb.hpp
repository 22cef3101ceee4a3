#pragma once

// Fixed-core absorption: decide whether deleting equal-trace q-tuples from the
// tail R = A \ U makes the core degrees agree modulo 2q, and emit a checkable
// certificate either way.

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "modcert/gf2.hpp"
#include "modcert/graph.hpp"
#include "modcert/traces.hpp"
#include "modcert/types.hpp"
#include "modcert/witness.hpp"

namespace modcert {

/// A core U inside a q-modular witness A, its top-bit label and the trace
/// table of R = A \ U against U.
///
/// Graph-backed problems keep a pointer to the graph, which must outlive them.
/// Synthetic problems carry only trace data and a label; their core degrees are
/// d + q*b(u) + 2q*rho(u), and a tail vertex is adjacent to exactly its trace.
class AbsorptionProblem {
 public:
  static AbsorptionProblem from_graph(const Graph& g, const VertexSet& witness, const VertexSet& core,
                                      std::int64_t q);
  static AbsorptionProblem from_graph(const Graph& g, const VertexSet& witness, const VertexSet& core,
                                      std::int64_t q, std::int64_t lift);

  /// `label` is indexed by core position; lift must lie in [0, 2q).
  static AbsorptionProblem synthetic(TraceTable table, gf2::BitVector label, std::int64_t q,
                                     std::int64_t lift = 0);

  bool has_graph() const noexcept { return graph_ != nullptr; }
  /// Throws InvalidInput for synthetic problems.
  const Graph& graph() const;

  std::int64_t q() const noexcept { return q_; }
  std::int64_t lift() const noexcept { return lift_; }
  const VertexSet& witness() const noexcept { return witness_; }
  const VertexSet& core() const noexcept { return table_.core(); }
  const VertexSet& tail() const noexcept { return tail_; }
  const TraceTable& table() const noexcept { return table_; }
  /// b_A on U, by core position.
  const gf2::BitVector& label() const noexcept { return label_; }
  /// deg_A on U, by core position.
  const IntVector& core_degrees() const noexcept { return core_degrees_; }

  /// Traces with n_B >= q, in table order.
  std::vector<gf2::BitVector> available_traces() const;

  /// The trace of a tail vertex. Throws InvalidInput if v is not in the tail.
  const gf2::BitVector& trace_of(Vertex v) const;

  /// Input-file name for graph-backed problems, decimal id otherwise.
  std::string vertex_name(Vertex v) const;

  /// deg_{A \ deleted}(u) for u in U, recomputed from adjacency (graph) or by
  /// subtracting deleted realizers (synthetic). No quotient algebra involved.
  IntVector core_degrees_after(const VertexSet& deleted) const;

 private:
  AbsorptionProblem() = default;
  void index_tail();

  const Graph* graph_ = nullptr;
  std::int64_t q_ = 1;
  std::int64_t lift_ = 0;
  VertexSet witness_;
  VertexSet tail_;
  TraceTable table_;
  gf2::BitVector label_;
  IntVector core_degrees_;
  std::unordered_map<Vertex, gf2::BitVector> trace_of_;
};

struct ChosenTrace {
  gf2::BitVector trace;
  std::vector<Vertex> deleted;  ///< q tail vertices realizing `trace`
};

struct DeletionCertificate {
  std::vector<ChosenTrace> chosen;

  VertexSet deleted_set(std::size_t universe) const;
  std::size_t deleted_count() const;
};

/// Even Y in U, meeting every available trace evenly and the label oddly.
struct ParityCut {
  std::vector<Vertex> y;
};

using Certificate = std::variant<DeletionCertificate, ParityCut>;

/// M has the quotient coordinates of the available traces as columns; the
/// target is the quotient coordinates of the label.
struct CorrectionSystem {
  std::vector<gf2::BitVector> available;
  gf2::BitMatrix matrix;
  gf2::BitVector target;
};

CorrectionSystem correction_system(const AbsorptionProblem& p);

/// Solves M eps = t. A solution becomes a deletion certificate (the q lowest
/// realizers of each chosen trace); a dual y becomes the parity cut S or
/// S + u0, S being the core vertices y selects. The result is verified before
/// it is returned; a failed self-check throws InternalError.
Certificate solve_core_correction(const AbsorptionProblem& p);

/// Deletes the listed tuples and checks the core degrees agree mod 2q.
/// Throws InvalidInput on tuples of the wrong size, overlapping tuples, or
/// vertices outside the tail.
bool verify_deletion_certificate(const AbsorptionProblem& p, const DeletionCertificate& cert);

/// Common residue of the core modulo 2q after the deletion, if any.
std::optional<std::int64_t> achieved_residue(const AbsorptionProblem& p, const DeletionCertificate& cert);

/// Throws InvalidInput if Y is not inside U.
bool verify_parity_cut(const AbsorptionProblem& p, const ParityCut& cut);

bool verify_certificate(const AbsorptionProblem& p, const Certificate& cert);

struct AllTailOutcome {
  enum class Failure { None, Divisibility, Identity };
  bool holds = false;
  Failure failure = Failure::None;
};

/// Retaining exactly U: holds iff q | n_B for all B and
/// [b] = sum_B (n_B/q mod 2) [1_B]. When it holds, the 2q-modularity of U
/// after deleting all of R is rechecked directly.
AllTailOutcome all_tail_identity_check(const AbsorptionProblem& p);

/// Retained tail vertices whose degree mod 2q in G[W] differs from the core's
/// residue, W = A minus the deleted tuples. Requires a graph-backed problem and
/// a certificate that verifies; throws InvalidInput otherwise.
std::vector<Vertex> self_layer_check(const AbsorptionProblem& p, const DeletionCertificate& cert);

struct RankRichOutcome {
  bool rich = false;
  std::size_t rank = 0;
  /// Linearly independent available traces spanning the same subspace.
  std::vector<gf2::BitVector> spanning;
};

RankRichOutcome rank_rich_check(const TraceTable& table, std::int64_t q);
RankRichOutcome rank_rich_check(const AbsorptionProblem& p);

enum class PairTraceVerdict { Applies, Disconnected, NoOddTrace };

/// Applies iff H_2 is connected and (|U| odd or some odd trace is q-heavy).
/// When it applies, rank richness is asserted (InternalError otherwise).
PairTraceVerdict pair_trace_sufficiency(const TraceTable& table, std::int64_t q);
PairTraceVerdict pair_trace_sufficiency(const AbsorptionProblem& p);

struct TwinBlock {
  gf2::BitVector trace;
  std::vector<Vertex> vertices;
};

/// Splits R into size-q blocks of equal trace (consecutive realizers, lowest
/// ids first). Empty when some n_B is not divisible by q.
std::optional<std::vector<TwinBlock>> twin_tail_decompose(const AbsorptionProblem& p);

struct BasisTailOutcome {
  enum class Failure { None, SingletonParity, Remainder };
  bool holds = false;
  Failure failure = Failure::None;
};

/// Singleton-basis sufficient condition with distinguished vertex `base`
/// (default: smallest core vertex). Throws InvalidInput unless `blocks`
/// partitions R into size-q blocks of common trace. When it holds, U is
/// rechecked to be 2q-modular after deleting all of R.
BasisTailOutcome basis_tail_check(const AbsorptionProblem& p, const std::vector<std::vector<Vertex>>& blocks,
                                  std::optional<Vertex> base = std::nullopt);

}  // namespace modcert
