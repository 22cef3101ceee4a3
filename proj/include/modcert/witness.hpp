#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>

#include "modcert/gf2.hpp"
#include "modcert/graph.hpp"
#include "modcert/types.hpp"

namespace modcert {

struct ModularCheck {
  bool modular = false;
  /// Common residue in [0, q) when modular (0 for the empty set).
  std::int64_t residue = 0;
  /// Two members whose induced degrees differ modulo q, when not modular.
  std::optional<std::pair<Vertex, Vertex>> conflict;
};

/// Is deg_S constant modulo q on S? Any q >= 1 is accepted.
ModularCheck is_q_modular(const Graph& g, const VertexSet& s, std::int64_t q);

/// A set A whose induced degrees agree modulo a power of two q.
///
/// Holds a pointer to the graph; the graph must outlive the witness.
class ModularWitness {
 public:
  /// Throws InvalidInput if q is not a power of two or A is not q-modular.
  static ModularWitness make(const Graph& g, VertexSet a, std::int64_t q);

  const Graph& graph() const noexcept { return *graph_; }
  const VertexSet& set() const noexcept { return a_; }
  std::int64_t q() const noexcept { return q_; }
  std::int64_t residue() const noexcept { return residue_; }

  /// deg_A(v) for v in A. Throws InvalidInput when v is not in A.
  std::int64_t degree(Vertex v) const;
  const IntVector& degrees() const noexcept { return degrees_; }

 private:
  const Graph* graph_ = nullptr;
  VertexSet a_;
  std::int64_t q_ = 1;
  std::int64_t residue_ = 0;
  IntVector degrees_;
};

struct TerminalRegular {
  /// Empty iff A is empty.
  std::optional<std::int64_t> degree;
};
struct TooLarge {};
using TerminalResult = std::variant<TerminalRegular, TooLarge>;

/// |A| <= q forces G[A] regular: all degrees lie in [0, |A|-1] and agree mod q.
TerminalResult terminal_check(const ModularWitness& w);

/// deg_A(v) = lift + q * labels(v) (mod 2q) on `domain`.
struct TopBitLabel {
  std::int64_t lift = 0;
  VertexSet domain;
  gf2::BitVector labels;
};

/// Labels with the canonical lift d = residue in [0, q).
TopBitLabel top_bit_label(const ModularWitness& w, const VertexSet& s);

/// Labels with an explicit lift d in [0, 2q), d = residue (mod q).
TopBitLabel top_bit_label(const ModularWitness& w, const VertexSet& s, std::int64_t lift);

/// Element of F_2^U / <1_U>, stored as coordinates relative to a base position.
struct QuotientClass {
  gf2::BitVector coords;

  bool is_zero() const { return !coords.any(); }
  friend bool operator==(const QuotientClass&, const QuotientClass&) = default;
};

/// (x(u) + x(u0))_{u != u0} for x indexed by core position; `base` is u0's
/// position. Inputs differing by a constant vector map to the same output.
gf2::BitVector quotient_coords(const gf2::BitVector& x, std::size_t base = 0);

/// Same, with the base given as a vertex of the core U.
gf2::BitVector quotient_coords(const VertexSet& core, const gf2::BitVector& x, Vertex base);

inline QuotientClass quotient_class(const gf2::BitVector& x) { return {quotient_coords(x)}; }

/// For W inside A with tail R = A \ W: is rho_R(v) - q*b_A(v) constant mod 2q
/// on W? Equivalent to W being 2q-modular.
bool affine_lift_check(const ModularWitness& w, const VertexSet& sub);

}  // namespace modcert
