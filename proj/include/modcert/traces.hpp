#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "modcert/gf2.hpp"
#include "modcert/graph.hpp"
#include "modcert/types.hpp"
#include "modcert/witness.hpp"

namespace modcert {

struct TraceEntry {
  std::int64_t count = 0;
  /// Tail vertices x with N(x) ∩ U equal to the key, ascending.
  std::vector<Vertex> realizers;
};

/// Trace multiplicities n_B of a tail R against a core U. Keys are masks over
/// core positions (bit i is the i-th smallest core vertex), ordered by
/// gf2::SupportOrder. Traces with n_B = 0 are absent.
class TraceTable {
 public:
  using Map = std::map<gf2::BitVector, TraceEntry, gf2::SupportOrder>;

  TraceTable() = default;
  /// Throws InvalidInput if a key has the wrong length, a count disagrees with
  /// its realizer list, or a realizer lies in the core.
  TraceTable(VertexSet core, Map entries);

  const VertexSet& core() const noexcept { return core_; }
  const Map& entries() const noexcept { return entries_; }
  std::size_t core_size() const noexcept { return core_.size(); }

  std::int64_t count(const gf2::BitVector& trace) const;
  std::int64_t tail_size() const;

  /// Mask for a set of core vertices. Throws InvalidInput on a non-core vertex.
  gf2::BitVector mask_of(std::span<const Vertex> members) const;
  std::vector<Vertex> members_of(const gf2::BitVector& mask) const;

 private:
  VertexSet core_;
  Map entries_;
};

/// Exact table of N(x) ∩ U over x in R. Throws InvalidInput if U and R meet.
TraceTable compute_traces(const Graph& g, const VertexSet& core, const VertexSet& tail);

/// rho_R(u) = sum over B containing u of n_B, in core order.
IntVector rho(const TraceTable& table);

/// Orbit representative of B: whichever of B, U \ B omits the base position 0.
gf2::BitVector orbit_representative(const gf2::BitVector& trace);

struct ComplementDifference {
  /// sum over orbits of (n_B - n_{U\B}) 1_B; differs from rho by a constant.
  IntVector representative;
  /// Its mod-2 quotient class.
  QuotientClass parity;
};

ComplementDifference complement_difference_class(const TraceTable& table);

struct NotConstantModulo {
  std::int64_t modulus;
};
using NextBitResult = std::variant<QuotientClass, NotConstantModulo>;

/// Theta_m: class of ((rho - c 1) / 2^m mod 2) with c = rho(u0), defined when
/// rho is constant modulo 2^m. Zero iff rho is constant modulo 2^(m+1).
NextBitResult next_bit_obstruction(const IntVector& rho, int m);

struct DivisibilityFails {
  gf2::BitVector trace;  ///< orbit representative whose difference is not divisible
  std::int64_t difference;
};
using OrbitFormResult = std::variant<QuotientClass, DivisibilityFails>;

/// sum over orbits of ((n_B - n_{U\B}) / 2^m mod 2) [1_B], defined when every
/// oriented difference is divisible by 2^m. Agrees with next_bit_obstruction.
OrbitFormResult oriented_orbit_form(const TraceTable& table, int m);

struct PairTraceGraph {
  Graph h2;  ///< on core positions, named after the core vertices
  bool connected = false;
  bool odd_heavy_trace = false;
};

/// H_2: edge {x,y} iff n_{x,y} >= q. `names` (optional) labels the core.
PairTraceGraph pair_trace_graph(const TraceTable& table, std::int64_t q,
                                std::vector<std::string> names = {});

bool is_connected(const Graph& g);

struct NeighborhoodDiversity {
  std::size_t types = 0;
  /// Twin classes, each ascending, ordered by smallest member.
  std::vector<std::vector<Vertex>> classes;
};

/// Partition into classes of the twin relation N(u) \ {v} = N(v) \ {u}.
NeighborhoodDiversity neighborhood_diversity(const Graph& g);

}  // namespace modcert
