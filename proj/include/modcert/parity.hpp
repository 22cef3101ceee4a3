#pragma once

#include "modcert/gf2.hpp"
#include "modcert/graph.hpp"

namespace modcert {

/// Split of V(G) into two parts, each inducing only even degrees.
struct ParityPartition {
  VertexSet zero;  ///< vertices with c_v = 0
  VertexSet one;   ///< vertices with c_v = 1
  gf2::BitVector coloring;
};

/// Solves (A + D) c = d over GF(2), where A is the adjacency matrix, D the
/// diagonal of degree parities and d the degree-parity vector, then splits
/// V(G) by c. The solution is the elimination's canonical one (free variables
/// 0), so an all-even graph yields (V(G), {}). Throws InternalError if the
/// system is inconsistent, which cannot happen for a simple graph.
ParityPartition parity_partition(const Graph& g);

/// Independent checker: true iff every vertex has even degree inside its own
/// part. Throws InvalidInput if (zero, one) is not a partition of V(G).
bool verify_even_partition(const Graph& g, const VertexSet& zero, const VertexSet& one);

}  // namespace modcert
