#include "modcert/parity.hpp"

#include "modcert/error.hpp"

namespace modcert {

ParityPartition parity_partition(const Graph& g) {
  const std::size_t n = g.order();
  gf2::BitMatrix laplacian(n, n);
  gf2::BitVector parity(n);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : g.neighbors(v)) laplacian.set(v, u);
    const bool odd = g.degree(v) % 2 == 1;
    laplacian.set(v, v, odd);
    parity.set(v, odd);
  }

  const auto result = gf2::solve_or_dual(laplacian, parity);
  const auto* solution = std::get_if<gf2::Solution>(&result);
  if (!solution)
    throw InternalError("parity_partition: mod-2 Laplacian system Lc = d is inconsistent");
  if (gf2::mat_vec(laplacian, solution->x) != parity)
    throw InternalError("parity_partition: Lc != d after elimination");

  std::vector<Vertex> zero, one;
  for (Vertex v = 0; v < n; ++v) (solution->x.get(v) ? one : zero).push_back(v);
  return {VertexSet(n, std::move(zero)), VertexSet(n, std::move(one)), solution->x};
}

bool verify_even_partition(const Graph& g, const VertexSet& zero, const VertexSet& one) {
  require_in_graph(g, zero, "verify_even_partition");
  require_in_graph(g, one, "verify_even_partition");
  if (!zero.disjoint_from(one) || zero.size() + one.size() != g.order())
    throw InvalidInput("verify_even_partition: parts do not partition V(G)");
  for (const VertexSet* part : {&zero, &one}) {
    const IntVector deg = induced_degrees(g, *part);
    for (Eigen::Index i = 0; i < deg.size(); ++i)
      if (deg(i) % 2 != 0) return false;
  }
  return true;
}

}  // namespace modcert
