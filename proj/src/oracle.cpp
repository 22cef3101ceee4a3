#include "modcert/oracle.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "modcert/error.hpp"

namespace modcert::oracle {

namespace {

using Mask = std::uint32_t;

std::vector<Mask> neighbor_masks(const Graph& g, const char* what) {
  if (g.order() > kMaxOrder)
    throw InvalidInput(std::string(what) + ": graph has " + std::to_string(g.order()) + " vertices, cap is " +
                       std::to_string(kMaxOrder));
  std::vector<Mask> masks(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v)
    for (Vertex u : g.neighbors(v)) masks[v] |= Mask{1} << u;
  return masks;
}

// Among equal-size sets, the one holding the lowest differing element has the
// smaller sorted member list.
bool lex_smaller(Mask a, Mask b) {
  const Mask diff = a ^ b;
  return diff != 0 && (a & (diff & -diff)) != 0;
}

std::vector<Vertex> members(Mask m) {
  std::vector<Vertex> out;
  for (; m; m &= m - 1) out.push_back(static_cast<Vertex>(std::countr_zero(m)));
  return out;
}

void max_clique(const std::vector<Mask>& adj, Mask current, Mask candidates, std::size_t& best) {
  const auto size = static_cast<std::size_t>(std::popcount(current));
  if (candidates == 0) {
    best = std::max(best, size);
    return;
  }
  while (candidates) {
    if (size + static_cast<std::size_t>(std::popcount(candidates)) <= best) return;
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    max_clique(adj, current | (Mask{1} << v), candidates & adj[static_cast<std::size_t>(v)], best);
  }
}

std::size_t clique_number(const std::vector<Mask>& adj) {
  std::size_t best = 0;
  const Mask all = adj.empty() ? 0 : static_cast<Mask>((std::uint64_t{1} << adj.size()) - 1);
  max_clique(adj, 0, all, best);
  return best;
}

}  // namespace

MaxRegular brute_force_fG(const Graph& g) {
  const auto adj = neighbor_masks(g, "brute_force_fG");
  const std::size_t n = g.order();
  MaxRegular best;
  if (n == 0) return best;

  std::vector<int> deg(n, 0);       // |N(v) ∩ S| for every v
  std::vector<int> hist(n + 1, 0);  // degree histogram over members of S
  int distinct = 0;
  Mask s = 0;
  Mask best_set = 0;
  std::size_t best_size = 0;

  auto hist_add = [&](int d, int delta) {
    const int before = hist[static_cast<std::size_t>(d)];
    hist[static_cast<std::size_t>(d)] += delta;
    if (before == 0 && delta > 0) ++distinct;
    if (before + delta == 0 && before > 0) --distinct;
  };

  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < total; ++k) {
    const int v = std::countr_zero(k);
    const Mask bit = Mask{1} << v;
    if (s & bit) {
      hist_add(deg[static_cast<std::size_t>(v)], -1);
      s &= ~bit;
      for (Mask nb = adj[static_cast<std::size_t>(v)]; nb; nb &= nb - 1) {
        const auto u = static_cast<std::size_t>(std::countr_zero(nb));
        if (s & (Mask{1} << u)) {
          hist_add(deg[u], -1);
          hist_add(deg[u] - 1, +1);
        }
        --deg[u];
      }
    } else {
      for (Mask nb = adj[static_cast<std::size_t>(v)]; nb; nb &= nb - 1) {
        const auto u = static_cast<std::size_t>(std::countr_zero(nb));
        if (s & (Mask{1} << u)) {
          hist_add(deg[u], -1);
          hist_add(deg[u] + 1, +1);
        }
        ++deg[u];
      }
      s |= bit;
      hist_add(deg[static_cast<std::size_t>(v)], +1);
    }
    if (distinct <= 1) {
      const auto size = static_cast<std::size_t>(std::popcount(s));
      if (size > best_size || (size == best_size && lex_smaller(s, best_set))) {
        best_size = size;
        best_set = s;
      }
    }
  }
  best.size = best_size;
  best.witness = members(best_set);
  return best;
}

AlphaOmega brute_force_alpha_omega(const Graph& g) {
  const auto adj = neighbor_masks(g, "brute_force_alpha_omega");
  std::vector<Mask> co(adj.size());
  const Mask all = adj.empty() ? 0 : static_cast<Mask>((std::uint64_t{1} << adj.size()) - 1);
  for (std::size_t v = 0; v < adj.size(); ++v) co[v] = all & ~adj[v] & ~(Mask{1} << v);
  return {clique_number(co), clique_number(adj)};
}

AbsorptionSearch brute_force_absorption(const AbsorptionProblem& p, std::optional<std::uint64_t> tuple_seed) {
  const auto available = p.available_traces();
  if (available.size() > kMaxAvailableTraces)
    throw InvalidInput("brute_force_absorption: " + std::to_string(available.size()) +
                       " available traces, cap is " + std::to_string(kMaxAvailableTraces));

  const auto q = static_cast<std::size_t>(p.q());
  std::vector<std::vector<Vertex>> tuples;
  std::optional<std::mt19937_64> rng;
  if (tuple_seed) rng.emplace(*tuple_seed);
  for (const auto& b : available) {
    std::vector<Vertex> realizers = p.table().entries().at(b).realizers;
    if (rng) std::shuffle(realizers.begin(), realizers.end(), *rng);
    realizers.resize(q);
    tuples.push_back(std::move(realizers));
  }

  // Tuples are disjoint, so each one shifts the core degrees by a fixed
  // amount. Walk the selections in Gray-code order, one tuple toggled per step.
  const std::size_t universe = p.witness().universe();
  const std::int64_t modulus = 2 * p.q();
  const IntVector base = p.core_degrees_after(VertexSet(universe, {}));
  std::vector<IntVector> delta;
  for (const auto& t : tuples) delta.push_back(p.core_degrees_after(VertexSet(universe, t)) - base);

  IntVector deg = base;
  std::uint64_t eps = 0;
  for (std::uint64_t step = 0;; ++step) {
    if (is_constant_mod(deg, modulus)) {
      gf2::BitVector selection(available.size());
      for (std::size_t j = 0; j < available.size(); ++j) selection.set(j, (eps >> j) & 1U);
      return {true, std::move(selection)};
    }
    if (step + 1 == (std::uint64_t{1} << available.size())) break;
    const auto j = static_cast<std::size_t>(std::countr_zero(step + 1));
    eps ^= std::uint64_t{1} << j;
    if ((eps >> j) & 1U)
      deg += delta[j];
    else
      deg -= delta[j];
  }
  return {false, std::nullopt};
}

}  // namespace modcert::oracle
