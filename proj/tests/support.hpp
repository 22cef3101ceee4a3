#pragma once

// Shared builders for the test suites.

#include <cstdint>
#include <filesystem>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "modcert/graph.hpp"
#include "modcert/json_io.hpp"
#include "modcert/traces.hpp"

namespace modcert::testing {

inline std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(MODCERT_FIXTURE_DIR) / name;
}

inline Graph edge_list(const std::string& text) {
  std::istringstream in(text);
  return load_graph(in, GraphFormat::EdgeList);
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

inline Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) edges.emplace_back(u, static_cast<Vertex>(a + v));
  return Graph::from_edges(a + b, edges);
}

inline Graph cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph::from_edges(n, edges);
}

inline Graph path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

inline Graph petersen() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(i + 5, 5 + (i + 2) % 5);
  }
  return Graph::from_edges(10, edges);
}

inline VertexSet named(const Graph& g, const std::vector<std::string>& names) { return resolve_names(g, names); }

/// Trace table over the core {0..m-1}; each (positions, count) entry gets
/// fresh realizers numbered from m upward.
inline TraceTable make_table(std::size_t m, const std::vector<std::pair<std::vector<std::size_t>, std::int64_t>>& spec) {
  std::int64_t total = 0;
  for (const auto& [pos, count] : spec) total += count;
  const std::size_t universe = m + static_cast<std::size_t>(total);
  std::vector<Vertex> core(m);
  for (std::size_t i = 0; i < m; ++i) core[i] = static_cast<Vertex>(i);
  TraceTable::Map entries;
  Vertex next = static_cast<Vertex>(m);
  for (const auto& [pos, count] : spec) {
    gf2::BitVector mask(m);
    for (std::size_t i : pos) mask.set(i);
    auto& entry = entries[mask];
    for (std::int64_t k = 0; k < count; ++k) entry.realizers.push_back(next++);
    entry.count += count;
  }
  return TraceTable(VertexSet(universe, core), std::move(entries));
}

inline gf2::BitVector bits_of(std::uint64_t word, std::size_t len) {
  gf2::BitVector v(len);
  for (std::size_t i = 0; i < len; ++i) v.set(i, (word >> i) & 1U);
  return v;
}

}  // namespace modcert::testing
