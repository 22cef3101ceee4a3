#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "modcert/gf2.hpp"
#include "modcert/types.hpp"

namespace modcert {

using Edge = std::pair<Vertex, Vertex>;

/// Dense bit rows cost n^2 bits, so graphs are capped at this order.
inline constexpr std::size_t kMaxOrder = 32768;

/// Simple undirected graph on vertices 0..n-1. Adjacency is kept twice: as
/// bit-packed rows (trace extraction, twin tests) and as sorted neighbor lists.
/// Every vertex carries the name it had in the input file.
class Graph {
 public:
  Graph() = default;

  /// Throws InvalidInput on a self-loop or an endpoint >= n. Duplicate edges
  /// collapse. Empty `names` means "0".."n-1".
  static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                          std::vector<std::string> names = {});

  std::size_t order() const noexcept { return rows_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const { return rows_[u].get(v); }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  const gf2::BitVector& row(Vertex v) const { return rows_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }

  const std::string& name(Vertex v) const { return names_[v]; }
  std::optional<Vertex> find(std::string_view name) const;

  std::vector<Edge> edges() const;

 private:
  std::vector<gf2::BitVector> rows_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, Vertex> index_;
  std::size_t edge_count_ = 0;
};

/// Sorted duplicate-free set of vertex ids below a fixed universe size.
class VertexSet {
 public:
  VertexSet() = default;

  /// Throws InvalidInput on a duplicate or an id >= universe.
  VertexSet(std::size_t universe, std::vector<Vertex> members);

  static VertexSet all(std::size_t universe);
  static VertexSet of(const Graph& g, std::vector<Vertex> members) {
    return VertexSet(g.order(), std::move(members));
  }

  std::size_t universe() const noexcept { return mask_.size(); }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }

  bool contains(Vertex v) const { return v < mask_.size() && mask_.get(v); }
  std::span<const Vertex> members() const noexcept { return members_; }
  Vertex operator[](std::size_t i) const { return members_[i]; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  /// Membership mask over the universe.
  const gf2::BitVector& mask() const noexcept { return mask_; }

  /// Position of v in sorted order.
  std::optional<std::size_t> index_of(Vertex v) const;

  bool is_subset_of(const VertexSet& other) const;
  bool disjoint_from(const VertexSet& other) const;
  VertexSet minus(const VertexSet& other) const;

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.members_ == b.members_ && a.universe() == b.universe();
  }

 private:
  std::vector<Vertex> members_;
  gf2::BitVector mask_;
};

enum class GraphFormat { EdgeList, Dimacs };

/// Edge list: optional first line "n <count>", then "u v" lines, '#' comments.
/// DIMACS: "c" comments, "p edge n m", "e u v" with 1-based ids.
/// Throws ParseError carrying the offending line number.
Graph load_graph(std::istream& in, GraphFormat format);
Graph load_graph_file(const std::filesystem::path& path, GraphFormat format);

std::optional<GraphFormat> parse_graph_format(std::string_view s);

/// deg_S(v) for each v in S, in S's sorted order.
IntVector induced_degrees(const Graph& g, const VertexSet& s);

struct Regularity {
  bool regular = false;
  /// Common degree; empty when S is empty or G[S] is not regular.
  std::optional<std::int64_t> degree;
};

Regularity is_regular(const Graph& g, const VertexSet& s);

/// Checks that every member of s lies in g. Throws InvalidInput otherwise.
void require_in_graph(const Graph& g, const VertexSet& s, std::string_view what);

}  // namespace modcert
