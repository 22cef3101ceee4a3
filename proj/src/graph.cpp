#include "modcert/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

#include "modcert/error.hpp"

namespace modcert {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges, std::vector<std::string> names) {
  if (n > kMaxOrder)
    throw InvalidInput("graph: order " + std::to_string(n) + " exceeds cap " + std::to_string(kMaxOrder));
  Graph g;
  g.rows_.assign(n, gf2::BitVector(n));
  g.adj_.resize(n);
  if (names.empty()) {
    names.reserve(n);
    for (std::size_t v = 0; v < n; ++v) names.push_back(std::to_string(v));
  }
  if (names.size() != n) throw InvalidInput("graph: name table size does not match vertex count");
  g.names_ = std::move(names);
  for (std::size_t v = 0; v < n; ++v) {
    if (!g.index_.emplace(g.names_[v], static_cast<Vertex>(v)).second)
      throw InvalidInput("graph: duplicate vertex name '" + g.names_[v] + "'");
  }

  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n)
      throw InvalidInput("graph: edge (" + std::to_string(u) + "," + std::to_string(v) +
                         ") out of range for n=" + std::to_string(n));
    if (u == v) throw InvalidInput("graph: self-loop at vertex " + std::to_string(u));
    if (g.rows_[u].get(v)) continue;
    g.rows_[u].set(v);
    g.rows_[v].set(u);
    ++g.edge_count_;
  }
  for (std::size_t v = 0; v < n; ++v)
    g.rows_[v].for_each_set([&](std::size_t u) { g.adj_[v].push_back(static_cast<Vertex>(u)); });
  return g;
}

std::optional<Vertex> Graph::find(std::string_view name) const {
  const auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

VertexSet::VertexSet(std::size_t universe, std::vector<Vertex> members)
    : members_(std::move(members)), mask_(universe) {
  std::sort(members_.begin(), members_.end());
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] >= universe)
      throw InvalidInput("vertex set: id " + std::to_string(members_[i]) +
                         " out of range for universe " + std::to_string(universe));
    if (i > 0 && members_[i] == members_[i - 1])
      throw InvalidInput("vertex set: duplicate id " + std::to_string(members_[i]));
    mask_.set(members_[i]);
  }
}

VertexSet VertexSet::all(std::size_t universe) {
  std::vector<Vertex> m(universe);
  for (std::size_t v = 0; v < universe; ++v) m[v] = static_cast<Vertex>(v);
  return VertexSet(universe, std::move(m));
}

std::optional<std::size_t> VertexSet::index_of(Vertex v) const {
  const auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it == members_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - members_.begin());
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  return std::all_of(members_.begin(), members_.end(), [&](Vertex v) { return other.contains(v); });
}

bool VertexSet::disjoint_from(const VertexSet& other) const {
  return std::none_of(members_.begin(), members_.end(), [&](Vertex v) { return other.contains(v); });
}

VertexSet VertexSet::minus(const VertexSet& other) const {
  std::vector<Vertex> out;
  for (Vertex v : members_)
    if (!other.contains(v)) out.push_back(v);
  return VertexSet(universe(), std::move(out));
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::optional<std::uint64_t> parse_uint(std::string_view s) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

struct RawLine {
  std::size_t number;
  std::vector<std::string> tokens;
};

Graph load_edge_list(std::istream& in) {
  std::vector<RawLine> lines;
  std::string text;
  for (std::size_t number = 1; std::getline(in, text); ++number) {
    std::string_view view = text;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    auto tokens = split_ws(view);
    if (tokens.empty()) continue;
    if (tokens.size() > 2) throw ParseError(number, "expected 'u v', got " + std::to_string(tokens.size()) + " tokens");
    lines.push_back({number, {tokens.begin(), tokens.end()}});
  }

  std::optional<std::uint64_t> declared;
  std::size_t first = 0;
  if (!lines.empty() && lines[0].tokens.size() == 2 && lines[0].tokens[0] == "n") {
    declared = parse_uint(lines[0].tokens[1]);
    if (!declared) throw ParseError(lines[0].number, "bad vertex count '" + lines[0].tokens[1] + "'");
    first = 1;
  }

  std::vector<Edge> edges;
  auto check_loop = [&](const RawLine& l, Vertex u, Vertex v) {
    if (u == v) throw ParseError(l.number, "self-loop at vertex '" + l.tokens[0] + "'");
  };

  if (declared) {
    for (std::size_t i = first; i < lines.size(); ++i) {
      const auto& l = lines[i];
      std::vector<Vertex> ids;
      for (const auto& tok : l.tokens) {
        const auto id = parse_uint(tok);
        if (!id) throw ParseError(l.number, "vertex id '" + tok + "' is not a nonnegative integer");
        if (*id >= *declared)
          throw ParseError(l.number, "vertex id " + tok + " out of declared range [0," +
                                         std::to_string(*declared) + ")");
        ids.push_back(static_cast<Vertex>(*id));
      }
      if (ids.size() == 2) {
        check_loop(l, ids[0], ids[1]);
        edges.emplace_back(ids[0], ids[1]);
      }
    }
    if (*declared > kMaxOrder) throw ParseError(lines[0].number, "vertex count exceeds order cap");
    return Graph::from_edges(*declared, edges);
  }

  const bool numeric = std::all_of(lines.begin(), lines.end(), [](const RawLine& l) {
    return std::all_of(l.tokens.begin(), l.tokens.end(),
                       [](const std::string& t) { return parse_uint(t).has_value(); });
  });

  if (numeric) {
    std::uint64_t n = 0;
    for (const auto& l : lines)
      for (const auto& t : l.tokens) n = std::max(n, *parse_uint(t) + 1);
    if (n > kMaxOrder) throw ParseError(0, "vertex id " + std::to_string(n - 1) + " exceeds order cap");
    for (const auto& l : lines) {
      if (l.tokens.size() != 2) continue;
      const auto u = static_cast<Vertex>(*parse_uint(l.tokens[0]));
      const auto v = static_cast<Vertex>(*parse_uint(l.tokens[1]));
      check_loop(l, u, v);
      edges.emplace_back(u, v);
    }
    return Graph::from_edges(n, edges);
  }

  std::vector<std::string> names;
  std::unordered_map<std::string, Vertex> ids;
  auto intern = [&](const std::string& name) {
    const auto [it, inserted] = ids.emplace(name, static_cast<Vertex>(names.size()));
    if (inserted) names.push_back(name);
    return it->second;
  };
  for (const auto& l : lines) {
    const Vertex u = intern(l.tokens[0]);
    if (l.tokens.size() == 2) {
      const Vertex v = intern(l.tokens[1]);
      check_loop(l, u, v);
      edges.emplace_back(u, v);
    }
  }
  const std::size_t n = names.size();
  return Graph::from_edges(n, edges, std::move(names));
}

Graph load_dimacs(std::istream& in) {
  std::optional<std::uint64_t> n;
  std::vector<Edge> edges;
  std::string text;
  for (std::size_t number = 1; std::getline(in, text); ++number) {
    const auto tokens = split_ws(text);
    if (tokens.empty() || tokens[0] == "c") continue;
    if (tokens[0] == "p") {
      if (n) throw ParseError(number, "duplicate 'p' header");
      if (tokens.size() != 4 || (tokens[1] != "edge" && tokens[1] != "col"))
        throw ParseError(number, "expected 'p edge <n> <m>'");
      n = parse_uint(tokens[2]);
      if (!n || !parse_uint(tokens[3])) throw ParseError(number, "bad counts in 'p' header");
      continue;
    }
    if (tokens[0] == "e") {
      if (!n) throw ParseError(number, "edge line before 'p' header");
      if (tokens.size() != 3) throw ParseError(number, "expected 'e <u> <v>'");
      const auto u = parse_uint(tokens[1]);
      const auto v = parse_uint(tokens[2]);
      if (!u || !v) throw ParseError(number, "vertex ids must be positive integers");
      if (*u < 1 || *u > *n || *v < 1 || *v > *n)
        throw ParseError(number, "vertex id out of declared range [1," + std::to_string(*n) + "]");
      if (*u == *v) throw ParseError(number, "self-loop at vertex " + std::to_string(*u));
      edges.emplace_back(static_cast<Vertex>(*u - 1), static_cast<Vertex>(*v - 1));
      continue;
    }
    throw ParseError(number, "unrecognized line type '" + std::string(tokens[0]) + "'");
  }
  if (!n) throw ParseError(0, "missing 'p edge' header");
  if (*n > kMaxOrder) throw ParseError(0, "vertex count exceeds order cap");
  std::vector<std::string> names;
  names.reserve(*n);
  for (std::uint64_t v = 1; v <= *n; ++v) names.push_back(std::to_string(v));
  return Graph::from_edges(*n, edges, std::move(names));
}

}  // namespace

Graph load_graph(std::istream& in, GraphFormat format) {
  return format == GraphFormat::Dimacs ? load_dimacs(in) : load_edge_list(in);
}

Graph load_graph_file(const std::filesystem::path& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  return load_graph(in, format);
}

std::optional<GraphFormat> parse_graph_format(std::string_view s) {
  if (s == "edge-list") return GraphFormat::EdgeList;
  if (s == "dimacs") return GraphFormat::Dimacs;
  return std::nullopt;
}

void require_in_graph(const Graph& g, const VertexSet& s, std::string_view what) {
  if (s.universe() != g.order())
    throw InvalidInput(std::string(what) + ": vertex set universe " + std::to_string(s.universe()) +
                       " does not match graph order " + std::to_string(g.order()));
}

IntVector induced_degrees(const Graph& g, const VertexSet& s) {
  require_in_graph(g, s, "induced_degrees");
  IntVector deg(static_cast<Eigen::Index>(s.size()));
  for (std::size_t i = 0; i < s.size(); ++i)
    deg(static_cast<Eigen::Index>(i)) = static_cast<std::int64_t>((g.row(s[i]) & s.mask()).count());
  return deg;
}

Regularity is_regular(const Graph& g, const VertexSet& s) {
  const IntVector deg = induced_degrees(g, s);
  if (deg.size() == 0) return {true, std::nullopt};
  if ((deg.array() == deg(0)).all()) return {true, deg(0)};
  return {false, std::nullopt};
}

}  // namespace modcert
