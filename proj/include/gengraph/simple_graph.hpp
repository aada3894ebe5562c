#pragma once

/**
 * @file simple_graph.hpp
 * @brief Dense simple undirected graphs, distances and text export.
 *
 * Adjacency is kept as one bitset row per vertex. Rows are 64-bit words so
 * neighbourhood unions and BFS frontier expansion are word-parallel; this is
 * what keeps all-pairs distances on a few hundred vertices cheap.
 */

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace gengraph {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// A fixed-size bitset over vertex indices.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t size)
      : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }

  bool contains(Vertex v) const {
    return (words_[v / 64] >> (v % 64)) & 1u;
  }
  void insert(Vertex v) { words_[v / 64] |= std::uint64_t{1} << (v % 64); }
  void erase(Vertex v) { words_[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }

  std::size_t count() const {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }
  bool empty() const {
    return std::all_of(words_.begin(), words_.end(),
                       [](std::uint64_t w) { return w == 0; });
  }
  bool full() const { return count() == size_; }

  VertexSet& operator|=(const VertexSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  // Removes every element of `other`.
  VertexSet& subtract(const VertexSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }

  /// Calls fn(v) for each member in ascending order.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        fn(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  /// Smallest member not in this set, or size() if the set is full.
  Vertex first_missing() const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (~words_[i] != 0) {
        Vertex v = i * 64 + static_cast<std::size_t>(std::countr_zero(~words_[i]));
        return std::min(v, size_);
      }
    }
    return size_;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t vertex_count)
      : rows_(vertex_count, VertexSet(vertex_count)) {}

  std::size_t vertex_count() const { return rows_.size(); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& row : rows_) twice += row.count();
    return twice / 2;
  }

  bool adjacent(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return rows_[u].contains(v);
  }

  void add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    rows_[u].insert(v);
    rows_[v].insert(u);
  }

  std::size_t degree(Vertex v) const {
    check_vertex(v);
    return rows_[v].count();
  }

  std::size_t max_degree() const {
    std::size_t best = 0;
    for (const auto& row : rows_) best = std::max(best, row.count());
    return best;
  }

  std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> out;
    out.reserve(rows_.size());
    for (const auto& row : rows_) out.push_back(row.count());
    return out;
  }

  /// Open neighbourhood N(v).
  const VertexSet& neighbours(Vertex v) const {
    check_vertex(v);
    return rows_[v];
  }

  /// Closed neighbourhood N[v].
  VertexSet closed_neighbours(Vertex v) const {
    VertexSet out = neighbours(v);
    out.insert(v);
    return out;
  }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < rows_.size(); ++u) {
      rows_[u].for_each([&](Vertex v) {
        if (u < v) out.emplace_back(u, v);
      });
    }
    return out;
  }

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  void check_vertex(Vertex v) const {
    if (v >= rows_.size()) {
      throw std::out_of_range("vertex " + std::to_string(v) +
                              " out of range for graph on " +
                              std::to_string(rows_.size()) + " vertices");
    }
  }

  std::vector<VertexSet> rows_;
};

// ---------------------------------------------------------------------------
// Constructors

inline SimpleGraph complete_graph(std::size_t n) {
  SimpleGraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline SimpleGraph null_graph(std::size_t n) { return SimpleGraph(n); }

inline SimpleGraph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: n must be >= 3");
  SimpleGraph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

/// Disjoint union of g1 and g2 (g1's vertices first) plus every cross edge.
inline SimpleGraph join(const SimpleGraph& g1, const SimpleGraph& g2) {
  const std::size_t a = g1.vertex_count();
  const std::size_t b = g2.vertex_count();
  SimpleGraph g(a + b);
  for (auto [u, v] : g1.edges()) g.add_edge(u, v);
  for (auto [u, v] : g2.edges()) g.add_edge(a + u, a + v);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

inline SimpleGraph complement(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  SimpleGraph out(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

// ---------------------------------------------------------------------------
// Distances

class DistanceMatrix {
 public:
  using Distance = std::uint32_t;
  static constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n)
      : n_(n), entries_(n * n, kUnreachable) {}

  std::size_t vertex_count() const { return n_; }

  Distance operator()(Vertex u, Vertex v) const { return entries_[u * n_ + v]; }
  Distance& operator()(Vertex u, Vertex v) { return entries_[u * n_ + v]; }

  bool reachable(Vertex u, Vertex v) const {
    return (*this)(u, v) != kUnreachable;
  }

  bool connected() const {
    return std::find(entries_.begin(), entries_.end(), kUnreachable) ==
           entries_.end();
  }

 private:
  std::size_t n_ = 0;
  std::vector<Distance> entries_;
};

/// Single-source hop distances by level-synchronous BFS on bitset rows.
inline std::vector<DistanceMatrix::Distance> bfs_from(const SimpleGraph& g,
                                                      Vertex source) {
  const std::size_t n = g.vertex_count();
  std::vector<DistanceMatrix::Distance> dist(n, DistanceMatrix::kUnreachable);
  VertexSet visited(n);
  VertexSet frontier(n);
  frontier.insert(source);
  visited.insert(source);
  DistanceMatrix::Distance level = 0;
  while (!frontier.empty()) {
    VertexSet next(n);
    frontier.for_each([&](Vertex u) {
      dist[u] = level;
      next |= g.neighbours(u);
    });
    next.subtract(visited);
    visited |= next;
    frontier = std::move(next);
    ++level;
  }
  return dist;
}

inline DistanceMatrix bfs_distances(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  DistanceMatrix d(n);
  for (Vertex s = 0; s < n; ++s) {
    auto row = bfs_from(g, s);
    for (Vertex t = 0; t < n; ++t) d(s, t) = row[t];
  }
  return d;
}

struct Disconnected {
  friend bool operator==(Disconnected, Disconnected) { return true; }
};

/// Either the diameter of a connected graph or the Disconnected marker.
using Diameter = std::variant<Disconnected, std::size_t>;

inline Diameter diameter(const DistanceMatrix& d) {
  std::size_t best = 0;
  for (Vertex u = 0; u < d.vertex_count(); ++u) {
    for (Vertex v = 0; v < d.vertex_count(); ++v) {
      if (!d.reachable(u, v)) return Disconnected{};
      best = std::max<std::size_t>(best, d(u, v));
    }
  }
  return best;
}

inline Diameter diameter(const SimpleGraph& g) {
  return diameter(bfs_distances(g));
}

inline bool is_connected(const SimpleGraph& g) {
  if (g.vertex_count() == 0) return true;
  auto row = bfs_from(g, 0);
  return std::find(row.begin(), row.end(), DistanceMatrix::kUnreachable) ==
         row.end();
}

// ---------------------------------------------------------------------------
// Export

/// One "u v" line per edge, u < v, lexicographically sorted.
inline void write_edge_list(std::ostream& os, const SimpleGraph& g) {
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

inline std::string to_edge_list(const SimpleGraph& g) {
  std::ostringstream os;
  write_edge_list(os, g);
  return os.str();
}

/// Per-vertex attribute text placed inside `[...]` in DOT output.
using DotVertexAttributes = std::function<std::string(Vertex)>;

inline void write_dot(std::ostream& os, const SimpleGraph& g,
                      const std::string& name = "G",
                      const DotVertexAttributes& attributes = {}) {
  os << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    os << "  " << v;
    if (attributes) os << " [" << attributes(v) << ']';
    os << ";\n";
  }
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
}

inline std::string to_dot(const SimpleGraph& g, const std::string& name = "G",
                          const DotVertexAttributes& attributes = {}) {
  std::ostringstream os;
  write_dot(os, g, name, attributes);
  return os.str();
}

}  // namespace gengraph
