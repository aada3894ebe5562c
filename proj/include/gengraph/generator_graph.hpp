#pragma once

/**
 * @file generator_graph.hpp
 * @brief The generator graph of Z_n and the faithful-graph family.
 *
 * Vertices of the generator graph are the elements of Z_n; x ~ y whenever at
 * least one of x, y generates Z_n. Vertex indices follow a fixed labeling:
 * generators occupy [0, |S|) and non-generators [|S|, n), each block in
 * ascending element order. Under this labeling the graph is vertex-for-vertex
 * equal to join(K_|S|, complement(K_(n-|S|))).
 */

#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gengraph/cyclic_group.hpp"
#include "gengraph/errors.hpp"
#include "gengraph/simple_graph.hpp"

namespace gengraph {

class GeneratorGraph {
 public:
  explicit GeneratorGraph(std::uint64_t n) : group_(describe_group(n)) {
    labels_ = group_.generators;
    for (std::uint64_t x = 0; x < n; ++x) {
      if (!group_.is_generator(x)) labels_.push_back(x);
    }
    index_of_.assign(n, 0);
    for (Vertex v = 0; v < labels_.size(); ++v) index_of_[labels_[v]] = v;

    // Adjacency straight from the definition, not from the join.
    graph_ = SimpleGraph(n);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (group_.is_generator(labels_[u]) || group_.is_generator(labels_[v]))
          graph_.add_edge(u, v);
      }
    }
  }

  const CyclicGroupDescriptor& group() const { return group_; }
  const SimpleGraph& graph() const { return graph_; }
  std::uint64_t order() const { return group_.order; }
  std::uint64_t generator_count() const { return group_.generator_count(); }

  std::uint64_t element_of(Vertex v) const { return labels_.at(v); }
  Vertex vertex_of(std::uint64_t element) const {
    if (element >= order())
      throw std::out_of_range("element " + std::to_string(element) +
                              " is not in Z_" + std::to_string(order()));
    return index_of_[element];
  }
  bool is_generator_vertex(Vertex v) const { return v < generator_count(); }

  /// DOT with element labels and a generator attribute on every node.
  std::string to_dot() const {
    return gengraph::to_dot(graph_, "Z" + std::to_string(order()), [&](Vertex v) {
      std::ostringstream os;
      os << "label=\"" << labels_[v] << "\", element=" << labels_[v]
         << ", generator=" << (is_generator_vertex(v) ? "true" : "false");
      return os.str();
    });
  }

 private:
  CyclicGroupDescriptor group_;
  SimpleGraph graph_;
  std::vector<std::uint64_t> labels_;
  std::vector<Vertex> index_of_;
};

inline GeneratorGraph build_generator_graph(std::uint64_t n) {
  return GeneratorGraph(n);
}

/// join(K_s, complement(K_(n-s))), the closed-form shape of the generator graph.
inline SimpleGraph generator_graph_join_form(std::uint64_t n, std::uint64_t s) {
  return join(complete_graph(s), null_graph(n - s));
}

/// n-1 for a generator, |S| otherwise.
inline std::uint64_t degree_by_formula(const GeneratorGraph& gg,
                                       std::uint64_t element) {
  if (element >= gg.order())
    throw std::out_of_range("element out of range for Z_" +
                            std::to_string(gg.order()));
  return gg.group().is_generator(element) ? gg.order() - 1
                                          : gg.generator_count();
}

/// Sorted degree multiset predicted for the generator graph of Z_n.
inline std::vector<std::size_t> degree_multiset_by_formula(std::uint64_t n,
                                                           std::uint64_t s) {
  std::vector<std::size_t> out(n - s, s);
  out.insert(out.end(), s, n - 1);
  return out;
}

/// C(s,2) + s(n-s).
inline std::uint64_t edge_count_by_formula(std::uint64_t n, std::uint64_t s) {
  return s * (s - 1) / 2 + s * (n - s);
}

// ---------------------------------------------------------------------------
// Faithfulness

/// True iff N[x] and N[y] together cover every vertex. (x, y) must be an edge.
inline bool is_faithful_edge(const SimpleGraph& g, Vertex x, Vertex y) {
  if (!g.adjacent(x, y))
    throw std::invalid_argument("is_faithful_edge: (" + std::to_string(x) +
                                ", " + std::to_string(y) + ") is not an edge");
  VertexSet cover = g.closed_neighbours(x);
  cover |= g.closed_neighbours(y);
  return cover.full();
}

struct FaithfulnessReport {
  bool is_faithful = true;
  // Set for graphs without edges, which are faithful only vacuously.
  bool no_edges = false;
  std::optional<Edge> witness_edge;
  std::optional<Vertex> witness_missing_vertex;

  std::string describe() const {
    std::ostringstream os;
    if (no_edges) {
      os << "faithful (vacuous: no edges)";
    } else if (is_faithful) {
      os << "faithful";
    } else {
      os << "not faithful: edge (" << witness_edge->first << ", "
         << witness_edge->second << ") misses vertex "
         << *witness_missing_vertex;
    }
    return os.str();
  }
};

/// Checks every edge; the first unfaithful edge in lexicographic order is
/// reported together with the smallest uncovered vertex.
inline FaithfulnessReport is_faithful_graph(const SimpleGraph& g) {
  FaithfulnessReport report;
  const auto edges = g.edges();
  report.no_edges = edges.empty();
  for (auto [x, y] : edges) {
    VertexSet cover = g.closed_neighbours(x);
    cover |= g.closed_neighbours(y);
    if (!cover.full()) {
      report.is_faithful = false;
      report.witness_edge = Edge{x, y};
      report.witness_missing_vertex = cover.first_missing();
      break;
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Structural formulas

/// 1 for prime n (the graph is complete), 2 otherwise.
inline std::size_t diameter_by_formula(std::uint64_t n) {
  if (n <= 1) throw TrivialGroupError();
  return is_prime(n) ? 1 : 2;
}

/// Max degree is at least half the vertex count, compared as 2*Delta >= |V|.
inline bool check_max_degree_bound(const SimpleGraph& g) {
  return 2 * g.max_degree() >= g.vertex_count();
}

/// Every vertex degree of the generator graph of Z_n lies in [2, n-1].
inline bool check_degree_bounds(std::uint64_t n) {
  if (n < 3)
    throw std::invalid_argument("check_degree_bounds: n must be >= 3");
  const GeneratorGraph gg(n);
  for (auto d : gg.graph().degrees()) {
    if (d < 2 || d > n - 1) return false;
  }
  return true;
}

}  // namespace gengraph
