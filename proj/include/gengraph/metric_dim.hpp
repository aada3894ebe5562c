#pragma once

/**
 * @file metric_dim.hpp
 * @brief Distance representations, resolving sets and metric dimension.
 *
 * A landmark list W resolves a connected graph when the vectors
 * r(u|W) = (d(u, w_1), ..., d(u, w_k)) are pairwise distinct. The exact
 * search enumerates landmark sets by ascending size and, within a size, in
 * lexicographic order, so the returned basis is the lexicographically least
 * minimum one.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gengraph/errors.hpp"
#include "gengraph/generator_graph.hpp"
#include "gengraph/simple_graph.hpp"

namespace gengraph {

using DistanceVector = std::vector<DistanceMatrix::Distance>;

inline constexpr std::size_t kDefaultMetricDimensionCap = 16;

namespace detail {

inline void check_landmarks(const DistanceMatrix& d,
                            std::span<const Vertex> landmarks) {
  for (Vertex w : landmarks) {
    if (w >= d.vertex_count())
      throw std::out_of_range("landmark " + std::to_string(w) +
                              " is not a vertex");
  }
}

// Fills `out` with the representation of u without allocating.
inline void fill_representation(const DistanceMatrix& d, Vertex u,
                                std::span<const Vertex> landmarks,
                                DistanceVector& out) {
  out.resize(landmarks.size());
  for (std::size_t i = 0; i < landmarks.size(); ++i) out[i] = d(u, landmarks[i]);
}

}  // namespace detail

inline DistanceVector representation(const DistanceMatrix& d, Vertex u,
                                     std::span<const Vertex> landmarks) {
  if (!d.connected()) throw DisconnectedGraphError("representation");
  if (u >= d.vertex_count())
    throw std::out_of_range("vertex " + std::to_string(u) + " is not a vertex");
  detail::check_landmarks(d, landmarks);
  DistanceVector out;
  detail::fill_representation(d, u, landmarks, out);
  return out;
}

inline DistanceVector representation(const SimpleGraph& g, Vertex u,
                                     std::span<const Vertex> landmarks) {
  return representation(bfs_distances(g), u, landmarks);
}

struct ResolvingSetResult {
  std::vector<Vertex> landmarks;
  // representations[u] = r(u | landmarks)
  std::vector<DistanceVector> representations;
  bool resolves = false;
  // First pair (in order of the second vertex) sharing a representation.
  std::optional<Edge> collision;
};

inline ResolvingSetResult is_resolving(const DistanceMatrix& d,
                                       std::span<const Vertex> landmarks) {
  if (!d.connected()) throw DisconnectedGraphError("is_resolving");
  detail::check_landmarks(d, landmarks);
  ResolvingSetResult r;
  r.landmarks.assign(landmarks.begin(), landmarks.end());
  r.representations.resize(d.vertex_count());
  std::map<DistanceVector, Vertex> seen;
  for (Vertex u = 0; u < d.vertex_count(); ++u) {
    detail::fill_representation(d, u, landmarks, r.representations[u]);
    auto [it, inserted] = seen.emplace(r.representations[u], u);
    if (!inserted && !r.collision) r.collision = Edge{it->second, u};
  }
  r.resolves = !r.collision.has_value();
  return r;
}

inline ResolvingSetResult is_resolving(const SimpleGraph& g,
                                       std::span<const Vertex> landmarks) {
  return is_resolving(bfs_distances(g), landmarks);
}

/// Fast yes/no variant for subset search. Assumes a connected matrix.
inline bool resolves(const DistanceMatrix& d, std::span<const Vertex> landmarks) {
  const std::size_t n = d.vertex_count();
  std::vector<DistanceVector> reps(n);
  for (Vertex u = 0; u < n; ++u) detail::fill_representation(d, u, landmarks, reps[u]);
  std::sort(reps.begin(), reps.end());
  return std::adjacent_find(reps.begin(), reps.end()) == reps.end();
}

struct MetricBasis {
  std::size_t dimension = 0;
  std::vector<Vertex> basis;
};

/// Calls fn(subset) for every k-subset of [0, n) in lexicographic order until
/// fn returns true. Returns whether fn ever returned true.
template <typename Fn>
bool for_each_subset_of_size(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return false;
  std::vector<Vertex> subset(k);
  std::iota(subset.begin(), subset.end(), Vertex{0});
  while (true) {
    if (fn(std::span<const Vertex>(subset))) return true;
    // Advance to the next combination.
    std::size_t i = k;
    while (i > 0 && subset[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return false;
    ++subset[i - 1];
    for (std::size_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
}

/// Exact metric dimension by exhaustive search in ascending size.
inline MetricBasis metric_dimension_bruteforce(
    const SimpleGraph& g, std::size_t cap = kDefaultMetricDimensionCap) {
  const std::size_t n = g.vertex_count();
  if (n < 2)
    throw std::invalid_argument("metric_dimension_bruteforce: need >= 2 vertices");
  if (n > cap)
    throw InstanceTooLargeError(
        "instance too large for exact search: " + std::to_string(n) +
        " vertices exceeds cap " + std::to_string(cap));
  const DistanceMatrix d = bfs_distances(g);
  if (!d.connected()) throw DisconnectedGraphError("metric_dimension_bruteforce");

  MetricBasis result;
  for (std::size_t k = 1; k < n; ++k) {
    const bool found = for_each_subset_of_size(n, k, [&](std::span<const Vertex> w) {
      if (!resolves(d, w)) return false;
      result.dimension = k;
      result.basis.assign(w.begin(), w.end());
      return true;
    });
    if (found) return result;
  }
  // Unreachable for n >= 2: any n-1 vertices resolve a connected graph.
  throw std::logic_error("metric_dimension_bruteforce: no resolving set found");
}

/// n-1 when every nonzero element generates (n = |S|+1), else n-2.
inline std::size_t metric_dimension_formula(std::uint64_t n) {
  if (n <= 1) throw TrivialGroupError();
  return n == totient(n) + 1 ? n - 1 : n - 2;
}

// ---------------------------------------------------------------------------
// Constructions behind the closed form, on the fixed generator-graph labeling
// (g_1 = vertex 0 is the smallest generator, g*_1 = vertex |S| the smallest
// non-generator).

/// Explicit resolving set of size metric_dimension_formula(n): the generator
/// set when there is a single non-generator, otherwise every vertex except
/// g_1 and g*_1.
inline std::vector<Vertex> constructed_resolving_set(const GeneratorGraph& gg) {
  const std::size_t n = gg.order();
  const std::size_t s = gg.generator_count();
  std::vector<Vertex> w;
  if (n - s == 1) {
    for (Vertex v = 0; v < s; ++v) w.push_back(v);
    return w;
  }
  for (Vertex v = 0; v < n; ++v)
    if (v != 0 && v != s) w.push_back(v);
  return w;
}

/// The one-smaller sets the lower-bound argument shows cannot resolve.
/// Single non-generator: S minus g_1. Otherwise: V minus {g_1, g*_1, g_i} for
/// each i >= 2 and V minus {g_1, g*_1, g*_j} for each j >= 2.
inline std::vector<std::vector<Vertex>> constructed_deficient_sets(
    const GeneratorGraph& gg) {
  const std::size_t n = gg.order();
  const std::size_t s = gg.generator_count();
  std::vector<std::vector<Vertex>> out;
  if (n - s == 1) {
    std::vector<Vertex> w;
    for (Vertex v = 1; v < s; ++v) w.push_back(v);
    out.push_back(std::move(w));
    return out;
  }
  auto without = [&](Vertex extra) {
    std::vector<Vertex> w;
    for (Vertex v = 0; v < n; ++v)
      if (v != 0 && v != s && v != extra) w.push_back(v);
    return w;
  };
  for (Vertex gi = 1; gi < s; ++gi) out.push_back(without(gi));
  for (Vertex gj = s + 1; gj < n; ++gj) out.push_back(without(gj));
  return out;
}

/// Executes both halves of the single-non-generator argument literally:
/// the generator set resolves, and no (n-2)-subset does.
inline bool lemma_single_nongenerator_check(std::uint64_t n) {
  if (n <= 1) throw TrivialGroupError();
  if (n - totient(n) != 1)
    throw std::invalid_argument(
        "lemma_single_nongenerator_check: Z_" + std::to_string(n) +
        " has more than one non-generator");
  const GeneratorGraph gg(n);
  const DistanceMatrix d = bfs_distances(gg.graph());
  std::vector<Vertex> generators(gg.generator_count());
  std::iota(generators.begin(), generators.end(), Vertex{0});
  if (!resolves(d, generators)) return false;
  const bool some_smaller_resolves = for_each_subset_of_size(
      n, n - 2, [&](std::span<const Vertex> w) { return resolves(d, w); });
  return !some_smaller_resolves;
}

// ---------------------------------------------------------------------------
// Twins

/// u, v are twins when N(u) \ {v} == N(v) \ {u}; this covers both adjacent
/// (closed) and non-adjacent (open) twins.
inline bool are_twins(const SimpleGraph& g, Vertex u, Vertex v) {
  if (u == v) return true;
  VertexSet nu = g.neighbours(u);
  VertexSet nv = g.neighbours(v);
  nu.erase(v);
  nv.erase(u);
  return nu == nv;
}

/// Twin equivalence classes, each ascending, ordered by smallest member.
inline std::vector<std::vector<Vertex>> twin_classes(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<Vertex>> classes;
  std::vector<bool> assigned(n, false);
  for (Vertex u = 0; u < n; ++u) {
    if (assigned[u]) continue;
    classes.push_back({u});
    assigned[u] = true;
    for (Vertex v = u + 1; v < n; ++v) {
      if (!assigned[v] && are_twins(g, u, v)) {
        classes.back().push_back(v);
        assigned[v] = true;
      }
    }
  }
  return classes;
}

/// A resolving set misses at most one vertex of each twin class, so its size
/// is at least n - (number of twin classes).
inline std::size_t twin_lower_bound(const SimpleGraph& g) {
  return g.vertex_count() - twin_classes(g).size();
}

}  // namespace gengraph
