#pragma once

/**
 * @file topo_indices.hpp
 * @brief Wiener, Gutman, harmonic, Randic and Sombor indices.
 *
 * Every index has two routes: a brute-force evaluation over an arbitrary
 * SimpleGraph, straight from the index definition, and a closed form in
 * (n, |S|) for the generator graph of Z_n. Wiener and Gutman are exact
 * integers on both routes. The edge-sum indices are doubles accumulated
 * with compensated summation.
 *
 * The published harmonic closed form also sums 2/(2|S|) over the
 * C(n-|S|, 2) pairs of non-generators, which are not edges. It therefore
 * exceeds the edge-sum value by (n-|S|)(n-|S|-1)/(2|S|). Both that
 * expression (harmonic_formula_paper) and the edge-sum closed form
 * (harmonic_formula_corrected) are provided.
 */

#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "gengraph/generator_graph.hpp"
#include "gengraph/simple_graph.hpp"

namespace gengraph {

using Rational = boost::rational<std::int64_t>;

inline constexpr double kIndexRelativeTolerance = 1e-9;

/// |a - b| <= rel * max(|a|, |b|).
inline bool approx_equal(double a, double b,
                         double rel = kIndexRelativeTolerance) {
  if (a == b) return true;
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

/// Kahan-Babuska (Neumaier) compensated sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      compensation_ += (sum_ - t) + x;
    else
      compensation_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

namespace detail {

inline void check_formula_domain(std::int64_t n, std::int64_t s,
                                 std::string_view what) {
  if (n < 2 || s < 1 || s > n - 1)
    throw std::domain_error(std::string(what) + ": need n >= 2 and 1 <= s <= n-1, got n=" +
                            std::to_string(n) + ", s=" + std::to_string(s));
}

inline const DistanceMatrix& require_connected(const DistanceMatrix& d,
                                               std::string_view what) {
  if (!d.connected()) throw DisconnectedGraphError(std::string(what));
  return d;
}

template <typename Term>
double edge_sum(const SimpleGraph& g, Term term) {
  const auto deg = g.degrees();
  CompensatedSum sum;
  for (auto [u, v] : g.edges())
    sum.add(term(static_cast<double>(deg[u]), static_cast<double>(deg[v])));
  return sum.value();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Wiener

inline std::int64_t wiener_bruteforce(const DistanceMatrix& d) {
  detail::require_connected(d, "wiener_bruteforce");
  std::int64_t total = 0;
  for (Vertex u = 0; u < d.vertex_count(); ++u)
    for (Vertex v = u + 1; v < d.vertex_count(); ++v) total += d(u, v);
  return total;
}

inline std::int64_t wiener_bruteforce(const SimpleGraph& g) {
  return wiener_bruteforce(bfs_distances(g));
}

/// W = 1/2 s^2 - 1/2 (2n-1) s + n^2 - n.
inline Rational wiener_formula(std::int64_t n, std::int64_t s) {
  detail::check_formula_domain(n, s, "wiener_formula");
  return Rational(1, 2) * s * s - Rational(2 * n - 1, 2) * s + n * n - n;
}

/// Number of unordered vertex pairs at each finite distance >= 1.
inline std::map<std::uint32_t, std::int64_t> distance_class_sizes(
    const DistanceMatrix& d) {
  std::map<std::uint32_t, std::int64_t> out;
  for (Vertex u = 0; u < d.vertex_count(); ++u)
    for (Vertex v = u + 1; v < d.vertex_count(); ++v)
      if (d.reachable(u, v)) ++out[d(u, v)];
  return out;
}

// ---------------------------------------------------------------------------
// Gutman

inline std::int64_t gutman_bruteforce(const SimpleGraph& g,
                                      const DistanceMatrix& d) {
  detail::require_connected(d, "gutman_bruteforce");
  const auto deg = g.degrees();
  std::int64_t total = 0;
  for (Vertex u = 0; u < d.vertex_count(); ++u)
    for (Vertex v = u + 1; v < d.vertex_count(); ++v)
      total += static_cast<std::int64_t>(deg[u] * deg[v]) * d(u, v);
  return total;
}

inline std::int64_t gutman_bruteforce(const SimpleGraph& g) {
  return gutman_bruteforce(g, bfs_distances(g));
}

/// Gut = 1/2 s(s-1)(n-1)^2 + s^2 (n-s)(2n-s-2).
inline Rational gutman_formula(std::int64_t n, std::int64_t s) {
  detail::check_formula_domain(n, s, "gutman_formula");
  return Rational(s * (s - 1), 2) * (n - 1) * (n - 1) +
         Rational(s * s * (n - s) * (2 * n - s - 2));
}

// ---------------------------------------------------------------------------
// Harmonic

inline double harmonic_bruteforce(const SimpleGraph& g) {
  return detail::edge_sum(g, [](double du, double dv) { return 2.0 / (du + dv); });
}

/// The published expression:
/// s(s-1)/(2(n-1)) + (n-s) [((n-1)^2 + 3 s^2) / (2 s (n+s-1))].
inline double harmonic_formula_paper(std::int64_t n, std::int64_t s) {
  detail::check_formula_domain(n, s, "harmonic_formula_paper");
  const double nd = static_cast<double>(n);
  const double sd = static_cast<double>(s);
  return sd * (sd - 1) / (2 * (nd - 1)) +
         (nd - sd) * (((nd - 1) * (nd - 1) + 3 * sd * sd) /
                      (2 * sd * (nd + sd - 1)));
}

/// Edge sum over the two edge classes of join(K_s, complement(K_(n-s))):
/// s(s-1)/(2(n-1)) + 2 s (n-s) / (n+s-1).
inline double harmonic_formula_corrected(std::int64_t n, std::int64_t s) {
  detail::check_formula_domain(n, s, "harmonic_formula_corrected");
  const double nd = static_cast<double>(n);
  const double sd = static_cast<double>(s);
  return sd * (sd - 1) / (2 * (nd - 1)) + 2 * sd * (nd - sd) / (nd + sd - 1);
}

/// (n-s)(n-s-1)/(2s): the non-edge pair term by which the published
/// expression exceeds the edge sum.
inline Rational harmonic_discrepancy_by_formula(std::int64_t n, std::int64_t s) {
  detail::check_formula_domain(n, s, "harmonic_discrepancy_by_formula");
  return Rational((n - s) * (n - s - 1), 2 * s);
}

// ---------------------------------------------------------------------------
// Randic

inline double randic_bruteforce(const SimpleGraph& g) {
  return detail::edge_sum(
      g, [](double du, double dv) { return 1.0 / std::sqrt(du * dv); });
}

/// R = (1/(n-1)) (1/2 s(s-1) + (n-s) sqrt((n-1) s)).
inline double randic_formula(std::int64_t n, std::int64_t s) {
  detail::check_formula_domain(n, s, "randic_formula");
  const double nd = static_cast<double>(n);
  const double sd = static_cast<double>(s);
  return (0.5 * sd * (sd - 1) + (nd - sd) * std::sqrt((nd - 1) * sd)) / (nd - 1);
}

// ---------------------------------------------------------------------------
// Sombor

inline double sombor_bruteforce(const SimpleGraph& g) {
  return detail::edge_sum(
      g, [](double du, double dv) { return std::sqrt(du * du + dv * dv); });
}

/// SO = (sqrt2/2) s(s-1)(n-1) + s(n-s) sqrt((n-1)^2 + s^2).
inline double sombor_formula(std::int64_t n, std::int64_t s) {
  detail::check_formula_domain(n, s, "sombor_formula");
  const double nd = static_cast<double>(n);
  const double sd = static_cast<double>(s);
  return std::numbers::sqrt2 / 2 * sd * (sd - 1) * (nd - 1) +
         sd * (nd - sd) * std::sqrt((nd - 1) * (nd - 1) + sd * sd);
}

// ---------------------------------------------------------------------------
// Prime order, where the generator graph is K_p.

namespace prime_order {

inline Rational wiener(std::int64_t p) { return Rational(p * (p - 1), 2); }
inline Rational gutman(std::int64_t p) {
  return Rational(p * (p - 1) * (p - 1) * (p - 1), 2);
}
inline double harmonic(std::int64_t p) { return static_cast<double>(p) / 2; }
inline double randic(std::int64_t p) { return static_cast<double>(p) / 2; }
inline double sombor(std::int64_t p) {
  const double pd = static_cast<double>(p);
  return std::numbers::sqrt2 / 2 * pd * (pd - 1) * (pd - 1);
}

}  // namespace prime_order

// ---------------------------------------------------------------------------
// Report

enum class IndexKind { kWiener, kGutman, kHarmonic, kHarmonicPaper, kRandic, kSombor };

inline std::string_view index_name(IndexKind kind) {
  switch (kind) {
    case IndexKind::kWiener: return "wiener";
    case IndexKind::kGutman: return "gutman";
    case IndexKind::kHarmonic: return "harmonic";
    case IndexKind::kHarmonicPaper: return "harmonic_paper";
    case IndexKind::kRandic: return "randic";
    case IndexKind::kSombor: return "sombor";
  }
  return "?";
}

struct IndexEntry {
  IndexKind kind{};
  double brute_force = 0.0;
  double formula = 0.0;
  double absolute_difference = 0.0;
  bool agrees = false;
  // Exact values, present for Wiener and Gutman.
  std::optional<std::int64_t> exact_brute_force;
  std::optional<Rational> exact_formula;
  // A mismatch on this entry is a finding about the published formula,
  // not a failure of the implementation.
  bool informational = false;

  std::string_view name() const { return index_name(kind); }
};

struct IndexReport {
  std::uint64_t n = 0;
  std::uint64_t s = 0;
  std::vector<IndexEntry> entries;
  // harmonic_formula_paper - harmonic_bruteforce, observed and predicted.
  double harmonic_discrepancy = 0.0;
  Rational harmonic_discrepancy_predicted{0};

  const IndexEntry& at(IndexKind kind) const {
    for (const auto& e : entries)
      if (e.kind == kind) return e;
    throw std::out_of_range("index not present in report");
  }
};

namespace detail {

inline IndexEntry exact_entry(IndexKind kind, std::int64_t brute,
                              const Rational& formula) {
  IndexEntry e;
  e.kind = kind;
  e.exact_brute_force = brute;
  e.exact_formula = formula;
  e.brute_force = static_cast<double>(brute);
  e.formula = boost::rational_cast<double>(formula);
  e.agrees = formula.denominator() == 1 && formula.numerator() == brute;
  e.absolute_difference =
      std::abs(boost::rational_cast<double>(formula - Rational(brute)));
  return e;
}

inline IndexEntry numeric_entry(IndexKind kind, double brute, double formula,
                                bool informational = false) {
  IndexEntry e;
  e.kind = kind;
  e.brute_force = brute;
  e.formula = formula;
  e.absolute_difference = std::abs(formula - brute);
  e.agrees = approx_equal(brute, formula);
  e.informational = informational;
  return e;
}

}  // namespace detail

inline IndexReport compute_index_report(const GeneratorGraph& gg) {
  const auto& g = gg.graph();
  const auto n = static_cast<std::int64_t>(gg.order());
  const auto s = static_cast<std::int64_t>(gg.generator_count());
  const DistanceMatrix d = bfs_distances(g);

  IndexReport r;
  r.n = gg.order();
  r.s = gg.generator_count();

  const double harmonic = harmonic_bruteforce(g);
  const double harmonic_paper = harmonic_formula_paper(n, s);
  r.entries.push_back(detail::exact_entry(IndexKind::kWiener,
                                          wiener_bruteforce(d),
                                          wiener_formula(n, s)));
  r.entries.push_back(detail::exact_entry(IndexKind::kGutman,
                                          gutman_bruteforce(g, d),
                                          gutman_formula(n, s)));
  r.entries.push_back(detail::numeric_entry(IndexKind::kHarmonic, harmonic,
                                            harmonic_formula_corrected(n, s)));
  r.entries.push_back(detail::numeric_entry(IndexKind::kHarmonicPaper, harmonic,
                                            harmonic_paper, true));
  r.entries.push_back(detail::numeric_entry(IndexKind::kRandic,
                                            randic_bruteforce(g),
                                            randic_formula(n, s)));
  r.entries.push_back(detail::numeric_entry(IndexKind::kSombor,
                                            sombor_bruteforce(g),
                                            sombor_formula(n, s)));
  r.harmonic_discrepancy = harmonic_paper - harmonic;
  r.harmonic_discrepancy_predicted = harmonic_discrepancy_by_formula(n, s);
  return r;
}

inline IndexReport compute_index_report(std::uint64_t n) {
  return compute_index_report(GeneratorGraph(n));
}

}  // namespace gengraph
