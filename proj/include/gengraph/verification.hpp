#pragma once

/**
 * @file verification.hpp
 * @brief Cross-checks every closed form against brute force over a range of n.
 *
 * Each check ends as Pass, Fail or Info. Info marks an expected disagreement
 * with a published formula (the harmonic expression); it is reported but does
 * not count as a failure.
 */

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "gengraph/generator_graph.hpp"
#include "gengraph/metric_dim.hpp"
#include "gengraph/parallel.hpp"
#include "gengraph/report_io.hpp"
#include "gengraph/topo_indices.hpp"

namespace gengraph {

enum class CheckStatus { kPass, kFail, kInfo };

inline const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "FAIL";
    case CheckStatus::kInfo: return "info";
  }
  return "?";
}

struct CheckRecord {
  std::string name;
  CheckStatus status = CheckStatus::kPass;
  std::string expected;
  std::string actual;
};

struct NRecord {
  std::uint64_t n = 0;
  std::vector<CheckRecord> checks;
  double harmonic_discrepancy = 0.0;

  std::size_t count(CheckStatus s) const {
    return static_cast<std::size_t>(std::count_if(
        checks.begin(), checks.end(), [s](const CheckRecord& c) { return c.status == s; }));
  }
};

struct VerificationSummary {
  std::uint64_t n_min = 0;
  std::uint64_t n_max = 0;
  std::size_t mdim_cap = 0;
  std::vector<NRecord> records;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t informational = 0;

  bool ok() const { return failed == 0; }
};

namespace detail {

template <typename T>
std::string to_text(const T& v) {
  std::ostringstream os;
  if constexpr (std::is_floating_point_v<T>)
    os << format_double(v);
  else
    os << v;
  return os.str();
}

template <typename T>
std::string to_text(const std::vector<T>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

class Recorder {
 public:
  explicit Recorder(NRecord& record) : record_(record) {}

  template <typename E, typename A>
  void expect(std::string name, bool ok, const E& expected, const A& actual) {
    record_.checks.push_back({std::move(name),
                              ok ? CheckStatus::kPass : CheckStatus::kFail,
                              to_text(expected), to_text(actual)});
  }

  template <typename T>
  void expect_equal(std::string name, const T& expected, const T& actual) {
    expect(std::move(name), expected == actual, expected, actual);
  }

  void expect_close(std::string name, double expected, double actual) {
    expect(std::move(name), approx_equal(expected, actual), expected, actual);
  }

  void info(std::string name, bool agrees, double expected, double actual) {
    record_.checks.push_back({std::move(name),
                              agrees ? CheckStatus::kPass : CheckStatus::kInfo,
                              to_text(expected), to_text(actual)});
  }

 private:
  NRecord& record_;
};

}  // namespace detail

// Absolute tolerance for the harmonic discrepancy law; the difference can be 0.
inline constexpr double kDiscrepancyTolerance = 1e-9;

inline NRecord verify_order(std::uint64_t n, std::size_t mdim_cap) {
  NRecord record;
  record.n = n;
  detail::Recorder rec(record);

  const GeneratorGraph gg(n);
  const auto& g = gg.graph();
  const std::uint64_t s = gg.generator_count();
  const bool prime = is_prime(n);
  const DistanceMatrix d = bfs_distances(g);

  // Structure
  rec.expect("totient_matches_generators", totient(n) == s, totient(n), s);
  rec.expect("join_equality", g == generator_graph_join_form(n, s),
             std::string("join(K_") + std::to_string(s) + ", null(" +
                 std::to_string(n - s) + "))",
             g == generator_graph_join_form(n, s) ? std::string("equal")
                                                  : std::string("different"));
  {
    std::size_t bad = 0;
    for (Vertex v = 0; v < n; ++v)
      if (g.degree(v) != degree_by_formula(gg, gg.element_of(v))) ++bad;
    rec.expect("degree_formula", bad == 0, std::string("0 mismatching vertices"),
               std::to_string(bad) + " mismatching vertices");
  }
  auto degrees = g.degrees();
  std::sort(degrees.begin(), degrees.end());
  rec.expect_equal("degree_multiset", degree_multiset_by_formula(n, s), degrees);
  rec.expect_equal<std::size_t>("edge_count_formula", edge_count_by_formula(n, s),
                                g.edge_count());
  const bool complete = g.edge_count() == n * (n - 1) / 2;
  rec.expect_equal("completeness_iff_prime", prime, complete);
  const auto faithful = is_faithful_graph(g);
  rec.expect("faithful", faithful.is_faithful && !faithful.no_edges,
             std::string("faithful"), faithful.describe());
  const Diameter diam = diameter(d);
  const bool diam_ok = std::holds_alternative<std::size_t>(diam) &&
                       std::get<std::size_t>(diam) == diameter_by_formula(n);
  rec.expect("diameter_formula", diam_ok, diameter_by_formula(n),
             std::holds_alternative<std::size_t>(diam)
                 ? std::to_string(std::get<std::size_t>(diam))
                 : std::string("disconnected"));
  rec.expect("max_degree_bound", check_max_degree_bound(g),
             std::string("2*Delta >= ") + std::to_string(n),
             std::string("2*Delta = ") + std::to_string(2 * g.max_degree()));
  if (n >= 3) {
    const auto [lo, hi] = std::minmax_element(degrees.begin(), degrees.end());
    rec.expect("degree_bounds", check_degree_bounds(n),
               std::string("[2, ") + std::to_string(n - 1) + "]",
               "[" + std::to_string(*lo) + ", " + std::to_string(*hi) + "]");
  }

  // Indices
  const IndexReport report = compute_index_report(gg);
  for (const auto& e : report.entries) {
    const std::string name = std::string(e.name());
    if (e.informational) {
      rec.info(name, e.agrees, e.formula, e.brute_force);
    } else if (e.exact_brute_force) {
      rec.expect(name, e.agrees, format_rational(*e.exact_formula),
                 *e.exact_brute_force);
    } else {
      rec.expect(name, e.agrees, e.formula, e.brute_force);
    }
  }
  record.harmonic_discrepancy = report.harmonic_discrepancy;
  const double predicted =
      boost::rational_cast<double>(report.harmonic_discrepancy_predicted);
  rec.expect("harmonic_discrepancy_law",
             std::abs(report.harmonic_discrepancy - predicted) <= kDiscrepancyTolerance,
             predicted, report.harmonic_discrepancy);
  {
    const auto dc = distance_class_sizes(d);
    const std::int64_t d1 = dc.contains(1) ? dc.at(1) : 0;
    const std::int64_t d2 = dc.contains(2) ? dc.at(2) : 0;
    const auto pairs = static_cast<std::int64_t>(n * (n - 1) / 2);
    rec.expect("wiener_decomposition",
               d1 + d2 == pairs && d1 == static_cast<std::int64_t>(g.edge_count()) &&
                   d1 + 2 * d2 == report.at(IndexKind::kWiener).exact_brute_force,
               std::string("|D1|+|D2|=C(n,2), |D1|=|E|, W=|D1|+2|D2|"),
               "|D1|=" + std::to_string(d1) + " |D2|=" + std::to_string(d2));
  }
  if (prime) {
    const auto p = static_cast<std::int64_t>(n);
    rec.expect("prime_wiener", prime_order::wiener(p) ==
                                   Rational(*report.at(IndexKind::kWiener).exact_brute_force),
               format_rational(prime_order::wiener(p)),
               *report.at(IndexKind::kWiener).exact_brute_force);
    rec.expect("prime_gutman", prime_order::gutman(p) ==
                                   Rational(*report.at(IndexKind::kGutman).exact_brute_force),
               format_rational(prime_order::gutman(p)),
               *report.at(IndexKind::kGutman).exact_brute_force);
    rec.expect_close("prime_harmonic", prime_order::harmonic(p),
                     report.at(IndexKind::kHarmonic).brute_force);
    rec.expect_close("prime_randic", prime_order::randic(p),
                     report.at(IndexKind::kRandic).brute_force);
    rec.expect_close("prime_sombor", prime_order::sombor(p),
                     report.at(IndexKind::kSombor).brute_force);
  }

  // Metric dimension
  const std::size_t mdim = metric_dimension_formula(n);
  rec.expect("mdim_prime_phrasing", mdim == (prime ? n - 1 : n - 2),
             prime ? n - 1 : n - 2, mdim);
  if (n <= mdim_cap) {
    const auto exact = metric_dimension_bruteforce(g, mdim_cap);
    rec.expect_equal("mdim_exact", mdim, exact.dimension);
    const auto deficient = constructed_deficient_sets(gg);
    const auto resolving = std::count_if(
        deficient.begin(), deficient.end(),
        [&](const std::vector<Vertex>& w) { return resolves(d, w); });
    rec.expect("mdim_deficient_sets_fail", resolving == 0,
               std::string("0 of ") + std::to_string(deficient.size()) + " resolve",
               std::to_string(resolving) + " of " + std::to_string(deficient.size()) +
                   " resolve");
  }
  const auto w = constructed_resolving_set(gg);
  const bool w_resolves = resolves(d, w);
  rec.expect("mdim_constructed_set", w_resolves && w.size() == mdim,
             "resolving set of size " + std::to_string(mdim),
             std::string(w_resolves ? "resolving" : "non-resolving") +
                 " set of size " + std::to_string(w.size()));
  rec.expect_equal("mdim_twin_lower_bound", mdim, twin_lower_bound(g));
  return record;
}

inline VerificationSummary run_verification(std::uint64_t n_min, std::uint64_t n_max,
                                            std::size_t mdim_cap = kDefaultMetricDimensionCap,
                                            unsigned threads = 0) {
  if (n_min < 2 || n_max < n_min)
    throw std::invalid_argument("verify range must satisfy 2 <= from <= to");
  VerificationSummary summary;
  summary.n_min = n_min;
  summary.n_max = n_max;
  summary.mdim_cap = mdim_cap;
  summary.records = ordered_parallel_map(
      n_min, n_max, [mdim_cap](std::uint64_t n) { return verify_order(n, mdim_cap); },
      threads);
  for (const auto& r : summary.records) {
    summary.passed += r.count(CheckStatus::kPass);
    summary.failed += r.count(CheckStatus::kFail);
    summary.informational += r.count(CheckStatus::kInfo);
  }
  return summary;
}

inline std::string verification_text(const VerificationSummary& summary, bool verbose) {
  std::ostringstream os;
  os << "Verifying generator graphs of Z_n for n in [" << summary.n_min << ", "
     << summary.n_max << "], exact metric dimension up to n = " << summary.mdim_cap
     << '\n';
  for (const auto& r : summary.records) {
    for (const auto& c : r.checks) {
      if (c.status == CheckStatus::kPass && !verbose) continue;
      os << "  n=" << r.n << "  " << status_name(c.status) << "  " << c.name
         << "  expected " << c.expected << ", got " << c.actual << '\n';
    }
  }
  os << "checks: " << summary.passed << " passed, " << summary.failed << " failed, "
     << summary.informational << " informational\n";
  return os.str();
}

inline nlohmann::ordered_json verification_json(const VerificationSummary& summary) {
  nlohmann::ordered_json j;
  j["range"] = {summary.n_min, summary.n_max};
  j["mdim_cap"] = summary.mdim_cap;
  auto records = nlohmann::ordered_json::array();
  for (const auto& r : summary.records) {
    auto checks = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
      checks.push_back({{"name", c.name},
                        {"status", status_name(c.status)},
                        {"expected", c.expected},
                        {"actual", c.actual}});
    }
    records.push_back({{"n", r.n},
                       {"harmonic_discrepancy", r.harmonic_discrepancy},
                       {"checks", std::move(checks)}});
  }
  j["records"] = std::move(records);
  j["totals"] = {{"passed", summary.passed},
                 {"failed", summary.failed},
                 {"informational", summary.informational}};
  return j;
}

}  // namespace gengraph
