// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "gengraph/gengraph.hpp"

namespace {

using namespace gengraph;

constexpr double kRelTol = 1e-9;          // numeric index agreement, relative
constexpr double kDiscrepancyTol = 1e-9;  // harmonic discrepancy law, absolute

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Failures {
 public:
  void add(const std::string& what) {
    if (count_++ < 5) os_ << (count_ > 1 ? "; " : "") << what;
  }
  Outcome outcome(const std::string& ok_detail) const {
    if (count_ == 0) return {true, ok_detail};
    std::ostringstream os;
    os << count_ << " failure(s): " << os_.str();
    return {false, os.str()};
  }

 private:
  std::size_t count_ = 0;
  std::ostringstream os_;
};

Outcome exact_wiener_gutman() {
  Failures f;
  for (std::int64_t n = 2; n <= 500; ++n) {
    const GeneratorGraph gg(n);
    const auto s = static_cast<std::int64_t>(gg.generator_count());
    const auto d = bfs_distances(gg.graph());
    const Rational w_formula = wiener_formula(n, s);
    const Rational g_formula = gutman_formula(n, s);
    const std::int64_t w = wiener_bruteforce(d);
    const std::int64_t g = gutman_bruteforce(gg.graph(), d);
    if (w_formula != Rational(w))
      f.add("n=" + std::to_string(n) + " W " + format_rational(w_formula) + " vs " + std::to_string(w));
    if (g_formula != Rational(g))
      f.add("n=" + std::to_string(n) + " Gut " + format_rational(g_formula) + " vs " + std::to_string(g));
  }
  return f.outcome("n in [2,500], exact integer equality");
}

Outcome numeric_indices() {
  Failures f;
  double worst = 0.0;
  auto check = [&](std::int64_t n, const char* name, double formula, double brute) {
    const double rel = std::abs(formula - brute) / std::max(std::abs(formula), std::abs(brute));
    worst = std::max(worst, rel);
    if (!approx_equal(formula, brute, kRelTol))
      f.add("n=" + std::to_string(n) + " " + name + " " + format_double(formula) + " vs " +
            format_double(brute));
  };
  for (std::int64_t n = 2; n <= 500; ++n) {
    const GeneratorGraph gg(n);
    const auto s = static_cast<std::int64_t>(gg.generator_count());
    const auto& g = gg.graph();
    check(n, "randic", randic_formula(n, s), randic_bruteforce(g));
    check(n, "sombor", sombor_formula(n, s), sombor_bruteforce(g));
    check(n, "harmonic", harmonic_formula_corrected(n, s), harmonic_bruteforce(g));
  }
  return f.outcome("n in [2,500], rel tol 1e-9, worst rel err " + format_double(worst));
}

Outcome harmonic_discrepancy_law() {
  Failures f;
  std::size_t gapped = 0, coincident = 0;
  for (std::int64_t n = 2; n <= 500; ++n) {
    const GeneratorGraph gg(n);
    const auto s = static_cast<std::int64_t>(gg.generator_count());
    const double gap = harmonic_formula_paper(n, s) - harmonic_bruteforce(gg.graph());
    const std::int64_t m = n - s;
    const double predicted = static_cast<double>(m * (m - 1)) / static_cast<double>(2 * s);
    if (m >= 2) {
      ++gapped;
      if (is_prime(static_cast<std::uint64_t>(n))) f.add("n=" + std::to_string(n) + " prime with m>=2");
      if (std::abs(gap - predicted) > kDiscrepancyTol || gap <= 0)
        f.add("n=" + std::to_string(n) + " gap " + format_double(gap) + " vs " + format_double(predicted));
    } else {
      ++coincident;
      if (std::abs(gap) > kDiscrepancyTol)
        f.add("n=" + std::to_string(n) + " expected coincidence, gap " + format_double(gap));
    }
  }
  return f.outcome(std::to_string(gapped) + " composite n with gap (n-s)(n-s-1)/(2s), " +
                   std::to_string(coincident) + " n with n-s=1 coincide; abs tol 1e-9");
}

Outcome prime_corollaries() {
  Failures f;
  std::size_t primes = 0;
  for (std::int64_t p = 2; p <= 200; ++p) {
    if (!is_prime(static_cast<std::uint64_t>(p))) continue;
    ++primes;
    const GeneratorGraph gg(p);
    const auto& g = gg.graph();
    const std::string tag = "p=" + std::to_string(p);
    if (!(g == complete_graph(p))) f.add(tag + " not K_p");
    const auto pd = static_cast<double>(p);
    if (Rational(wiener_bruteforce(g)) != Rational(p * (p - 1), 2)) f.add(tag + " W");
    if (Rational(gutman_bruteforce(g)) != Rational(p * (p - 1) * (p - 1) * (p - 1), 2)) f.add(tag + " Gut");
    if (!approx_equal(harmonic_bruteforce(g), pd / 2, kRelTol)) f.add(tag + " H");
    if (!approx_equal(randic_bruteforce(g), pd / 2, kRelTol)) f.add(tag + " R");
    if (!approx_equal(sombor_bruteforce(g), std::numbers::sqrt2 / 2 * pd * (pd - 1) * (pd - 1), kRelTol))
      f.add(tag + " SO");
  }
  return f.outcome(std::to_string(primes) + " primes <= 200; exact W, Gut; rel 1e-9 H, R, SO");
}

Outcome structure_suite() {
  Failures f;
  for (std::uint64_t n = 2; n <= 200; ++n) {
    const GeneratorGraph gg(n);
    const auto& g = gg.graph();
    const std::uint64_t s = gg.generator_count();
    const std::string tag = "n=" + std::to_string(n) + " ";
    if (s != totient(n)) f.add(tag + "|S| != phi");
    if (!(g == join(complete_graph(s), null_graph(n - s)))) f.add(tag + "join");
    auto deg = g.degrees();
    std::sort(deg.begin(), deg.end());
    if (deg != degree_multiset_by_formula(n, s)) f.add(tag + "degree multiset");
    for (Vertex v = 0; v < n; ++v)
      if (g.degree(v) != (gg.is_generator_vertex(v) ? n - 1 : s)) f.add(tag + "degree");
    if (g.edge_count() != s * (s - 1) / 2 + s * (n - s)) f.add(tag + "edge count");
    const auto faithful = is_faithful_graph(g);
    if (!faithful.is_faithful || faithful.no_edges) f.add(tag + "faithful");
    if (diameter(g) != Diameter{std::size_t{is_prime(n) ? 1u : 2u}}) f.add(tag + "diameter");
    if (2 * g.max_degree() < n) f.add(tag + "max degree");
    if ((g == complete_graph(n)) != is_prime(n)) f.add(tag + "completeness");
  }
  return f.outcome("n in [2,200]: join, degrees, size, faithful, diameter, max degree, completeness");
}

Outcome counterexamples() {
  Failures f;
  const auto c5 = cycle_graph(5);
  if (diameter(c5) != Diameter{std::size_t{2}}) f.add("diam(C5) != 2");
  const auto r5 = is_faithful_graph(c5);
  if (r5.is_faithful || !r5.witness_edge || !r5.witness_missing_vertex) {
    f.add("C5 reported faithful or without witness");
  } else {
    const auto [x, y] = *r5.witness_edge;
    const Vertex w = *r5.witness_missing_vertex;
    if (!c5.adjacent(x, y) || w == x || w == y || c5.adjacent(w, x) || c5.adjacent(w, y))
      f.add("C5 witness invalid");
  }
  SimpleGraph fig(4);  // triangle u,v,x plus pendant w on x
  fig.add_edge(0, 1);
  fig.add_edge(1, 2);
  fig.add_edge(0, 2);
  fig.add_edge(2, 3);
  if (!check_max_degree_bound(fig)) f.add("pendant graph fails Delta bound");
  const auto rf = is_faithful_graph(fig);
  if (rf.is_faithful) f.add("pendant graph reported faithful");
  if (is_faithful_edge(fig, 0, 1)) f.add("edge uv reported faithful");
  return f.outcome("C5: diam 2, unfaithful edge (" +
                   std::to_string(r5.witness_edge ? r5.witness_edge->first : 0) + "," +
                   std::to_string(r5.witness_edge ? r5.witness_edge->second : 0) +
                   ") misses " + std::to_string(r5.witness_missing_vertex.value_or(0)) +
                   "; triangle+pendant: 2*Delta=6>=4, not faithful");
}

Outcome metric_dimension() {
  Failures f;
  for (std::uint64_t n = 2; n <= 14; ++n) {
    const auto exact = metric_dimension_bruteforce(GeneratorGraph(n).graph(), 16);
    const std::size_t expected = is_prime(n) ? n - 1 : n - 2;
    if (exact.dimension != expected)
      f.add("n=" + std::to_string(n) + " dim " + std::to_string(exact.dimension) + " vs " +
            std::to_string(expected));
  }
  std::size_t composites = 0;
  for (std::uint64_t n = 4; n <= 200; ++n) {
    if (is_prime(n)) continue;
    ++composites;
    const GeneratorGraph gg(n);
    const auto d = bfs_distances(gg.graph());
    const auto w = constructed_resolving_set(gg);
    if (w.size() != n - 2 || !is_resolving(d, w).resolves)
      f.add("n=" + std::to_string(n) + " constructed W does not resolve");
    if (n <= 14) {
      const auto deficient = constructed_deficient_sets(gg);
      const bool has_generator_variant = std::any_of(deficient.begin(), deficient.end(), [&](const auto& wp) {
        return std::find(wp.begin(), wp.end(), Vertex{1}) == wp.end();
      });
      if (!has_generator_variant) f.add("n=" + std::to_string(n) + " missing generator-drop W'");
      for (const auto& wp : deficient)
        if (is_resolving(d, wp).resolves) f.add("n=" + std::to_string(n) + " deficient W' resolves");
    }
  }
  return f.outcome("exact search n in [2,14]; constructed W resolves for " +
                   std::to_string(composites) + " composite n in [4,200]; all W' fail for n <= 14");
}

Outcome determinism() {
  Failures f;
  auto capture = [](const std::string& args, int& status) {
    const std::string cmd = std::string(GENGRAPH_CLI) + " " + args;
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
      status = -1;
      return out;
    }
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    const int raw = pclose(pipe);
    status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return out;
  };
  int s1 = 0, s2 = 0;
  const auto a = capture("table --from 2 --to 100 --format csv", s1);
  const auto b = capture("table --from 2 --to 100 --format csv", s2);
  if (s1 != 0 || s2 != 0) f.add("nonzero exit");
  if (a.empty()) f.add("empty output");
  if (a != b) f.add("outputs differ");
  if (a != table_csv(compute_table(2, 100, 1))) f.add("CLI output differs from single-threaded render");
  return f.outcome("two CLI runs byte-identical (" + std::to_string(a.size()) + " bytes)");
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"AC1", "Wiener/Gutman closed forms equal brute force exactly", exact_wiener_gutman},
      {"AC2", "Randic/Sombor/edge-sum harmonic closed forms match brute force", numeric_indices},
      {"AC3", "harmonic discrepancy law", harmonic_discrepancy_law},
      {"AC4", "prime-order corollaries", prime_corollaries},
      {"AC5", "structure suite", structure_suite},
      {"AC6", "counterexample fixtures", counterexamples},
      {"AC7", "metric dimension", metric_dimension},
      {"AC8", "table determinism", determinism},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::printf("[%s] %s %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", c.id, c.title,
                o.detail.c_str(), secs);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
