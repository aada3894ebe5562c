#pragma once

/**
 * @file report_io.hpp
 * @brief Text, CSV and JSON renderings of index reports, range tables and
 * metric-dimension results.
 *
 * CSV floats use 12 significant digits; integers are printed exactly. Output
 * depends only on the inputs, so repeated runs are byte-identical.
 */

#include <cstdint>
#include <cstdio>
#include <algorithm>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "gengraph/generator_graph.hpp"
#include "gengraph/metric_dim.hpp"
#include "gengraph/parallel.hpp"
#include "gengraph/topo_indices.hpp"

namespace gengraph {

inline std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

inline std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// ---------------------------------------------------------------------------
// IndexReport

inline const char* kIndexCsvHeader = "n,s,index,brute,formula,abs_diff,agrees";

inline std::string entry_brute_text(const IndexEntry& e) {
  return e.exact_brute_force ? std::to_string(*e.exact_brute_force)
                             : format_double(e.brute_force);
}

inline std::string entry_formula_text(const IndexEntry& e) {
  return e.exact_formula ? format_rational(*e.exact_formula)
                         : format_double(e.formula);
}

inline std::string index_report_csv(const IndexReport& r, bool header = true) {
  std::ostringstream os;
  if (header) os << kIndexCsvHeader << '\n';
  for (const auto& e : r.entries) {
    os << r.n << ',' << r.s << ',' << e.name() << ',' << entry_brute_text(e)
       << ',' << entry_formula_text(e) << ','
       << format_double(e.absolute_difference) << ','
       << (e.agrees ? "true" : "false") << '\n';
  }
  return os.str();
}

inline nlohmann::ordered_json index_report_json(const IndexReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["s"] = r.s;
  auto& indices = j["indices"] = nlohmann::ordered_json::object();
  for (const auto& e : r.entries) {
    nlohmann::ordered_json item;
    if (e.exact_brute_force) {
      item["brute_force"] = *e.exact_brute_force;
      if (e.exact_formula->denominator() == 1)
        item["formula"] = e.exact_formula->numerator();
      else
        item["formula"] = format_rational(*e.exact_formula);
    } else {
      item["brute_force"] = e.brute_force;
      item["formula"] = e.formula;
    }
    item["abs_diff"] = e.absolute_difference;
    item["agrees"] = e.agrees;
    item["informational"] = e.informational;
    indices[std::string(e.name())] = std::move(item);
  }
  j["harmonic_discrepancy"] = {
      {"observed", r.harmonic_discrepancy},
      {"predicted", boost::rational_cast<double>(r.harmonic_discrepancy_predicted)},
      {"predicted_exact", format_rational(r.harmonic_discrepancy_predicted)}};
  j["all_agree"] = std::all_of(r.entries.begin(), r.entries.end(),
                               [](const IndexEntry& e) { return e.agrees || e.informational; });
  return j;
}

inline std::string index_report_text(const IndexReport& r) {
  std::ostringstream os;
  os << "Generator graph of Z_" << r.n << " (n=" << r.n << ", |S|=" << r.s << ")\n";
  os << std::left << std::setw(16) << "index" << std::setw(22) << "brute force"
     << std::setw(22) << "formula" << std::setw(24) << "abs diff" << "agrees\n";
  for (const auto& e : r.entries) {
    std::string agrees = e.agrees ? "yes" : "NO";
    if (!e.agrees && e.informational) agrees = "no (published formula)";
    os << std::setw(16) << std::string(e.name()) << std::setw(22)
       << entry_brute_text(e) << std::setw(22) << entry_formula_text(e)
       << std::setw(24) << format_double(e.absolute_difference) << agrees << '\n';
  }
  if (!r.at(IndexKind::kHarmonicPaper).agrees) {
    os << "note: the published harmonic expression exceeds the edge sum by "
       << format_double(r.harmonic_discrepancy)
       << " (non-edge term (n-|S|)(n-|S|-1)/(2|S|) = "
       << format_rational(r.harmonic_discrepancy_predicted) << ")\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Range table

struct TableRow {
  std::uint64_t n = 0;
  std::uint64_t phi = 0;
  std::size_t edges = 0;
  std::size_t diameter = 0;
  std::int64_t wiener = 0;
  std::int64_t gutman = 0;
  double harmonic = 0.0;
  double randic = 0.0;
  double sombor = 0.0;
  std::size_t metric_dimension = 0;
};

inline TableRow compute_table_row(std::uint64_t n) {
  const GeneratorGraph gg(n);
  const auto& g = gg.graph();
  const DistanceMatrix d = bfs_distances(g);
  TableRow row;
  row.n = n;
  row.phi = gg.generator_count();
  row.edges = g.edge_count();
  row.diameter = std::get<std::size_t>(diameter(d));
  row.wiener = wiener_bruteforce(d);
  row.gutman = gutman_bruteforce(g, d);
  row.harmonic = harmonic_bruteforce(g);
  row.randic = randic_bruteforce(g);
  row.sombor = sombor_bruteforce(g);
  row.metric_dimension = metric_dimension_formula(n);
  return row;
}

inline std::vector<TableRow> compute_table(std::uint64_t n_min, std::uint64_t n_max,
                                           unsigned threads = 0) {
  if (n_min < 2 || n_max < n_min)
    throw std::invalid_argument("table range must satisfy 2 <= from <= to");
  return ordered_parallel_map(n_min, n_max, compute_table_row, threads);
}

inline const char* kTableCsvHeader =
    "n,phi,edges,diameter,wiener,gutman,harmonic,randic,sombor,metric_dimension";

inline std::string table_csv(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << kTableCsvHeader << '\n';
  for (const auto& r : rows) {
    os << r.n << ',' << r.phi << ',' << r.edges << ',' << r.diameter << ','
       << r.wiener << ',' << r.gutman << ',' << format_double(r.harmonic) << ','
       << format_double(r.randic) << ',' << format_double(r.sombor) << ','
       << r.metric_dimension << '\n';
  }
  return os.str();
}

inline nlohmann::ordered_json table_json(const std::vector<TableRow>& rows) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    arr.push_back({{"n", r.n},
                   {"phi", r.phi},
                   {"edges", r.edges},
                   {"diameter", r.diameter},
                   {"wiener", r.wiener},
                   {"gutman", r.gutman},
                   {"harmonic", r.harmonic},
                   {"randic", r.randic},
                   {"sombor", r.sombor},
                   {"metric_dimension", r.metric_dimension}});
  }
  return arr;
}

inline std::string table_text(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << std::right << std::setw(5) << "n" << std::setw(6) << "phi" << std::setw(8)
     << "edges" << std::setw(5) << "diam" << std::setw(12) << "wiener"
     << std::setw(16) << "gutman" << std::setw(16) << "harmonic" << std::setw(16)
     << "randic" << std::setw(18) << "sombor" << std::setw(6) << "mdim" << '\n';
  for (const auto& r : rows) {
    os << std::setw(5) << r.n << std::setw(6) << r.phi << std::setw(8) << r.edges
       << std::setw(5) << r.diameter << std::setw(12) << r.wiener << std::setw(16)
       << r.gutman << std::setw(16) << format_double(r.harmonic) << std::setw(16)
       << format_double(r.randic) << std::setw(18) << format_double(r.sombor)
       << std::setw(6) << r.metric_dimension << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Metric dimension

struct MetricDimensionReport {
  std::uint64_t n = 0;
  std::size_t formula = 0;
  std::size_t twin_lower_bound = 0;
  std::vector<Vertex> constructed_set;
  bool constructed_set_resolves = false;
  std::optional<MetricBasis> exact;  // present when n is within the cap
  ResolvingSetResult constructed_representations;
};

inline MetricDimensionReport compute_metric_dimension_report(
    std::uint64_t n, std::size_t cap = kDefaultMetricDimensionCap) {
  const GeneratorGraph gg(n);
  const DistanceMatrix d = bfs_distances(gg.graph());
  MetricDimensionReport r;
  r.n = n;
  r.formula = metric_dimension_formula(n);
  r.twin_lower_bound = twin_lower_bound(gg.graph());
  r.constructed_set = constructed_resolving_set(gg);
  r.constructed_representations = is_resolving(d, r.constructed_set);
  r.constructed_set_resolves = r.constructed_representations.resolves;
  if (n <= cap) r.exact = metric_dimension_bruteforce(gg.graph(), cap);
  return r;
}

inline nlohmann::ordered_json metric_dimension_json(const GeneratorGraph& gg,
                                                    const MetricDimensionReport& r,
                                                    bool with_representations) {
  auto elements = [&](const std::vector<Vertex>& vs) {
    std::vector<std::uint64_t> out;
    for (Vertex v : vs) out.push_back(gg.element_of(v));
    return out;
  };
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["dimension_formula"] = r.formula;
  if (r.exact) {
    j["dimension"] = r.exact->dimension;
    j["basis_vertices"] = r.exact->basis;
    j["basis_elements"] = elements(r.exact->basis);
    j["agrees"] = r.exact->dimension == r.formula;
  } else {
    j["dimension"] = nullptr;
  }
  j["twin_lower_bound"] = r.twin_lower_bound;
  j["constructed_set_vertices"] = r.constructed_set;
  j["constructed_set_elements"] = elements(r.constructed_set);
  j["constructed_set_resolves"] = r.constructed_set_resolves;
  if (with_representations) {
    auto table = nlohmann::ordered_json::array();
    for (Vertex v = 0; v < r.constructed_representations.representations.size(); ++v) {
      table.push_back({{"vertex", v},
                       {"element", gg.element_of(v)},
                       {"representation", r.constructed_representations.representations[v]}});
    }
    j["representations"] = std::move(table);
  }
  return j;
}

inline std::string metric_dimension_text(const GeneratorGraph& gg,
                                         const MetricDimensionReport& r,
                                         bool with_representations) {
  auto list = [&](const std::vector<Vertex>& vs) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < vs.size(); ++i)
      os << (i ? ", " : "") << gg.element_of(vs[i]);
    os << '}';
    return os.str();
  };
  std::ostringstream os;
  os << "Metric dimension of the generator graph of Z_" << r.n << '\n';
  os << "  closed form:        " << r.formula << '\n';
  if (r.exact) {
    os << "  exact search:       " << r.exact->dimension << "  basis (elements) "
       << list(r.exact->basis) << (r.exact->dimension == r.formula ? "" : "  MISMATCH")
       << '\n';
  } else {
    os << "  exact search:       skipped (n above cap)\n";
  }
  os << "  twin lower bound:   " << r.twin_lower_bound << '\n';
  os << "  constructed set:    " << list(r.constructed_set) << " ("
     << (r.constructed_set_resolves ? "resolves" : "does NOT resolve") << ")\n";
  if (with_representations) {
    for (Vertex v = 0; v < r.constructed_representations.representations.size(); ++v) {
      os << "    r(" << gg.element_of(v) << ") = (";
      const auto& rep = r.constructed_representations.representations[v];
      for (std::size_t i = 0; i < rep.size(); ++i) os << (i ? "," : "") << rep[i];
      os << ")\n";
    }
  }
  return os.str();
}

}  // namespace gengraph
