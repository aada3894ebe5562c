// gengraph: generator graphs of Z_n from the command line.
//
// Exit status: 0 success, 1 a verification check failed, 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "gengraph/gengraph.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::uint64_t n = 0;
  std::uint64_t from = 2;
  std::uint64_t to = 2;
  std::string format;
  std::size_t mdim_cap = gengraph::kDefaultMetricDimensionCap;
  std::string out;
  unsigned threads = 0;
  bool verbose = false;
  bool representations = false;
};

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(opt.out, std::ios::binary);
  if (!file) throw UsageError("cannot open output file '" + opt.out + "'");
  file << text;
}

void require_order(std::uint64_t n) {
  if (n < 2) throw UsageError("trivial group excluded: --n must be >= 2");
}

void require_range(const Options& opt) {
  if (opt.from < 2 || opt.to < opt.from)
    throw UsageError("range must satisfy 2 <= --from <= --to");
}

int cmd_indices(const Options& opt) {
  require_order(opt.n);
  const auto report = gengraph::compute_index_report(opt.n);
  if (opt.format == "json")
    emit(opt, gengraph::index_report_json(report).dump(2) + "\n");
  else if (opt.format == "csv")
    emit(opt, gengraph::index_report_csv(report));
  else
    emit(opt, gengraph::index_report_text(report));
  return kExitOk;
}

int cmd_table(const Options& opt) {
  require_range(opt);
  const auto rows = gengraph::compute_table(opt.from, opt.to, opt.threads);
  if (opt.format == "json")
    emit(opt, gengraph::table_json(rows).dump(2) + "\n");
  else if (opt.format == "text")
    emit(opt, gengraph::table_text(rows));
  else
    emit(opt, gengraph::table_csv(rows));
  return kExitOk;
}

int cmd_verify(const Options& opt) {
  require_range(opt);
  const auto summary =
      gengraph::run_verification(opt.from, opt.to, opt.mdim_cap, opt.threads);
  if (opt.format == "json")
    emit(opt, gengraph::verification_json(summary).dump(2) + "\n");
  else
    emit(opt, gengraph::verification_text(summary, opt.verbose));
  return summary.ok() ? kExitOk : kExitCheckFailure;
}

int cmd_graph(const Options& opt) {
  require_order(opt.n);
  const gengraph::GeneratorGraph gg(opt.n);
  if (opt.format == "dot")
    emit(opt, gg.to_dot());
  else
    emit(opt, gengraph::to_edge_list(gg.graph()));
  return kExitOk;
}

int cmd_mdim(const Options& opt) {
  require_order(opt.n);
  const gengraph::GeneratorGraph gg(opt.n);
  const auto report = gengraph::compute_metric_dimension_report(opt.n, opt.mdim_cap);
  if (opt.format == "json")
    emit(opt, gengraph::metric_dimension_json(gg, report, opt.representations).dump(2) +
                  "\n");
  else
    emit(opt, gengraph::metric_dimension_text(gg, report, opt.representations));
  const bool ok = report.constructed_set_resolves &&
                  (!report.exact || report.exact->dimension == report.formula);
  return ok ? kExitOk : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Generator graphs of the cyclic group Z_n: structure, topological indices\n"
      "and metric dimension, each computed by brute force and by closed form.\n\n"
      "CSV columns\n"
      "  indices: n,s,index,brute,formula,abs_diff,agrees\n"
      "  table:   n,phi,edges,diameter,wiener,gutman,harmonic,randic,sombor,"
      "metric_dimension\n"
      "Floats are printed with 12 significant digits.\n\n"
      "Exit status: 0 success, 1 check failure, 2 usage error."};
  app.require_subcommand(1);
  Options opt;

  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", opt.out, "Write output to this file instead of stdout");
  };
  auto add_range = [&](CLI::App* sub) {
    sub->add_option("--from", opt.from, "Smallest n")->required();
    sub->add_option("--to", opt.to, "Largest n")->required();
    sub->add_option("--threads", opt.threads, "Worker threads (0 = all cores)");
  };

  auto* indices = app.add_subcommand("indices", "Topological indices of one generator graph");
  indices->add_option("--n", opt.n, "Group order")->required();
  indices->add_option("--format", opt.format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->default_str("text");
  add_out(indices);

  auto* table = app.add_subcommand("table", "One row of brute-force values per n");
  add_range(table);
  table->add_option("--format", opt.format, "csv, json or text")
      ->check(CLI::IsMember({"csv", "json", "text"}))
      ->default_str("csv");
  add_out(table);

  auto* verify = app.add_subcommand("verify", "Check every closed form against brute force");
  add_range(verify);
  verify->add_option("--mdim-cap", opt.mdim_cap,
                     "Largest n for exhaustive metric-dimension search")
      ->check(CLI::Range(0, 24));
  verify->add_option("--format", opt.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_str("text");
  verify->add_flag("--verbose", opt.verbose, "Also list passing checks");
  add_out(verify);

  auto* graph = app.add_subcommand("graph", "Export the generator graph");
  graph->add_option("--n", opt.n, "Group order")->required();
  graph->add_option("--format", opt.format, "edgelist or dot")
      ->check(CLI::IsMember({"edgelist", "dot"}))
      ->default_str("edgelist");
  add_out(graph);

  auto* mdim = app.add_subcommand("mdim", "Metric dimension of one generator graph");
  mdim->add_option("--n", opt.n, "Group order")->required();
  mdim->add_option("--mdim-cap", opt.mdim_cap,
                   "Largest n for exhaustive metric-dimension search")
      ->check(CLI::Range(0, 24));
  mdim->add_option("--format", opt.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_str("text");
  mdim->add_flag("--representations", opt.representations,
                 "Include the distance representation table");
  add_out(mdim);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (opt.format.empty()) {
    if (*graph) opt.format = "edgelist";
    else if (*table) opt.format = "csv";
    else opt.format = "text";
  }

  try {
    if (*indices) return cmd_indices(opt);
    if (*table) return cmd_table(opt);
    if (*verify) return cmd_verify(opt);
    if (*graph) return cmd_graph(opt);
    if (*mdim) return cmd_mdim(opt);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCheckFailure;
  }
  return kExitUsage;
}
