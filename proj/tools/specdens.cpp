// Command-line front end: graph statistics, spectral density profiles, the
// eigenvalue-distribution bound check, tree splitting, spanning-tree counts
// and covering-tower reports over files in the plain graph text format.
//
// Exit codes: 0 success, 1 verification failure, 2 parse or usage error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "specdens/errors.hpp"
#include "specdens/forest.hpp"
#include "specdens/format.hpp"
#include "specdens/io.hpp"
#include "specdens/multigraph.hpp"
#include "specdens/spectral.hpp"
#include "specdens/towers.hpp"

namespace {

using namespace specdens;

std::string join_ints(const std::vector<int>& xs) {
  std::string out;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

std::vector<int> parse_moduli(const std::string& arg) {
  std::vector<int> out;
  std::stringstream ss(arg);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || value < 1)
      throw BadModuli("bad moduli entry '" + item + "'");
    out.push_back(value);
  }
  if (out.empty()) throw BadModuli("empty moduli list");
  return out;
}

int cmd_stats(const std::string& file) {
  const MultiGraph g = load_graph(file);
  const GraphStats s = stats(g);
  std::cout << "vertices=" << g.vertex_count << '\n';
  std::cout << "edges=" << s.edge_count << '\n';
  std::cout << "degree_per_vertex=" << join_ints(s.degree_per_vertex) << '\n';
  std::cout << "max_degree=" << s.max_degree << '\n';
  std::cout << "volume=" << s.volume << '\n';
  std::cout << "diameter=";
  if (s.diameter)
    std::cout << *s.diameter << '\n';
  else
    std::cout << "unbounded\n";
  std::cout << "b0=" << s.b0 << '\n';
  std::cout << "b1=" << s.b1 << '\n';
  return 0;
}

int cmd_sdf(const std::string& file, bool csv) {
  const MultiGraph g = load_graph(file);
  const StepFunction f = sdf(g);
  if (csv) {
    std::cout << "lambda,value\n";
    std::cout << "0," << f.initial_value() << '\n';
    for (size_t i = 0; i < f.jump_points.size(); ++i)
      std::cout << format_real(f.jump_points[i]) << ',' << f.values[i + 1] << '\n';
  } else {
    std::cout << "value_at_0=" << f.initial_value() << '\n';
    for (size_t i = 0; i < f.jump_points.size(); ++i)
      std::cout << "jump_at " << format_real(f.jump_points[i]) << " -> "
                << f.values[i + 1] << '\n';
  }
  return 0;
}

int cmd_bound_check(const std::string& file, int grid, const std::string& csv_path) {
  const MultiGraph g = load_graph(file);
  const BoundReport report = verify_main_bound(g, grid);
  if (!csv_path.empty()) {
    std::ofstream out(csv_path, std::ios::binary);
    if (!out) throw Error("cannot write '" + csv_path + "'");
    write_bound_csv(out, report);
  }
  long long max_gap = 0;
  for (long long v : report.sdf_gap) max_gap = std::max(max_gap, v);
  std::cout << "points=" << report.lambda_grid.size() << '\n';
  std::cout << "fine_zero_threshold=" << format_real(report.fine_zero_threshold) << '\n';
  std::cout << "fine_linear_threshold=" << format_real(report.fine_linear_threshold)
            << '\n';
  std::cout << "max_gap=" << max_gap << '\n';
  std::cout << "violations=" << report.violations.size() << '\n';
  for (const auto& v : report.violations)
    std::cout << "violated lambda=" << format_real(v.lambda) << " gap=" << v.gap
              << " bound=" << format_real(v.bound) << " regime=" << to_string(v.regime)
              << '\n';
  return report.ok() ? 0 : 1;
}

int cmd_split_tree(const std::string& file, double budget) {
  const MultiGraph g = load_graph(file);
  const ForestSplit split = split_tree(g, budget);
  std::cout << "budget=" << format_real(split.budget) << '\n';
  std::cout << "base_degree=" << split.base_degree << '\n';
  std::cout << "pieces=" << split.piece_count << '\n';
  std::cout << "removed=" << join_ints(split.removed_edges) << '\n';
  for (size_t i = 0; i < split.components.size(); ++i)
    std::cout << "component " << i << ": " << join_ints(split.components[i]) << '\n';
  return 0;
}

int cmd_spanning_trees(const std::string& file) {
  const MultiGraph g = load_graph(file);
  std::cout << spanning_tree_count(g) << '\n';
  return 0;
}

int cmd_tower(const std::string& file, const std::vector<std::string>& moduli_args,
              int grid, int oracle_nodes, double tol, const std::string& csv_path) {
  const VoltageGraph vg = load_voltage_graph(file);
  if (vg.rank < 1) throw BadModuli("tower needs a voltage graph with rank >= 1");
  std::vector<std::vector<int>> sequence;
  for (const auto& arg : moduli_args) sequence.push_back(parse_moduli(arg));

  const TowerReport report = tower_report(vg, sequence, grid, oracle_nodes);
  const auto violations = verify_uniform_estimate(report);

  if (!csv_path.empty()) {
    std::ofstream out(csv_path, std::ios::binary);
    if (!out) throw Error("cannot write '" + csv_path + "'");
    write_tower_csv(out, report);
  } else {
    write_tower_csv(std::cout, report);
  }

  const double last_error =
      std::abs(report.levels.back().normalized_log_det - report.oracle_limit);
  std::cerr << "uniform_violations=" << violations.size() << '\n';
  std::cerr << "last_level_error=" << format_real(last_error) << " tol=" << format_real(tol)
            << '\n';
  return (violations.empty() && last_error <= tol) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral density functions of finite multigraphs"};
  app.require_subcommand(1);

  std::string file;
  bool sdf_csv = false;
  int grid = 512;
  std::string csv_path;
  double budget = 0.0;
  std::vector<std::string> moduli_args;
  int oracle_nodes = 0;
  double tol = 0.05;

  auto* stats_cmd = app.add_subcommand("stats", "print graph statistics");
  stats_cmd->add_option("file", file)->required();

  auto* sdf_cmd = app.add_subcommand("sdf", "print the spectral density function");
  sdf_cmd->add_option("file", file)->required();
  sdf_cmd->add_flag("--csv", sdf_csv, "emit lambda,value CSV");

  auto* bound_cmd =
      app.add_subcommand("bound-check", "verify the eigenvalue-distribution bound");
  bound_cmd->add_option("file", file)->required();
  bound_cmd->add_option("--grid", grid, "uniform probe count on [0,1)");
  bound_cmd->add_option("--csv", csv_path, "write the pointwise table here");

  auto* split_cmd = app.add_subcommand("split-tree", "split a tree into bounded pieces");
  split_cmd->add_option("file", file)->required();
  split_cmd->add_option("--budget", budget, "piece size budget")->required();

  auto* count_cmd = app.add_subcommand("spanning-trees", "exact spanning tree count");
  count_cmd->add_option("file", file)->required();

  auto* tower_cmd = app.add_subcommand("tower", "covering tower determinant report");
  tower_cmd->add_option("file", file)->required();
  tower_cmd->add_option("--moduli", moduli_args, "comma separated moduli, once per level")
      ->required();
  tower_cmd->add_option("--grid", grid, "uniform probe count for the estimate check");
  tower_cmd->add_option("--oracle-nodes", oracle_nodes,
                        "quadrature nodes per dimension (0 = default)");
  tower_cmd->add_option("--tol", tol, "allowed |last level - oracle| gap");
  tower_cmd->add_option("--csv", csv_path, "write the level table here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (*stats_cmd) return cmd_stats(file);
    if (*sdf_cmd) return cmd_sdf(file, sdf_csv);
    if (*bound_cmd) return cmd_bound_check(file, grid, csv_path);
    if (*split_cmd) return cmd_split_tree(file, budget);
    if (*count_cmd) return cmd_spanning_trees(file);
    if (*tower_cmd) return cmd_tower(file, moduli_args, grid, oracle_nodes, tol, csv_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
