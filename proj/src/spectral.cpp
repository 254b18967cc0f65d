#include "specdens/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "specdens/errors.hpp"
#include "specdens/format.hpp"

namespace specdens {

namespace {

constexpr double kJumpMergeTolerance = 1e-9;  // cluster width for repeated values
constexpr double kJumpProbeOffset = 1e-12;    // probe just below each jump

}  // namespace

Eigen::MatrixXd incidence(const MultiGraph& g) {
  validate(g);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(g.vertex_count, g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    m(g.edges[e].head, e) += 1.0;
    m(g.edges[e].tail, e) -= 1.0;
  }
  return m;
}

Eigen::MatrixXd laplacian0(const MultiGraph& g) {
  Eigen::MatrixXd c1 = incidence(g);
  return c1 * c1.transpose();
}

Spectrum graph_spectrum(const MultiGraph& g) {
  GraphStats s = stats(g);
  Spectrum out;
  out.zero_count = s.b1;
  out.values.assign(s.edge_count, 0.0);
  if (g.vertex_count == 0) return out;

  Spectrum eig = sym_eigenvalues(laplacian0(g), s.b0);
  // positive Laplacian eigenvalues are the squared positive singular values
  const int positive = eig.size() - eig.zero_count;
  for (int i = 0; i < positive; ++i)
    out.values[s.b1 + i] = std::sqrt(eig.values[eig.zero_count + i]);
  return out;
}

StepFunction sdf_from_spectrum(const Spectrum& s) {
  StepFunction f;
  long long level = s.zero_count;
  f.values.push_back(level);
  int i = s.zero_count;
  while (i < s.size()) {
    int j = i;
    while (j < s.size() && s.values[j] - s.values[i] <= kJumpMergeTolerance) ++j;
    level += j - i;
    f.jump_points.push_back(s.values[i]);
    f.values.push_back(level);
    i = j;
  }
  f.check();
  return f;
}

StepFunction sdf(const MultiGraph& g) { return sdf_from_spectrum(graph_spectrum(g)); }

double smallest_positive_eigenvalue(const MultiGraph& g) {
  GraphStats s = stats(g);
  Spectrum eig = sym_eigenvalues(laplacian0(g), s.b0);
  if (!eig.has_positive())
    throw NoPositiveSpectrum("the Laplacian spectrum is all kernel");
  return eig.smallest_positive();
}

double chung_bound(const MultiGraph& g) {
  GraphStats s = stats(g);
  if (s.b0 != 1) throw DisconnectedGraph("chung_bound needs a connected graph");
  if (g.vertex_count < 2)
    throw Error("chung_bound needs at least two vertices");
  return 1.0 / (static_cast<double>(*s.diameter) * static_cast<double>(s.volume));
}

double fk_det(const Eigen::MatrixXd& a, int known_kernel_dim) {
  Spectrum s = singular_values(a, known_kernel_dim);
  double log_det = 0.0;
  for (int i = s.zero_count; i < s.size(); ++i) log_det += std::log(s.values[i]);
  return log_det;
}

double graph_log_det(const MultiGraph& g) {
  Spectrum s = graph_spectrum(g);
  double log_det = 0.0;
  for (int i = s.zero_count; i < s.size(); ++i) log_det += std::log(s.values[i]);
  return log_det;
}

BigInt spanning_tree_count(const MultiGraph& g) {
  validate(g);
  if (!is_connected(g))
    throw DisconnectedGraph("spanning_tree_count needs a connected graph");
  const int n = g.vertex_count;
  if (n <= 1) return 1;

  IntMatrix reduced = IntMatrix::Zero(n - 1, n - 1);
  for (const auto& e : g.edges) {
    if (e.tail == e.head) continue;
    const int u = e.tail, v = e.head;
    if (u > 0) reduced(u - 1, u - 1) += 1;
    if (v > 0) reduced(v - 1, v - 1) += 1;
    if (u > 0 && v > 0) {
      reduced(u - 1, v - 1) -= 1;
      reduced(v - 1, u - 1) -= 1;
    }
  }
  return integer_determinant(reduced);
}

std::string to_string(Regime r) {
  switch (r) {
    case Regime::Zero: return "zero";
    case Regime::Silent: return "silent";
    case Regime::Linear: return "linear";
  }
  return "?";
}

BoundReport verify_main_bound(const MultiGraph& g, int grid_size) {
  if (grid_size <= 0) throw Error("verify_main_bound: grid_size must be positive");
  const GraphStats s = stats(g);
  const StepFunction f = sdf(g);
  const long long base = f.initial_value();
  const double edges = s.edge_count;
  const double degree = s.max_degree;
  const double slope = 2.0 * edges * degree;

  BoundReport report;
  report.fine_zero_threshold =
      s.edge_count > 0 ? 1.0 / (std::sqrt(2.0) * edges)
                       : std::numeric_limits<double>::infinity();
  report.fine_linear_threshold =
      (s.edge_count >= 2 && s.max_degree >= 1)
          ? 1.0 / (2.0 * (edges - 1.0) * degree)
          : std::numeric_limits<double>::infinity();

  std::vector<double> probes;
  probes.reserve(grid_size + 2 * f.jump_points.size());
  for (int i = 0; i < grid_size; ++i)
    probes.push_back(static_cast<double>(i) / grid_size);
  // jump points are where the step function is extremal against the line
  for (double jp : f.jump_points) {
    if (jp >= 1.0) continue;
    probes.push_back(jp);
    if (jp > kJumpProbeOffset) probes.push_back(jp - kJumpProbeOffset);
  }
  std::sort(probes.begin(), probes.end());
  probes.erase(std::unique(probes.begin(), probes.end()), probes.end());

  const bool fine_zero_applies = s.b0 == 1 && s.max_degree >= 2;
  const bool degree_le_1 = s.max_degree <= 1;

  for (double lambda : probes) {
    const long long gap = f(lambda) - base;
    const double bound = slope * lambda;
    Regime regime = Regime::Silent;
    if (lambda < report.fine_zero_threshold)
      regime = Regime::Zero;
    else if (lambda >= report.fine_linear_threshold)
      regime = Regime::Linear;

    report.lambda_grid.push_back(lambda);
    report.sdf_gap.push_back(gap);
    report.bound.push_back(bound);
    report.regime.push_back(regime);

    bool violated = gap > bound;
    if (fine_zero_applies && regime == Regime::Zero && gap != 0) violated = true;
    if (violated) report.violations.push_back({lambda, gap, bound, regime});
  }

  if (degree_le_1) {
    // a point or disjoint segments: no singular value inside [0,1]
    const long long gap_at_one = f(1.0) - base;
    if (gap_at_one != 0)
      report.violations.push_back({1.0, gap_at_one, slope, Regime::Zero});
  }
  return report;
}

void write_bound_csv(std::ostream& os, const BoundReport& report) {
  os << "lambda,gap,bound,regime,violated\n";
  for (size_t i = 0; i < report.lambda_grid.size(); ++i) {
    bool violated = false;
    for (const auto& v : report.violations)
      if (v.lambda == report.lambda_grid[i]) violated = true;
    os << format_real(report.lambda_grid[i]) << ',' << report.sdf_gap[i] << ','
       << format_real(report.bound[i]) << ',' << to_string(report.regime[i])
       << ',' << (violated ? 1 : 0) << '\n';
  }
}

}  // namespace specdens
