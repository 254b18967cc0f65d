#include "specdens/towers.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <ostream>

#include "specdens/errors.hpp"
#include "specdens/format.hpp"
#include "specdens/linalg.hpp"
#include "specdens/spectral.hpp"

namespace specdens {

namespace {

constexpr double kJumpProbeOffset = 1e-12;

// Voltages of the fundamental cycles with respect to a spanning tree: the
// net shift picked up when traversing the non-tree edge closing each cycle.
// Loops count as cycles with their raw voltage. These, not the raw edge
// voltages, decide whether the infinite cover is connected.
std::vector<std::vector<BigInt>> cycle_voltages(const VoltageGraph& vg) {
  const MultiGraph& g = vg.base;
  const int d = vg.rank;
  auto tree = spanning_tree(g);
  std::vector<char> in_tree(g.edge_count(), 0);
  for (int e : tree) in_tree[e] = 1;

  // potential(v) = voltage sum along the tree path from vertex 0
  std::vector<std::vector<long long>> potential(g.vertex_count,
                                                std::vector<long long>(d, 0));
  std::vector<char> seen(g.vertex_count, 0);
  seen[0] = 1;
  std::vector<int> stack = {0};
  std::vector<std::vector<std::pair<int, int>>> adj(g.vertex_count);
  for (int e : tree) {
    adj[g.edges[e].tail].emplace_back(g.edges[e].head, e);
    adj[g.edges[e].head].emplace_back(g.edges[e].tail, e);
  }
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const auto& [w, e] : adj[v]) {
      if (seen[w]) continue;
      seen[w] = 1;
      const int sign = g.edges[e].tail == v ? 1 : -1;
      for (int j = 0; j < d; ++j)
        potential[w][j] = potential[v][j] + sign * vg.voltages[e][j];
      stack.push_back(w);
    }
  }

  std::vector<std::vector<BigInt>> cycles;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (in_tree[e]) continue;
    std::vector<BigInt> c(d);
    for (int j = 0; j < d; ++j)
      c[j] = BigInt(potential[g.edges[e].tail][j]) + vg.voltages[e][j] -
             potential[g.edges[e].head][j];
    cycles.push_back(std::move(c));
  }
  return cycles;
}

// True when the rows generate the full rank-d integer lattice, i.e. the
// Smith normal form has d ones on the diagonal.
bool generates_full_lattice(std::vector<std::vector<BigInt>> rows, int d) {
  if (d == 0) return true;
  const int m = static_cast<int>(rows.size());
  if (m < d) return false;

  int r = 0;  // processed corner
  while (r < d) {
    // find a nonzero pivot
    int pi = -1, pj = -1;
    for (int i = r; i < m && pi < 0; ++i)
      for (int j = r; j < d; ++j)
        if (rows[i][j] != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) return false;  // rank deficient
    std::swap(rows[r], rows[pi]);
    for (int i = r; i < m; ++i) std::swap(rows[i][r], rows[i][pj]);

    // gcd elimination until the pivot divides its row and column
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (int i = r + 1; i < m; ++i) {
        if (rows[i][r] == 0) continue;
        BigInt q = rows[i][r] / rows[r][r];
        for (int j = r; j < d; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][r] != 0) {
          std::swap(rows[r], rows[i]);
          dirty = true;
        }
      }
      for (int j = r + 1; j < d; ++j) {
        if (rows[r][j] == 0) continue;
        BigInt q = rows[r][j] / rows[r][r];
        for (int i = r; i < m; ++i) rows[i][j] -= q * rows[i][r];
        if (rows[r][j] != 0) {
          for (int i = r; i < m; ++i) std::swap(rows[i][r], rows[i][j]);
          dirty = true;
        }
      }
    }
    if (rows[r][r] != 1 && rows[r][r] != -1) return false;  // invariant factor > 1
    ++r;
  }
  return true;
}

long long product_of(const std::vector<int>& moduli) {
  long long n = 1;
  for (int m : moduli) n *= m;
  return n;
}

double pairwise_sum(const std::vector<double>& xs, size_t lo, size_t hi) {
  if (hi - lo <= 8) {
    double s = 0.0;
    for (size_t i = lo; i < hi; ++i) s += xs[i];
    return s;
  }
  const size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(xs, lo, mid) + pairwise_sum(xs, mid, hi);
}

}  // namespace

void validate(const VoltageGraph& vg) {
  validate(vg.base);
  if (vg.rank < 0) throw Error("negative rank");
  if (static_cast<int>(vg.voltages.size()) != vg.base.edge_count())
    throw Error("one voltage vector per edge required");
  for (const auto& v : vg.voltages)
    if (static_cast<int>(v.size()) != vg.rank)
      throw Error("voltage vector length must equal the rank");
}

MultiGraph build_cover(const VoltageGraph& vg, const std::vector<int>& moduli) {
  validate(vg);
  if (static_cast<int>(moduli.size()) != vg.rank)
    throw BadModuli("moduli length must equal the rank");
  for (int m : moduli)
    if (m < 1) throw BadModuli("moduli must be positive");

  const int d = vg.rank;
  const long long sheets = product_of(moduli);
  std::vector<long long> stride(d, 1);
  for (int j = d - 2; j >= 0; --j) stride[j] = stride[j + 1] * moduli[j + 1];

  MultiGraph cover;
  cover.vertex_count = static_cast<int>(sheets) * vg.base.vertex_count;
  cover.edges.reserve(static_cast<size_t>(sheets) * vg.base.edges.size());
  std::vector<long long> digit(d);
  for (int e = 0; e < vg.base.edge_count(); ++e) {
    const auto& ed = vg.base.edges[e];
    for (long long g = 0; g < sheets; ++g) {
      long long shifted = 0;
      for (int j = 0; j < d; ++j) {
        digit[j] = (g / stride[j]) % moduli[j];
        long long moved = (digit[j] + vg.voltages[e][j]) % moduli[j];
        if (moved < 0) moved += moduli[j];
        shifted += moved * stride[j];
      }
      cover.edges.push_back({static_cast<int>(ed.tail * sheets + g),
                             static_cast<int>(ed.head * sheets + shifted)});
    }
  }
  return cover;
}

double l2_log_det_oracle(const VoltageGraph& vg, int nodes) {
  validate(vg);
  if (!is_connected(vg.base))
    throw DisconnectedGraph("the oracle needs a connected base graph");
  if (vg.rank < 1) throw BadModuli("the oracle needs rank >= 1");
  if (!generates_full_lattice(cycle_voltages(vg), vg.rank))
    throw VoltagesNotGenerating(
        "cycle voltages span a proper sublattice; the infinite cover is disconnected");

  const int d = vg.rank;
  if (nodes == 0) nodes = d == 1 ? 4096 : (d == 2 ? 512 : 64);
  if (nodes < 1) throw Error("quadrature needs at least one node per dimension");

  const int n = vg.base.vertex_count;
  long long total = 1;
  for (int j = 0; j < d; ++j) total *= nodes;

  std::vector<double> samples(static_cast<size_t>(total));
  Eigen::MatrixXcd twisted(n, n);
  std::vector<double> theta(d);
  for (long long idx = 0; idx < total; ++idx) {
    long long rest = idx;
    for (int j = d - 1; j >= 0; --j) {
      const long long k = rest % nodes;
      rest /= nodes;
      theta[j] = 2.0 * std::numbers::pi * (static_cast<double>(k) + 0.5) / nodes;
    }
    twisted.setZero();
    for (int e = 0; e < vg.base.edge_count(); ++e) {
      const auto& ed = vg.base.edges[e];
      double angle = 0.0;
      for (int j = 0; j < d; ++j) angle += theta[j] * static_cast<double>(vg.voltages[e][j]);
      const std::complex<double> phase(std::cos(angle), std::sin(angle));
      twisted(ed.head, ed.head) += 1.0;
      twisted(ed.tail, ed.tail) += 1.0;
      twisted(ed.head, ed.tail) -= phase;
      twisted(ed.tail, ed.head) -= std::conj(phase);
    }
    const double det = twisted.partialPivLu().determinant().real();
    if (!(det > 0.0))
      throw Error("twisted Laplacian determinant is not positive off the origin");
    samples[static_cast<size_t>(idx)] = std::log(det);
  }
  return 0.5 * pairwise_sum(samples, 0, samples.size()) / static_cast<double>(total);
}

TowerReport tower_report(const VoltageGraph& vg,
                         const std::vector<std::vector<int>>& moduli_sequence,
                         int lambda_grid, int oracle_nodes) {
  validate(vg);
  if (moduli_sequence.empty()) throw Error("tower_report needs at least one level");
  if (lambda_grid <= 0) throw Error("tower_report needs a positive lambda grid");
  for (size_t i = 0; i + 1 < moduli_sequence.size(); ++i) {
    const auto& lo = moduli_sequence[i];
    const auto& hi = moduli_sequence[i + 1];
    if (lo.size() != hi.size()) throw NotNested("moduli vectors differ in length");
    for (size_t j = 0; j < lo.size(); ++j)
      if (lo[j] == 0 || hi[j] % lo[j] != 0)
        throw NotNested("each level's moduli must divide the next level's");
  }

  TowerReport report;
  report.lambda_grid = lambda_grid;
  const GraphStats base_stats = stats(vg.base);
  report.uniform_constant =
      2.0 * static_cast<double>(base_stats.edge_count) * base_stats.max_degree;

  for (const auto& moduli : moduli_sequence) {
    TowerLevel level;
    level.moduli = moduli;
    level.sheets = product_of(moduli);
    level.cover = build_cover(vg, moduli);
    // one eigensolve per level feeds both the determinant and the profile
    const Spectrum spectrum = graph_spectrum(level.cover);
    double log_det = 0.0;
    for (int i = spectrum.zero_count; i < spectrum.size(); ++i)
      log_det += std::log(spectrum.values[i]);
    level.normalized_log_det = log_det / static_cast<double>(level.sheets);
    level.sdf_gap = gap_function(sdf_from_spectrum(spectrum));
    report.levels.push_back(std::move(level));
  }
  std::stable_sort(report.levels.begin(), report.levels.end(),
                   [](const TowerLevel& a, const TowerLevel& b) { return a.sheets < b.sheets; });

  report.oracle_limit = l2_log_det_oracle(vg, oracle_nodes);
  return report;
}

std::vector<UniformViolation> verify_uniform_estimate(const TowerReport& report) {
  std::vector<UniformViolation> violations;
  const int grid = report.lambda_grid > 0 ? report.lambda_grid : 512;
  for (const auto& level : report.levels) {
    const double sheets = static_cast<double>(level.sheets);
    std::vector<double> probes;
    for (int i = 0; i < grid; ++i) probes.push_back(static_cast<double>(i) / grid);
    for (double jp : level.sdf_gap.jump_points) {
      if (jp >= 1.0) continue;
      probes.push_back(jp);
      if (jp > kJumpProbeOffset) probes.push_back(jp - kJumpProbeOffset);
    }
    std::sort(probes.begin(), probes.end());
    probes.erase(std::unique(probes.begin(), probes.end()), probes.end());
    for (double lambda : probes) {
      const double gap = static_cast<double>(level.sdf_gap(lambda)) / sheets;
      const double bound = report.uniform_constant * lambda;
      if (gap > bound) violations.push_back({level.sheets, lambda, gap, bound});
    }
  }
  return violations;
}

void write_tower_csv(std::ostream& os, const TowerReport& report) {
  os << "sheets,norm_log_det,oracle,abs_error\n";
  for (const auto& level : report.levels) {
    os << level.sheets << ',' << format_real(level.normalized_log_det) << ','
       << format_real(report.oracle_limit) << ','
       << format_real(std::abs(level.normalized_log_det - report.oracle_limit))
       << '\n';
  }
}

}  // namespace specdens
