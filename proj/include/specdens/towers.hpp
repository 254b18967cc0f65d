#pragma once

#include <iosfwd>
#include <vector>

#include "specdens/multigraph.hpp"
#include "specdens/step_function.hpp"

namespace specdens {

/// Base multigraph with an integer vector of length rank per edge. Generates
/// the congruence covers: level (n_1, ..., n_d) pairs every base vertex with
/// a residue tuple and shifts edge heads by the edge's voltage.
struct VoltageGraph {
  MultiGraph base;
  int rank = 0;
  std::vector<std::vector<long long>> voltages;  // one vector per edge
};

void validate(const VoltageGraph& vg);

/// Finite quotient cover for the given moduli (all >= 1, length = rank).
/// Cover vertex (v, g) has index v * N + g with g in lexicographic
/// (row-major) order, N the product of the moduli; cover edge (e, g) has
/// index e * N + g and runs (tail(e), g) -> (head(e), g + voltage(e) mod n).
MultiGraph build_cover(const VoltageGraph& vg, const std::vector<int>& moduli);

struct TowerLevel {
  std::vector<int> moduli;
  long long sheets = 1;
  MultiGraph cover;
  double normalized_log_det = 0.0;
  StepFunction sdf_gap;  // unscaled gap; divide values by sheets
};

struct TowerReport {
  std::vector<TowerLevel> levels;  // ascending sheet count
  double oracle_limit = 0.0;
  double uniform_constant = 0.0;  // 2 |E(base)| deg(base)
  int lambda_grid = 0;
};

/// Per-sheet log-determinant of the infinite cover by Fourier quadrature:
/// (1/2) (2 pi)^-d integral of ln det of the phase-twisted Laplacian, by the
/// midpoint rule with `nodes` points per dimension (0 picks a default by
/// rank). The midpoint offset keeps the integrable singularity at 0 off the
/// grid. Requires a connected base whose tree-reduced cycle voltages
/// generate the full integer lattice (otherwise the infinite cover is
/// disconnected); throws VoltagesNotGenerating.
double l2_log_det_oracle(const VoltageGraph& vg, int nodes = 0);

/// Builds every level of a nested moduli sequence (componentwise
/// divisibility, like the subgroup chain it mirrors), computing each cover's
/// spectrum once. Throws NotNested.
TowerReport tower_report(const VoltageGraph& vg,
                         const std::vector<std::vector<int>>& moduli_sequence,
                         int lambda_grid, int oracle_nodes = 0);

struct UniformViolation {
  long long sheets = 0;
  double lambda = 0.0;
  double gap_per_sheet = 0.0;
  double bound = 0.0;
};

/// Checks gap(lambda)/sheets <= C * lambda at every level, on a uniform grid
/// over [0,1) plus all jump points below 1. Empty result on success.
std::vector<UniformViolation> verify_uniform_estimate(const TowerReport& report);

/// CSV with header sheets,norm_log_det,oracle,abs_error.
void write_tower_csv(std::ostream& os, const TowerReport& report);

}  // namespace specdens
