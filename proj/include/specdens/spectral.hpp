#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <string>
#include <vector>

#include "specdens/linalg.hpp"
#include "specdens/multigraph.hpp"
#include "specdens/step_function.hpp"

namespace specdens {

/// |V| x |E| matrix of the graph differential: column e carries +1 at the
/// head and -1 at the tail, so a loop column is identically zero.
Eigen::MatrixXd incidence(const MultiGraph& g);

/// Vertex Laplacian, incidence * incidence^T. Loops contribute nothing.
Eigen::MatrixXd laplacian0(const MultiGraph& g);

/// Singular values of the differential, computed from the Laplacian with the
/// kernel dimension supplied as b0. |E| values, b1 of them zero.
Spectrum graph_spectrum(const MultiGraph& g);

/// First spectral density function: F(lambda) = b1 + #{positive singular
/// values <= lambda}. Starts at b1 and reaches |E| past the largest jump.
StepFunction sdf(const MultiGraph& g);

StepFunction sdf_from_spectrum(const Spectrum& s);

/// Smallest positive Laplacian eigenvalue; throws NoPositiveSpectrum when
/// the spectrum is all kernel (no edges, or loops only).
double smallest_positive_eigenvalue(const MultiGraph& g);

/// 1 / (diam * vol), the lower bound for the eigenvalue above.
/// Requires a connected graph with at least two vertices.
double chung_bound(const MultiGraph& g);

/// Natural log of the product of non-zero singular values (0 for the zero map).
double fk_det(const Eigen::MatrixXd& a, int known_kernel_dim);

/// Same quantity for the graph differential, reusing graph_spectrum.
double graph_log_det(const MultiGraph& g);

/// Number of spanning trees by the exact-integer Kirchhoff determinant
/// (first row and column deleted). Loops are irrelevant; parallel edges count.
BigInt spanning_tree_count(const MultiGraph& g);

enum class Regime { Zero, Silent, Linear };

std::string to_string(Regime r);

struct BoundViolation {
  double lambda = 0.0;
  long long gap = 0;
  double bound = 0.0;
  Regime regime = Regime::Linear;
};

/// Pointwise record of the eigenvalue-distribution bound
/// gap(lambda) <= 2 |E| deg lambda on [0,1), plus the fine two-regime check.
struct BoundReport {
  std::vector<double> lambda_grid;  // ascending probe points in [0,1)
  std::vector<long long> sdf_gap;
  std::vector<double> bound;
  std::vector<Regime> regime;
  double fine_zero_threshold = 0.0;    // 1 / (sqrt(2) |E|)
  double fine_linear_threshold = 0.0;  // 1 / (2 (|E|-1) deg)
  std::vector<BoundViolation> violations;

  bool ok() const { return violations.empty(); }
};

/// Probes grid_size uniform points of [0,1) plus every jump point below 1
/// (at the jump and 1e-12 before it). Checks gap <= 2 |E| deg lambda
/// everywhere; for connected graphs of degree >= 2 additionally gap == 0
/// below the zero threshold; for degree <= 1, gap == 0 through lambda = 1.
BoundReport verify_main_bound(const MultiGraph& g, int grid_size);

/// CSV with header lambda,gap,bound,regime,violated (15 significant digits).
void write_bound_csv(std::ostream& os, const BoundReport& report);

}  // namespace specdens
