#include "specdens/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "specdens/errors.hpp"

namespace specdens {

namespace {

constexpr double kOffTolerance = 1e-14;      // stop: off-norm <= this * frob
constexpr double kSymTolerance = 1e-12;      // symmetry check, relative
constexpr double kKernelGuard = 1e-7;        // KernelMismatch threshold
constexpr double kTraceTolerance = 1e-8;     // eigenvalue sum vs trace
constexpr double kGramPsdTolerance = 1e-9;   // Gram eigenvalues >= -this*frob

// One tournament round-robin schedule step (circle method, slot 0 fixed).
void advance_schedule(std::vector<Eigen::Index>& top, std::vector<Eigen::Index>& bot) {
  const auto h = static_cast<Eigen::Index>(top.size());
  Eigen::Index carry_top = top[h - 1];
  for (Eigen::Index i = h - 1; i > 1; --i) top[i] = top[i - 1];
  Eigen::Index carry_bot = bot[0];
  for (Eigen::Index i = 0; i + 1 < h; ++i) bot[i] = bot[i + 1];
  top[1] = carry_bot;
  bot[h - 1] = carry_top;
}

// Cyclic Jacobi in round-robin order. Each round collects rotations on
// disjoint index pairs and applies them in two passes: column updates
// (contiguous) and a single column-major pass for the row updates, which
// keeps the working set cache resident at the sizes the towers produce.
// Returns the diagonal, unsorted.
Eigen::VectorXd jacobi_eigenvalues(Eigen::MatrixXd a) {
  const Eigen::Index n = a.rows();
  const double frob = a.norm();
  if (n < 2 || frob == 0.0) return a.diagonal();
  const double target = kOffTolerance * frob;

  const Eigen::Index m = (n % 2 == 0) ? n : n + 1;  // odd n: one phantom slot
  std::vector<Eigen::Index> top(m / 2), bot(m / 2);
  for (Eigen::Index i = 0; i < m / 2; ++i) {
    top[i] = 2 * i;
    bot[i] = 2 * i + 1;
  }

  std::vector<double> cs(m / 2), sn(m / 2);
  std::vector<Eigen::Index> ps(m / 2), qs(m / 2);
  Eigen::VectorXd tp(n), tq(n);

  const int max_sweeps = 100;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off2 = 0.0;
    for (Eigen::Index q = 1; q < n; ++q) off2 += a.col(q).head(q).squaredNorm();
    if (std::sqrt(2.0 * off2) <= target) return a.diagonal();
    // early sweeps skip entries that cannot move the off-norm much
    const double tresh =
        (sweep < 4) ? 0.2 * std::sqrt(2.0 * off2) / static_cast<double>(n) : 0.0;

    for (Eigen::Index round = 0; round < m - 1; ++round) {
      Eigen::Index cnt = 0;
      for (Eigen::Index i = 0; i < m / 2; ++i) {
        const Eigen::Index p = std::min(top[i], bot[i]);
        const Eigen::Index q = std::max(top[i], bot[i]);
        if (q >= n) continue;
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double scaled = 100.0 * std::abs(apq);
        if (sweep > 4 &&
            scaled <= std::numeric_limits<double>::epsilon() * std::abs(a(p, p)) &&
            scaled <= std::numeric_limits<double>::epsilon() * std::abs(a(q, q))) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        if (std::abs(apq) <= tresh) continue;
        const double theta = 0.5 * (a(q, q) - a(p, p)) / apq;
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(1.0 + theta * theta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        ps[cnt] = p;
        qs[cnt] = q;
        cs[cnt] = c;
        sn[cnt] = t * c;
        ++cnt;
      }
      // A <- A Q on disjoint column pairs
      for (Eigen::Index i = 0; i < cnt; ++i) {
        const double c = cs[i], s = sn[i];
        tp = c * a.col(ps[i]) - s * a.col(qs[i]);
        tq = s * a.col(ps[i]) + c * a.col(qs[i]);
        a.col(ps[i]) = tp;
        a.col(qs[i]) = tq;
      }
      // A <- Q^T A, walking columns so each 8n-byte strip stays in L1
      double* data = a.data();
      for (Eigen::Index k = 0; k < n; ++k) {
        double* col = data + k * n;
        for (Eigen::Index i = 0; i < cnt; ++i) {
          const double x = col[ps[i]];
          const double y = col[qs[i]];
          col[ps[i]] = cs[i] * x - sn[i] * y;
          col[qs[i]] = sn[i] * x + cs[i] * y;
        }
      }
      advance_schedule(top, bot);
    }
  }
  throw Error("jacobi iteration did not converge in 100 sweeps");
}

}  // namespace

Spectrum sym_eigenvalues(const Eigen::MatrixXd& m, int known_kernel_dim) {
  if (m.rows() != m.cols()) throw NotSquare("sym_eigenvalues: matrix is not square");
  if (known_kernel_dim < 0 || known_kernel_dim > m.rows())
    throw KernelMismatch("kernel dimension outside [0, rows]");
  const double frob = m.norm();
  if ((m - m.transpose()).norm() > kSymTolerance * std::max(1.0, frob))
    throw NotSymmetric("sym_eigenvalues: matrix is not symmetric");

  Eigen::VectorXd diag = jacobi_eigenvalues(m);
  Spectrum s;
  s.values.assign(diag.data(), diag.data() + diag.size());
  std::sort(s.values.begin(), s.values.end());
  s.zero_count = known_kernel_dim;

  if (known_kernel_dim < s.size() &&
      s.values[known_kernel_dim] < kKernelGuard * (1.0 + frob)) {
    throw KernelMismatch(
        "eigenvalue " + std::to_string(known_kernel_dim) + " is " +
        std::to_string(s.values[known_kernel_dim]) +
        ", too small for the declared kernel dimension " +
        std::to_string(known_kernel_dim));
  }
  for (int i = 0; i < known_kernel_dim; ++i) s.values[i] = 0.0;

  double sum = 0.0;
  for (double v : s.values) sum += v;
  if (std::abs(sum - m.trace()) > kTraceTolerance * std::max(1.0, frob))
    throw Error("sym_eigenvalues: eigenvalue sum deviates from the trace");
  return s;
}

Spectrum singular_values(const Eigen::MatrixXd& a, int known_kernel_dim) {
  const int rows = static_cast<int>(a.rows());
  const int cols = static_cast<int>(a.cols());
  const int rank = cols - known_kernel_dim;
  if (known_kernel_dim < 0 || rank < 0 || rank > rows)
    throw KernelMismatch("singular_values: kernel dimension is inconsistent");

  Spectrum out;
  out.zero_count = known_kernel_dim;
  out.values.assign(cols, 0.0);
  if (rows == 0 || cols == 0) return out;

  Eigen::MatrixXd gram;
  int gram_kernel;
  if (cols <= rows) {
    gram = a.transpose() * a;
    gram_kernel = known_kernel_dim;
  } else {
    gram = a * a.transpose();
    gram_kernel = rows - rank;
  }

  Spectrum eig = sym_eigenvalues(gram, gram_kernel);
  const double frob = gram.norm();
  for (double v : eig.values) {
    if (v < -kGramPsdTolerance * std::max(1.0, frob))
      throw Error("singular_values: Gram matrix has a significantly negative eigenvalue");
  }
  for (int i = 0; i < rank; ++i) {
    const double v = eig.values[eig.size() - rank + i];
    out.values[known_kernel_dim + i] = std::sqrt(std::max(v, 0.0));
  }
  return out;
}

BigInt integer_determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw NotSquare("integer_determinant: matrix is not square");
  const Eigen::Index n = m.rows();
  if (n == 0) return 1;

  IntMatrix a = m;
  BigInt prev = 1;
  int sign = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index pivot = -1;
      for (Eigen::Index r = k + 1; r < n; ++r) {
        if (a(r, k) != 0) {
          pivot = r;
          break;
        }
      }
      if (pivot < 0) return 0;
      a.row(k).swap(a.row(pivot));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        // divisions in Bareiss elimination are exact
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

}  // namespace specdens
