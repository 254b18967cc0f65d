#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "specdens/errors.hpp"
#include "specdens/spectral.hpp"
#include "specdens/towers.hpp"
#include "test_helpers.hpp"

using namespace specdens;
using namespace testhelp;

namespace {

VoltageGraph loop_voltage(long long sigma = 1) {
  VoltageGraph vg;
  vg.base.vertex_count = 1;
  vg.base.edges.push_back({0, 0});
  vg.rank = 1;
  vg.voltages = {{sigma}};
  return vg;
}

VoltageGraph torus_voltage() {
  VoltageGraph vg;
  vg.base.vertex_count = 1;
  vg.base.edges.push_back({0, 0});
  vg.base.edges.push_back({0, 0});
  vg.rank = 2;
  vg.voltages = {{1, 0}, {0, 1}};
  return vg;
}

}  // namespace

TEST_CASE("the loop cover is a cycle") {
  for (int n : {3, 5, 8}) {
    const MultiGraph cover = build_cover(loop_voltage(), {n});
    const GraphStats s = stats(cover);
    CHECK(cover.vertex_count == n);
    CHECK(s.edge_count == n);
    CHECK(s.b0 == 1);
    CHECK(s.max_degree == 2);
    CHECK(s.b1 == 1);
  }
}

TEST_CASE("modulus one reproduces the base") {
  const MultiGraph cover = build_cover(loop_voltage(), {1});
  CHECK(cover.vertex_count == 1);
  REQUIRE(cover.edge_count() == 1);
  CHECK(cover.edges[0].tail == cover.edges[0].head);
}

TEST_CASE("the two-loop cover is the discrete torus") {
  const int n = 4;
  const MultiGraph cover = build_cover(torus_voltage(), {n, n});
  const GraphStats s = stats(cover);
  CHECK(cover.vertex_count == n * n);
  CHECK(s.edge_count == 2 * n * n);
  CHECK(s.max_degree == 4);
  CHECK(s.b0 == 1);
}

TEST_CASE("cover sizes scale by the sheet count") {
  VoltageGraph vg;
  vg.base.vertex_count = 2;
  vg.base.edges.push_back({0, 1});
  vg.base.edges.push_back({1, 0});
  vg.rank = 1;
  vg.voltages = {{0}, {1}};
  for (int n : {2, 3, 6}) {
    const MultiGraph cover = build_cover(vg, {n});
    CHECK(cover.vertex_count == n * 2);
    CHECK(cover.edge_count() == n * 2);
    CHECK(stats(cover).max_degree == stats(vg.base).max_degree);
    CHECK(is_connected(cover));  // voltages generate Z
  }
}

TEST_CASE("bad moduli are rejected") {
  CHECK_THROWS_AS(build_cover(loop_voltage(), {0}), BadModuli);
  CHECK_THROWS_AS(build_cover(loop_voltage(), {2, 2}), BadModuli);
}

TEST_CASE("loop cover spectrum matches the circulant closed form") {
  const int n = 16;
  const MultiGraph cover = build_cover(loop_voltage(), {n});
  const Spectrum s = sym_eigenvalues(laplacian0(cover), 1);
  std::vector<double> expected;
  for (int k = 0; k < n; ++k)
    expected.push_back(2.0 - 2.0 * std::cos(2.0 * std::numbers::pi * k / n));
  std::sort(expected.begin(), expected.end());
  for (int k = 0; k < n; ++k)
    CHECK(s.values[k] == doctest::Approx(expected[k]).epsilon(0).scale(1).epsilon(1e-9));
}

TEST_CASE("oracle of the single loop vanishes") {
  // mean of ln(2 - 2 cos) over the circle is 0; the midpoint rule on M nodes
  // gives exactly ln(4)/M * (1/2)
  const double v = l2_log_det_oracle(loop_voltage(), 4096);
  CHECK(std::abs(v) < 1e-3);
  const double refined = l2_log_det_oracle(loop_voltage(), 16384);
  CHECK(std::abs(refined) < std::abs(v));
}

TEST_CASE("oracle of the two-loop base hits the lattice constant") {
  // 2G/pi with G Catalan's constant
  const double target = 0.5831218080679;
  const double coarse = l2_log_det_oracle(torus_voltage(), 128);
  const double fine = l2_log_det_oracle(torus_voltage(), 256);
  CHECK(std::abs(coarse - target) < 1e-3);
  CHECK(std::abs(fine - target) < 2e-4);
  CHECK(std::abs(fine - target) <= std::abs(coarse - target));
}

TEST_CASE("non-generating voltages are rejected") {
  CHECK_THROWS_AS(l2_log_det_oracle(loop_voltage(2), 64), VoltagesNotGenerating);

  // a single non-loop edge has no cycles at all
  VoltageGraph vg;
  vg.base.vertex_count = 2;
  vg.base.edges.push_back({0, 1});
  vg.rank = 1;
  vg.voltages = {{1}};
  CHECK_THROWS_AS(l2_log_det_oracle(vg, 64), VoltagesNotGenerating);
}

TEST_CASE("tree-reduced cycle voltages decide connectivity, not raw ones") {
  // two parallel edges with voltages 2 and 3: cycle voltage 2 - 3 = -1
  VoltageGraph vg;
  vg.base.vertex_count = 2;
  vg.base.edges.push_back({0, 1});
  vg.base.edges.push_back({0, 1});
  vg.rank = 1;
  vg.voltages = {{2}, {3}};
  CHECK_NOTHROW(l2_log_det_oracle(vg, 64));
  for (int n : {2, 3, 5}) CHECK(is_connected(build_cover(vg, {n})));
}

TEST_CASE("loop tower levels carry the closed-form determinant") {
  const TowerReport report =
      tower_report(loop_voltage(), {{2}, {4}, {8}, {16}}, 64, 512);
  REQUIRE(report.levels.size() == 4);
  CHECK(report.uniform_constant == doctest::Approx(4.0));  // 2 * 1 * 2
  for (const auto& level : report.levels) {
    const double n = static_cast<double>(level.sheets);
    // matrix-tree: det' of the n-cycle Laplacian is n^2
    CHECK(level.normalized_log_det == doctest::Approx(std::log(n) / n).epsilon(1e-9));
    CHECK(level.cover.vertex_count == level.sheets);
  }
  CHECK(verify_uniform_estimate(report).empty());
}

TEST_CASE("towers demand nested moduli") {
  CHECK_THROWS_AS(tower_report(loop_voltage(), {{4}, {6}}, 16, 64), NotNested);
  CHECK_THROWS_AS(tower_report(torus_voltage(), {{4, 4}, {8, 4}, {8, 6}}, 16, 64),
                  NotNested);
  CHECK_NOTHROW(tower_report(loop_voltage(), {{2}, {4}, {12}}, 16, 64));
}

TEST_CASE("a single trivial level reduces to the base graph") {
  const TowerReport report = tower_report(loop_voltage(), {{1}}, 16, 256);
  REQUIRE(report.levels.size() == 1);
  CHECK(report.levels[0].sheets == 1);
  CHECK(report.levels[0].normalized_log_det ==
        doctest::Approx(graph_log_det(loop_voltage().base)));
  // one sheet: the uniform estimate degenerates to the plain bound check
  CHECK(verify_uniform_estimate(report).empty());
  CHECK(verify_main_bound(loop_voltage().base, 16).ok());
}

TEST_CASE("tower CSV shape") {
  const TowerReport report = tower_report(loop_voltage(), {{2}, {4}}, 16, 128);
  std::ostringstream out;
  write_tower_csv(out, report);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "sheets,norm_log_det,oracle,abs_error");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 2);
}
