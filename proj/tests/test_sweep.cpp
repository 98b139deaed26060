#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "quadlab/equilibria.hpp"
#include "quadlab/stat_lab.hpp"
#include "quadlab/sweep.hpp"

using namespace quadlab;

namespace {

// F_c^p(x_c) - x_c with F_c(x) = x^2 + c/x, written out directly.
double superstable_gap(double c, int p) {
  const double xc = std::cbrt(c / 2.0);
  double x = xc;
  for (int i = 0; i < p; ++i) x = x * x + c / x;
  return x - xc;
}

double bisect(double lo, double hi, int p) {
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    ((superstable_gap(mid, p) < 0.0) == (superstable_gap(lo, p) < 0.0) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

bool ordered_disjoint(const WindowReport& r) {
  std::vector<std::pair<double, double>> all;
  for (const auto& w : r.windows) all.emplace_back(w.lo, w.hi);
  for (const auto& g : r.escapeGaps) all.emplace_back(g.lo, g.hi);
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i].first > all[i].second) return false;
    if (i > 0 && !(all[i - 1].second < all[i].first)) return false;
  }
  return std::is_sorted(r.windows.begin(), r.windows.end(), [](auto& a, auto& b) { return a.lo < b.lo; });
}

}  // namespace

TEST_CASE("orbit diagram of x^2 + c/x") {
  const auto d = orbit_diagram(SweepTemplate::holo(1), {-0.6, 0.15}, 751, StartRule::critical(), 2000, 50, 2);
  REQUIRE(d.rows.size() == 751);
  for (const auto& row : d.rows) {
    if (row.param < -0.5935) CHECK(row.states.empty());
    if (row.param > 0.005 && row.param < 0.145) {
      REQUIRE(row.states.size() == 50);
      // Attracting fixed point band inside (0, 2/3).
      const double x = row.states.back();
      CHECK(x > 0.0);
      CHECK(x < 2.0 / 3.0);
      CHECK(std::abs(x * x + row.param / x - x) < 1e-6);
    }
  }
  // c = 0 puts the critical point on the pole.
  const auto zero = orbit_diagram(SweepTemplate::holo(1), {-0.1, 0.1}, 3, StartRule::critical(), 10, 5);
  CHECK(zero.rows[1].param == 0.0);
  CHECK(zero.rows[1].states.empty());
}

TEST_CASE("Henon diagram branches for b = 0.3") {
  const auto d = orbit_diagram(SweepTemplate::henon(0.3), {0.0, 1.4}, 141, StartRule::at(0.0), 3000, 64);
  for (const auto& row : d.rows) {
    REQUIRE_FALSE(row.states.empty());
    const auto branches = count_clusters(row.states, 1e-6);
    if (row.param <= 0.32) CHECK(branches == 1);
    if (row.param >= 0.4 && row.param <= 0.88) CHECK(branches == 2);
  }
}

TEST_CASE("logistic diagram stays in [-1, 1]") {
  const auto d = orbit_diagram(SweepTemplate::logistic(), {0.0, 2.0}, 201, StartRule::critical(), 500, 100);
  for (const auto& row : d.rows) {
    REQUIRE(row.states.size() == 100);
    for (double s : row.states) {
      CHECK(s >= -1.0);
      CHECK(s <= 1.0);
    }
  }
}

TEST_CASE("orbit diagram is independent of the worker count") {
  const auto a = orbit_diagram(SweepTemplate::holo(1), {-0.59, 0.1}, 97, StartRule::critical(), 300, 20, 1);
  const auto b = orbit_diagram(SweepTemplate::holo(1), {-0.59, 0.1}, 97, StartRule::critical(), 300, 20, 7);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].param == b.rows[i].param);
    CHECK(a.rows[i].states == b.rows[i].states);
  }
}

TEST_CASE("orbit diagram argument checks") {
  CHECK_THROWS_AS(orbit_diagram(SweepTemplate::logistic(), {1.0, 0.0}, 10, {}, 10, 10), DynamicsError);
  CHECK_THROWS_AS(orbit_diagram(SweepTemplate::logistic(), {0.0, 1.0}, 1, {}, 10, 10), DynamicsError);
}

TEST_CASE("superstable parameters") {
  const double c1 = find_superstable(SweepTemplate::holo(1), 1, {0.01, 0.14});
  CHECK(std::abs(c1 - 2.0 / 27.0) < 1e-8);

  const double c3 = find_superstable(SweepTemplate::holo(1), 3, {-0.35, -0.30});
  CHECK(std::abs(c3 - bisect(-0.35, -0.30, 3)) < 1e-9);
  CHECK(std::abs(superstable_gap(c3, 3)) < 1e-8);

  const double c4 = find_superstable(SweepTemplate::holo(1), 4, {-0.5068, -0.5060});
  CHECK(std::abs(superstable_gap(c4, 4)) < 1e-8);

  CHECK_THROWS_AS(find_superstable(SweepTemplate::logistic(), 1, {-0.1, 0.1}), DynamicsError);
  try {
    find_superstable(SweepTemplate::logistic(), 1, {-0.1, 0.1});
  } catch (const DynamicsError& e) {
    CHECK(e.code() == ErrorCode::NoSignChange);
  }
}

TEST_CASE("period doubling parameters") {
  for (int m : {3, 4}) {
    const double lambda0 = saddle_node_value(m).lambda0;
    const double l = find_period_doubling(m);
    CHECK(l > 0.0);
    CHECK(l < lambda0);
    // The difference changes sign across the returned value.
    auto g = [&](double lam) {
      const FamilySpec f = FamilySpec::holo(m, {lam, 0.0});
      Complex z{real_critical_point(lam, m), 0.0};
      z = *eval(f, *eval(f, z));
      double z2 = 0.0;
      for (const auto& fp : real_fixed_points(lam, m)) z2 = std::max(z2, fp.location.real());
      return z.real() - z2;
    };
    CHECK((g(l * (1.0 - 1e-6)) < 0.0) != (g(l * (1.0 + 1e-6)) < 0.0));
  }
  try {
    find_period_doubling(2);
    FAIL("m = 2 should report NoSignChange");
  } catch (const DynamicsError& e) {
    CHECK(e.code() == ErrorCode::NoSignChange);
  }
  CHECK_THROWS_AS(find_period_doubling(1), DynamicsError);
}

TEST_CASE("homoclinic parameter") {
  const double c = find_homoclinic();
  CHECK(std::abs(c + 0.593) < 5e-3);
  // At c = -16/27 the critical point is -2/3 and its value 4/3 is the fixed point.
  CHECK(std::abs(c + 16.0 / 27.0) < 1e-12);
  CHECK_FALSE(critical_orbit_bounded(c - 1e-3, 10000));
  CHECK_FALSE(critical_orbit_bounded(-0.62, 10000));
}

TEST_CASE("critical orbit still escapes just above the homoclinic parameter") {
  // The value lands below the repelling fixed point, drifts past the pole and escapes.
  for (double c : {-0.5925, -0.59, -0.585}) CHECK_FALSE(critical_orbit_bounded(c, 10000));
  CHECK(critical_orbit_bounded(-0.58344, 10000));  // narrow window
  CHECK(critical_orbit_bounded(-0.56466, 10000));
}

TEST_CASE("window scan over the attracting fixed point range") {
  const auto r = window_scan({0.01, 0.14}, 200, 16);
  REQUIRE(r.windows.size() == 1);
  CHECK(r.windows[0].period == 1);
  CHECK(r.escapeGaps.empty());
  CHECK(ordered_disjoint(r));
}

TEST_CASE("window scan intervals are disjoint and ordered") {
  const auto r = window_scan({-0.593, -0.3237}, 1500, 32);
  CHECK(ordered_disjoint(r));
  CHECK_FALSE(r.windows.empty());
  const auto again = window_scan({-0.593, -0.3237}, 1500, 32, {4000, 1e-9, 3});
  REQUIRE(again.windows.size() == r.windows.size());
  for (std::size_t i = 0; i < r.windows.size(); ++i) CHECK(again.windows[i].lo == r.windows[i].lo);
}
