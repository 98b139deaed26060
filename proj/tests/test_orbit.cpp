#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "quadlab/orbit.hpp"

using namespace quadlab;

namespace {

// Every expected point has a cycle point within tol.
bool same_point_set(const std::vector<Complex>& got, const std::vector<double>& want, double tol) {
  if (got.size() != want.size()) return false;
  return std::all_of(want.begin(), want.end(), [&](double w) {
    return std::any_of(got.begin(), got.end(), [&](Complex g) { return std::abs(g - Complex{w, 0.0}) < tol; });
  });
}

}  // namespace

TEST_CASE("iterate escapes z^2 from 2 at the first step") {
  const auto r = iterate(FamilySpec::holo(1, {0.0, 0.0}), {2.0, 0.0}, 10, 2.0);
  CHECK(r.escaped);
  REQUIRE(r.escapeIndex.has_value());
  CHECK(*r.escapeIndex == 1);
  CHECK(std::abs(r.states[1]) > 2.0);
}

TEST_CASE("orbit converges to the superattracting point 1/3") {
  const auto r = iterate(FamilySpec::holo(1, {2.0 / 27.0, 0.0}), {0.4, 0.0}, 200, 3.0);
  CHECK_FALSE(r.escaped);
  CHECK(r.states.size() == 201);
  CHECK(std::abs(r.final - Complex{1.0 / 3.0, 0.0}) < 1e-6);
}

TEST_CASE("critical orbit escapes below the homoclinic parameter") {
  const FamilySpec f = FamilySpec::holo(1, {-0.6, 0.0});
  const auto r = iterate(f, {real_critical_point(-0.6, 1), 0.0}, 2000, default_escape_radius(f));
  CHECK(r.escaped);
}

TEST_CASE("pole hit counts as escape") {
  const FamilySpec f = FamilySpec::holo(1, {0.1, 0.0});
  CHECK(escape_time(f, {0.0, 0.0}, 50, 3.0) == 1);
  const auto r = iterate(f, {0.0, 0.0}, 50, 3.0);
  CHECK(r.escaped);
  CHECK(*r.escapeIndex == 1);
}

TEST_CASE("ring buffer keeps only the newest states") {
  const FamilySpec f = FamilySpec::holo(1, {2.0 / 27.0, 0.0});
  const auto full = iterate(f, {0.4, 0.0}, 100, 3.0);
  const auto ring = iterate(f, {0.4, 0.0}, 100, 3.0, 8);
  REQUIRE(ring.states.size() == 8);
  CHECK(ring.firstIndex == 93);
  for (std::size_t i = 0; i < 8; ++i) CHECK(ring.states[i] == full.states[93 + i]);
  CHECK(ring.final == full.final);
}

TEST_CASE("orbit determinism") {
  const FamilySpec f = FamilySpec::holo(2, {-0.25, 0.1});
  const auto a = iterate(f, {0.3, 0.2}, 500, 3.0);
  const auto b = iterate(f, {0.3, 0.2}, 500, 3.0);
  CHECK(a.states == b.states);
  CHECK(a.escaped == b.escaped);
}

TEST_CASE("period-3 cycle of x^2 - 0.327/x") {
  const auto c = detect_cycle(FamilySpec::holo(1, {-0.327, 0.0}), {-0.549241, 0.0}, 2000, 16);
  REQUIRE(c.has_value());
  CHECK(c->period == 3);
  CHECK(same_point_set(c->points, {-0.549241, 0.897033, 0.440311}, 5e-3));
  CHECK(c->stability == Stability::Attracting);
}

TEST_CASE("no attracting cycle at lambda = -0.507") {
  // Just past the period-4 window the critical orbit no longer settles.
  CHECK_FALSE(detect_cycle(FamilySpec::holo(1, {-0.507, 0.0}), {-0.632282, 0.0}, 20000, 64, 1e-7).has_value());
}

TEST_CASE("period-4 cycle near the listed points") {
  const auto c = detect_cycle(FamilySpec::holo(1, {-0.5064, 0.0}), {-0.632282, 0.0}, 4000, 16);
  REQUIRE(c.has_value());
  CHECK(c->period == 4);
  // The listed points carry rounding well beyond their six digits; 2e-2 covers it.
  CHECK(same_point_set(c->points, {-0.632282, 1.201797, 1.022799, 0.550833}, 2e-2));
}

TEST_CASE("logistic a = 0.5 settles on its fixed point") {
  const auto c = detect_cycle(FamilySpec::logistic(0.5), {0.0, 0.0}, 500, 8);
  REQUIRE(c.has_value());
  CHECK(c->period == 1);
  CHECK(std::abs(c->points[0].real() - (std::sqrt(3.0) - 1.0)) < 1e-8);
}

TEST_CASE("cycle points return after one period") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-0.5, 0.14);
  const double tol = 1e-9;
  for (int t = 0; t < 40; ++t) {
    const double c = u(rng);
    if (c == 0.0) continue;
    const FamilySpec f = FamilySpec::holo(1, {c, 0.0});
    const auto cycle = detect_cycle(f, {real_critical_point(c, 1), 0.0}, 3000, 32, tol);
    if (!cycle) continue;
    for (const Complex& p : cycle->points) {
      Complex z = p;
      for (int k = 0; k < cycle->period; ++k) z = *eval(f, z);
      CHECK(std::abs(z - p) < 10 * tol);
    }
  }
}

TEST_CASE("chaotic and escaping orbits have no cycle") {
  CHECK_FALSE(detect_cycle(FamilySpec::logistic(2.0), {0.1, 0.0}, 100, 32).has_value());
  CHECK_FALSE(detect_cycle(FamilySpec::holo(1, {-0.6, 0.0}), {real_critical_point(-0.6, 1), 0.0}, 3000, 8));
}

TEST_CASE("multiplier classification") {
  CHECK(classify_multiplier(Complex{0.5, 0.0}) == Stability::Attracting);
  CHECK(classify_multiplier(Complex{0.0, 2.0}) == Stability::Repelling);
  CHECK(classify_multiplier(Complex{-1.0, 0.0}) == Stability::Neutral);
  CHECK(classify_multiplier(Mat2::diag(2.0, 0.1)) == Stability::Saddle);
  CHECK(classify_multiplier(Mat2::diag(0.2, 0.1)) == Stability::Attracting);
  CHECK(classify_multiplier(Mat2::diag(3.0, -2.0)) == Stability::Repelling);
}

TEST_CASE("Birkhoff averages") {
  const FamilySpec tentlike = FamilySpec::logistic(2.0);
  const auto logd = [](double x) { return std::log(std::abs(4.0 * x)); };
  CHECK(std::abs(birkhoff_average(tentlike, 0.1234, logd, 1000, 1000000) - std::log(2.0)) < 0.02);
  CHECK(birkhoff_average(tentlike, 0.3, [](double) { return 1.0; }, 10, 1000) == 1.0);
  CHECK(std::abs(birkhoff_average(FamilySpec::logistic(0.5), 0.0, [](double x) { return x; }, 1000, 10000) -
                 (std::sqrt(3.0) - 1.0)) < 1e-6);
}

TEST_CASE("adding a constant shifts the Birkhoff average") {
  const FamilySpec f = FamilySpec::logistic(1.8);
  const auto obs = [](double x) { return x * x; };
  const double base = birkhoff_average(f, 0.2, obs, 100, 5000);
  const double shifted = birkhoff_average(f, 0.2, [&](double x) { return obs(x) + 2.5; }, 100, 5000);
  CHECK(std::abs(shifted - base - 2.5) < 1e-12);
}

TEST_CASE("Birkhoff average reports escape") {
  CHECK_THROWS_AS(birkhoff_average(FamilySpec::holo(1, {-0.6, 0.0}), real_critical_point(-0.6, 1),
                                   [](double x) { return x; }, 0, 5000),
                  DynamicsError);
}

TEST_CASE("one-dimensional Lyapunov exponents") {
  CHECK(std::abs(lyapunov_1d(FamilySpec::logistic(2.0), 0.1234, 1000, 1000000).exponents[0] - std::log(2.0)) < 0.02);
  CHECK(lyapunov_1d(FamilySpec::logistic(0.5), 0.0, 1000, 10000).exponents[0] < 0.0);
  CHECK(std::isinf(lyapunov_1d(FamilySpec::logistic(0.0), 0.3, 0, 100).exponents[0]));
  CHECK_THROWS_AS(lyapunov_1d(FamilySpec::henon(1.4, 0.3), 0.0, 0, 10), DynamicsError);
}

TEST_CASE("Henon Lyapunov exponents") {
  const auto chaotic = lyapunov_2d(FamilySpec::henon(1.4, 0.3), {0.0, 0.0}, 1000, 200000);
  REQUIRE(chaotic.exponents.size() == 2);
  CHECK(chaotic.exponents[0] > 0.0);
  CHECK(chaotic.exponents[0] >= chaotic.exponents[1]);
  CHECK(std::abs(chaotic.exponents[0] + chaotic.exponents[1] - std::log(0.3)) < 0.02);
  const auto fixed = lyapunov_2d(FamilySpec::henon(0.2, 0.3), {0.0, 0.0}, 1000, 20000);
  CHECK(fixed.exponents[0] < 0.0);
  CHECK(fixed.exponents[1] < 0.0);
  CHECK(std::abs(fixed.exponents[0] + fixed.exponents[1] - std::log(0.3)) < 0.02);
}
