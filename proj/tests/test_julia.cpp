#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "quadlab/error.hpp"
#include "quadlab/julia.hpp"

using namespace quadlab;

namespace {

JuliaLabel label_of(int m, Complex lambda, int maxIter = 500) {
  return classify_julia(FamilySpec::holo(m, lambda), classification_viewport(), maxIter).label;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const DynamicsError& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;  // sentinel: nothing was thrown
}

// Plain iteration of z^2 + lambda / z from the critical point (lambda/2)^{1/3}.
bool critical_orbit_bounded(Complex lambda, int steps) {
  Complex z = std::pow(lambda / 2.0, 1.0 / 3.0);
  for (int k = 0; k < steps; ++k) {
    z = z * z + lambda / z;
    if (std::abs(z) > 2.0 + std::abs(lambda)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("small positive lambda gives a bounded critical orbit") {
  CHECK(critical_orbit_bounded({0.01, 0.0}, 2000));
  const auto c = classify_julia(FamilySpec::holo(1, {0.01, 0.0}), classification_viewport(), 500);
  CHECK(c.label == JuliaLabel::Connected);
  CHECK_FALSE(c.evidence.criticalEscaped);
  CHECK(c.evidence.componentOfCritical == CriticalComponent::None);
}

TEST_CASE("m = 2, lambda = -0.25: critical orbit escapes through the border component") {
  // The critical point (1+i)/2 maps to i, then -0.75, then about 0.118, then far out.
  const FamilySpec f = FamilySpec::holo(2, {-0.25, 0.0});
  Complex z{0.5, 0.5};
  z = *eval(f, z);
  CHECK(std::abs(z - Complex{0.0, 1.0}) < 1e-12);
  z = *eval(f, z);
  CHECK(std::abs(z - Complex{-0.75, 0.0}) < 1e-12);
  const auto c = classify_julia(f, classification_viewport(), 500);
  CHECK(c.label == JuliaLabel::CantorSet);
  REQUIRE(c.evidence.escapeIndex.has_value());
  CHECK(*c.evidence.escapeIndex == 4);
}

TEST_CASE("far negative lambda is a Cantor set") {
  CHECK(label_of(1, {-0.6, 0.0}) == JuliaLabel::CantorSet);
  CHECK(label_of(1, {0.3, 0.3}) == JuliaLabel::CantorSet);
}

TEST_CASE("classification is invariant under conjugation of lambda") {
  for (Complex l : {Complex{0.3, 0.3}, Complex{0.01, 0.005}, Complex{-0.1, 0.2}, Complex{0.002, -0.001}})
    CHECK(label_of(1, l) == label_of(1, std::conj(l)));
}

TEST_CASE("escape verdicts survive doubling maxIter") {
  for (Complex l : {Complex{-0.6, 0.0}, Complex{0.3, 0.3}, Complex{-0.1, 0.0}}) {
    const JuliaLabel a = label_of(1, l, 300);
    const JuliaLabel b = label_of(1, l, 600);
    if (a == JuliaLabel::CantorSet || a == JuliaLabel::CantorCurves) CHECK(b != JuliaLabel::Connected);
    CHECK(a == b);
  }
}

TEST_CASE("classification preconditions") {
  CHECK(code_of([] { classify_julia(FamilySpec::logistic(2.0), classification_viewport(), 10); }) ==
        ErrorCode::Unsupported);
  CHECK(code_of([] { classify_julia(FamilySpec::holo(1, {0.0, 0.0}), classification_viewport(), 10); }) ==
        ErrorCode::PreconditionViolated);
}

TEST_CASE("disk coverage shrinks along the negative ray") {
  const auto near = disk_covering_radius({-0.001, 0.0}, 300, 500);
  const auto far = disk_covering_radius({-0.1, 0.0}, 300, 500);
  CHECK(near.coveringRadius >= 0.0);
  CHECK(near.coveringRadius < far.coveringRadius);
  CHECK(near.coveringRadius < 0.1);
  CHECK(near.juliaPixels > 0);
  CHECK(near.epsilon == doctest::Approx(2.4 / 300));
}

TEST_CASE("disk coverage does not grow with resolution") {
  const auto coarse = disk_covering_radius({-0.001, 0.0}, 150, 500);
  const auto fine = disk_covering_radius({-0.001, 0.0}, 450, 500);
  CHECK(fine.coveringRadius <= coarse.coveringRadius);
}

TEST_CASE("disk coverage off the ray is only reported") {
  const auto off = disk_covering_radius({0.1, 0.0}, 150, 300);
  CHECK(std::isfinite(off.coveringRadius));
  CHECK(code_of([] { disk_covering_radius({0.0, 0.0}, 100, 100); }) == ErrorCode::PreconditionViolated);
}

TEST_CASE("circle contraction") {
  CHECK(circle_contraction_check({0.01, 0.0}, 360));
  CHECK(circle_contraction_check({-0.02, 0.0}, 360));
  CHECK(code_of([] { circle_contraction_check({0.04, 0.0}, 360); }) == ErrorCode::PreconditionViolated);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> mod(1e-6, 1.0 / 27.0 - 1e-3);
  std::uniform_real_distribution<double> arg(0.0, 2.0 * std::numbers::pi);
  for (int t = 0; t < 50; ++t) {
    const Complex l = std::polar(mod(rng), arg(rng));
    // Oracle bound from the triangle inequality: |F| <= r^2 + |l|/r = 2|l|^{2/3}.
    const double r = std::cbrt(std::abs(l));
    CHECK(2.0 * r * r < r);
    CHECK(circle_contraction_check(l, 360));
  }
}

TEST_CASE("escape monotonicity outside 1 + |lambda|") {
  CHECK(escape_monotonicity_check({0.3, 0.0}, 1000));
  CHECK(escape_monotonicity_check({0.0, 0.0}, 1000));
  CHECK(escape_monotonicity_check({3.0, 4.0}, 1000));
}

TEST_CASE("label names") {
  CHECK(to_string(JuliaLabel::CantorCurves) == "CantorCurves");
  CHECK(to_string(JuliaLabel::SierpinskiCandidate) == "SierpinskiCandidate");
  CHECK(to_string(CriticalComponent::Pole) == "Pole");
}
