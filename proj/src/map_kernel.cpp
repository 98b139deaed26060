#include "quadlab/map_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace quadlab {

namespace {

Complex ipow(Complex z, int n) {
  Complex r{1.0, 0.0};
  for (int i = 0; i < n; ++i) r *= z;
  return r;
}

// num / w without the library's slow scaled complex division.
Complex divide(Complex num, Complex w) {
  const double n = std::norm(w);
  return num * std::conj(w) / n;
}

void require_perturbed_order(const FamilySpec& family) {
  if (family.m < 1) throw DynamicsError(ErrorCode::InvalidArgument, "perturbation order m must be >= 1");
}

}  // namespace

FamilySpec FamilySpec::holo(int m, Complex lambda) {
  return FamilySpec{FamilyKind::HoloPerturbed, m, lambda, 0.0};
}

FamilySpec FamilySpec::nonholo(int m, Complex beta) {
  return FamilySpec{FamilyKind::NonholoPerturbed, m, beta, 0.0};
}

FamilySpec FamilySpec::logistic(double a) { return FamilySpec{FamilyKind::Logistic, 1, {a, 0.0}, 0.0}; }

FamilySpec FamilySpec::henon(double a, double b) { return FamilySpec{FamilyKind::Henon, 1, {a, 0.0}, b}; }

FamilySpec FamilySpec::quadratic(Complex c) { return FamilySpec{FamilyKind::PureQuadratic, 1, c, 0.0}; }

bool step_in_place(const FamilySpec& family, Complex& z) noexcept {
  switch (family.kind) {
    case FamilyKind::HoloPerturbed: {
      const Complex w = ipow(z, family.m);
      const double n = std::norm(w);
      if (n == 0.0) {
        if (family.param != Complex{0.0, 0.0}) return false;
        z = z * z;  // lambda = 0 is the plain square map; no pole
        return true;
      }
      z = z * z + family.param * std::conj(w) / n;
      return true;
    }
    case FamilyKind::NonholoPerturbed: {
      // beta / conj(w) = beta * w / |w|^2
      const Complex w = ipow(z, family.m);
      const double n = std::norm(w);
      if (n == 0.0) {
        if (family.param != Complex{0.0, 0.0}) return false;
        z = z * z;
        return true;
      }
      z = z * z + family.param * w / n;
      return true;
    }
    case FamilyKind::Logistic: {
      const double x = z.real();
      z = Complex{1.0 - family.param.real() * x * x, 0.0};
      return true;
    }
    case FamilyKind::Henon: {
      const double x = z.real();
      const double y = z.imag();
      z = Complex{1.0 - family.param.real() * x * x + y, family.b * x};
      return true;
    }
    case FamilyKind::PureQuadratic:
      z = z * z + family.param;
      return true;
  }
  return false;
}

Expected<Complex> eval(const FamilySpec& family, Complex z) {
  if (!step_in_place(family, z)) return ErrorCode::PoleHit;
  return z;
}

double default_escape_radius(const FamilySpec& family) {
  switch (family.kind) {
    case FamilyKind::HoloPerturbed:
    case FamilyKind::NonholoPerturbed:
    case FamilyKind::PureQuadratic:
      return std::max(2.0, 1.0 + std::abs(family.param)) + 1.0;
    case FamilyKind::Logistic:
    case FamilyKind::Henon:
      break;
  }
  return 1e6;
}

Expected<Complex> derivative_holo(const FamilySpec& family, Complex z) {
  switch (family.kind) {
    case FamilyKind::HoloPerturbed: {
      const Complex w = ipow(z, family.m + 1);
      if (std::norm(w) == 0.0) {
        if (family.param == Complex{0.0, 0.0}) return 2.0 * z;
        return ErrorCode::PoleHit;
      }
      return 2.0 * z - divide(static_cast<double>(family.m) * family.param, w);
    }
    case FamilyKind::Logistic:
      return Complex{-2.0 * family.param.real() * z.real(), 0.0};
    case FamilyKind::PureQuadratic:
      return 2.0 * z;
    case FamilyKind::NonholoPerturbed:
    case FamilyKind::Henon:
      break;
  }
  return ErrorCode::Unsupported;
}

Mat2 henon_jacobian(double a, double b, double x) { return Mat2{-2.0 * a * x, 1.0, b, 0.0}; }

std::vector<Complex> roots_of(Complex w, int degree) {
  if (degree < 1) throw DynamicsError(ErrorCode::InvalidArgument, "root degree must be >= 1");
  if (w == Complex{0.0, 0.0}) return {Complex{0.0, 0.0}};
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double base = std::arg(w);
  if (base < 0.0) base += two_pi;
  const double modulus = std::pow(std::abs(w), 1.0 / degree);
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(degree));
  for (int k = 0; k < degree; ++k) out.push_back(std::polar(modulus, (base + two_pi * k) / degree));
  return out;
}

CriticalSet critical_set(const FamilySpec& family) {
  CriticalSet set;
  switch (family.kind) {
    case FamilyKind::HoloPerturbed:
      require_perturbed_order(family);
      set.points = roots_of(0.5 * family.m * family.param, family.m + 2);
      break;
    case FamilyKind::NonholoPerturbed: {
      require_perturbed_order(family);
      const double r = std::pow(0.5 * family.m * std::abs(family.param), 1.0 / (family.m + 2));
      set.circleRadius = r;
      if (r == 0.0) set.points = {Complex{0.0, 0.0}};
      break;
    }
    case FamilyKind::Logistic:
    case FamilyKind::PureQuadratic:
      set.points = {Complex{0.0, 0.0}};
      break;
    case FamilyKind::Henon:
      throw DynamicsError(ErrorCode::Unsupported, "the Henon map has no critical points");
  }
  return set;
}

std::vector<Complex> prepoles(const FamilySpec& family) {
  if (family.kind != FamilyKind::HoloPerturbed)
    throw DynamicsError(ErrorCode::Unsupported, "prepoles are defined for the holomorphic family");
  require_perturbed_order(family);
  return roots_of(-family.param, family.m + 2);
}

Complex symmetry_root(const FamilySpec& family) {
  if (family.kind != FamilyKind::HoloPerturbed)
    throw DynamicsError(ErrorCode::Unsupported, "rotation symmetry is defined for the holomorphic family");
  require_perturbed_order(family);
  return std::polar(1.0, 2.0 * std::numbers::pi / (family.m + 2));
}

double real_critical_point(double c, int m) {
  const double target = 0.5 * m * c;
  const double r = std::pow(std::abs(target), 1.0 / (m + 2));
  if (target >= 0.0) return r;
  if ((m + 2) % 2 == 1) return -r;
  throw DynamicsError(ErrorCode::PreconditionViolated, "no real critical point for even m and negative parameter");
}

}  // namespace quadlab
