#include "quadlab/nonholo.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace quadlab::nonholo {

Mat2 jacobian(double beta, double x, double y) {
  const double r2 = x * x + y * y;
  if (r2 == 0.0) throw DynamicsError(ErrorCode::PoleHit, "Jacobian evaluated at the pole");
  const double r4 = r2 * r2;
  const double diff = beta * (x * x - y * y) / r4;
  const double cross = 2.0 * beta * x * y / r4;
  return Mat2{2.0 * x - diff, -2.0 * y - cross, 2.0 * y - cross, 2.0 * x + diff};
}

Mat2 jacobian(const FamilySpec& family, Complex z) {
  if (family.kind != FamilyKind::NonholoPerturbed)
    throw DynamicsError(ErrorCode::Unsupported, "jacobian expects the nonholomorphic family");
  Complex zbar_pow{1.0, 0.0};
  for (int i = 0; i < family.m + 1; ++i) zbar_pow *= std::conj(z);
  if (std::norm(zbar_pow) == 0.0) throw DynamicsError(ErrorCode::PoleHit, "Jacobian evaluated at the pole");
  const Complex dz = 2.0 * z;
  const Complex dzbar = -static_cast<double>(family.m) * family.param / zbar_pow;
  // For f = u + iv: u_x = Re(dz + dzbar), u_y = -Im(dz - dzbar),
  //                 v_x = Im(dz + dzbar), v_y =  Re(dz - dzbar).
  const Complex sum = dz + dzbar;
  const Complex diff = dz - dzbar;
  return Mat2{sum.real(), -diff.imag(), sum.imag(), diff.real()};
}

CycleEigenReport cycle_eigen(double beta, std::span<const double> points, double tol) {
  if (points.empty()) throw DynamicsError(ErrorCode::NotACycle, "empty point list");
  const auto family = FamilySpec::nonholo(1, {beta, 0.0});
  CycleEigenReport report;
  report.beta = beta;
  report.period = static_cast<int>(points.size());
  report.points.assign(points.begin(), points.end());
  report.product = Mat2::identity();
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double x = points[i];
    const auto image = eval(family, {x, 0.0});
    if (!image) throw DynamicsError(ErrorCode::NotACycle, "cycle passes through the pole");
    const double next = points[(i + 1) % points.size()];
    const double miss = std::abs(image->real() - next);
    report.closureError = std::max(report.closureError, miss);
    if (!(miss <= tol))
      throw DynamicsError(ErrorCode::NotACycle, "G(p" + std::to_string(i) + ") misses the next point by " +
                                                    std::to_string(miss));
    report.product = jacobian(beta, x, 0.0) * report.product;
  }
  report.eigenvalues = eigenvalues(report.product);
  return report;
}

bool real_line_agreement(double param, double x) {
  if (x == 0.0) throw DynamicsError(ErrorCode::PreconditionViolated, "x = 0 is the pole");
  const auto holo = eval(FamilySpec::holo(1, {param, 0.0}), {x, 0.0});
  const auto anti = eval(FamilySpec::nonholo(1, {param, 0.0}), {x, 0.0});
  return std::abs(*holo - *anti) < 1e-12 && holo->imag() == 0.0 && anti->imag() == 0.0;
}

bool real_line_agreement(double param, Complex z) {
  if (z.imag() != 0.0) throw DynamicsError(ErrorCode::PreconditionViolated, "point is off the real axis");
  return real_line_agreement(param, z.real());
}

PlaneStability transverse_stability(double beta, std::span<const double> points, double tol) {
  const auto report = cycle_eigen(beta, points, tol);
  const int expanding = (report.eigenvalues.modulus_first() > 1.0 ? 1 : 0) +
                        (report.eigenvalues.modulus_second() > 1.0 ? 1 : 0);
  if (expanding == 1) return PlaneStability::SaddleInPlane;
  return expanding == 0 ? PlaneStability::AttractingInPlane : PlaneStability::RepellingInPlane;
}

double critical_circle_radius(Complex beta) {
  if (beta == Complex{0.0, 0.0}) throw DynamicsError(ErrorCode::PreconditionViolated, "beta must be nonzero");
  return std::cbrt(0.5 * std::abs(beta));
}

}  // namespace quadlab::nonholo
