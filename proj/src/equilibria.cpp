#include "quadlab/equilibria.hpp"

#include <cmath>

#include "quadlab/orbit.hpp"
#include "quadlab/roots.hpp"

namespace quadlab {

namespace {

Polynomial fixed_point_polynomial(double c, int m) {
  // x^{m+2} - x^{m+1} + c
  std::vector<double> coeffs(static_cast<std::size_t>(m) + 3, 0.0);
  coeffs[0] = c;
  coeffs[static_cast<std::size_t>(m) + 1] = -1.0;
  coeffs[static_cast<std::size_t>(m) + 2] = 1.0;
  return Polynomial(std::move(coeffs));
}

bool has_positive_fixed_point(double lambda, int m) {
  const Polynomial p = fixed_point_polynomial(lambda, m);
  for (double r : real_roots(p, 0.0, root_bound(p)))
    if (r > 0.0) return true;
  return false;
}

}  // namespace

FixedPointClass classify_fixed_point(Complex multiplier) {
  const double r = std::abs(multiplier);
  if (r < kSuperattractingBand) return FixedPointClass::Superattracting;
  if (std::abs(r - 1.0) <= kNeutralBand) return FixedPointClass::Neutral;
  return r < 1.0 ? FixedPointClass::Attracting : FixedPointClass::Repelling;
}

std::vector<FixedPointReport> real_fixed_points(double c, int m) {
  if (c == 0.0) throw DynamicsError(ErrorCode::PreconditionViolated, "c = 0 puts a fixed point on the pole");
  if (m < 1) throw DynamicsError(ErrorCode::InvalidArgument, "m must be >= 1");
  const Polynomial p = fixed_point_polynomial(c, m);
  const double bound = root_bound(p);
  std::vector<FixedPointReport> out;
  for (double x : real_roots(p, -bound, bound)) {
    if (x == 0.0) continue;
    const Complex mult{(2.0 + m) * x - m, 0.0};
    out.push_back({{x, 0.0}, mult, classify_fixed_point(mult)});
  }
  return out;
}

std::vector<FixedPointReport> complex_fixed_points_m1(Complex lambda) {
  if (lambda == Complex{0.0, 0.0})
    throw DynamicsError(ErrorCode::PreconditionViolated, "lambda = 0 puts a fixed point on the pole");
  std::vector<FixedPointReport> out;
  for (const Complex& z : cubic_roots({-1.0, 0.0}, {0.0, 0.0}, lambda)) {
    const Complex mult = 3.0 * z - 1.0;
    out.push_back({z, mult, classify_fixed_point(mult)});
  }
  return out;
}

SaddleNodeValue saddle_node_value(int m) {
  if (m < 1) throw DynamicsError(ErrorCode::InvalidArgument, "m must be >= 1");
  return {m, std::pow(1.0 + m, 1.0 + m) / std::pow(2.0 + m, 2.0 + m)};
}

double saddle_node_numeric(int m) {
  if (m < 1) throw DynamicsError(ErrorCode::InvalidArgument, "m must be >= 1");
  double lo = 1e-9;
  double hi = 1.0;
  if (!has_positive_fixed_point(lo, m) || has_positive_fixed_point(hi, m))
    throw DynamicsError(ErrorCode::BracketFailure, "positive fixed points do not disappear on (0, 1]");
  while (hi - lo > 1e-14) {
    const double mid = 0.5 * (lo + hi);
    (has_positive_fixed_point(mid, m) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<FixedPointReport> henon_fixed_points(double a, double b) {
  // x = 1 - a x^2 + b x  <=>  a x^2 + (1 - b) x - 1 = 0
  std::vector<double> xs;
  const double q = 1.0 - b;
  if (a == 0.0) {
    if (q != 0.0) xs.push_back(1.0 / q);
  } else {
    const double disc = q * q + 4.0 * a;
    if (disc == 0.0) {
      xs.push_back(-q / (2.0 * a));
    } else if (disc > 0.0) {
      const double s = std::sqrt(disc);
      const double t = -0.5 * (q + (q >= 0.0 ? s : -s));
      xs.push_back(t / a);
      xs.push_back(-1.0 / t);  // product of roots = -1/a
    }
  }
  std::vector<FixedPointReport> out;
  for (double x : xs) {
    const Mat2 j = henon_jacobian(a, b, x);
    const Eigen2 ev = eigenvalues(j);
    FixedPointReport r;
    r.location = {x, b * x};
    r.multiplier = {ev.first, ev.imag};
    const Stability s = classify_multiplier(j);
    switch (s) {
      case Stability::Attracting: r.classification = FixedPointClass::Attracting; break;
      case Stability::Repelling: r.classification = FixedPointClass::Repelling; break;
      case Stability::Neutral: r.classification = FixedPointClass::Neutral; break;
      case Stability::Saddle: r.classification = FixedPointClass::Saddle; break;
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace quadlab
