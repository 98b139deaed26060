#pragma once

#include <array>
#include <complex>
#include <vector>

namespace quadlab {

/// Real polynomial, coefficients in ascending order of degree.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> ascending);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<double>& coefficients() const { return coeffs_; }
  double operator()(double x) const;
  Polynomial derivative() const;
  /// Sum of |coefficient| * |x|^k; scale for "is this value zero" tests.
  double magnitude_at(double x) const;

 private:
  std::vector<double> coeffs_;
};

/// All distinct real roots in [lo, hi], ascending. Roots are isolated between
/// consecutive critical points (recursively from the derivative), where the
/// polynomial is monotone, then refined by bisection. A critical point where
/// |p| is below `tangencyTol` relative to the term magnitudes is reported as a
/// multiple root.
std::vector<double> real_roots(const Polynomial& p, double lo, double hi, double tangencyTol = 1e-12);

/// Bound on the modulus of every root (Cauchy).
double root_bound(const Polynomial& p);

/// Roots of z^3 + a2 z^2 + a1 z + a0. With real coefficients, one real root
/// is bracketed and bisected, the quotient quadratic is solved in closed form;
/// otherwise Durand-Kerner simultaneous iteration with Newton polishing.
std::array<std::complex<double>, 3> cubic_roots(std::complex<double> a2, std::complex<double> a1,
                                                std::complex<double> a0);

}  // namespace quadlab
