#pragma once

#include <array>
#include <cmath>

namespace quadlab {

struct Mat2 {
  double a11 = 0.0, a12 = 0.0, a21 = 0.0, a22 = 0.0;

  static constexpr Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static constexpr Mat2 diag(double d1, double d2) { return {d1, 0.0, 0.0, d2}; }

  constexpr double trace() const { return a11 + a22; }
  constexpr double det() const { return a11 * a22 - a12 * a21; }

  friend constexpr Mat2 operator*(const Mat2& l, const Mat2& r) {
    return {l.a11 * r.a11 + l.a12 * r.a21, l.a11 * r.a12 + l.a12 * r.a22,
            l.a21 * r.a11 + l.a22 * r.a21, l.a21 * r.a12 + l.a22 * r.a22};
  }
  friend constexpr bool operator==(const Mat2&, const Mat2&) = default;
};

/// Eigenvalues of a real 2x2 matrix from the characteristic quadratic.
/// For a conjugate pair, `first`/`second` hold the real parts and
/// `imag` the (positive) imaginary part; moduli are always valid.
struct Eigen2 {
  double first = 0.0;
  double second = 0.0;
  double imag = 0.0;
  bool complexPair = false;

  double modulus_first() const { return complexPair ? std::hypot(first, imag) : std::abs(first); }
  double modulus_second() const { return complexPair ? std::hypot(second, imag) : std::abs(second); }
};

/// Sorted by modulus, descending.
Eigen2 eigenvalues(const Mat2& m);

}  // namespace quadlab
