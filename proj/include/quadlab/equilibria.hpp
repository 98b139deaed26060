#pragma once

#include <vector>

#include "quadlab/linalg.hpp"
#include "quadlab/map_kernel.hpp"

namespace quadlab {

enum class FixedPointClass { Attracting, Repelling, Neutral, Superattracting, Saddle };

struct FixedPointReport {
  Complex location{0.0, 0.0};
  /// Derivative at the point; for the Henon map, the dominant eigenvalue of
  /// the Jacobian (real part plus the imaginary part of a conjugate pair).
  Complex multiplier{0.0, 0.0};
  FixedPointClass classification = FixedPointClass::Neutral;
};

struct SaddleNodeValue {
  int m = 1;
  double lambda0 = 0.0;
};

/// Multiplier modulus below which a point is Superattracting.
inline constexpr double kSuperattractingBand = 1e-10;

FixedPointClass classify_fixed_point(Complex multiplier);

/// Real fixed points of x^2 + c/x^m, i.e. real roots of x^{m+2} - x^{m+1} + c,
/// with multiplier (2+m)x - m. Requires c != 0.
std::vector<FixedPointReport> real_fixed_points(double c, int m);

/// The three roots of z^3 - z^2 + lambda with multipliers 3z - 1. Requires lambda != 0.
std::vector<FixedPointReport> complex_fixed_points_m1(Complex lambda);

/// (1+m)^{1+m} / (2+m)^{2+m}.
SaddleNodeValue saddle_node_value(int m);

/// Parameter where the two positive fixed points of the real family collide,
/// by bisection on "a positive fixed point exists". Throws BracketFailure.
double saddle_node_numeric(int m);

/// Fixed points of (1 - a x^2 + y, b x) classified by Jacobian eigenvalue moduli.
std::vector<FixedPointReport> henon_fixed_points(double a, double b);

}  // namespace quadlab
