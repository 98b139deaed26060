#pragma once

#include <span>
#include <vector>

#include "quadlab/linalg.hpp"
#include "quadlab/map_kernel.hpp"

namespace quadlab::nonholo {

/// Closure tolerance used when checking that rounded points form a cycle.
inline constexpr double kCycleTolerance = 1e-3;

/// Jacobian of (Re G, Im G) for G(z) = z^2 + beta / conj(z), real beta, in
/// x-y coordinates. Throws PoleHit at the origin.
Mat2 jacobian(double beta, double x, double y);

/// Jacobian of z^2 + beta / conj(z)^m for complex beta and any m >= 1,
/// from the Wirtinger derivatives d/dz = 2z, d/dconj(z) = -m beta conj(z)^{-(m+1)}.
Mat2 jacobian(const FamilySpec& family, Complex z);

struct CycleEigenReport {
  double beta = 0.0;
  int period = 0;
  std::vector<double> points;
  Mat2 product;
  Eigen2 eigenvalues;
  double closureError = 0.0;  // max |G(p_i) - p_{i+1}| around the cycle
};

/// Ordered on-axis Jacobian product J(p_{n-1}) ... J(p_1) J(p_0) and its
/// eigenvalues. Throws NotACycle when any step misses by more than `tol`.
CycleEigenReport cycle_eigen(double beta, std::span<const double> points, double tol = kCycleTolerance);

/// |F_lambda(x) - G_beta(x)| < 1e-12 with lambda = beta = param on the real axis.
bool real_line_agreement(double param, double x);
/// Same, rejecting points off the real axis with PreconditionViolated.
bool real_line_agreement(double param, Complex z);

enum class PlaneStability { AttractingInPlane, SaddleInPlane, RepellingInPlane };

/// Saddle iff exactly one eigenvalue modulus exceeds 1.
PlaneStability transverse_stability(double beta, std::span<const double> points, double tol = kCycleTolerance);

/// (|beta|/2)^{1/3}.
double critical_circle_radius(Complex beta);

}  // namespace quadlab::nonholo
