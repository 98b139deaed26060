#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "quadlab/error.hpp"
#include "quadlab/linalg.hpp"

namespace quadlab {

using Complex = std::complex<double>;

enum class FamilyKind {
  HoloPerturbed,     // z^2 + lambda / z^m
  NonholoPerturbed,  // z^2 + beta / conj(z)^m
  Logistic,          // 1 - a x^2
  Henon,             // (1 - a x^2 + y, b x)
  PureQuadratic,     // z^2 + c
};

/// A concrete member of one of the map families.
///
/// `param` carries lambda, beta, c or the logistic `a` (real part). The Henon
/// map stores `a` in `param.real()` and its second parameter in `b`. Henon and
/// logistic states are packed into a Complex as (x, y); logistic ignores y.
struct FamilySpec {
  FamilyKind kind = FamilyKind::PureQuadratic;
  int m = 1;
  Complex param{0.0, 0.0};
  double b = 0.0;

  static FamilySpec holo(int m, Complex lambda);
  static FamilySpec nonholo(int m, Complex beta);
  static FamilySpec logistic(double a);
  static FamilySpec henon(double a, double b);
  static FamilySpec quadratic(Complex c);

  bool perturbed() const noexcept {
    return kind == FamilyKind::HoloPerturbed || kind == FamilyKind::NonholoPerturbed;
  }
  bool real_line() const noexcept { return kind == FamilyKind::Logistic; }
};

struct CriticalSet {
  std::vector<Complex> points;
  std::optional<double> circleRadius;
};

/// Advances `z` one step in place; false (z untouched) on a pole hit.
bool step_in_place(const FamilySpec& family, Complex& z) noexcept;

/// Image of `z`. Perturbed kinds with a nonzero parameter report PoleHit at z = 0 (and when z^m
/// underflows to zero).
Expected<Complex> eval(const FamilySpec& family, Complex z);

/// Complex derivative; NonholoPerturbed and Henon are Unsupported.
Expected<Complex> derivative_holo(const FamilySpec& family, Complex z);

/// Jacobian of the Henon map at (x, y). Constant determinant -b.
Mat2 henon_jacobian(double a, double b, double x);

/// Holo: the m+2 roots of z^{m+2} = m lambda / 2 ordered by argument in
/// [0, 2pi). Nonholo: circle of radius (m|beta|/2)^{1/(m+2)}. Logistic: {0}.
/// lambda = 0 degenerates to {0}.
CriticalSet critical_set(const FamilySpec& family);

/// The m+2 roots of z^{m+2} = -lambda (points mapped onto 0). HoloPerturbed only.
std::vector<Complex> prepoles(const FamilySpec& family);

/// Primitive (m+2)-th root of unity w with F(w z) = w^2 F(z).
Complex symmetry_root(const FamilySpec& family);

/// The m+2 roots of z^{m+2} = w, ordered by argument in [0, 2pi).
std::vector<Complex> roots_of(Complex w, int degree);

/// max(2, 1 + |param|) + 1 for the perturbed and quadratic kinds (strictly
/// beyond the guaranteed-escape bound); 1e6 for the logistic and Henon maps.
double default_escape_radius(const FamilySpec& family);

/// Real-axis critical point (c m/2)^{1/(m+2)} with the sign of c (odd m+2),
/// or the positive root for even m+2 and c > 0.
double real_critical_point(double c, int m);

}  // namespace quadlab
