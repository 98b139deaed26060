#include "quadlab/orbit.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

#include "quadlab/nonholo.hpp"

namespace quadlab {

namespace {

const Complex kInfinity{std::numeric_limits<double>::infinity(), 0.0};

bool outside(Complex z, double r2) {
  const double n = std::norm(z);
  return !(n <= r2);  // NaN counts as escaped
}

void require_real_family(const FamilySpec& family) {
  const bool ok = family.kind == FamilyKind::Logistic ||
                  ((family.kind == FamilyKind::HoloPerturbed || family.kind == FamilyKind::PureQuadratic) &&
                   family.param.imag() == 0.0);
  if (!ok) throw DynamicsError(ErrorCode::Unsupported, "expected a real one-dimensional family");
}

// Advances x over burnIn steps; throws when the orbit leaves the escape radius.
Complex burn(const FamilySpec& family, Complex z, int steps, double r2) {
  for (int i = 0; i < steps; ++i) {
    if (!step_in_place(family, z) || outside(z, r2))
      throw DynamicsError(ErrorCode::EscapedDuringSample, "orbit escaped during burn-in");
  }
  return z;
}

}  // namespace

int escape_time(const FamilySpec& family, Complex z0, int maxIter, double escapeRadius) noexcept {
  const double r2 = escapeRadius * escapeRadius;
  Complex z = z0;
  for (int k = 1; k <= maxIter; ++k) {
    if (!step_in_place(family, z) || outside(z, r2)) return k;
  }
  return 0;
}

OrbitResult iterate(const FamilySpec& family, Complex z0, int maxIter, double escapeRadius,
                    std::size_t ringCapacity) {
  if (maxIter < 1) throw DynamicsError(ErrorCode::InvalidArgument, "maxIter must be >= 1");
  const double r2 = escapeRadius * escapeRadius;
  OrbitResult out;
  std::deque<Complex> ring;
  auto push = [&](Complex z) {
    ring.push_back(z);
    if (ringCapacity > 0 && ring.size() > ringCapacity) {
      ring.pop_front();
      ++out.firstIndex;
    }
  };
  Complex z = z0;
  push(z);
  for (int k = 1; k <= maxIter; ++k) {
    if (!step_in_place(family, z)) {
      z = kInfinity;
      push(z);
      out.escaped = true;
      out.escapeIndex = k;
      break;
    }
    push(z);
    if (outside(z, r2)) {
      out.escaped = true;
      out.escapeIndex = k;
      break;
    }
  }
  out.final = z;
  out.states.assign(ring.begin(), ring.end());
  return out;
}

Stability classify_multiplier(Complex multiplier) {
  const double r = std::abs(multiplier);
  if (std::abs(r - 1.0) <= kNeutralBand) return Stability::Neutral;
  return r < 1.0 ? Stability::Attracting : Stability::Repelling;
}

Stability classify_multiplier(const Mat2& product) {
  const Eigen2 ev = eigenvalues(product);
  const double r1 = ev.modulus_first();
  const double r2 = ev.modulus_second();
  if (std::abs(r1 - 1.0) <= kNeutralBand || std::abs(r2 - 1.0) <= kNeutralBand) return Stability::Neutral;
  if (r1 < 1.0 && r2 < 1.0) return Stability::Attracting;
  if (r1 > 1.0 && r2 > 1.0) return Stability::Repelling;
  return Stability::Saddle;
}

std::optional<CycleReport> detect_cycle(const FamilySpec& family, Complex z0, int burnIn, int maxPeriod,
                                        double tol) {
  if (burnIn < 0 || maxPeriod < 1 || !(tol > 0.0))
    throw DynamicsError(ErrorCode::InvalidArgument, "detect_cycle needs burnIn >= 0, maxPeriod >= 1, tol > 0");
  const double r2 = std::pow(default_escape_radius(family), 2);
  Complex w = z0;
  for (int i = 0; i < burnIn; ++i) {
    if (!step_in_place(family, w) || outside(w, r2)) return std::nullopt;
  }

  Complex y = w;
  int period = 0;
  for (int p = 1; p <= maxPeriod; ++p) {
    if (!step_in_place(family, y) || outside(y, r2)) return std::nullopt;
    if (std::abs(y - w) < tol) {
      period = p;
      break;
    }
  }
  if (period == 0) return std::nullopt;

  CycleReport report;
  report.period = period;
  Complex z = w;
  for (int i = 0; i < period; ++i) {
    report.points.push_back(z);
    step_in_place(family, z);
  }

  if (family.kind == FamilyKind::Henon || family.kind == FamilyKind::NonholoPerturbed) {
    Mat2 product = Mat2::identity();
    for (const Complex& p : report.points) {
      const Mat2 j = family.kind == FamilyKind::Henon ? henon_jacobian(family.param.real(), family.b, p.real())
                                                      : nonholo::jacobian(family, p);
      product = j * product;
    }
    report.multiplier = product;
    report.stability = classify_multiplier(product);
  } else {
    Complex product{1.0, 0.0};
    for (const Complex& p : report.points) product *= *derivative_holo(family, p);
    report.multiplier = product;
    report.stability = classify_multiplier(product);
  }
  return report;
}

double birkhoff_average(const FamilySpec& family, double x0, const std::function<double(double)>& observable,
                        int burnIn, int n) {
  if (n < 1) throw DynamicsError(ErrorCode::InvalidArgument, "sample length must be >= 1");
  const double r2 = std::pow(default_escape_radius(family), 2);
  Complex z = burn(family, {x0, 0.0}, burnIn, r2);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    sum += observable(z.real());
    if (!step_in_place(family, z) || outside(z, r2))
      throw DynamicsError(ErrorCode::EscapedDuringSample, "orbit escaped during the sample window");
  }
  return sum / n;
}

LyapunovEstimate lyapunov_1d(const FamilySpec& family, double x0, int burnIn, int n) {
  require_real_family(family);
  if (n < 1) throw DynamicsError(ErrorCode::InvalidArgument, "sample length must be >= 1");
  const double r2 = std::pow(default_escape_radius(family), 2);
  Complex z = burn(family, {x0, 0.0}, burnIn, r2);
  LyapunovEstimate est{{}, burnIn, n};
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const auto d = derivative_holo(family, z);
    if (!d) throw DynamicsError(ErrorCode::EscapedDuringSample, "orbit hit the pole");
    const double mag = std::abs(d->real());
    if (mag == 0.0) {
      est.exponents = {-std::numeric_limits<double>::infinity()};
      return est;
    }
    sum += std::log(mag);
    if (!step_in_place(family, z) || outside(z, r2))
      throw DynamicsError(ErrorCode::EscapedDuringSample, "orbit escaped during the sample window");
  }
  est.exponents = {sum / n};
  return est;
}

LyapunovEstimate lyapunov_2d(const FamilySpec& family, Complex x0, int burnIn, int n) {
  if (family.kind != FamilyKind::Henon) throw DynamicsError(ErrorCode::Unsupported, "lyapunov_2d expects the Henon map");
  if (n < 1) throw DynamicsError(ErrorCode::InvalidArgument, "sample length must be >= 1");
  const double r2 = std::pow(default_escape_radius(family), 2);
  Complex z = burn(family, x0, burnIn, r2);
  const double a = family.param.real();
  const double b = family.b;

  // Columns (u, v) of the tangent frame.
  double ux = 1.0, uy = 0.0, vx = 0.0, vy = 1.0;
  double sum1 = 0.0, sum2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const Mat2 j = henon_jacobian(a, b, z.real());
    const double nux = j.a11 * ux + j.a12 * uy, nuy = j.a21 * ux + j.a22 * uy;
    const double nvx = j.a11 * vx + j.a12 * vy, nvy = j.a21 * vx + j.a22 * vy;
    const double r11 = std::hypot(nux, nuy);
    ux = nux / r11;
    uy = nuy / r11;
    const double proj = ux * nvx + uy * nvy;
    const double wx = nvx - proj * ux, wy = nvy - proj * uy;
    const double r22 = std::hypot(wx, wy);
    vx = wx / r22;
    vy = wy / r22;
    sum1 += std::log(r11);
    sum2 += std::log(r22);
    if (!step_in_place(family, z) || outside(z, r2))
      throw DynamicsError(ErrorCode::EscapedDuringSample, "orbit escaped during the sample window");
  }
  LyapunovEstimate est{{sum1 / n, sum2 / n}, burnIn, n};
  std::sort(est.exponents.begin(), est.exponents.end(), std::greater<>());
  return est;
}

}  // namespace quadlab
