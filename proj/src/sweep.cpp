#include "quadlab/sweep.hpp"

#include <cmath>
#include <limits>

#include "quadlab/equilibria.hpp"
#include "quadlab/orbit.hpp"
#include "quadlab/parallel.hpp"

namespace quadlab {

namespace {

constexpr double kEscape2 = kSweepEscape * kSweepEscape;

bool step_bounded(const FamilySpec& f, Complex& z) {
  return step_in_place(f, z) && std::norm(z) <= kEscape2;
}

// F^n(z0); NaN when the orbit hits the pole or leaves the sweep bound.
double iterate_real(const FamilySpec& f, double x0, int n) {
  Complex z{x0, 0.0};
  for (int i = 0; i < n; ++i)
    if (!step_bounded(f, z)) return std::numeric_limits<double>::quiet_NaN();
  return z.real();
}

template <class Fn>
double bisect_root(Fn&& g, double lo, double hi, double glo) {
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double gm = g(mid);
    if (std::isnan(gm)) throw DynamicsError(ErrorCode::BracketFailure, "orbit undefined inside the bracket");
    if (gm == 0.0) return mid;
    if ((gm < 0.0) == (glo < 0.0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double largest_positive_fixed_point(double lambda, int m) {
  double best = std::numeric_limits<double>::quiet_NaN();
  for (const auto& fp : real_fixed_points(lambda, m)) {
    const double x = fp.location.real();
    if (x > 0.0 && (std::isnan(best) || x > best)) best = x;
  }
  return best;
}

}  // namespace

FamilySpec SweepTemplate::at(double param) const {
  switch (kind) {
    case FamilyKind::HoloPerturbed: return FamilySpec::holo(m, {param, 0.0});
    case FamilyKind::NonholoPerturbed: return FamilySpec::nonholo(m, {param, 0.0});
    case FamilyKind::Logistic: return FamilySpec::logistic(param);
    case FamilyKind::Henon: return FamilySpec::henon(param, b);
    case FamilyKind::PureQuadratic: return FamilySpec::quadratic({param, 0.0});
  }
  return {};
}

double SweepTemplate::critical_point(double param) const {
  switch (kind) {
    case FamilyKind::HoloPerturbed:
    case FamilyKind::NonholoPerturbed:
      return real_critical_point(param, m);
    default:
      return 0.0;
  }
}

DiagramData orbit_diagram(const SweepTemplate& tmpl, std::pair<double, double> range, int samples, StartRule start,
                          int burnIn, int kept, unsigned threads) {
  if (samples < 2 || !(range.first <= range.second))
    throw DynamicsError(ErrorCode::InvalidArgument, "orbit_diagram needs samples >= 2 and an ordered range");
  if (burnIn < 0 || kept < 1) throw DynamicsError(ErrorCode::InvalidArgument, "burnIn >= 0 and kept >= 1 required");
  DiagramData out;
  out.burnIn = burnIn;
  out.kept = kept;
  out.rows.resize(static_cast<std::size_t>(samples));
  const double step = (range.second - range.first) / (samples - 1);
  parallel_for(out.rows.size(), threads, [&](std::size_t i) {
    DiagramRow& row = out.rows[i];
    row.param = i + 1 == out.rows.size() ? range.second : range.first + step * static_cast<double>(i);
    const FamilySpec f = tmpl.at(row.param);
    double x0 = 0.0;
    if (start.fixed) {
      x0 = *start.fixed;
    } else if (tmpl.kind == FamilyKind::HoloPerturbed || tmpl.kind == FamilyKind::NonholoPerturbed) {
      if (row.param == 0.0) return;  // critical point on the pole: immediate escape
      x0 = tmpl.critical_point(row.param);
    }
    Complex z{x0, 0.0};
    for (int k = 0; k < burnIn; ++k)
      if (!step_bounded(f, z)) return;
    std::vector<double> states;
    states.reserve(static_cast<std::size_t>(kept));
    for (int k = 0; k < kept; ++k) {
      if (!step_bounded(f, z)) return;
      states.push_back(z.real());
    }
    row.states = std::move(states);
  });
  return out;
}

double find_superstable(const SweepTemplate& tmpl, int period, std::pair<double, double> bracket) {
  if (period < 1) throw DynamicsError(ErrorCode::InvalidArgument, "period must be >= 1");
  auto g = [&](double param) {
    const double xc = tmpl.critical_point(param);
    return iterate_real(tmpl.at(param), xc, period) - xc;
  };
  const double glo = g(bracket.first);
  const double ghi = g(bracket.second);
  if (std::isnan(glo) || std::isnan(ghi) || (glo < 0.0) == (ghi < 0.0) || glo == 0.0 || ghi == 0.0) {
    if (glo == 0.0) return bracket.first;
    if (ghi == 0.0) return bracket.second;
    throw DynamicsError(ErrorCode::NoSignChange, "F^p(x_c) - x_c keeps its sign over the bracket");
  }
  const double root = bisect_root(g, bracket.first, bracket.second, glo);
  if (!(std::abs(g(root)) < 1e-6))
    throw DynamicsError(ErrorCode::NoSignChange, "sign change is a pole crossing, not a root");
  return root;
}

double find_period_doubling(int m) {
  if (m < 2) throw DynamicsError(ErrorCode::InvalidArgument, "period-doubling search needs m >= 2");
  const double lambda0 = saddle_node_value(m).lambda0;
  auto g = [&](double lambda) {
    const double zc = real_critical_point(lambda, m);
    return iterate_real(FamilySpec::holo(m, {lambda, 0.0}), zc, 2) - largest_positive_fixed_point(lambda, m);
  };
  // Geometric scan from deep inside (0, lambda_0) up to just below lambda_0.
  constexpr int kScan = 400;
  const double lo_exp = std::log(lambda0 * 1e-12);
  const double hi_exp = std::log(lambda0 * (1.0 - 1e-6));
  double prev_l = std::exp(lo_exp);
  double prev_g = g(prev_l);
  for (int i = 1; i <= kScan; ++i) {
    const double l = std::exp(lo_exp + (hi_exp - lo_exp) * i / kScan);
    const double gl = g(l);
    if (!std::isnan(prev_g) && !std::isnan(gl) && (prev_g < 0.0) != (gl < 0.0)) return bisect_root(g, prev_l, l, prev_g);
    prev_l = l;
    prev_g = gl;
  }
  throw DynamicsError(ErrorCode::NoSignChange, "F^2(z_c) never crosses the repelling fixed point on (0, lambda_0)");
}

double find_homoclinic() {
  auto g = [](double c) {
    const double xc = real_critical_point(c, 1);
    return iterate_real(FamilySpec::holo(1, {c, 0.0}), xc, 2) - largest_positive_fixed_point(c, 1);
  };
  const double lo = -1.0;
  const double hi = -0.35;
  const double glo = g(lo);
  const double ghi = g(hi);
  if (std::isnan(glo) || std::isnan(ghi) || (glo < 0.0) == (ghi < 0.0))
    throw DynamicsError(ErrorCode::BracketFailure, "critical orbit does not cross the fixed point on [-1, -0.35]");
  return bisect_root(g, lo, hi, glo);
}

bool critical_orbit_bounded(double c, int iterations) {
  const FamilySpec f = FamilySpec::holo(1, {c, 0.0});
  Complex z{real_critical_point(c, 1), 0.0};
  for (int i = 0; i < iterations; ++i)
    if (!step_bounded(f, z)) return false;
  return true;
}

WindowReport window_scan(std::pair<double, double> range, int samples, int maxPeriod, ScanOptions options) {
  if (samples < 10) throw DynamicsError(ErrorCode::InvalidArgument, "window_scan needs at least 10 samples");
  if (!(range.first < range.second)) throw DynamicsError(ErrorCode::InvalidArgument, "range must be ordered");
  constexpr int kEscaped = -1;
  constexpr int kUnclassified = 0;
  std::vector<double> params(static_cast<std::size_t>(samples));
  std::vector<int> verdict(params.size(), kUnclassified);
  const double step = (range.second - range.first) / (samples - 1);
  parallel_for(params.size(), options.threads, [&](std::size_t i) {
    const double c = i + 1 == params.size() ? range.second : range.first + step * static_cast<double>(i);
    params[i] = c;
    const FamilySpec f = FamilySpec::holo(1, {c, 0.0});
    Complex z{real_critical_point(c, 1), 0.0};
    for (int k = 0; k < options.burnIn; ++k) {
      if (!step_bounded(f, z)) {
        verdict[i] = kEscaped;
        return;
      }
    }
    const auto cycle = detect_cycle(f, z, 0, maxPeriod, options.tol);
    if (cycle) {
      verdict[i] = cycle->period;
      return;
    }
    // No recurrence: keep following for escape over another burn-in span.
    for (int k = 0; k < options.burnIn; ++k) {
      if (!step_bounded(f, z)) {
        verdict[i] = kEscaped;
        return;
      }
    }
  });

  WindowReport report;
  std::size_t i = 0;
  while (i < params.size()) {
    std::size_t j = i;
    while (j + 1 < params.size() && verdict[j + 1] == verdict[i]) ++j;
    if (verdict[i] == kEscaped) {
      report.escapeGaps.push_back({params[i], params[j]});
    } else if (verdict[i] > 0) {
      report.windows.push_back({verdict[i], params[i], params[j]});
    }
    i = j + 1;
  }
  return report;
}

}  // namespace quadlab
