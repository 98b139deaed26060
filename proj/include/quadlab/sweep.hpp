#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "quadlab/map_kernel.hpp"

namespace quadlab {

/// A family with its swept real parameter left open.
struct SweepTemplate {
  FamilyKind kind = FamilyKind::HoloPerturbed;
  int m = 1;
  double b = 0.0;  // Henon only

  static SweepTemplate holo(int m) { return {FamilyKind::HoloPerturbed, m, 0.0}; }
  static SweepTemplate nonholo(int m) { return {FamilyKind::NonholoPerturbed, m, 0.0}; }
  static SweepTemplate logistic() { return {FamilyKind::Logistic, 1, 0.0}; }
  static SweepTemplate henon(double b) { return {FamilyKind::Henon, 1, b}; }

  FamilySpec at(double param) const;
  /// Real critical point of the family at `param` (0 for logistic; the Henon
  /// map has none and starts from the origin).
  double critical_point(double param) const;
};

/// Start rule for diagram orbits.
struct StartRule {
  std::optional<double> fixed;  // nullopt: the real critical point
  static StartRule critical() { return {}; }
  static StartRule at(double x) { return {x}; }
};

struct DiagramRow {
  double param = 0.0;
  std::vector<double> states;  // empty when the orbit escaped
};

struct DiagramData {
  std::vector<DiagramRow> rows;
  int burnIn = 0;
  int kept = 0;
};

/// |x| beyond this (or a pole hit) counts as escape inside sweeps.
inline constexpr double kSweepEscape = 1e6;

/// Uniform samples over [lo, hi], endpoints included.
DiagramData orbit_diagram(const SweepTemplate& tmpl, std::pair<double, double> range, int samples, StartRule start,
                          int burnIn, int kept, unsigned threads = 0);

/// Parameter in `bracket` where F^period(x_c) = x_c, by bisection. Throws
/// NoSignChange when the difference does not change sign over the bracket.
double find_superstable(const SweepTemplate& tmpl, int period, std::pair<double, double> bracket);

/// lambda in (0, lambda_0) where F^2(z_c) equals the larger positive fixed
/// point (m >= 2). Throws NoSignChange when no crossing exists.
double find_period_doubling(int m);

/// c < 0 where F_c^2(x_c) lands on the fixed point of x^2 + c/x.
double find_homoclinic();

/// Whether the critical orbit of x^2 + c/x stays within kSweepEscape for `iterations` steps.
bool critical_orbit_bounded(double c, int iterations);

struct PeriodWindow {
  int period = 0;
  double lo = 0.0;
  double hi = 0.0;
};

struct EscapeGap {
  double lo = 0.0;
  double hi = 0.0;
};

struct WindowReport {
  std::vector<PeriodWindow> windows;
  std::vector<EscapeGap> escapeGaps;
};

struct ScanOptions {
  int burnIn = 4000;
  double tol = 1e-9;
  unsigned threads = 0;
};

/// Classifies each sample of x^2 + c/x by the fate of its critical orbit
/// (attracting period or escape) and merges equal neighbours into intervals.
WindowReport window_scan(std::pair<double, double> range, int samples, int maxPeriod, ScanOptions options = {});

}  // namespace quadlab
