#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "quadlab/map_kernel.hpp"
#include "quadlab/sweep.hpp"

namespace quadlab {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

struct PointCloud {
  std::vector<Point2> points;
  int burnIn = 0;
};

/// Henon orbit from (0, 0): `burnIn` discarded steps, then `n` kept states.
/// Throws EscapedDuringSample when |state| exceeds kSweepEscape.
PointCloud henon_attractor(double a, double b, int n, int burnIn);

/// Number of groups after greedy clustering: a value joins the first centre
/// within `tol` (max-norm for points).
std::size_t count_clusters(const std::vector<double>& values, double tol);
std::size_t count_clusters(const std::vector<Point2>& points, double tol);

/// Axis-aligned box; the defaults leave every side open.
struct Rect {
  double xlo = -std::numeric_limits<double>::infinity();
  double xhi = std::numeric_limits<double>::infinity();
  double ylo = -std::numeric_limits<double>::infinity();
  double yhi = std::numeric_limits<double>::infinity();

  bool contains(const Point2& p) const { return p.x >= xlo && p.x <= xhi && p.y >= ylo && p.y <= yhi; }
};

struct CorrelationSeries {
  std::vector<int> lags;
  std::vector<double> values;
  double noiseFloor = 0.0;
  /// r in |C(n)| ~ K exp(-r n), fitted over lags whose |C| exceeds three noise floors.
  std::optional<double> fittedRate;
};

/// C(n) = (1 / (L - n)) sum_i 1_B(p_i) 1_A(p_{i+n}) - mu(A) mu(B) for n = 0..maxLag,
/// with mu the orbit time average. The noise floor is the mean |C(n)|, n >= 1,
/// of a shuffled copy of the orbit (seeded). Throws DegenerateSet when either
/// set is never visited, InvalidArgument when L < 10 maxLag.
CorrelationSeries correlation(const std::vector<Point2>& orbit, const Rect& setA, const Rect& setB, int maxLag,
                              std::uint64_t seed = 0x5eed);

/// Greedy count of (n, eps)-separated points of [lo, hi]: scanning left to
/// right, a point is kept when its length-n orbit differs from the last kept
/// one by more than eps at some step. The scan starts from `gridSize` uniform
/// points and bisects between neighbours until their orbits stay within eps/2.
std::size_t separated_count(const FamilySpec& family, std::pair<double, double> interval, int n, double epsilon,
                            int gridSize);

/// (1/n) log separated_count.
double entropy_rate_raw(const FamilySpec& family, int n, double epsilon, int gridSize);

/// Growth-rate estimate (log N(n) - log N(n/2)) / (n - n/2) on [-1, 1]; the
/// difference quotient cancels the sub-exponential prefactor of N. Falls back to
/// the raw rate for n = 1.
double topological_entropy_estimate(const FamilySpec& family, int n, double epsilon, int gridSize);

/// Schwarzian derivative of 1 - a x^2: -3 / (2 x^2). Throws CriticalPoint where F' = 0.
double schwarzian(double a, double x);

/// Partial sums S_k = sum_{i <= k} |DF^i(c_1)|^{-1/2}, k = 1..N, where the
/// derivative product runs along the critical orbit from the critical value c_1 = F(0).
std::vector<double> nowicki_sums(double a, int N);

/// Start point for typical-orbit Lyapunov estimates of the logistic map.
inline constexpr double kGenericStart = 0.3;

enum class Verdict { Regular, Stochastic, Undecided };

struct DichotomyRow {
  double a = 0.0;
  Verdict verdict = Verdict::Undecided;
  double lyapunov = 0.0;
  std::optional<int> period;
};

struct DichotomyScan {
  std::vector<DichotomyRow> rows;
};

struct DichotomyOptions {
  int burnIn = 2000;
  int sampleLen = 20000;
  int maxPeriod = 64;
  double tol = 1e-9;
  unsigned threads = 0;
};

/// Logistic parameters a_i = lo + (hi - lo)(i + 1)/samples, i.e. the half-open
/// range (lo, hi]. Critical orbit captured by an attracting cycle -> Regular;
/// otherwise the Lyapunov exponent of the orbit from kGenericStart above the
/// threshold -> Stochastic; otherwise Undecided.
DichotomyScan dichotomy_scan(std::pair<double, double> aRange, int samples, double lyapThreshold = 0.01,
                             DichotomyOptions options = {});

std::string_view to_string(Verdict v);

/// Orbit diagram of the Henon map from (0, 0); each row holds x-coordinates.
DiagramData henon_bifurcation(double b, std::pair<double, double> aRange, int samples, int burnIn = 2000,
                              int kept = 200, unsigned threads = 0);

}  // namespace quadlab
