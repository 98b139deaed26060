#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "quadlab/linalg.hpp"
#include "quadlab/map_kernel.hpp"

namespace quadlab {

/// Trajectory record. `states` holds the seed followed by the iterates
/// (z_0, z_1, ...), or only the most recent ones when a ring capacity was
/// requested; `firstIndex` is the orbit index of `states.front()`.
struct OrbitResult {
  std::vector<Complex> states;
  std::size_t firstIndex = 0;
  bool escaped = false;
  std::optional<int> escapeIndex;
  Complex final{0.0, 0.0};
};

enum class Stability { Attracting, Repelling, Neutral, Saddle };

/// Band around modulus 1 classified as Neutral.
inline constexpr double kNeutralBand = 1e-8;

struct CycleReport {
  int period = 0;
  std::vector<Complex> points;
  std::variant<Complex, Mat2> multiplier;
  Stability stability = Stability::Neutral;
};

struct LyapunovEstimate {
  std::vector<double> exponents;  // descending
  int burnIn = 0;
  int sampleLen = 0;
};

/// Escape time of a single seed: the first k in [1, maxIter] with |z_k| > R,
/// or 0 when the orbit stays bounded. A pole hit at step k escapes at k.
int escape_time(const FamilySpec& family, Complex z0, int maxIter, double escapeRadius) noexcept;

/// Iterates `maxIter` steps or until escape. The seed itself is not tested.
/// With `ringCapacity > 0` only the last `ringCapacity` states are retained.
OrbitResult iterate(const FamilySpec& family, Complex z0, int maxIter, double escapeRadius,
                    std::size_t ringCapacity = 0);

/// Brent-style recurrence test against the single state reached after
/// `burnIn` steps: the smallest p <= maxPeriod with |F^p(w) - w| < tol.
/// Returns nullopt (NoCycle) for escaping or non-recurrent orbits.
std::optional<CycleReport> detect_cycle(const FamilySpec& family, Complex z0, int burnIn, int maxPeriod,
                                        double tol = 1e-9);

Stability classify_multiplier(Complex multiplier);
Stability classify_multiplier(const Mat2& product);

/// (1/n) sum of observable(x_i) over the n states following burn-in.
/// Throws EscapedDuringSample.
double birkhoff_average(const FamilySpec& family, double x0, const std::function<double(double)>& observable,
                        int burnIn, int n);

/// Birkhoff average of log|F'| along a real orbit; -infinity when the orbit
/// lands exactly on a critical point.
LyapunovEstimate lyapunov_1d(const FamilySpec& family, double x0, int burnIn, int n);

/// Both Henon exponents by Gram-Schmidt re-orthonormalisation of a tangent frame.
LyapunovEstimate lyapunov_2d(const FamilySpec& family, Complex x0, int burnIn, int n);

}  // namespace quadlab
