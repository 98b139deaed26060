#include "quadlab/stat_lab.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "quadlab/orbit.hpp"
#include "quadlab/parallel.hpp"

namespace quadlab {

PointCloud henon_attractor(double a, double b, int n, int burnIn) {
  if (n < 1 || burnIn < 0) throw DynamicsError(ErrorCode::InvalidArgument, "n >= 1 and burnIn >= 0 required");
  const FamilySpec f = FamilySpec::henon(a, b);
  constexpr double kEscape2 = kSweepEscape * kSweepEscape;
  Complex z{0.0, 0.0};
  PointCloud cloud;
  cloud.burnIn = burnIn;
  cloud.points.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < burnIn + n; ++k) {
    step_in_place(f, z);
    if (!(std::norm(z) <= kEscape2))
      throw DynamicsError(ErrorCode::EscapedDuringSample, "Henon orbit from the origin escaped");
    if (k >= burnIn) cloud.points.push_back({z.real(), z.imag()});
  }
  return cloud;
}

std::size_t count_clusters(const std::vector<double>& values, double tol) {
  std::vector<double> centres;
  for (double v : values)
    if (std::none_of(centres.begin(), centres.end(), [&](double c) { return std::abs(c - v) <= tol; }))
      centres.push_back(v);
  return centres.size();
}

std::size_t count_clusters(const std::vector<Point2>& points, double tol) {
  std::vector<Point2> centres;
  for (const Point2& p : points) {
    const bool near = std::any_of(centres.begin(), centres.end(), [&](const Point2& c) {
      return std::max(std::abs(c.x - p.x), std::abs(c.y - p.y)) <= tol;
    });
    if (!near) centres.push_back(p);
  }
  return centres.size();
}

namespace {

// Correlation values for lags 0..maxLag of indicator sequences ia (set A) and ib (set B).
std::vector<double> lagged_products(const std::vector<char>& ia, const std::vector<char>& ib, double muA, double muB,
                                    int maxLag) {
  const std::size_t len = ia.size();
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(maxLag) + 1);
  for (int n = 0; n <= maxLag; ++n) {
    const std::size_t terms = len - static_cast<std::size_t>(n);
    std::size_t hits = 0;
    for (std::size_t i = 0; i < terms; ++i) hits += static_cast<std::size_t>(ib[i] & ia[i + n]);
    out.push_back(static_cast<double>(hits) / static_cast<double>(terms) - muA * muB);
  }
  return out;
}

}  // namespace

CorrelationSeries correlation(const std::vector<Point2>& orbit, const Rect& setA, const Rect& setB, int maxLag,
                              std::uint64_t seed) {
  if (maxLag < 1) throw DynamicsError(ErrorCode::InvalidArgument, "maxLag must be >= 1");
  if (orbit.size() < 10 * static_cast<std::size_t>(maxLag))
    throw DynamicsError(ErrorCode::InvalidArgument, "orbit shorter than 10 * maxLag");
  const std::size_t len = orbit.size();
  std::vector<char> ia(len), ib(len);
  std::size_t countA = 0, countB = 0;
  for (std::size_t i = 0; i < len; ++i) {
    ia[i] = setA.contains(orbit[i]);
    ib[i] = setB.contains(orbit[i]);
    countA += static_cast<std::size_t>(ia[i]);
    countB += static_cast<std::size_t>(ib[i]);
  }
  if (countA == 0 || countB == 0) throw DynamicsError(ErrorCode::DegenerateSet, "a test set is never visited");
  const double muA = static_cast<double>(countA) / static_cast<double>(len);
  const double muB = static_cast<double>(countB) / static_cast<double>(len);

  CorrelationSeries out;
  out.values = lagged_products(ia, ib, muA, muB, maxLag);
  for (int n = 0; n <= maxLag; ++n) out.lags.push_back(n);

  // Shuffling keeps both marginals and destroys the time structure.
  std::vector<std::size_t> perm(len);
  for (std::size_t i = 0; i < len; ++i) perm[i] = i;
  std::mt19937_64 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<char> sa(len), sb(len);
  for (std::size_t i = 0; i < len; ++i) {
    sa[i] = ia[perm[i]];
    sb[i] = ib[perm[i]];
  }
  const auto shuffled = lagged_products(sa, sb, muA, muB, maxLag);
  double floor_sum = 0.0;
  for (int n = 1; n <= maxLag; ++n) floor_sum += std::abs(shuffled[static_cast<std::size_t>(n)]);
  out.noiseFloor = floor_sum / maxLag;

  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  int used = 0;
  for (int n = 1; n <= maxLag; ++n) {
    const double v = std::abs(out.values[static_cast<std::size_t>(n)]);
    if (!(v > 3.0 * out.noiseFloor) || v == 0.0) continue;
    const double y = std::log(v);
    sx += n;
    sy += y;
    sxx += static_cast<double>(n) * n;
    sxy += n * y;
    ++used;
  }
  if (used >= 2) {
    const double denom = used * sxx - sx * sx;
    if (denom != 0.0) out.fittedRate = -(used * sxy - sx * sy) / denom;
  }
  return out;
}

std::size_t separated_count(const FamilySpec& family, std::pair<double, double> interval, int n, double epsilon,
                            int gridSize) {
  if (!family.real_line()) throw DynamicsError(ErrorCode::Unsupported, "entropy needs a real interval map");
  if (n < 1 || gridSize < 2 || !(epsilon > 0.0))
    throw DynamicsError(ErrorCode::InvalidArgument, "n >= 1, gridSize >= 2 and epsilon > 0 required");
  const auto [lo, hi] = interval;
  using Orbit = std::vector<double>;
  constexpr std::size_t kBudget = std::size_t{1} << 28;  // map steps
  std::size_t steps = 0;
  auto orbit = [&](double x) {
    steps += static_cast<std::size_t>(n);
    if (steps > kBudget)
      throw DynamicsError(ErrorCode::PreconditionViolated, "separated set too large: lower n or raise epsilon");
    Orbit out(static_cast<std::size_t>(n));
    Complex z{x, 0.0};
    for (int k = 0; k < n; ++k) {
      out[static_cast<std::size_t>(k)] = z.real();
      step_in_place(family, z);
    }
    return out;
  };
  auto gap = [&](const Orbit& u, const Orbit& v) {
    double g = 0.0;
    for (int k = 0; k < n; ++k) g = std::max(g, std::abs(u[static_cast<std::size_t>(k)] - v[static_cast<std::size_t>(k)]));
    return g;
  };

  Orbit kept = orbit(lo);
  std::size_t count = 1;
  auto visit = [&](const Orbit& o) {
    if (gap(o, kept) > epsilon) {
      kept = o;
      ++count;
    }
  };

  // Between grid neighbours, bisect until consecutive orbits stay within
  // eps/2 at every step, so no separated point can hide between samples.
  struct Span {
    double xl, xr;
    Orbit ol, orr;
    int depth;
  };
  constexpr int kMaxDepth = 48;
  Orbit left = kept;
  double xl = lo;
  for (int i = 1; i < gridSize; ++i) {
    const double xr = i + 1 == gridSize ? hi : lo + (hi - lo) * i / (gridSize - 1);
    Orbit right = orbit(xr);
    std::vector<Span> stack;
    stack.push_back({xl, xr, left, right, 0});
    while (!stack.empty()) {
      Span s = std::move(stack.back());
      stack.pop_back();
      if (s.depth >= kMaxDepth || gap(s.ol, s.orr) <= 0.5 * epsilon) {
        visit(s.orr);
        continue;
      }
      const double xm = 0.5 * (s.xl + s.xr);
      Orbit om = orbit(xm);
      stack.push_back({xm, s.xr, om, std::move(s.orr), s.depth + 1});
      stack.push_back({s.xl, xm, s.ol, std::move(om), s.depth + 1});
    }
    xl = xr;
    left = std::move(right);
  }
  return count;
}

double entropy_rate_raw(const FamilySpec& family, int n, double epsilon, int gridSize) {
  return std::log(static_cast<double>(separated_count(family, {-1.0, 1.0}, n, epsilon, gridSize))) / n;
}

double topological_entropy_estimate(const FamilySpec& family, int n, double epsilon, int gridSize) {
  if (n < 2) return entropy_rate_raw(family, n, epsilon, gridSize);
  const int half = n / 2;
  const double full = std::log(static_cast<double>(separated_count(family, {-1.0, 1.0}, n, epsilon, gridSize)));
  const double part = std::log(static_cast<double>(separated_count(family, {-1.0, 1.0}, half, epsilon, gridSize)));
  return (full - part) / (n - half);
}

double schwarzian(double a, double x) {
  if (x == 0.0 || a == 0.0) throw DynamicsError(ErrorCode::CriticalPoint, "F' vanishes at this point");
  return -1.5 / (x * x);
}

std::vector<double> nowicki_sums(double a, int N) {
  if (N < 0) throw DynamicsError(ErrorCode::InvalidArgument, "N must be >= 0");
  std::vector<double> sums;
  if (N == 0) return sums;
  sums.reserve(static_cast<std::size_t>(N));
  const FamilySpec f = FamilySpec::logistic(a);
  constexpr double kEscape = kSweepEscape;
  double x = 1.0;  // critical value F(0)
  double product = 1.0;
  double total = 0.0;
  for (int i = 1; i <= N; ++i) {
    const double d = -2.0 * a * x;
    if (d == 0.0) throw DynamicsError(ErrorCode::DerivativeVanished, "critical orbit returned to the critical point");
    product *= d;
    total += 1.0 / std::sqrt(std::abs(product));
    sums.push_back(total);
    Complex z{x, 0.0};
    step_in_place(f, z);
    x = z.real();
    if (!(std::abs(x) <= kEscape))
      throw DynamicsError(ErrorCode::EscapedDuringSample, "critical orbit escaped");
  }
  return sums;
}

DichotomyScan dichotomy_scan(std::pair<double, double> aRange, int samples, double lyapThreshold,
                             DichotomyOptions options) {
  const auto [lo, hi] = aRange;
  if (!(lo >= 0.0 && lo <= hi && hi > 0.0 && hi <= 2.0))
    throw DynamicsError(ErrorCode::InvalidArgument, "aRange must lie in (0, 2]");
  if (samples < 1) throw DynamicsError(ErrorCode::InvalidArgument, "samples must be >= 1");
  DichotomyScan scan;
  scan.rows.resize(static_cast<std::size_t>(samples));
  parallel_for(scan.rows.size(), options.threads, [&](std::size_t i) {
    DichotomyRow& row = scan.rows[i];
    row.a = i + 1 == scan.rows.size() ? hi : lo + (hi - lo) * static_cast<double>(i + 1) / samples;
    const FamilySpec f = FamilySpec::logistic(row.a);
    // Only an attracting cycle counts: at a = 2 the critical orbit lands on the
    // repelling fixed point -1, which the recurrence test also reports.
    const auto cycle = detect_cycle(f, {0.0, 0.0}, options.burnIn, options.maxPeriod, options.tol);
    if (cycle) {
      const double mult = std::abs(std::get<Complex>(cycle->multiplier));
      if (mult < 1.0) {
        row.verdict = Verdict::Regular;
        row.period = cycle->period;
        row.lyapunov = std::log(mult) / cycle->period;
        return;
      }
    }
    try {
      row.lyapunov = lyapunov_1d(f, kGenericStart, options.burnIn, options.sampleLen).exponents.front();
    } catch (const DynamicsError&) {
      row.verdict = Verdict::Undecided;
      return;
    }
    row.verdict = row.lyapunov > lyapThreshold ? Verdict::Stochastic : Verdict::Undecided;
  });
  return scan;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Regular: return "Regular";
    case Verdict::Stochastic: return "Stochastic";
    case Verdict::Undecided: return "Undecided";
  }
  return "Unknown";
}

DiagramData henon_bifurcation(double b, std::pair<double, double> aRange, int samples, int burnIn, int kept,
                              unsigned threads) {
  return orbit_diagram(SweepTemplate::henon(b), aRange, samples, StartRule::at(0.0), burnIn, kept, threads);
}

}  // namespace quadlab
