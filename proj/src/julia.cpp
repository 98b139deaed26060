#include "quadlab/julia.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "quadlab/orbit.hpp"
#include "quadlab/parallel.hpp"

namespace quadlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Squared Euclidean distance transform along one line (Felzenszwalb and
// Huttenlocher lower envelope of parabolas).
void edt_1d(const std::vector<double>& f, std::vector<double>& d, std::vector<int>& v, std::vector<double>& z) {
  const int n = static_cast<int>(f.size());
  int k = 0;
  int first = 0;
  while (first < n && f[first] == kInf) ++first;
  if (first == n) {
    std::fill(d.begin(), d.end(), kInf);
    return;
  }
  v[0] = first;
  z[0] = -kInf;
  z[1] = kInf;
  for (int q = first + 1; q < n; ++q) {
    if (f[q] == kInf) continue;
    double s;
    while (true) {
      const int p = v[k];
      s = ((f[q] + static_cast<double>(q) * q) - (f[p] + static_cast<double>(p) * p)) / (2.0 * (q - p));
      if (s <= z[k] && k > 0) {
        --k;
        continue;
      }
      break;
    }
    if (s <= z[k]) {  // k == 0 and the new parabola dominates entirely
      v[0] = q;
      z[0] = -kInf;
      z[1] = kInf;
      continue;
    }
    ++k;
    v[k] = q;
    z[k] = s;
    z[k + 1] = kInf;
  }
  k = 0;
  for (int q = 0; q < n; ++q) {
    while (z[k + 1] < q) ++k;
    const double dq = q - v[k];
    d[q] = dq * dq + f[v[k]];
  }
}

// Squared distance (in pixels) from every cell to the nearest marked cell.
std::vector<double> distance_transform(const std::vector<char>& marked, int w, int h) {
  std::vector<double> grid(marked.size(), kInf);
  for (std::size_t i = 0; i < marked.size(); ++i)
    if (marked[i]) grid[i] = 0.0;
  const int n = std::max(w, h);
  std::vector<double> f(static_cast<std::size_t>(n)), d(static_cast<std::size_t>(n));
  std::vector<int> v(static_cast<std::size_t>(n));
  std::vector<double> z(static_cast<std::size_t>(n) + 1);
  f.resize(static_cast<std::size_t>(h));
  d.resize(static_cast<std::size_t>(h));
  for (int x = 0; x < w; ++x) {
    for (int y = 0; y < h; ++y) f[y] = grid[static_cast<std::size_t>(y) * w + x];
    edt_1d(f, d, v, z);
    for (int y = 0; y < h; ++y) grid[static_cast<std::size_t>(y) * w + x] = d[y];
  }
  f.resize(static_cast<std::size_t>(w));
  d.resize(static_cast<std::size_t>(w));
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) f[x] = grid[static_cast<std::size_t>(y) * w + x];
    edt_1d(f, d, v, z);
    for (int x = 0; x < w; ++x) grid[static_cast<std::size_t>(y) * w + x] = d[x];
  }
  return grid;
}

}  // namespace

Viewport classification_viewport(int pixels) { return Viewport{0.0, 0.0, 4.0, pixels, pixels}; }

Viewport coverage_viewport(int res) { return Viewport{0.0, 0.0, 2.4, res, res}; }

JuliaClass classify_julia(const FamilySpec& family, const Viewport& vp, int maxIter, unsigned threads) {
  if (family.kind != FamilyKind::HoloPerturbed)
    throw DynamicsError(ErrorCode::Unsupported, "classification covers the holomorphic family");
  if (maxIter < 1) throw DynamicsError(ErrorCode::InvalidArgument, "maxIter must be >= 1");
  if (family.param == Complex{0.0, 0.0})
    throw DynamicsError(ErrorCode::PreconditionViolated, "lambda = 0 has no free critical orbit");

  // All critical points share one fate under the rotation symmetry.
  const Complex critical = critical_set(family).points.front();
  const double radius = default_escape_radius(family);
  JuliaClass out;
  const int k = escape_time(family, critical, maxIter, radius);
  if (k == 0) {
    if (escape_time(family, critical, 2 * maxIter, radius) != 0)
      throw DynamicsError(ErrorCode::Inconclusive, "critical orbit escapes only after maxIter iterations");
    out.label = JuliaLabel::Connected;
    return out;
  }
  out.evidence.criticalEscaped = true;
  out.evidence.escapeIndex = k;

  const Complex value = *eval(family, critical);
  const EscapeGrid grid = render_dynamical(family, vp, maxIter, radius, threads);
  const ComponentLabeling labels = label_components(grid);
  const auto pixel = vp.pixel_of(value);
  if (!pixel) {
    if (std::abs(value) <= radius)
      throw DynamicsError(ErrorCode::Inconclusive, "critical value lies outside the viewport");
    out.evidence.componentOfCritical = CriticalComponent::Border;
  } else {
    const int label = labels.labels[static_cast<std::size_t>(pixel->second) * vp.pixelsX + pixel->first];
    if (label == 0) throw DynamicsError(ErrorCode::Inconclusive, "critical value falls on a bounded pixel");
    if (labels.borderLabel && label == *labels.borderLabel)
      out.evidence.componentOfCritical = CriticalComponent::Border;
    else if (labels.poleLabel && label == *labels.poleLabel)
      out.evidence.componentOfCritical = CriticalComponent::Pole;
    else
      out.evidence.componentOfCritical = CriticalComponent::Other;
  }
  switch (out.evidence.componentOfCritical) {
    case CriticalComponent::Border: out.label = JuliaLabel::CantorSet; break;
    case CriticalComponent::Pole: out.label = JuliaLabel::CantorCurves; break;
    default: out.label = JuliaLabel::SierpinskiCandidate; break;
  }
  return out;
}

DiskCoverage disk_covering_radius(Complex lambda, int res, int maxIter, unsigned threads) {
  if (lambda == Complex{0.0, 0.0}) throw DynamicsError(ErrorCode::PreconditionViolated, "lambda must be nonzero");
  if (res < 3 || maxIter < 1) throw DynamicsError(ErrorCode::InvalidArgument, "res >= 3 and maxIter >= 1 required");
  const FamilySpec family = FamilySpec::holo(1, lambda);
  const Viewport vp = coverage_viewport(res);
  const double radius = default_escape_radius(family);
  const double r2 = radius * radius;
  const double pitch = vp.pitch();
  const std::size_t cells = static_cast<std::size_t>(res) * res;

  std::vector<int> escape(cells, 0);
  std::vector<char> close(cells, 0);  // escaped with distance estimate below one pitch
  parallel_for(static_cast<std::size_t>(res), threads, [&](std::size_t row) {
    const int j = static_cast<int>(row);
    for (int i = 0; i < res; ++i) {
      Complex z = vp.pixel_center(i, j);
      Complex dz{1.0, 0.0};
      const std::size_t idx = row * res + i;
      for (int k = 1; k <= maxIter; ++k) {
        const auto d = derivative_holo(family, z);
        if (!d || !step_in_place(family, z)) {
          escape[idx] = k;  // pole hit: far from the Julia set at this scale
          break;
        }
        dz *= *d;
        const double n = std::norm(z);
        if (!(n <= r2)) {
          escape[idx] = k;
          const double mod = std::sqrt(n);
          const double de = mod * std::log(mod) / std::abs(dz);
          close[idx] = de < pitch ? 1 : 0;
          break;
        }
      }
    }
  });

  std::vector<char> julia(cells, 0);
  for (int j = 0; j < res; ++j) {
    for (int i = 0; i < res; ++i) {
      const std::size_t idx = static_cast<std::size_t>(j) * res + i;
      bool any_escaped = escape[idx] != 0;
      bool any_bounded = escape[idx] == 0;
      auto look = [&](int x, int y) {
        if (x < 0 || y < 0 || x >= res || y >= res) return;
        (escape[static_cast<std::size_t>(y) * res + x] != 0 ? any_escaped : any_bounded) = true;
      };
      look(i - 1, j);
      look(i + 1, j);
      look(i, j - 1);
      look(i, j + 1);
      julia[idx] = (any_escaped && any_bounded) || close[idx];
    }
  }

  DiskCoverage out;
  out.lambda = lambda;
  out.epsilon = pitch;
  out.juliaPixels = static_cast<std::size_t>(std::count(julia.begin(), julia.end(), 1));
  if (out.juliaPixels == 0) throw DynamicsError(ErrorCode::NoJuliaPixels, "no Julia pixels detected in the viewport");

  const auto dist2 = distance_transform(julia, res, res);
  double worst = 0.0;
  for (int j = 0; j < res; ++j)
    for (int i = 0; i < res; ++i)
      if (std::norm(vp.pixel_center(i, j)) <= 1.0)
        worst = std::max(worst, dist2[static_cast<std::size_t>(j) * res + i]);
  out.coveringRadius = std::sqrt(worst) * pitch;
  return out;
}

bool circle_contraction_check(Complex lambda, int samples) {
  const double mod = std::abs(lambda);
  if (!(mod > 0.0 && mod < 1.0 / 27.0))
    throw DynamicsError(ErrorCode::PreconditionViolated, "circle contraction needs 0 < |lambda| < 1/27");
  if (samples < 1) throw DynamicsError(ErrorCode::InvalidArgument, "samples must be >= 1");
  const FamilySpec family = FamilySpec::holo(1, lambda);
  const double r = std::cbrt(mod);
  for (int k = 0; k < samples; ++k) {
    const Complex z = std::polar(r, 2.0 * std::numbers::pi * k / samples);
    if (!(std::abs(*eval(family, z)) < std::abs(z))) return false;
  }
  return true;
}

bool escape_monotonicity_check(Complex lambda, int trials, std::uint64_t seed) {
  if (trials < 1) throw DynamicsError(ErrorCode::InvalidArgument, "trials must be >= 1");
  const FamilySpec family = FamilySpec::holo(1, lambda);
  const double bound = 1.0 + std::abs(lambda);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> stretch(1.0, 4.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (int t = 0; t < trials; ++t) {
    const double r = std::nextafter(bound, kInf) * stretch(rng);
    const Complex z = std::polar(r, angle(rng));
    if (std::abs(z) <= bound) continue;  // rounding pushed it back onto the bound
    if (!(std::abs(*eval(family, z)) > std::abs(z))) return false;
  }
  return true;
}

std::string_view to_string(JuliaLabel label) {
  switch (label) {
    case JuliaLabel::CantorSet: return "CantorSet";
    case JuliaLabel::CantorCurves: return "CantorCurves";
    case JuliaLabel::SierpinskiCandidate: return "SierpinskiCandidate";
    case JuliaLabel::Connected: return "Connected";
  }
  return "Unknown";
}

std::string_view to_string(CriticalComponent component) {
  switch (component) {
    case CriticalComponent::Border: return "Border";
    case CriticalComponent::Pole: return "Pole";
    case CriticalComponent::Other: return "Other";
    case CriticalComponent::None: return "None";
  }
  return "Unknown";
}

}  // namespace quadlab
