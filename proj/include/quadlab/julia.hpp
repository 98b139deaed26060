#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "quadlab/map_kernel.hpp"
#include "quadlab/render.hpp"

namespace quadlab {

enum class JuliaLabel { CantorSet, CantorCurves, SierpinskiCandidate, Connected };
enum class CriticalComponent { Border, Pole, Other, None };

struct JuliaEvidence {
  bool criticalEscaped = false;
  std::optional<int> escapeIndex;
  /// Escaped component holding the critical value F(c).
  CriticalComponent componentOfCritical = CriticalComponent::None;
};

struct JuliaClass {
  JuliaLabel label = JuliaLabel::Connected;
  JuliaEvidence evidence;
};

/// Default classification frame: centre 0, width 4.
Viewport classification_viewport(int pixels = 401);

/// Escape-trichotomy verdict from pixel evidence:
///   critical orbit bounded for 2 * maxIter steps  -> Connected
///   critical value in the border component        -> CantorSet
///   critical value in the pole (trap door) component -> CantorCurves
///   critical value in any other escaped component -> SierpinskiCandidate
/// Throws Inconclusive when the orbit survives maxIter steps but escapes
/// during the confirmation run, or the critical value lands on a bounded pixel.
JuliaClass classify_julia(const FamilySpec& family, const Viewport& vp, int maxIter, unsigned threads = 0);

struct DiskCoverage {
  Complex lambda{0.0, 0.0};
  double epsilon = 0.0;  // Julia-pixel detection scale (pixel pitch)
  double coveringRadius = 0.0;
  std::size_t juliaPixels = 0;
};

/// Viewport used for disk coverage: centre 0, width 2.4, res x res pixels.
Viewport coverage_viewport(int res);

/// Max over pixel centres in the closed unit disk of the distance to the
/// nearest Julia pixel of z^2 + lambda/z. Julia pixels are cells whose
/// 4-neighbourhood mixes escaped and bounded cells, plus escaped cells whose
/// distance estimate |z| log|z| / |dz| is below one pixel pitch.
DiskCoverage disk_covering_radius(Complex lambda, int res, int maxIter, unsigned threads = 0);

/// |F(z)| < |z| at `samples` equally spaced points of |z| = |lambda|^{1/3}
/// (m = 1). Requires 0 < |lambda| < 1/27.
bool circle_contraction_check(Complex lambda, int samples);

/// |F(z)| > |z| for `trials` random z with |z| > 1 + |lambda| (m = 1).
bool escape_monotonicity_check(Complex lambda, int trials, std::uint64_t seed = 0x5eed);

std::string_view to_string(JuliaLabel label);
std::string_view to_string(CriticalComponent component);

}  // namespace quadlab
