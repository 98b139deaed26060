#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quadlab/map_kernel.hpp"
#include "quadlab/sweep.hpp"

namespace quadlab {

/// Square-pixel window onto the plane. Pixel (i, j) samples the centre of its
/// cell; row 0 is the top (largest imaginary part).
struct Viewport {
  double centerRe = 0.0;
  double centerIm = 0.0;
  double width = 4.0;
  int pixelsX = 256;
  int pixelsY = 256;

  double pitch() const { return width / pixelsX; }
  double height() const { return pitch() * pixelsY; }
  /// centre + ((2i + 1 - pixelsX) / 2) * pitch, and the flipped analogue for rows.
  /// The odd integer factor keeps coordinates of mirrored pixels exact negatives.
  Complex pixel_center(int i, int j) const;
  /// Pixel whose cell contains `z`, or nullopt outside the viewport.
  std::optional<std::pair<int, int>> pixel_of(Complex z) const;
  void validate() const;
};

enum class PlaneKind { Dynamical, Parameter };

struct EscapeGrid {
  Viewport viewport;
  int maxIter = 0;
  double escapeRadius = 0.0;
  PlaneKind planeKind = PlaneKind::Dynamical;
  /// Row-major; 0 = bounded after maxIter, k in [1, maxIter] = escape index.
  std::vector<int> cells;

  int at(int i, int j) const { return cells[static_cast<std::size_t>(j) * viewport.pixelsX + i]; }
};

struct ComponentLabeling {
  /// Row-major; 0 for bounded cells, 1.. for escaped components in scan order.
  std::vector<int> labels;
  int count = 0;
  std::optional<int> borderLabel;
  std::optional<int> poleLabel;
};

enum class CriticalChoice { AnyHolo, PositiveRealOnCircle };

/// Escape-time picture of the dynamical plane. Rows are split into bands
/// across `threads` workers; the output does not depend on the split.
EscapeGrid render_dynamical(const FamilySpec& family, const Viewport& vp, int maxIter, double escapeRadius,
                            unsigned threads = 0);

/// Parameter plane: each pixel is the parameter, the seed is the chosen
/// critical point (principal root for the holomorphic family, the positive
/// real point of the critical circle for the nonholomorphic one).
EscapeGrid render_parameter(const SweepTemplate& tmpl, const Viewport& vp, int maxIter, double escapeRadius,
                            CriticalChoice choice, unsigned threads = 0);

/// Critical-point seed used by render_parameter for one parameter value.
Complex parameter_plane_seed(const SweepTemplate& tmpl, Complex param, CriticalChoice choice);

/// 4-connected labeling of the escaped cells of a dynamical-plane grid.
ComponentLabeling label_components(const EscapeGrid& grid);

/// Grey level of one cell: 0 when bounded, else min(255, 55 + floor(200 k / maxIter)).
std::uint8_t grey_level(int cell, int maxIter);

using Palette = std::array<std::array<std::uint8_t, 3>, 256>;

/// Index 0 is black; index v > 0 maps to (v, 3v/4, 255 - v).
Palette default_palette();

std::string grid_to_pgm(const EscapeGrid& grid);
std::string grid_to_ppm(const EscapeGrid& grid, const Palette& palette);
/// One image row per line, comma separated.
std::string grid_to_csv(const EscapeGrid& grid);

}  // namespace quadlab
