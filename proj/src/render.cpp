#include "quadlab/render.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "quadlab/orbit.hpp"
#include "quadlab/parallel.hpp"

namespace quadlab {

Complex Viewport::pixel_center(int i, int j) const {
  const double half = 0.5 * pitch();
  return {centerRe + static_cast<double>(2 * i + 1 - pixelsX) * half,
          centerIm - static_cast<double>(2 * j + 1 - pixelsY) * half};
}

std::optional<std::pair<int, int>> Viewport::pixel_of(Complex z) const {
  const double fi = (z.real() - centerRe) / pitch() + 0.5 * pixelsX;
  const double fj = (centerIm - z.imag()) / pitch() + 0.5 * pixelsY;
  if (!(fi >= 0.0 && fi < pixelsX && fj >= 0.0 && fj < pixelsY)) return std::nullopt;
  return std::pair{static_cast<int>(fi), static_cast<int>(fj)};
}

void Viewport::validate() const {
  if (!(width > 0.0) || pixelsX < 1 || pixelsY < 1)
    throw DynamicsError(ErrorCode::InvalidArgument, "viewport needs width > 0 and positive pixel counts");
}

namespace {

void check_radius(const FamilySpec& family, double escapeRadius) {
  if (family.perturbed() || family.kind == FamilyKind::PureQuadratic) {
    const double need = std::max(2.0, 1.0 + std::abs(family.param));
    if (!(escapeRadius >= need))
      throw DynamicsError(ErrorCode::PreconditionViolated, "escape radius below max(2, 1 + |param|)");
  }
}

}  // namespace

EscapeGrid render_dynamical(const FamilySpec& family, const Viewport& vp, int maxIter, double escapeRadius,
                            unsigned threads) {
  vp.validate();
  if (maxIter < 1) throw DynamicsError(ErrorCode::InvalidArgument, "maxIter must be >= 1");
  check_radius(family, escapeRadius);
  EscapeGrid grid{vp, maxIter, escapeRadius, PlaneKind::Dynamical, {}};
  grid.cells.assign(static_cast<std::size_t>(vp.pixelsX) * vp.pixelsY, 0);
  parallel_for(static_cast<std::size_t>(vp.pixelsY), threads, [&](std::size_t row) {
    const int j = static_cast<int>(row);
    int* out = grid.cells.data() + row * vp.pixelsX;
    for (int i = 0; i < vp.pixelsX; ++i) out[i] = escape_time(family, vp.pixel_center(i, j), maxIter, escapeRadius);
  });
  return grid;
}

Complex parameter_plane_seed(const SweepTemplate& tmpl, Complex param, CriticalChoice choice) {
  switch (tmpl.kind) {
    case FamilyKind::HoloPerturbed:
      if (choice != CriticalChoice::AnyHolo)
        throw DynamicsError(ErrorCode::PreconditionViolated, "holomorphic parameter planes seed from a critical root");
      return critical_set(FamilySpec::holo(tmpl.m, param)).points.front();
    case FamilyKind::NonholoPerturbed:
      if (choice != CriticalChoice::PositiveRealOnCircle)
        throw DynamicsError(ErrorCode::PreconditionViolated,
                            "nonholomorphic parameter planes seed from the positive real critical point");
      return {*critical_set(FamilySpec::nonholo(tmpl.m, param)).circleRadius, 0.0};
    case FamilyKind::PureQuadratic:
    case FamilyKind::Logistic:
      return {0.0, 0.0};
    case FamilyKind::Henon:
      break;
  }
  throw DynamicsError(ErrorCode::Unsupported, "no parameter plane for the Henon map");
}

EscapeGrid render_parameter(const SweepTemplate& tmpl, const Viewport& vp, int maxIter, double escapeRadius,
                            CriticalChoice choice, unsigned threads) {
  vp.validate();
  if (maxIter < 1) throw DynamicsError(ErrorCode::InvalidArgument, "maxIter must be >= 1");
  if (tmpl.kind == FamilyKind::Henon || tmpl.kind == FamilyKind::Logistic)
    throw DynamicsError(ErrorCode::Unsupported, "parameter planes are for the complex families");
  // Every parameter in view must respect the guaranteed-escape bound.
  double max_modulus = 0.0;
  for (int j : {0, vp.pixelsY - 1})
    for (int i : {0, vp.pixelsX - 1}) max_modulus = std::max(max_modulus, std::abs(vp.pixel_center(i, j)));
  if (!(escapeRadius >= std::max(2.0, 1.0 + max_modulus)))
    throw DynamicsError(ErrorCode::PreconditionViolated, "escape radius below max(2, 1 + |param|) for this viewport");

  EscapeGrid grid{vp, maxIter, escapeRadius, PlaneKind::Parameter, {}};
  grid.cells.assign(static_cast<std::size_t>(vp.pixelsX) * vp.pixelsY, 0);
  parallel_for(static_cast<std::size_t>(vp.pixelsY), threads, [&](std::size_t row) {
    const int j = static_cast<int>(row);
    int* out = grid.cells.data() + row * vp.pixelsX;
    for (int i = 0; i < vp.pixelsX; ++i) {
      const Complex p = vp.pixel_center(i, j);
      if (p == Complex{0.0, 0.0}) {
        out[i] = 1;  // critical point on the pole: escapes at once
        continue;
      }
      FamilySpec f = tmpl.at(0.0);
      f.param = p;
      out[i] = escape_time(f, parameter_plane_seed(tmpl, p, choice), maxIter, escapeRadius);
    }
  });
  return grid;
}

ComponentLabeling label_components(const EscapeGrid& grid) {
  if (grid.planeKind != PlaneKind::Dynamical)
    throw DynamicsError(ErrorCode::PreconditionViolated, "component labeling expects a dynamical-plane grid");
  const int w = grid.viewport.pixelsX;
  const int h = grid.viewport.pixelsY;
  ComponentLabeling out;
  out.labels.assign(grid.cells.size(), 0);
  std::vector<int> stack;
  for (std::size_t start = 0; start < grid.cells.size(); ++start) {
    if (grid.cells[start] == 0 || out.labels[start] != 0) continue;
    const int label = ++out.count;
    out.labels[start] = label;
    stack.push_back(static_cast<int>(start));
    while (!stack.empty()) {
      const int idx = stack.back();
      stack.pop_back();
      const int x = idx % w;
      const int y = idx / w;
      auto visit = [&](int nx, int ny) {
        if (nx < 0 || ny < 0 || nx >= w || ny >= h) return;
        const std::size_t n = static_cast<std::size_t>(ny) * w + nx;
        if (grid.cells[n] == 0 || out.labels[n] != 0) return;
        out.labels[n] = label;
        stack.push_back(static_cast<int>(n));
      };
      visit(x - 1, y);
      visit(x + 1, y);
      visit(x, y - 1);
      visit(x, y + 1);
    }
  }

  // The border component is the one covering the most border cells.
  std::map<int, int> border_hits;
  auto tally = [&](int x, int y) {
    const int l = out.labels[static_cast<std::size_t>(y) * w + x];
    if (l != 0) ++border_hits[l];
  };
  for (int x = 0; x < w; ++x) {
    tally(x, 0);
    if (h > 1) tally(x, h - 1);
  }
  for (int y = 1; y + 1 < h; ++y) {
    tally(0, y);
    if (w > 1) tally(w - 1, y);
  }
  int best = 0;
  for (const auto& [label, hits] : border_hits)
    if (hits > best) {
      best = hits;
      out.borderLabel = label;
    }

  if (const auto pole = grid.viewport.pixel_of({0.0, 0.0})) {
    const int l = out.labels[static_cast<std::size_t>(pole->second) * w + pole->first];
    if (l != 0 && (!out.borderLabel || l != *out.borderLabel)) out.poleLabel = l;
  }
  return out;
}

std::uint8_t grey_level(int cell, int maxIter) {
  if (cell <= 0) return 0;
  const long v = 55 + (200L * cell) / maxIter;
  return static_cast<std::uint8_t>(std::min<long>(255, v));
}

Palette default_palette() {
  Palette p{};
  for (int v = 1; v < 256; ++v)
    p[static_cast<std::size_t>(v)] = {static_cast<std::uint8_t>(v), static_cast<std::uint8_t>(3 * v / 4),
                                      static_cast<std::uint8_t>(255 - v)};
  return p;
}

std::string grid_to_pgm(const EscapeGrid& grid) {
  std::string out = "P5\n" + std::to_string(grid.viewport.pixelsX) + " " + std::to_string(grid.viewport.pixelsY) +
                    "\n255\n";
  out.reserve(out.size() + grid.cells.size());
  for (int c : grid.cells) out.push_back(static_cast<char>(grey_level(c, grid.maxIter)));
  return out;
}

std::string grid_to_ppm(const EscapeGrid& grid, const Palette& palette) {
  std::string out = "P6\n" + std::to_string(grid.viewport.pixelsX) + " " + std::to_string(grid.viewport.pixelsY) +
                    "\n255\n";
  out.reserve(out.size() + 3 * grid.cells.size());
  for (int c : grid.cells)
    for (std::uint8_t ch : palette[grey_level(c, grid.maxIter)]) out.push_back(static_cast<char>(ch));
  return out;
}

std::string grid_to_csv(const EscapeGrid& grid) {
  std::string out;
  const int w = grid.viewport.pixelsX;
  for (int j = 0; j < grid.viewport.pixelsY; ++j) {
    for (int i = 0; i < w; ++i) {
      if (i > 0) out.push_back(',');
      out += std::to_string(grid.at(i, j));
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace quadlab
