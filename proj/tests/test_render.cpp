#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "quadlab/render.hpp"

using namespace quadlab;

namespace {

// Minimal binary PGM reader used as the round-trip reference.
struct Pgm {
  int w = 0, h = 0, maxval = 0;
  std::string pixels;
};

Pgm read_pgm(const std::string& bytes) {
  std::istringstream in(bytes);
  std::string magic;
  Pgm p;
  in >> magic >> p.w >> p.h >> p.maxval;
  in.get();  // single whitespace after maxval
  p.pixels.resize(static_cast<std::size_t>(p.w) * p.h);
  in.read(p.pixels.data(), static_cast<std::streamsize>(p.pixels.size()));
  if (magic != "P5" || !in) p.w = -1;
  return p;
}

int oracle_escape(Complex lambda, int m, Complex z, int maxIter, double r) {
  for (int k = 1; k <= maxIter; ++k) {
    if (z == Complex{0.0, 0.0}) return k;
    z = z * z + lambda / std::pow(z, m);
    if (std::abs(z) > r) return k;
  }
  return 0;
}

}  // namespace

TEST_CASE("pixel centres") {
  const Viewport vp{0.5, -0.25, 3.0, 7, 5};
  for (int j = 0; j < 5; ++j)
    for (int i = 0; i < 7; ++i) {
      const Complex c = vp.pixel_center(i, j);
      CHECK(c.real() == doctest::Approx(0.5 + ((i + 0.5) / 7.0 - 0.5) * 3.0).epsilon(1e-14));
      CHECK(c.imag() == doctest::Approx(-0.25 - ((j + 0.5) / 5.0 - 0.5) * vp.height()).epsilon(1e-14));
      const auto back = vp.pixel_of(c);
      REQUIRE(back.has_value());
      CHECK(back->first == i);
      CHECK(back->second == j);
    }
  CHECK_FALSE(vp.pixel_of({10.0, 0.0}).has_value());
  CHECK(vp.pixel_center(0, 0).imag() > vp.pixel_center(0, 4).imag());
}

TEST_CASE("unit circle for z^2") {
  const FamilySpec f = FamilySpec::holo(1, {0.0, 0.0});
  const Viewport vp{0.0, 0.0, 4.0, 101, 101};
  const auto g = render_dynamical(f, vp, 200, 3.0, 2);
  for (int j = 0; j < 101; ++j)
    for (int i = 0; i < 101; ++i) {
      const double r = std::abs(vp.pixel_center(i, j));
      if (r < 0.99) CHECK(g.at(i, j) == 0);
      if (r > 1.01) CHECK(g.at(i, j) > 0);
    }
  const auto labels = label_components(g);
  CHECK(labels.count == 1);
  REQUIRE(labels.borderLabel.has_value());
  CHECK_FALSE(labels.poleLabel.has_value());
}

TEST_CASE("bounded region along the positive axis at lambda = 4/27") {
  const Complex lambda{4.0 / 27.0, 0.0};
  const FamilySpec f = FamilySpec::holo(1, lambda);
  const Viewport vp{0.0, 0.0, 4.0, 200, 200};
  const auto g = render_dynamical(f, vp, 500, default_escape_radius(f));
  const auto px = vp.pixel_of({2.0 / 3.0, 0.0});
  REQUIRE(px.has_value());
  CHECK(g.at(px->first, px->second) == 0);
  for (Complex probe : {Complex{0.5, 0.0}, Complex{0.45, 0.05}, Complex{1.8, 0.0}, Complex{-1.9, 1.9}, Complex{0.2, 0.0}}) {
    const auto p = vp.pixel_of(probe);
    REQUIRE(p.has_value());
    const int want = oracle_escape(lambda, 1, vp.pixel_center(p->first, p->second), 500, default_escape_radius(f));
    CHECK((g.at(p->first, p->second) == 0) == (want == 0));
  }
}

TEST_CASE("four-fold symmetry for m = 2") {
  const FamilySpec f = FamilySpec::holo(2, {-0.25, 0.0});
  const int n = 151;
  const Viewport vp{0.0, 0.0, 3.0, n, n};
  const auto g = render_dynamical(f, vp, 300, default_escape_radius(f));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) CHECK(g.at(i, j) == g.at(j, n - 1 - i));
  // The critical orbit escapes here, so the picture is all escape bands.
  CHECK(*std::max_element(g.cells.begin(), g.cells.end()) > 3);
}

TEST_CASE("conjugate parameter mirrors the grid") {
  const Complex l{-0.05, 0.03};
  const Viewport vp{0.0, 0.0, 3.0, 80, 60};
  const auto a = render_dynamical(FamilySpec::holo(1, l), vp, 200, 3.0);
  const auto b = render_dynamical(FamilySpec::holo(1, std::conj(l)), vp, 200, 3.0);
  for (int j = 0; j < 60; ++j)
    for (int i = 0; i < 80; ++i) CHECK(a.at(i, j) == b.at(i, 59 - j));
}

TEST_CASE("worker count does not change the grid") {
  const FamilySpec f = FamilySpec::holo(2, {0.0001, 0.0});
  const Viewport vp{0.0, 0.0, 4.0, 97, 83};
  const auto one = render_dynamical(f, vp, 300, 3.0, 1);
  for (unsigned t : {2u, 3u, 8u, 200u}) CHECK(render_dynamical(f, vp, 300, 3.0, t).cells == one.cells);
  CHECK(grid_to_pgm(one) == grid_to_pgm(render_dynamical(f, vp, 300, 3.0, 5)));
}

TEST_CASE("escape radius below the guaranteed bound is rejected") {
  CHECK_THROWS_AS(render_dynamical(FamilySpec::holo(1, {3.0, 0.0}), {}, 10, 3.5), DynamicsError);
  CHECK_THROWS_AS(render_dynamical(FamilySpec::holo(1, {0.1, 0.0}), {0.0, 0.0, -1.0, 4, 4}, 10, 3.0), DynamicsError);
}

TEST_CASE("parameter plane probes") {
  const Viewport vp{-0.25, 0.0, 1.0, 201, 201};
  const auto g = render_parameter(SweepTemplate::holo(1), vp, 1000, 3.0, CriticalChoice::AnyHolo);
  const auto super = vp.pixel_of({2.0 / 27.0, 0.0});
  const auto esc = vp.pixel_of({-0.62, 0.0});
  REQUIRE(super.has_value());
  REQUIRE(esc.has_value());
  CHECK(g.at(super->first, super->second) == 0);
  CHECK(g.at(esc->first, esc->second) > 0);
  // An odd frame centred at 0 samples lambda = 0 exactly.
  const Viewport centred{0.0, 0.0, 0.5, 51, 51};
  const auto c = render_parameter(SweepTemplate::holo(1), centred, 100, 3.0, CriticalChoice::AnyHolo);
  REQUIRE(centred.pixel_center(25, 25) == Complex{0.0, 0.0});
  CHECK(c.at(25, 25) == 1);
  CHECK_THROWS_AS(render_parameter(SweepTemplate::nonholo(1), vp, 10, 3.0, CriticalChoice::AnyHolo), DynamicsError);
}

TEST_CASE("holomorphic and nonholomorphic planes agree on the positive real axis") {
  const Viewport vp{0.3, 0.0, 1.2, 241, 121};
  const auto h = render_parameter(SweepTemplate::holo(1), vp, 500, 3.0, CriticalChoice::AnyHolo);
  const auto n = render_parameter(SweepTemplate::nonholo(1), vp, 500, 3.0, CriticalChoice::PositiveRealOnCircle);
  const int row = 60;
  REQUIRE(vp.pixel_center(0, row).imag() == 0.0);
  int compared = 0;
  for (int i = 0; i < 241; ++i) {
    if (vp.pixel_center(i, row).real() <= 0.0) continue;
    CHECK(h.at(i, row) == n.at(i, row));
    ++compared;
  }
  CHECK(compared > 100);
}

TEST_CASE("component labels for the trap door regime") {
  const FamilySpec f = FamilySpec::holo(2, {0.0001, 0.0});
  const Viewport vp{0.0, 0.0, 4.0, 401, 401};  // classification frame
  const auto g = render_dynamical(f, vp, 500, default_escape_radius(f));
  const auto l = label_components(g);
  REQUIRE(l.borderLabel.has_value());
  REQUIRE(l.poleLabel.has_value());
  CHECK(*l.borderLabel != *l.poleLabel);
  for (std::size_t k = 0; k < g.cells.size(); ++k) CHECK((l.labels[k] == 0) == (g.cells[k] == 0));
}

TEST_CASE("all-bounded grid has no labels") {
  EscapeGrid g{{0.0, 0.0, 1.0, 3, 3}, 10, 3.0, PlaneKind::Dynamical, std::vector<int>(9, 0)};
  const auto l = label_components(g);
  CHECK(l.count == 0);
  CHECK_FALSE(l.borderLabel.has_value());
  CHECK_FALSE(l.poleLabel.has_value());
  g.planeKind = PlaneKind::Parameter;
  CHECK_THROWS_AS(label_components(g), DynamicsError);
}

TEST_CASE("PGM and PPM bytes") {
  EscapeGrid one{{0.0, 0.0, 1.0, 1, 1}, 10, 3.0, PlaneKind::Dynamical, {0}};
  CHECK(grid_to_pgm(one) == std::string("P5\n1 1\n255\n") + std::string(1, '\0'));
  one.cells = {10};
  CHECK(grid_to_pgm(one).back() == static_cast<char>(255));

  EscapeGrid two{{0.0, 0.0, 1.0, 2, 2}, 100, 3.0, PlaneKind::Dynamical, {0, 1, 50, 100}};
  const std::string pgm = grid_to_pgm(two);
  const std::string header = "P5\n2 2\n255\n";
  REQUIRE(pgm.size() == header.size() + 4);
  CHECK(static_cast<unsigned char>(pgm[header.size() + 0]) == 0);
  CHECK(static_cast<unsigned char>(pgm[header.size() + 1]) == 57);
  CHECK(static_cast<unsigned char>(pgm[header.size() + 2]) == 155);
  CHECK(static_cast<unsigned char>(pgm[header.size() + 3]) == 255);

  const std::string ppm = grid_to_ppm(two, default_palette());
  CHECK(ppm.rfind("P6\n2 2\n255\n", 0) == 0);
  CHECK(ppm.size() == std::string("P6\n2 2\n255\n").size() + 12);
  const auto pal = default_palette();
  CHECK(pal[0] == std::array<std::uint8_t, 3>{0, 0, 0});
  CHECK(pal[200] == std::array<std::uint8_t, 3>{200, 150, 55});

  CHECK(grid_to_csv(two) == "0,1\n50,100\n");
}

TEST_CASE("PGM round-trips through a reference reader") {
  const FamilySpec f = FamilySpec::holo(1, {-0.1, 0.05});
  const Viewport vp{0.0, 0.0, 3.0, 37, 23};
  const auto g = render_dynamical(f, vp, 120, 3.0);
  const Pgm p = read_pgm(grid_to_pgm(g));
  REQUIRE(p.w == 37);
  CHECK(p.h == 23);
  CHECK(p.maxval == 255);
  for (int j = 0; j < 23; ++j)
    for (int i = 0; i < 37; ++i)
      CHECK(static_cast<unsigned char>(p.pixels[static_cast<std::size_t>(j) * 37 + i]) == grey_level(g.at(i, j), 120));
}
