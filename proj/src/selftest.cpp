#include "quadlab/selftest.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "quadlab/equilibria.hpp"
#include "quadlab/julia.hpp"
#include "quadlab/nonholo.hpp"
#include "quadlab/orbit.hpp"
#include "quadlab/render.hpp"
#include "quadlab/stat_lab.hpp"
#include "quadlab/text_output.hpp"

namespace quadlab {

namespace {

using Check = std::function<std::string()>;  // empty string = pass

std::string vieta_and_repelling() {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> lam(4.0 / 27.0 + 1e-9, 1.0);
  for (int t = 0; t < 100; ++t) {
    const double l = lam(rng);
    const auto fps = complex_fixed_points_m1({l, 0.0});
    Complex sum{0.0, 0.0};
    for (const auto& fp : fps) {
      sum += fp.location;
      if (fp.classification != FixedPointClass::Repelling) return "non-repelling fixed point at lambda " + fmt(l);
    }
    if (std::abs(sum - Complex{1.0, 0.0}) > 1e-9) return "fixed points do not sum to 1 at lambda " + fmt(l);
  }
  return {};
}

std::string escape_soundness() {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int t = 0; t < 1000; ++t) {
    const Complex l{u(rng), u(rng)};
    if (!escape_monotonicity_check(l, 5, rng())) return "|F(z)| <= |z| outside 1 + |lambda| for lambda " + fmt(l);
  }
  return {};
}

std::string circle_contraction() {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> r(1e-6, 1.0 / 27.0 - 1e-9);
  std::uniform_real_distribution<double> th(0.0, 2.0 * std::numbers::pi);
  for (int t = 0; t < 50; ++t) {
    const Complex l = std::polar(r(rng), th(rng));
    if (!circle_contraction_check(l, 256)) return "circle not mapped inside for lambda " + fmt(l);
  }
  return {};
}

std::string saddle_node_agreement() {
  for (int m = 1; m <= 4; ++m)
    if (std::abs(saddle_node_value(m).lambda0 - saddle_node_numeric(m)) > 1e-6)
      return "formula and bisection disagree at m = " + std::to_string(m);
  return {};
}

std::string render_symmetry_and_threads(unsigned threads) {
  const Viewport vp{0.0, 0.0, 3.0, 64, 64};
  const FamilySpec f = FamilySpec::holo(1, {-0.05, 0.0});
  const auto one = render_dynamical(f, vp, 200, default_escape_radius(f), 1);
  const auto many = render_dynamical(f, vp, 200, default_escape_radius(f), threads == 0 ? 4 : threads);
  if (one.cells != many.cells) return "grid depends on the worker count";
  for (int j = 0; j < 64; ++j)
    for (int i = 0; i < 64; ++i)
      if (one.at(i, j) != one.at(i, 63 - j)) return "real-parameter grid not symmetric under conjugation";
  return {};
}

std::string real_line() {
  for (double x : {-1.7, -0.3, 0.25, 0.9, 2.2})
    for (double p : {-0.327, 0.01, 0.5})
      if (!nonholo::real_line_agreement(p, x)) return "families disagree on the real axis at x = " + fmt(x);
  return {};
}

std::string indicator_variance() {
  const auto cloud = henon_attractor(1.4, 0.3, 20000, 1000);
  Rect a;
  a.xlo = 0.0;
  const auto c = correlation(cloud.points, a, a, 10);
  std::size_t hits = 0;
  for (const auto& p : cloud.points) hits += a.contains(p);
  const double mu = static_cast<double>(hits) / static_cast<double>(cloud.points.size());
  if (std::abs(c.values.front() - mu * (1.0 - mu)) > 1e-12) return "C(0) differs from mu(1 - mu)";
  return {};
}

std::string henon_volume() {
  const auto est = lyapunov_2d(FamilySpec::henon(1.4, 0.3), {0.0, 0.0}, 1000, 100000);
  const double sum = est.exponents[0] + est.exponents[1];
  if (std::abs(sum - std::log(0.3)) > 0.02) return "exponent sum " + fmt(sum) + " is not log 0.3";
  if (!(est.exponents[0] > 0.0)) return "largest exponent is not positive";
  return {};
}

std::string schwarzian_sign() {
  for (double x : {-2.0, -0.5, 0.1, 1.0, 3.0})
    if (!(schwarzian(1.3, x) < 0.0)) return "nonnegative Schwarzian at x = " + fmt(x);
  return {};
}

}  // namespace

std::vector<SelftestCheck> run_selftest(unsigned threads) {
  const std::vector<std::pair<std::string, Check>> checks = {
      {"vieta-and-repelling", vieta_and_repelling},
      {"escape-soundness", escape_soundness},
      {"circle-contraction", circle_contraction},
      {"saddle-node-agreement", saddle_node_agreement},
      {"render-symmetry-and-threads", [threads] { return render_symmetry_and_threads(threads); }},
      {"real-line-agreement", real_line},
      {"indicator-variance", indicator_variance},
      {"henon-volume", henon_volume},
      {"schwarzian-sign", schwarzian_sign},
  };
  std::vector<SelftestCheck> out;
  for (const auto& [name, fn] : checks) {
    SelftestCheck result{name, false, {}};
    try {
      result.detail = fn();
      result.passed = result.detail.empty();
    } catch (const std::exception& e) {
      result.detail = e.what();
    }
    out.push_back(std::move(result));
  }
  return out;
}

}  // namespace quadlab
