// Command-line front end for the quadlab library.
//
// Exit codes: 0 on success, 1 when the analysis reports a domain error,
// 2 on a usage error (bad flag, malformed number, unknown subcommand).

#include <CLI11.hpp>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "quadlab/equilibria.hpp"
#include "quadlab/julia.hpp"
#include "quadlab/nonholo.hpp"
#include "quadlab/orbit.hpp"
#include "quadlab/render.hpp"
#include "quadlab/selftest.hpp"
#include "quadlab/stat_lab.hpp"
#include "quadlab/sweep.hpp"
#include "quadlab/text_output.hpp"

using namespace quadlab;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_real(const std::string& text, const std::string& flag) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) throw UsageError(flag + ": expected a number, got '" + text + "'");
  return v;
}

std::vector<double> parse_list(const std::string& text, const std::string& flag) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_real(text.substr(start, comma - start), flag));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

// "re,im" or a plain real.
Complex parse_complex(const std::string& text, const std::string& flag) {
  const auto parts = parse_list(text, flag);
  if (parts.size() == 1) return {parts[0], 0.0};
  if (parts.size() == 2) return {parts[0], parts[1]};
  throw UsageError(flag + ": expected 're,im', got '" + text + "'");
}

std::pair<double, double> parse_pair(const std::string& text, const std::string& flag) {
  const auto parts = parse_list(text, flag);
  if (parts.size() != 2) throw UsageError(flag + ": expected 'lo,hi', got '" + text + "'");
  return {parts[0], parts[1]};
}

Rect parse_rect(const std::string& text, const std::string& flag) {
  const auto parts = parse_list(text, flag);
  if (parts.size() != 4) throw UsageError(flag + ": expected 'xlo,xhi,ylo,yhi', got '" + text + "'");
  return {parts[0], parts[1], parts[2], parts[3]};
}

FamilyKind parse_kind(const std::string& text) {
  if (text == "holo") return FamilyKind::HoloPerturbed;
  if (text == "nonholo") return FamilyKind::NonholoPerturbed;
  if (text == "logistic") return FamilyKind::Logistic;
  if (text == "henon") return FamilyKind::Henon;
  if (text == "quadratic") return FamilyKind::PureQuadratic;
  throw UsageError("--kind: unknown family '" + text + "'");
}

FamilySpec make_family(FamilyKind kind, int m, Complex param, double b) {
  switch (kind) {
    case FamilyKind::HoloPerturbed: return FamilySpec::holo(m, param);
    case FamilyKind::NonholoPerturbed: return FamilySpec::nonholo(m, param);
    case FamilyKind::Logistic: return FamilySpec::logistic(param.real());
    case FamilyKind::Henon: return FamilySpec::henon(param.real(), b);
    case FamilyKind::PureQuadratic: return FamilySpec::quadratic(param);
  }
  return {};
}

void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::fwrite(content.data(), 1, content.size(), stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

std::string image_bytes(const EscapeGrid& grid, const std::string& path, const std::string& format) {
  std::string fmt_name = format;
  if (fmt_name.empty()) {
    const auto dot = path.rfind('.');
    fmt_name = dot == std::string::npos ? "pgm" : path.substr(dot + 1);
  }
  if (fmt_name == "pgm") return grid_to_pgm(grid);
  if (fmt_name == "ppm") return grid_to_ppm(grid, default_palette());
  if (fmt_name == "csv") return grid_to_csv(grid);
  throw UsageError("--format: expected pgm, ppm or csv, got '" + fmt_name + "'");
}

std::string_view to_string(FixedPointClass c) {
  switch (c) {
    case FixedPointClass::Attracting: return "Attracting";
    case FixedPointClass::Repelling: return "Repelling";
    case FixedPointClass::Neutral: return "Neutral";
    case FixedPointClass::Superattracting: return "Superattracting";
    case FixedPointClass::Saddle: return "Saddle";
  }
  return "Unknown";
}

void print_fixed_points(const std::vector<FixedPointReport>& fps) {
  std::printf("location_re,location_im,multiplier_modulus,classification\n");
  for (const auto& fp : fps)
    std::printf("%s,%s,%s\n", fmt(fp.location).c_str(), fmt(std::abs(fp.multiplier)).c_str(),
                std::string(to_string(fp.classification)).c_str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Escape-time, bifurcation and statistical diagnostics for perturbed quadratic maps"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  unsigned threads = 0;
  app.add_option("--threads", threads, "Worker count (0 = available parallelism)")->check(CLI::NonNegativeNumber);

  // Shared flag storage; each subcommand registers the ones it reads.
  std::string kind = "holo", param = "0", center = "0,0", range, bracket, points, setA, setB, out, format, start;
  int m = 1, res = 800, maxIter = 500, samples = 1000, burnIn = 2000, kept = 200, period = 1, maxPeriod = 64, n = 1000,
      maxLag = 40, grid = 200000, sampleLen = 20000;
  double width = 4.0, escapeRadius = 0.0, b = 0.3, a = 1.4, x0 = 0.0, tol = 0.0, epsilon = 1e-3, threshold = 0.01;
  std::string beta;
  std::uint64_t seed = 0x5eed;
  bool numeric = false;

  auto add_family = [&](CLI::App* sub, const std::string& defaultKind) {
    kind = defaultKind;
    sub->add_option("--kind", kind, "holo | nonholo | logistic | henon | quadratic")->capture_default_str();
    sub->add_option("--m", m, "Pole order m >= 1")->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_option("--param", param, "Parameter as 're,im' or a real number")->capture_default_str();
  };
  auto add_view = [&](CLI::App* sub) {
    sub->add_option("--center", center, "Viewport centre 're,im'")->capture_default_str();
    sub->add_option("--width", width, "Viewport width")->capture_default_str();
    sub->add_option("--res", res, "Pixels per side")->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_option("--max-iter", maxIter, "Iteration cap")->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_option("--escape-radius", escapeRadius, "Escape radius (0 = family default)")->capture_default_str();
  };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", out, "Output file ('-' or absent = stdout)"); };

  auto* renderDyn = app.add_subcommand("render-dyn", "Escape-time image of the dynamical plane");
  add_family(renderDyn, "holo");
  add_view(renderDyn);
  add_out(renderDyn);
  renderDyn->add_option("--format", format, "pgm | ppm | csv (default from the file extension)");

  auto* renderParam = app.add_subcommand("render-param", "Escape-time image of the parameter plane");
  renderParam->add_option("--kind", kind, "holo | nonholo")->capture_default_str();
  renderParam->add_option("--m", m, "Pole order")->capture_default_str()->check(CLI::PositiveNumber);
  add_view(renderParam);
  add_out(renderParam);
  renderParam->add_option("--format", format, "pgm | ppm | csv");

  auto* classify = app.add_subcommand("classify", "Julia-set type from the critical orbit");
  classify->add_option("--m", m, "Pole order")->capture_default_str()->check(CLI::PositiveNumber);
  classify->add_option("--param", param, "lambda as 're,im'")->required();
  classify->add_option("--res", res, "Pixels per side")->check(CLI::PositiveNumber);
  classify->add_option("--max-iter", maxIter, "Iteration cap")->capture_default_str()->check(CLI::PositiveNumber);

  auto* disk = app.add_subcommand("disk-coverage", "Covering radius of the unit disk by Julia pixels (m = 1)");
  disk->add_option("--param", param, "lambda as 're,im'")->required();
  disk->add_option("--res", res, "Pixels per side");
  disk->add_option("--max-iter", maxIter, "Iteration cap");

  auto* diagram = app.add_subcommand("orbit-diagram", "Asymptotic states against a swept real parameter");
  diagram->add_option("--kind", kind, "holo | nonholo | logistic | henon")->capture_default_str();
  diagram->add_option("--m", m, "Pole order")->capture_default_str()->check(CLI::PositiveNumber);
  diagram->add_option("--b", b, "Henon b")->capture_default_str();
  diagram->add_option("--range", range, "Parameter range 'lo,hi'")->required();
  diagram->add_option("--samples", samples, "Parameter samples")->capture_default_str();
  diagram->add_option("--start", start, "Fixed start x0 (default: the critical point)");
  diagram->add_option("--burn-in", burnIn, "Discarded steps")->capture_default_str();
  diagram->add_option("--kept", kept, "Retained steps")->capture_default_str();
  add_out(diagram);

  auto* fixedPoints = app.add_subcommand("fixed-points", "Fixed points and their classification");
  fixedPoints->add_option("--kind", kind, "holo | henon")->capture_default_str();
  fixedPoints->add_option("--m", m, "Pole order")->capture_default_str()->check(CLI::PositiveNumber);
  fixedPoints->add_option("--param", param, "lambda (holo) or a (henon)")->required();
  fixedPoints->add_option("--b", b, "Henon b")->capture_default_str();

  auto* saddle = app.add_subcommand("saddle-node", "Saddle-node parameter (1+m)^(1+m)/(2+m)^(2+m)");
  saddle->add_option("--m", m, "Pole order")->capture_default_str()->check(CLI::PositiveNumber);
  saddle->add_flag("--numeric", numeric, "Locate it by bisection instead of the closed form");

  auto* superstable = app.add_subcommand("superstable", "Parameter with a superattracting cycle of given period");
  superstable->add_option("--kind", kind, "holo | nonholo | logistic")->capture_default_str();
  superstable->add_option("--m", m, "Pole order")->capture_default_str()->check(CLI::PositiveNumber);
  superstable->add_option("--period", period, "Cycle period")->required();
  superstable->add_option("--bracket", bracket, "Search bracket 'lo,hi'")->required();

  app.add_subcommand("homoclinic", "Parameter where F^2 of the critical point hits the fixed point (m = 1)");

  auto* windows = app.add_subcommand("window-scan", "Periodic windows and escape gaps of x^2 + c/x");
  windows->add_option("--range", range, "Range 'lo,hi'")->required();
  windows->add_option("--samples", samples, "Parameter samples")->capture_default_str();
  windows->add_option("--max-period", maxPeriod, "Largest period sought")->capture_default_str();
  windows->add_option("--burn-in", burnIn, "Burn-in per sample");
  add_out(windows);

  auto* cycleEigen = app.add_subcommand("cycle-eigen", "Jacobian product around a real cycle of z^2 + beta/conj(z)");
  cycleEigen->add_option("--beta", beta, "Real beta")->required();
  cycleEigen->add_option("--points", points, "Cycle points 'x0,x1,...'")->required();
  cycleEigen->add_option("--tol", tol, "Closure tolerance (default 1e-3)");

  auto* attractor = app.add_subcommand("henon-attractor", "Henon orbit from the origin as x,y rows");
  attractor->add_option("--a", a, "a")->capture_default_str();
  attractor->add_option("--b", b, "b")->capture_default_str();
  attractor->add_option("--n", n, "Kept states")->capture_default_str();
  attractor->add_option("--burn-in", burnIn, "Discarded steps")->capture_default_str();
  add_out(attractor);

  auto* henonBif = app.add_subcommand("henon-bif", "Henon bifurcation diagram in a");
  henonBif->add_option("--b", b, "b")->capture_default_str();
  henonBif->add_option("--range", range, "Range of a 'lo,hi'")->required();
  henonBif->add_option("--samples", samples, "Samples")->capture_default_str();
  henonBif->add_option("--burn-in", burnIn, "Discarded steps")->capture_default_str();
  henonBif->add_option("--kept", kept, "Retained steps")->capture_default_str();
  add_out(henonBif);

  auto* lyap = app.add_subcommand("lyapunov", "Lyapunov exponents (logistic, real holo, henon)");
  lyap->add_option("--kind", kind, "logistic | holo | henon")->capture_default_str();
  lyap->add_option("--m", m, "Pole order")->check(CLI::PositiveNumber);
  lyap->add_option("--param", param, "a (logistic, henon) or lambda")->required();
  lyap->add_option("--b", b, "Henon b")->capture_default_str();
  lyap->add_option("--x0", x0, "Start point (default: 0.3 logistic, critical point holo, 0 henon)");
  lyap->add_option("--burn-in", burnIn, "Discarded steps")->capture_default_str();
  lyap->add_option("--n", n, "Sample length (default 100000)");

  auto* corr = app.add_subcommand("correlation", "Correlation decay along the Henon orbit");
  corr->add_option("--a", a, "a")->capture_default_str();
  corr->add_option("--b", b, "b")->capture_default_str();
  corr->add_option("--n", n, "Orbit length")->capture_default_str();
  corr->add_option("--burn-in", burnIn, "Discarded steps")->capture_default_str();
  corr->add_option("--set-a", setA, "Box A 'xlo,xhi,ylo,yhi' (default x > 0)");
  corr->add_option("--set-b", setB, "Box B (default: same as A)");
  corr->add_option("--max-lag", maxLag, "Largest lag")->capture_default_str();
  corr->add_option("--seed", seed, "Shuffle seed")->capture_default_str();
  add_out(corr);

  auto* entropy = app.add_subcommand("entropy", "Topological entropy estimate of 1 - a x^2");
  entropy->add_option("--a", a, "a")->required();
  entropy->add_option("--n", n, "Orbit length (default 12)");
  entropy->add_option("--epsilon", epsilon, "Separation scale")->capture_default_str();
  entropy->add_option("--grid", grid, "Initial grid points on [-1, 1] (default 1000)");

  auto* schw = app.add_subcommand("schwarzian", "Schwarzian derivative of 1 - a x^2");
  schw->add_option("--a", a, "a")->required();
  schw->add_option("--x", x0, "x")->required();

  auto* nowicki = app.add_subcommand("nowicki", "Partial sums of |DF^i(c_1)|^(-1/2)");
  nowicki->add_option("--a", a, "a")->required();
  nowicki->add_option("--n", n, "Number of terms")->capture_default_str();

  auto* dichotomy = app.add_subcommand("dichotomy-scan", "Regular / stochastic verdicts over a in (lo, hi]");
  dichotomy->add_option("--range", range, "Range 'lo,hi'")->required();
  dichotomy->add_option("--samples", samples, "Samples")->capture_default_str();
  dichotomy->add_option("--threshold", threshold, "Lyapunov threshold")->capture_default_str();
  dichotomy->add_option("--burn-in", burnIn, "Burn-in")->capture_default_str();
  dichotomy->add_option("--sample-len", sampleLen, "Lyapunov sample length")->capture_default_str();
  add_out(dichotomy);

  app.add_subcommand("selftest", "Run the invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  if (name == "lyapunov" && sub->count("--kind") == 0) kind = "logistic";
  if (name == "lyapunov" && sub->count("--n") == 0) n = 100000;
  if (name == "entropy") {
    if (sub->count("--n") == 0) n = 12;
    if (sub->count("--grid") == 0) grid = 1000;
  }
  try {
    if (name == "render-dyn") {
      const FamilySpec f = make_family(parse_kind(kind), m, parse_complex(param, "--param"), b);
      const Complex c = parse_complex(center, "--center");
      const Viewport vp{c.real(), c.imag(), width, res, res};
      const double r = escapeRadius > 0.0 ? escapeRadius : default_escape_radius(f);
      const auto g = render_dynamical(f, vp, maxIter, r, threads);
      emit(out, image_bytes(g, out, format));
    } else if (name == "render-param") {
      const FamilyKind k = parse_kind(kind);
      if (k != FamilyKind::HoloPerturbed && k != FamilyKind::NonholoPerturbed)
        throw UsageError("--kind: render-param supports holo and nonholo");
      const SweepTemplate tmpl = k == FamilyKind::HoloPerturbed ? SweepTemplate::holo(m) : SweepTemplate::nonholo(m);
      const Complex c = parse_complex(center, "--center");
      const Viewport vp{c.real(), c.imag(), width, res, res};
      double r = escapeRadius;
      if (r <= 0.0) {
        double reach = 0.0;
        for (int j : {0, res - 1})
          for (int i : {0, res - 1}) reach = std::max(reach, std::abs(vp.pixel_center(i, j)));
        r = std::max(2.0, 1.0 + reach) + 1.0;
      }
      const auto choice = k == FamilyKind::HoloPerturbed ? CriticalChoice::AnyHolo : CriticalChoice::PositiveRealOnCircle;
      const auto g = render_parameter(tmpl, vp, maxIter, r, choice, threads);
      emit(out, image_bytes(g, out, format));
    } else if (name == "classify") {
      const Viewport vp = classification_viewport(sub->count("--res") ? res : 401);
      const auto cls = classify_julia(FamilySpec::holo(m, parse_complex(param, "--param")), vp, maxIter, threads);
      std::printf("label %s\n", std::string(to_string(cls.label)).c_str());
      std::printf("critical_escaped %s\n", cls.evidence.criticalEscaped ? "true" : "false");
      if (cls.evidence.escapeIndex) std::printf("escape_index %d\n", *cls.evidence.escapeIndex);
      std::printf("component %s\n", std::string(to_string(cls.evidence.componentOfCritical)).c_str());
    } else if (name == "disk-coverage") {
      const auto cov = disk_covering_radius(parse_complex(param, "--param"), sub->count("--res") ? res : 600,
                                            sub->count("--max-iter") ? maxIter : 2000, threads);
      std::printf("covering_radius %s\n", fmt(cov.coveringRadius).c_str());
      std::printf("epsilon %s\n", fmt(cov.epsilon).c_str());
      std::printf("julia_pixels %zu\n", cov.juliaPixels);
    } else if (name == "orbit-diagram") {
      const FamilyKind k = parse_kind(kind);
      SweepTemplate tmpl{k, m, b};
      const StartRule rule = start.empty() ? StartRule::critical() : StartRule::at(parse_real(start, "--start"));
      emit(out, diagram_to_csv(orbit_diagram(tmpl, parse_pair(range, "--range"), samples, rule, burnIn, kept, threads)));
    } else if (name == "fixed-points") {
      const FamilyKind k = parse_kind(kind);
      const Complex p = parse_complex(param, "--param");
      if (k == FamilyKind::Henon) {
        print_fixed_points(henon_fixed_points(p.real(), b));
      } else if (k == FamilyKind::HoloPerturbed) {
        if (m == 1) {
          print_fixed_points(complex_fixed_points_m1(p));
        } else {
          if (p.imag() != 0.0) throw UsageError("--param: m >= 2 fixed points need a real parameter");
          print_fixed_points(real_fixed_points(p.real(), m));
        }
      } else {
        throw UsageError("--kind: fixed-points supports holo and henon");
      }
    } else if (name == "saddle-node") {
      std::printf("%s\n", fmt(numeric ? saddle_node_numeric(m) : saddle_node_value(m).lambda0).c_str());
    } else if (name == "superstable") {
      SweepTemplate tmpl{parse_kind(kind), m, 0.0};
      std::printf("%s\n", fmt(find_superstable(tmpl, period, parse_pair(bracket, "--bracket"))).c_str());
    } else if (name == "homoclinic") {
      std::printf("%s\n", fmt(find_homoclinic()).c_str());
    } else if (name == "window-scan") {
      ScanOptions opts;
      opts.threads = threads;
      if (sub->count("--burn-in")) opts.burnIn = burnIn;
      emit(out, windows_to_csv(window_scan(parse_pair(range, "--range"), samples, maxPeriod, opts)));
    } else if (name == "cycle-eigen") {
      const double bt = parse_real(beta, "--beta");
      const auto pts = parse_list(points, "--points");
      const auto rep = nonholo::cycle_eigen(bt, pts, tol > 0.0 ? tol : nonholo::kCycleTolerance);
      std::printf("period %d\n", rep.period);
      std::printf("diagonal %s,%s\n", fmt(rep.product.a11).c_str(), fmt(rep.product.a22).c_str());
      std::printf("product %s,%s,%s,%s\n", fmt(rep.product.a11).c_str(), fmt(rep.product.a12).c_str(),
                  fmt(rep.product.a21).c_str(), fmt(rep.product.a22).c_str());
      if (rep.eigenvalues.complexPair)
        std::printf("eigenvalues %s%+.9gi,%s%+.9gi\n", fmt(rep.eigenvalues.first).c_str(), rep.eigenvalues.imag,
                    fmt(rep.eigenvalues.second).c_str(), -rep.eigenvalues.imag);
      else
        std::printf("eigenvalues %s,%s\n", fmt(rep.eigenvalues.first).c_str(), fmt(rep.eigenvalues.second).c_str());
      std::printf("closure_error %s\n", fmt(rep.closureError).c_str());
    } else if (name == "henon-attractor") {
      emit(out, cloud_to_csv(henon_attractor(a, b, n, burnIn)));
    } else if (name == "henon-bif") {
      emit(out, diagram_to_csv(henon_bifurcation(b, parse_pair(range, "--range"), samples, burnIn, kept, threads)));
    } else if (name == "lyapunov") {
      const FamilyKind k = parse_kind(kind);
      const FamilySpec f = make_family(k, m, parse_complex(param, "--param"), b);
      if (sub->count("--x0") == 0) {
        // x = 0 is the pole of the real holomorphic map and lands on the
        // repelling fixed point -1 of the logistic map at a = 2.
        if (k == FamilyKind::Logistic) x0 = kGenericStart;
        if (k == FamilyKind::HoloPerturbed) x0 = SweepTemplate::holo(m).critical_point(f.param.real());
      }
      const auto est = k == FamilyKind::Henon ? lyapunov_2d(f, {x0, 0.0}, burnIn, n) : lyapunov_1d(f, x0, burnIn, n);
      std::string line;
      for (double e : est.exponents) line += (line.empty() ? "" : ",") + fmt(e);
      std::printf("%s\n", line.c_str());
    } else if (name == "correlation") {
      const auto cloud = henon_attractor(a, b, n, burnIn);
      Rect ra;
      ra.xlo = 0.0;
      if (!setA.empty()) ra = parse_rect(setA, "--set-a");
      const Rect rb = setB.empty() ? ra : parse_rect(setB, "--set-b");
      const auto series = correlation(cloud.points, ra, rb, maxLag, seed);
      emit(out, correlation_to_csv(series));
      std::fprintf(stderr, "noise_floor %s\n", fmt(series.noiseFloor).c_str());
      if (series.fittedRate) std::fprintf(stderr, "fitted_rate %s\n", fmt(*series.fittedRate).c_str());
    } else if (name == "entropy") {
      std::printf("%s\n", fmt(topological_entropy_estimate(FamilySpec::logistic(a), n, epsilon, grid)).c_str());
    } else if (name == "schwarzian") {
      std::printf("%s\n", fmt(schwarzian(a, x0)).c_str());
    } else if (name == "nowicki") {
      for (double s : nowicki_sums(a, n)) std::printf("%s\n", fmt(s).c_str());
    } else if (name == "dichotomy-scan") {
      DichotomyOptions opts;
      opts.burnIn = burnIn;
      opts.sampleLen = sampleLen;
      opts.threads = threads;
      emit(out, dichotomy_to_csv(dichotomy_scan(parse_pair(range, "--range"), samples, threshold, opts)));
    } else if (name == "selftest") {
      bool ok = true;
      for (const auto& check : run_selftest(threads)) {
        std::printf("%s %s%s%s\n", check.passed ? "PASS" : "FAIL", check.name.c_str(), check.detail.empty() ? "" : ": ",
                    check.detail.c_str());
        ok = ok && check.passed;
      }
      return ok ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 2;
  } catch (const DynamicsError& e) {
    if (e.code() == ErrorCode::InvalidArgument) {
      std::fprintf(stderr, "usage error: %s\n", e.what());
      return 2;
    }
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
