#include "quadlab/roots.hpp"

#include <algorithm>
#include <cmath>

#include "quadlab/error.hpp"

namespace quadlab {

using Complex = std::complex<double>;

Polynomial::Polynomial(std::vector<double> ascending) : coeffs_(std::move(ascending)) {
  while (coeffs_.size() > 1 && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double Polynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial({0.0});
  std::vector<double> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return Polynomial(std::move(d));
}

double Polynomial::magnitude_at(double x) const {
  double acc = 0.0;
  const double ax = std::abs(x);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * ax + std::abs(*it);
  return acc;
}

double root_bound(const Polynomial& p) {
  const auto& c = p.coefficients();
  if (p.degree() < 1) return 0.0;
  const double lead = std::abs(c.back());
  double m = 0.0;
  for (std::size_t k = 0; k + 1 < c.size(); ++k) m = std::max(m, std::abs(c[k]) / lead);
  return 1.0 + m;
}

namespace {

double bisect(const Polynomial& p, double lo, double hi) {
  double flo = p(lo);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = p(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::vector<double> real_roots(const Polynomial& p, double lo, double hi, double tangencyTol) {
  std::vector<double> roots;
  const int deg = p.degree();
  if (deg < 1 || !(lo < hi)) return roots;
  if (deg == 1) {
    const auto& c = p.coefficients();
    const double r = -c[0] / c[1];
    if (r >= lo && r <= hi) roots.push_back(r);
    return roots;
  }

  std::vector<double> breaks{lo};
  const auto crit = real_roots(p.derivative(), lo, hi, tangencyTol);
  for (double c : crit)
    if (c > lo && c < hi) breaks.push_back(c);
  breaks.push_back(hi);

  auto is_zero = [&](double x) { return std::abs(p(x)) <= tangencyTol * std::max(1.0, p.magnitude_at(x)); };

  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double u = breaks[i];
    const double v = breaks[i + 1];
    const double fu = p(u);
    const double fv = p(v);
    if (is_zero(u)) roots.push_back(u);
    if (fu != 0.0 && fv != 0.0 && ((fu < 0.0) != (fv < 0.0)) && !is_zero(u) && !is_zero(v))
      roots.push_back(bisect(p, u, v));
  }
  if (is_zero(hi)) roots.push_back(hi);

  std::sort(roots.begin(), roots.end());
  std::vector<double> distinct;
  for (double r : roots)
    if (distinct.empty() || std::abs(r - distinct.back()) > 1e-12 * std::max(1.0, std::abs(r))) distinct.push_back(r);
  return distinct;
}

namespace {

Complex cubic_value(Complex z, Complex a2, Complex a1, Complex a0) { return ((z + a2) * z + a1) * z + a0; }

Complex cubic_slope(Complex z, Complex a2, Complex a1) { return (3.0 * z + 2.0 * a2) * z + a1; }

std::array<Complex, 2> quadratic_roots(Complex b, Complex c) {
  // z^2 + b z + c, cancellation-free form.
  Complex disc = b * b - 4.0 * c;
  if (std::abs(disc) <= 1e-12 * (std::norm(b) + std::abs(c))) disc = 0.0;
  Complex s = std::sqrt(disc);
  if ((std::conj(b) * s).real() < 0.0) s = -s;
  const Complex q = -0.5 * (b + s);
  if (q == Complex{0.0, 0.0}) return {Complex{0.0, 0.0}, Complex{0.0, 0.0}};
  Complex r1 = q;
  Complex r2 = c / q;
  // Real-coefficient quadratics with a repeated or real pair stay on the axis.
  if (b.imag() == 0.0 && c.imag() == 0.0 && disc.real() >= 0.0 && disc.imag() == 0.0) {
    r1.imag(0.0);
    r2.imag(0.0);
  }
  return {r1, r2};
}

}  // namespace

std::array<Complex, 3> cubic_roots(Complex a2, Complex a1, Complex a0) {
  const bool real = a2.imag() == 0.0 && a1.imag() == 0.0 && a0.imag() == 0.0;
  if (real) {
    const Polynomial p({a0.real(), a1.real(), a2.real(), 1.0});
    const double bound = root_bound(p);
    double lo = -bound, hi = bound;
    double r;
    if (p(lo) == 0.0) {
      r = lo;
    } else if (p(hi) == 0.0) {
      r = hi;
    } else {
      r = bisect(p, lo, hi);  // monic odd degree: p(-B) < 0 < p(B)
    }
    // z^3 + a2 z^2 + a1 z + a0 = (z - r)(z^2 + q1 z + q0)
    const double q1 = a2.real() + r;
    const double q0 = a1.real() + r * q1;
    const auto quad = quadratic_roots(q1, q0);
    return {Complex{r, 0.0}, quad[0], quad[1]};
  }

  std::array<Complex, 3> z{Complex{0.4, 0.9}, Complex{0.4, 0.9} * Complex{0.4, 0.9},
                           Complex{0.4, 0.9} * Complex{0.4, 0.9} * Complex{0.4, 0.9}};
  for (int it = 0; it < 500; ++it) {
    double change = 0.0;
    for (int i = 0; i < 3; ++i) {
      Complex denom{1.0, 0.0};
      for (int j = 0; j < 3; ++j)
        if (j != i) denom *= z[i] - z[j];
      const Complex step = cubic_value(z[i], a2, a1, a0) / denom;
      z[i] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-15) break;
  }
  for (auto& r : z) {
    for (int it = 0; it < 3; ++it) {
      const Complex d = cubic_slope(r, a2, a1);
      if (std::abs(d) == 0.0) break;
      r -= cubic_value(r, a2, a1, a0) / d;
    }
  }
  return z;
}

}  // namespace quadlab
