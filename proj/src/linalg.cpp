#include "quadlab/linalg.hpp"

#include <utility>

namespace quadlab {

Eigen2 eigenvalues(const Mat2& m) {
  Eigen2 out;
  // Triangular (in particular diagonal) products keep their exact entries.
  if (m.a12 == 0.0 || m.a21 == 0.0) {
    out.first = m.a11;
    out.second = m.a22;
  } else {
    const double half_tr = 0.5 * m.trace();
    const double disc = half_tr * half_tr - m.det();
    if (disc >= 0.0) {
      const double s = std::sqrt(disc);
      // Avoid cancellation: compute the larger root directly, the other from the product.
      const double big = half_tr >= 0.0 ? half_tr + s : half_tr - s;
      out.first = big;
      out.second = big != 0.0 ? m.det() / big : 0.0;
    } else {
      out.first = half_tr;
      out.second = half_tr;
      out.imag = std::sqrt(-disc);
      out.complexPair = true;
      return out;
    }
  }
  if (std::abs(out.second) > std::abs(out.first)) std::swap(out.first, out.second);
  return out;
}

}  // namespace quadlab
