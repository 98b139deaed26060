#include "quadlab/text_output.hpp"

#include <array>
#include <cmath>
#include <cstdio>

namespace quadlab {

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::array<char, 40> buf{};
  std::snprintf(buf.data(), buf.size(), "%.9g", v);
  std::string s(buf.data());
  // The C locale is never changed by this program, but guard against a comma anyway.
  for (char& c : s)
    if (c == ',') c = '.';
  return s;
}

std::string fmt(Complex z) { return fmt(z.real()) + "," + fmt(z.imag()); }

std::string diagram_to_csv(const DiagramData& data) {
  std::string out = "param,state\n";
  for (const auto& row : data.rows)
    for (double s : row.states) out += fmt(row.param) + "," + fmt(s) + "\n";
  return out;
}

std::string cloud_to_csv(const PointCloud& cloud) {
  std::string out = "x,y\n";
  for (const auto& p : cloud.points) out += fmt(p.x) + "," + fmt(p.y) + "\n";
  return out;
}

std::string correlation_to_csv(const CorrelationSeries& series) {
  std::string out = "lag,value\n";
  for (std::size_t i = 0; i < series.lags.size(); ++i)
    out += std::to_string(series.lags[i]) + "," + fmt(series.values[i]) + "\n";
  return out;
}

std::string dichotomy_to_csv(const DichotomyScan& scan) {
  std::string out = "a,verdict,lyapunov,period\n";
  for (const auto& row : scan.rows) {
    out += fmt(row.a) + "," + std::string(to_string(row.verdict)) + "," + fmt(row.lyapunov) + ",";
    if (row.period) out += std::to_string(*row.period);
    out += "\n";
  }
  return out;
}

std::string windows_to_csv(const WindowReport& report) {
  std::string out = "kind,period,lo,hi\n";
  for (const auto& w : report.windows)
    out += "window," + std::to_string(w.period) + "," + fmt(w.lo) + "," + fmt(w.hi) + "\n";
  for (const auto& g : report.escapeGaps) out += "escape,," + fmt(g.lo) + "," + fmt(g.hi) + "\n";
  return out;
}

}  // namespace quadlab
