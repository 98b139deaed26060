#pragma once

#include <string>

#include "quadlab/map_kernel.hpp"
#include "quadlab/stat_lab.hpp"
#include "quadlab/sweep.hpp"

namespace quadlab {

/// printf("%.9g"), independent of the global locale.
std::string fmt(double v);
/// "re,im" with both parts through fmt.
std::string fmt(Complex z);

/// param,state rows (one per retained state); escaped rows emit nothing.
std::string diagram_to_csv(const DiagramData& data);
/// x,y rows.
std::string cloud_to_csv(const PointCloud& cloud);
/// lag,value rows.
std::string correlation_to_csv(const CorrelationSeries& series);
/// a,verdict,lyapunov,period rows; period is empty when undefined.
std::string dichotomy_to_csv(const DichotomyScan& scan);
/// kind,period,lo,hi rows for windows and escape gaps.
std::string windows_to_csv(const WindowReport& report);

}  // namespace quadlab
