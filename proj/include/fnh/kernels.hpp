// Batch kernels over independent sample points.  Each has a serial
// reference and an OpenMP version; the parallel versions are pure maps
// (any reductions happen serially afterwards), so the two agree
// bit-for-bit and the tests assert exact equality.
#pragma once

#include <vector>

#include "fnh/hyptrig.hpp"

namespace fnh {

std::vector<double> batch_orthodistance_serial(const std::vector<PantsGeom>& ps);
std::vector<double> batch_orthodistance(const std::vector<PantsGeom>& ps);

std::vector<OrthodistanceBounds> batch_bounds_serial(const std::vector<PantsGeom>& ps);
std::vector<OrthodistanceBounds> batch_bounds(const std::vector<PantsGeom>& ps);

std::vector<double> batch_collar_width_serial(const std::vector<double>& xs);
std::vector<double> batch_collar_width(const std::vector<double>& xs);

std::vector<PentagonSplit> batch_pentagon_split_serial(const std::vector<PantsGeom>& ps);
std::vector<PentagonSplit> batch_pentagon_split(const std::vector<PantsGeom>& ps);

}  // namespace fnh
