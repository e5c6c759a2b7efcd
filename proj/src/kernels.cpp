#include "fnh/kernels.hpp"

#include <cstddef>

namespace fnh {

namespace {

template <class In, class Out, class Fn>
std::vector<Out> map_serial(const std::vector<In>& in, Fn fn) {
    std::vector<Out> out(in.size());
    for (std::size_t i = 0; i < in.size(); ++i) out[i] = fn(in[i]);
    return out;
}

template <class In, class Out, class Fn>
std::vector<Out> map_parallel(const std::vector<In>& in, Fn fn) {
    std::vector<Out> out(in.size());
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(in.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] = fn(in[static_cast<std::size_t>(i)]);
    return out;
}

}  // namespace

std::vector<double> batch_orthodistance_serial(const std::vector<PantsGeom>& ps) {
    return map_serial<PantsGeom, double>(ps, [](const PantsGeom& p) { return orthodistance(p); });
}

std::vector<double> batch_orthodistance(const std::vector<PantsGeom>& ps) {
    return map_parallel<PantsGeom, double>(ps, [](const PantsGeom& p) { return orthodistance(p); });
}

std::vector<OrthodistanceBounds> batch_bounds_serial(const std::vector<PantsGeom>& ps) {
    return map_serial<PantsGeom, OrthodistanceBounds>(
        ps, [](const PantsGeom& p) { return orthodistance_bounds(p); });
}

std::vector<OrthodistanceBounds> batch_bounds(const std::vector<PantsGeom>& ps) {
    return map_parallel<PantsGeom, OrthodistanceBounds>(
        ps, [](const PantsGeom& p) { return orthodistance_bounds(p); });
}

std::vector<double> batch_collar_width_serial(const std::vector<double>& xs) {
    return map_serial<double, double>(xs, [](double x) { return collar_width(x); });
}

std::vector<double> batch_collar_width(const std::vector<double>& xs) {
    return map_parallel<double, double>(xs, [](double x) { return collar_width(x); });
}

std::vector<PentagonSplit> batch_pentagon_split_serial(const std::vector<PantsGeom>& ps) {
    return map_serial<PantsGeom, PentagonSplit>(
        ps, [](const PantsGeom& p) { return pentagon_split(p); });
}

std::vector<PentagonSplit> batch_pentagon_split(const std::vector<PantsGeom>& ps) {
    return map_parallel<PantsGeom, PentagonSplit>(
        ps, [](const PantsGeom& p) { return pentagon_split(p); });
}

}  // namespace fnh
