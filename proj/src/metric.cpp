#include "fnh/metric.hpp"

#include <cmath>
#include <stdexcept>

namespace fnh {

namespace {

double metric_term(const CoordSeq& z, const CoordSeq& w, std::size_t i) {
    CoordPair a = z.metric_coordinate(i);
    CoordPair b = w.metric_coordinate(i);
    double dl = std::abs(a.length - b.length);
    double dt = std::abs(a.twist - b.twist);
    return std::ldexp(dl / (1.0 + dl) + dt / (1.0 + dt), -static_cast<int>(i));
}

void check_compatible(const CoordSeq& z, const CoordSeq& w, std::size_t N) {
    if (N < 1) throw std::domain_error("truncation index must be >= 1");
    if (z.has_peripheral() != w.has_peripheral())
        throw std::invalid_argument("metric requires matching peripheral layout");
}

}  // namespace

std::vector<double> metric_terms_serial(const CoordSeq& z, const CoordSeq& w, std::size_t N) {
    check_compatible(z, w, N);
    std::vector<double> terms(N);
    for (std::size_t i = 0; i < N; ++i) terms[i] = metric_term(z, w, i + 1);
    return terms;
}

std::vector<double> metric_terms(const CoordSeq& z, const CoordSeq& w, std::size_t N) {
    check_compatible(z, w, N);
    std::vector<double> terms(N);
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(N);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i)
        terms[static_cast<std::size_t>(i)] = metric_term(z, w, static_cast<std::size_t>(i) + 1);
    return terms;
}

MetricValue fn_distance(const CoordSeq& z, const CoordSeq& w, std::size_t N) {
    std::vector<double> terms = metric_terms(z, w, N);
    double sum = 0.0;
    for (double t : terms) sum += t;  // fixed order: bitwise reproducible
    return MetricValue{sum, std::ldexp(1.0, -static_cast<int>(N) + 1)};
}

}  // namespace fnh
