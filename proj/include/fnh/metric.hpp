// The product metric on coordinate space,
//   d(z, w) = sum_i 2^-i [ |dl_i|/(1+|dl_i|) + |dt_i|/(1+|dt_i|) ],
// truncated at N terms with the certified tail bound 2^(-N+1).
#pragma once

#include <cstddef>
#include <vector>

#include "fnh/coordseq.hpp"

namespace fnh {

struct MetricValue {
    double value = 0.0;       // truncated sum, a lower bound for the metric
    double tail_bound = 0.0;  // 2^(-N+1); the metric lies in [value, value + tail_bound]
};

// Truncated product metric over the first N metric coordinates.
MetricValue fn_distance(const CoordSeq& z, const CoordSeq& w, std::size_t N);

// Weighted per-coordinate terms 2^-i [...] for i = 1..N.  The parallel
// version maps coordinates across threads; each entry is computed by the
// same expression, so the two agree bit-for-bit.
std::vector<double> metric_terms_serial(const CoordSeq& z, const CoordSeq& w, std::size_t N);
std::vector<double> metric_terms(const CoordSeq& z, const CoordSeq& w, std::size_t N);

}  // namespace fnh
