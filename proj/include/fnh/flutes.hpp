// Completeness and end-geometry classification for tight flute families.
//
// A flute structure is a coordinate sequence read as a chain of pants:
// pants n has boundary geodesics gamma_n, gamma_{n+1} of lengths l_n,
// l_{n+1} and an isolated planar end of length l'_n (0 = cusp).  The
// distance from gamma_1 out to gamma_{N+1} is the series of pants
// orthodistances, sandwiched termwise by the collar bounds
//   r(l_n/2) + r(l_{n+1}/2)  <=  d_n  <=  r(l_n/2) + r(l_{n+1}/2) + l'_n/2,
// which makes convergence of the series decidable exactly on the rate
// algebra and yields certified numeric tail bounds.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fnh/coordseq.hpp"
#include "fnh/hyptrig.hpp"

namespace fnh {

struct FluteStructure {
    CoordSeq coords;

    PantsGeom pants(std::size_t n) const;  // n >= 1
};

enum class Completeness {
    COMPLETE_BY_DIVERGENCE,
    INCOMPLETE_BY_CONVERGENCE,
    CITED_COMPLETE,
    INDETERMINATE,
};

std::string to_string(Completeness c);

struct SeriesRow {
    std::size_t n = 0;
    double term = 0.0;
    double cumulative = 0.0;
};

struct SeriesSum {
    double partial_sum = 0.0;
    // Certified bounds on the tail sum_{n>N} d_n: the full series lies in
    // [partial_sum + lower_tail, partial_sum + upper_tail].  upper_tail is
    // +inf when the series diverges or no certificate is available for the
    // length family (certificates cover constants plus a single growing
    // power or log term); lower_tail is always a valid lower bound and is
    // +inf when divergence is proven.
    double lower_tail = 0.0;
    double upper_tail = 0.0;
    std::vector<SeriesRow> rows;
};

// Partial sum of the pants orthodistances d_1 + ... + d_N for a zero-twist
// flute (the geodesic-distance reading needs straight seams).  Terms are
// evaluated by a parallel map and summed in index order, so results are
// bitwise reproducible.
SeriesSum orthodistance_series(const FluteStructure& f, std::size_t N);

struct CompletenessVerdict {
    Completeness status = Completeness::INDETERMINATE;
    std::string citation;  // set for CITED_COMPLETE
    std::vector<std::string> notes;
    std::vector<SeriesRow> evidence;
    double evidence_upper_tail = 0.0;
};

// Zero-twist flutes: decided by exact convergence classification of the
// sandwich series.  Half-twist flutes (all twists +-1/2) with logarithmic
// length growth A log(m+1), A >= 4: returned as CITED_COMPLETE, a distinct
// status so a literature citation is never dressed up as a computed fact.
// Everything else: INDETERMINATE.
CompletenessVerdict classify_completeness(const FluteStructure& f);

enum class EndGeometry { CUSP, FUNNEL, ESCAPING_GEODESICS, HALF_PLANE_BOUNDARY, UNKNOWN };

std::string to_string(EndGeometry e);

struct EndDesignator {
    // nullopt = the nonisolated end; n >= 1 = the isolated planar end of
    // pants n.
    std::optional<std::size_t> isolated_index;
};

EndGeometry classify_end(const FluteStructure& f, const EndDesignator& end);

// Exact convergence of sum_n exp(-L_n / 2) for a positive rate expression
// L (the collar series up to bounded factors).  Exposed for tests.
bool collar_series_converges(const RateExpr& lengths);

}  // namespace fnh
