// Deformation paths in coordinate space: zig-zag paths, straight segments,
// the peripheral scaling path, concatenations, and the non-convexity
// experiment (half-twist endpoints, zero-twist midpoint).
#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "fnh/coordseq.hpp"
#include "fnh/flutes.hpp"

namespace fnh {

// Zig-zag path from z to w: segment k reparameterized into
// [1 - 2^(1-k), 1 - 2^-k) moves coordinate k alone from z_k to w_k; at
// t = 1 the path closes at w.  Every sample with t < 1 differs from z in
// finitely many coordinates (it shares z's symbolic representation and
// carries only overrides).  Peripheral data rides along from z for t < 1.
CoordSeq zigzag_eval(const CoordSeq& z, const CoordSeq& w, double t);

// Segment endpoint of zig-zag segment k, t_k = 1 - 2^-k.
double zigzag_segment_end(std::size_t k);

// Straight segment (1-s) z + s w, componentwise over (length, twist).
CoordSeq segment_eval(const CoordSeq& z, const CoordSeq& w, double s);

// Peripheral lengths scaled to l'_n / s, s in [1, inf]; s = inf turns all
// funnels into cusps.
CoordSeq peripheral_scale_eval(const CoordSeq& z, double s);

struct PathSpec {
    enum class Kind { ZIGZAG, SEGMENT, PERIPHERAL_SCALE, CONCAT };
    Kind kind = Kind::SEGMENT;
    CoordSeq from;
    CoordSeq to;                 // unused for PERIPHERAL_SCALE
    double scale_limit = 2.0;    // PERIPHERAL_SCALE: s ranges over [1, scale_limit]
    bool reverse = false;        // run the leg backward in time
    std::vector<PathSpec> legs;  // CONCAT: evaluated in order, equal shares

    CoordSeq eval(double t) const;  // t in [0, 1]
};

// The connector used when endpoints disagree on which isolated ends are
// cusps: scale z's funnels down to cusps, zig-zag through the all-cusp
// structures, then grow w's funnels back.
PathSpec metric_complete_connector(const CoordSeq& z, const CoordSeq& w);

struct NonconvexityRow {
    std::size_t n = 0;
    double d_n = 0.0;
    double cumulative = 0.0;
    double asymptote = 0.0;  // 2 (1/n^2 + 1/(n+1)^2)
    double ratio = 0.0;      // d_n / asymptote
};

struct NonconvexityReport {
    Completeness endpoint_status = Completeness::INDETERMINATE;
    std::string endpoint_citation;
    Completeness midpoint_status = Completeness::INDETERMINATE;
    double partial_sum = 0.0;
    double lower_tail = 0.0;
    double upper_tail = 0.0;
    std::vector<NonconvexityRow> rows;
};

// The straight line between the two half-twist flutes leaves the complete
// structures: endpoints are complete (cited), the zero-twist midpoint's
// orthodistance series converges, so the midpoint is incomplete.  Rows
// compare each term with 2 (1/n^2 + 1/(n+1)^2).
NonconvexityReport nonconvexity_experiment(std::size_t N);

}  // namespace fnh
