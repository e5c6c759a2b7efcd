#include "fnh/paths.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace fnh {

double zigzag_segment_end(std::size_t k) {
    if (k == 0) throw std::domain_error("zig-zag segment index must be >= 1");
    return 1.0 - std::ldexp(1.0, -static_cast<int>(k));
}

CoordSeq zigzag_eval(const CoordSeq& z, const CoordSeq& w, double t) {
    if (!(t >= 0.0) || !(t <= 1.0))
        throw std::domain_error("zig-zag parameter must lie in [0, 1]");
    if (t == 1.0) return w;
    const double u = 1.0 - t;
    // Segment k covers u in (2^-k, 2^(1-k)].
    const std::size_t k = static_cast<std::size_t>(std::floor(-std::log2(u))) + 1;
    double s = 2.0 - std::ldexp(u, static_cast<int>(k));
    s = std::min(std::max(s, 0.0), 1.0);
    CoordSeq out = z;
    for (std::size_t m = 1; m < k; ++m) {
        CoordPair wm = w.eval(m);
        out.set_override(m, wm);
    }
    CoordPair a = z.eval(k), b = w.eval(k);
    out.set_override(k, CoordPair{(1.0 - s) * a.length + s * b.length,
                                  (1.0 - s) * a.twist + s * b.twist});
    return out;
}

CoordSeq segment_eval(const CoordSeq& z, const CoordSeq& w, double s) {
    return lerp(z, w, s);
}

CoordSeq peripheral_scale_eval(const CoordSeq& z, double s) {
    return peripheral_scale(z, s);
}

CoordSeq PathSpec::eval(double t) const {
    if (!(t >= 0.0) || !(t <= 1.0)) throw std::domain_error("path parameter must lie in [0, 1]");
    if (reverse) t = 1.0 - t;
    switch (kind) {
        case Kind::ZIGZAG:
            return zigzag_eval(from, to, t);
        case Kind::SEGMENT:
            return segment_eval(from, to, t);
        case Kind::PERIPHERAL_SCALE: {
            if (!(scale_limit >= 1.0))
                throw std::domain_error("peripheral scale limit must be >= 1");
            // t = 1 reaches scale_limit (possibly inf).
            double s;
            if (std::isinf(scale_limit))
                s = t == 1.0 ? scale_limit : 1.0 / (1.0 - t);
            else
                s = 1.0 + t * (scale_limit - 1.0);
            return peripheral_scale_eval(from, s);
        }
        case Kind::CONCAT: {
            if (legs.empty()) throw std::invalid_argument("empty concatenation");
            const double share = 1.0 / static_cast<double>(legs.size());
            std::size_t i = std::min(static_cast<std::size_t>(t / share),
                                     legs.size() - 1);
            double local = (t - share * static_cast<double>(i)) / share;
            local = std::min(std::max(local, 0.0), 1.0);
            return legs[i].eval(local);
        }
    }
    throw std::logic_error("unreachable");
}

PathSpec metric_complete_connector(const CoordSeq& z, const CoordSeq& w) {
    const double inf = std::numeric_limits<double>::infinity();
    CoordSeq z_cusped = peripheral_scale(z, inf);
    CoordSeq w_cusped = peripheral_scale(w, inf);

    PathSpec shrink{PathSpec::Kind::PERIPHERAL_SCALE, z, {}, inf, false, {}};
    PathSpec across{PathSpec::Kind::ZIGZAG, z_cusped, w_cusped, 1.0, false, {}};
    // Third leg grows w's funnels back: the scaling path of w, time-reversed.
    PathSpec grow{PathSpec::Kind::PERIPHERAL_SCALE, w, {}, inf, true, {}};

    PathSpec out;
    out.kind = PathSpec::Kind::CONCAT;
    out.legs = {shrink, across, grow};
    return out;
}

NonconvexityReport nonconvexity_experiment(std::size_t N) {
    if (N < 10) throw std::domain_error("nonconvexity experiment requires N >= 10");
    NonconvexityReport rep;
    CoordSeq x0 = half_twist_flute(+1.0);
    CoordSeq x1 = half_twist_flute(-1.0);
    FluteStructure f0{x0}, f1{x1};
    CompletenessVerdict v0 = classify_completeness(f0);
    CompletenessVerdict v1 = classify_completeness(f1);
    if (v0.status != v1.status)
        throw std::logic_error("asymmetric endpoint classification");
    rep.endpoint_status = v0.status;
    rep.endpoint_citation = v0.citation;

    FluteStructure mid{segment_eval(x0, x1, 0.5)};
    rep.midpoint_status = classify_completeness(mid).status;

    SeriesSum s = orthodistance_series(mid, N);
    rep.partial_sum = s.partial_sum;
    rep.lower_tail = s.lower_tail;
    rep.upper_tail = s.upper_tail;
    rep.rows.reserve(N);
    for (const SeriesRow& r : s.rows) {
        const double dn = static_cast<double>(r.n);
        const double asym = 2.0 * (1.0 / (dn * dn) + 1.0 / ((dn + 1.0) * (dn + 1.0)));
        rep.rows.push_back(NonconvexityRow{r.n, r.term, r.cumulative, asym, r.term / asym});
    }
    return rep;
}

}  // namespace fnh
