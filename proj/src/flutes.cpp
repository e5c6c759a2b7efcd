#include "fnh/flutes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace fnh {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// r(x) <= kUpper * e^-x and r(x) >= kLower * e^-x for x >= 3, from
// 1/sinh x = 2 e^-x / (1 - e^-2x) and the alternating arcsinh series.
const double kUpper = 2.0 / (1.0 - std::exp(-6.0));
const double kLower = 2.0 * (1.0 - (2.0 / 3.0) * std::exp(-6.0));

// sum_{n >= M} (n+1)^-beta, bracketed by integrals (beta > 1).
double power_tail_upper(double M, double beta) {
    return std::pow(M + 1.0, -beta) + std::pow(M + 1.0, 1.0 - beta) / (beta - 1.0);
}
double power_tail_lower(double M, double beta) {
    return std::pow(M + 1.0, 1.0 - beta) / (beta - 1.0);
}

struct LengthShape {
    bool usable = false;       // positive, no round_up
    double c0 = 0.0;           // constant part
    std::vector<RateTerm> growing;
    std::vector<RateTerm> decaying;
};

LengthShape length_shape(const RateExpr& lengths) {
    LengthShape s;
    if (!lengths.all_positive() || lengths.has_round_up()) return s;
    s.usable = true;
    for (const RateTerm& t : lengths.terms()) {
        GrowthKey k = growth_key(t);
        if (k.grows())
            s.growing.push_back(t);
        else if (k.decays())
            s.decaying.push_back(t);
        else
            s.c0 += t.coef;
    }
    return s;
}

}  // namespace

bool collar_series_converges(const RateExpr& lengths) {
    LengthShape s = length_shape(lengths);
    if (!s.usable)
        throw std::invalid_argument("collar series needs positive smooth length terms");
    if (s.growing.empty()) return false;  // lengths bounded, collar terms bounded below
    double log_amp = 0.0;      // total amplitude of pure-log terms (p = 0, q = 1)
    bool super_log = false;    // a term growing strictly faster than log
    bool sub_log = false;      // a growing term slower than log (0 < q < 1, p = 0)
    for (const RateTerm& t : s.growing) {
        if (t.rho > 1.0 || t.p < 0.0) {
            super_log = true;
        } else if (t.q > 1.0) {
            super_log = true;
        } else if (t.q == 1.0) {
            log_amp += t.coef;
        } else {
            sub_log = true;
        }
    }
    // exp(-L/2) against the scale of powers of n: any super-log term wins;
    // pure log A log(n+1) gives (n+1)^(-A/2); sub-log growth on top of the
    // harmonic boundary A = 2 tips it to convergent.
    if (super_log) return true;
    if (log_amp > 2.0) return true;
    if (log_amp == 2.0 && sub_log) return true;
    return false;
}

PantsGeom FluteStructure::pants(std::size_t n) const {
    if (n == 0) throw std::domain_error("pants index must be >= 1");
    return PantsGeom{coords.eval(n).length, coords.eval(n + 1).length,
                     coords.peripheral_length(n)};
}

namespace {

struct TailBounds {
    double lower = 0.0;
    double upper = kInf;
};

// Certified bounds on sum_{n > from} r(l_n / 2).  Certificates cover a
// constant part plus one growing log term (p=0, q=1) or one growing pure
// power term (p<0, q=0); other convergent families get the trivial bounds
// [0, +inf).  Finitely many leading terms (overrides or small indices) are
// evaluated exactly before the analytic bound takes over.
TailBounds collar_tail(const CoordSeq& coords, std::size_t from) {
    TailBounds out;
    if (!collar_series_converges(coords.lengths())) {
        out.lower = kInf;
        return out;
    }
    LengthShape s = length_shape(coords.lengths());
    if (s.growing.size() != 1) return out;  // convergent, no certificate
    const RateTerm g = s.growing[0];
    const bool log_type = (g.rho == 1.0 && g.p == 0.0 && g.q == 1.0);
    const bool pow_type = (g.rho == 1.0 && g.p < 0.0 && g.q == 0.0);
    if (!log_type && !pow_type) return out;
    if (log_type && !(g.coef > 2.0)) return out;  // boundary needs the sub-log help

    std::size_t M = from + 1;
    for (const auto& [idx, v] : coords.overrides()) M = std::max(M, idx + 1);
    const double w = 0.5 * g.coef;
    const double expo = pow_type ? -g.p : 0.0;
    auto analytic_ok = [&](std::size_t n) {
        double L = coords.lengths().eval(n);
        if (L < 6.0) return false;
        if (pow_type) {
            double z = w * std::pow((double)n, expo);
            double a = 1.0 / expo;
            if (z < 1.0 || z < 2.0 * (a - 1.0)) return false;
        }
        return true;
    };
    while (M < from + 2000000 && !analytic_ok(M)) ++M;
    if (!analytic_ok(M)) return out;

    double prefix = 0.0;
    for (std::size_t n = from + 1; n < M; ++n)
        prefix += collar_width(0.5 * coords.eval(n).length);

    double up, lo;
    if (log_type) {
        const double beta = 0.5 * g.coef;
        const double amp = std::exp(-0.5 * s.c0);
        up = kUpper * amp * power_tail_upper((double)M, beta);
        lo = s.decaying.empty() ? kLower * amp * power_tail_lower((double)M, beta) : 0.0;
    } else {
        const double z = w * std::pow((double)M, expo);
        const double integral = (2.0 / (expo * w)) * std::pow((double)M, 1.0 - expo) * std::exp(-z);
        up = kUpper * std::exp(-0.5 * s.c0) * (std::exp(-z) + integral);
        lo = 0.0;
    }
    out.lower = prefix + lo;
    out.upper = prefix + up;
    return out;
}

// Certified bounds on sum_{n > from} l'_n (peripheral lengths, no /2).
TailBounds peripheral_tail(const CoordSeq& coords, std::size_t from) {
    TailBounds out;
    out.upper = 0.0;
    if (!coords.has_peripheral()) return out;
    if (const auto* list = std::get_if<std::vector<double>>(&*coords.peripheral())) {
        double rest = 0.0;
        for (std::size_t n = from + 1; n <= list->size(); ++n) rest += (*list)[n - 1];
        out.lower = out.upper = rest;
        return out;
    }
    const RateExpr& expr = std::get<RateExpr>(*coords.peripheral());
    if (expr.is_zero()) return out;
    if (!expr.all_positive() || expr.has_round_up()) {
        out.upper = kInf;
        return out;
    }
    double lower = 0.0, upper = 0.0;
    for (const RateTerm& t : expr.terms()) {
        const double A = t.coef;
        if (t.rho != 1.0) {
            if (t.rho >= 1.0 || t.p != 0.0 || t.q != 0.0) return TailBounds{0.0, kInf};
            // exact geometric tail
            double tail = A * std::pow(t.rho, (double)(from + 1)) / (1.0 - t.rho);
            lower += tail;
            upper += tail;
        } else if (t.p > 1.0) {
            const double M = (double)(from + 1);
            if (t.q == 0.0) {
                upper += A * (std::pow(M, -t.p) + std::pow(M, 1.0 - t.p) / (t.p - 1.0));
                lower += A * std::pow(M + 1.0, 1.0 - t.p) / (t.p - 1.0);
            } else if (t.q < 0.0) {
                double lg = std::pow(std::log(M + 1.0), t.q);
                upper += A * lg * (std::pow(M, -t.p) + std::pow(M, 1.0 - t.p) / (t.p - 1.0));
            } else {
                // log(n+1)^q <= alpha^-q (n+1)^(alpha q) with alpha = (p-1)/(2q)
                const double alpha = (t.p - 1.0) / (2.0 * t.q);
                const double beta = 0.5 * (t.p + 1.0);
                const double C = A * std::pow(alpha, -t.q) * std::pow(2.0, alpha * t.q);
                upper += C * (std::pow(M, -beta) + std::pow(M, 1.0 - beta) / (beta - 1.0));
            }
        } else if (t.p == 1.0 && t.q < -1.0) {
            const double M = (double)(from + 1);
            upper += A * (std::pow(std::log(M + 1.0), t.q) / M +
                          std::pow(std::log(M), t.q + 1.0) / (-t.q - 1.0));
        } else {
            return TailBounds{0.0, kInf};  // divergent
        }
    }
    out.lower = lower;
    out.upper = upper;
    return out;
}

bool zero_twist(const CoordSeq& c) {
    if (!c.twists().is_zero()) return false;
    return std::all_of(c.overrides().begin(), c.overrides().end(),
                       [](const auto& kv) { return kv.second.twist == 0.0; });
}

bool half_twist(const CoordSeq& c) {
    if (!c.twists().is_constant() || std::abs(c.twists().constant_value()) != 0.5)
        return false;
    return std::all_of(c.overrides().begin(), c.overrides().end(),
                       [](const auto& kv) { return std::abs(kv.second.twist) == 0.5; });
}

std::vector<double> series_terms(const FluteStructure& f, std::size_t N) {
    std::vector<double> terms(N);
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(N);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i)
        terms[static_cast<std::size_t>(i)] = orthodistance(f.pants(static_cast<std::size_t>(i) + 1));
    return terms;
}

}  // namespace

SeriesSum orthodistance_series(const FluteStructure& f, std::size_t N) {
    if (N < 2) throw std::domain_error("orthodistance_series requires N >= 2");
    if (!zero_twist(f.coords))
        throw std::invalid_argument(
            "orthodistance_series requires a zero-twist flute (the geodesic-distance "
            "reading of the series needs straight seams)");
    SeriesSum out;
    std::vector<double> terms = series_terms(f, N);
    out.rows.reserve(N);
    double cum = 0.0;
    for (std::size_t n = 1; n <= N; ++n) {
        cum += terms[n - 1];
        out.rows.push_back(SeriesRow{n, terms[n - 1], cum});
    }
    out.partial_sum = cum;
    // d_n is sandwiched by r(l_n/2) + r(l_{n+1}/2) [+ l'_n/2], so the tail
    // over n > N splits into two collar tails and half a peripheral tail.
    TailBounds r1 = collar_tail(f.coords, N);
    TailBounds r2 = collar_tail(f.coords, N + 1);
    TailBounds pe = peripheral_tail(f.coords, N);
    out.lower_tail = r1.lower + r2.lower;
    out.upper_tail = r1.upper + r2.upper + 0.5 * pe.upper;
    return out;
}

std::string to_string(Completeness c) {
    switch (c) {
        case Completeness::COMPLETE_BY_DIVERGENCE: return "COMPLETE_BY_DIVERGENCE";
        case Completeness::INCOMPLETE_BY_CONVERGENCE: return "INCOMPLETE_BY_CONVERGENCE";
        case Completeness::CITED_COMPLETE: return "CITED_COMPLETE";
        case Completeness::INDETERMINATE: return "INDETERMINATE";
    }
    return "?";
}

std::string to_string(EndGeometry e) {
    switch (e) {
        case EndGeometry::CUSP: return "CUSP";
        case EndGeometry::FUNNEL: return "FUNNEL";
        case EndGeometry::ESCAPING_GEODESICS: return "ESCAPING_GEODESICS";
        case EndGeometry::HALF_PLANE_BOUNDARY: return "HALF_PLANE_BOUNDARY";
        case EndGeometry::UNKNOWN: return "UNKNOWN";
    }
    return "?";
}

CompletenessVerdict classify_completeness(const FluteStructure& f) {
    CompletenessVerdict v;
    if (zero_twist(f.coords)) {
        const bool r_conv = collar_series_converges(f.coords.lengths());
        std::optional<bool> peri_conv;
        if (!f.coords.has_peripheral()) {
            peri_conv = true;
        } else if (std::holds_alternative<std::vector<double>>(*f.coords.peripheral())) {
            peri_conv = true;  // finite list, finite sum
        } else {
            peri_conv = std::get<RateExpr>(*f.coords.peripheral()).series_converges();
        }
        std::ostringstream note;
        note << "zero-twist flute: collar series "
             << (r_conv ? "converges" : "diverges") << ", peripheral sum "
             << (peri_conv.has_value() ? (*peri_conv ? "converges" : "diverges")
                                       : "undecided");
        v.notes.push_back(note.str());
        if (!r_conv) {
            v.status = Completeness::COMPLETE_BY_DIVERGENCE;
        } else if (peri_conv.value_or(false)) {
            v.status = Completeness::INCOMPLETE_BY_CONVERGENCE;
        } else {
            v.status = Completeness::INDETERMINATE;
        }
        SeriesSum s = orthodistance_series(f, 64);
        v.evidence = std::move(s.rows);
        v.evidence_upper_tail = s.upper_tail;
        return v;
    }
    if (half_twist(f.coords)) {
        LengthShape s = length_shape(f.coords.lengths());
        const bool log_growth = s.usable && s.growing.size() == 1 && s.decaying.empty() &&
                                s.growing[0].rho == 1.0 && s.growing[0].p == 0.0 &&
                                s.growing[0].q == 1.0 && s.growing[0].coef >= 4.0;
        if (log_growth) {
            v.status = Completeness::CITED_COMPLETE;
            v.citation = "BHS Thm 9.7";
            v.notes.push_back(
                "half-twist flute with lengths >= 4 log(m+1): completeness of the "
                "nonisolated end is cited, not recomputed");
            return v;
        }
        v.status = Completeness::INDETERMINATE;
        v.notes.push_back("half-twist flute outside the cited length family");
        return v;
    }
    v.status = Completeness::INDETERMINATE;
    v.notes.push_back("twist pattern outside the decidable fragment");
    return v;
}

EndGeometry classify_end(const FluteStructure& f, const EndDesignator& end) {
    if (end.isolated_index) {
        const std::size_t n = *end.isolated_index;
        if (n == 0) throw std::domain_error("isolated end index must be >= 1");
        return f.coords.peripheral_length(n) == 0.0 ? EndGeometry::CUSP : EndGeometry::FUNNEL;
    }
    switch (classify_completeness(f).status) {
        case Completeness::COMPLETE_BY_DIVERGENCE:
        case Completeness::CITED_COMPLETE:
            return EndGeometry::ESCAPING_GEODESICS;
        case Completeness::INCOMPLETE_BY_CONVERGENCE:
            return EndGeometry::HALF_PLANE_BOUNDARY;
        case Completeness::INDETERMINATE:
            return EndGeometry::UNKNOWN;
    }
    return EndGeometry::UNKNOWN;
}

}  // namespace fnh
