#include "fnh/hyptrig.hpp"

#include <cmath>
#include <sstream>

namespace fnh {

namespace {

// log(cosh x), safe for any magnitude.
double log_cosh(double x) {
    double a = std::abs(x);
    return a + std::log1p(std::exp(-2.0 * a)) - std::log(2.0);
}

// log(sinh x) for x > 0.
double log_sinh(double x) {
    return x + std::log1p(-std::exp(-2.0 * x)) - std::log(2.0);
}

double log_add_exp(double a, double b) {
    if (a < b) std::swap(a, b);
    return a + std::log1p(std::exp(b - a));
}

// d from t = cosh d - 1 given log t; stable for both tiny and huge t.
double acosh_from_log_excess(double log_t) {
    if (log_t > 700.0) return std::log(2.0) + log_t;  // cosh d ~ e^d / 2
    double t = std::exp(log_t);
    if (t == 0.0) {
        // d ~ sqrt(2 t); representable a while after t itself underflows.
        return std::exp(0.5 * (log_t + std::log(2.0)));
    }
    return std::log1p(t + std::sqrt(t * (t + 2.0)));
}

}  // namespace

void PantsGeom::validate() const {
    if (!(std::isfinite(l1) && std::isfinite(l2) && std::isfinite(lp)))
        throw std::domain_error("pants boundary lengths must be finite");
    if (l1 < 0.0 || l2 < 0.0 || lp < 0.0)
        throw std::domain_error("pants boundary lengths must be >= 0");
}

double collar_width(double x) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw std::domain_error("collar_width requires a finite x > 0");
    // Extended precision keeps the double result within a couple of ulps.
    long double xl = x;
    long double inv_sinh;
    if (x > 350.0) {
        long double e = std::exp(-xl);
        inv_sinh = 2.0L * e / (1.0L - e * e);
    } else {
        inv_sinh = 1.0L / std::sinh(xl);
    }
    return static_cast<double>(std::asinh(inv_sinh));
}

double orthodistance(const PantsGeom& p) {
    p.validate();
    if (!(p.l1 > 0.0) || !(p.l2 > 0.0))
        throw std::domain_error("orthodistance requires l1 > 0 and l2 > 0");
    const double a = 0.5 * p.l1, b = 0.5 * p.l2, c = 0.5 * p.lp;
    if (a < 30.0 && b < 30.0 && c < 30.0) {
        long double t = (std::cosh((long double)c) + std::cosh((long double)(a - b))) /
                        (std::sinh((long double)a) * std::sinh((long double)b));
        long double d = std::log1p(t + std::sqrt(t * (t + 2.0L)));
        return static_cast<double>(d);
    }
    double log_t = log_add_exp(log_cosh(c), log_cosh(a - b)) - log_sinh(a) - log_sinh(b);
    return acosh_from_log_excess(log_t);
}

OrthodistanceBounds orthodistance_bounds(const PantsGeom& p) {
    p.validate();
    if (!(p.l1 > 0.0) || !(p.l2 > 0.0))
        throw std::domain_error("orthodistance_bounds requires l1 > 0 and l2 > 0");
    double lower = collar_width(0.5 * p.l1) + collar_width(0.5 * p.l2);
    return OrthodistanceBounds{lower, lower + 0.5 * p.lp};
}

namespace {

// d/dc1 of  asinh(cosh c1 / sinh a) + asinh(cosh(c - c1) / sinh b):
//   sinh(c1)/sqrt(sinh^2 a + cosh^2 c1) - sinh(c2)/sqrt(sinh^2 b + cosh^2 c2).
// Strictly increasing in c1 (the objective is strictly convex).
long double split_derivative(long double c1, long double c, long double sinh_a,
                             long double sinh_b) {
    long double c2 = c - c1;
    long double ch1 = std::cosh(c1), ch2 = std::cosh(c2);
    long double g1 = std::sinh(c1) / std::sqrt(sinh_a * sinh_a + ch1 * ch1);
    long double g2 = std::sinh(c2) / std::sqrt(sinh_b * sinh_b + ch2 * ch2);
    return g1 - g2;
}

}  // namespace

PentagonSplit pentagon_split(const PantsGeom& p) {
    p.validate();
    if (!(p.l1 > 0.0) || !(p.l2 > 0.0))
        throw std::domain_error("pentagon_split requires l1 > 0 and l2 > 0");
    const double a = 0.5 * p.l1, b = 0.5 * p.l2, c = 0.5 * p.lp;
    if (c == 0.0) {
        // Only split of zero: both collar terms.
        return PentagonSplit{0.0, 0.0, collar_width(a), collar_width(b)};
    }
    const long double sinh_a = std::sinh((long double)a);
    const long double sinh_b = std::sinh((long double)b);
    long double lo = 0.0L, hi = c;
    long double flo = split_derivative(lo, c, sinh_a, sinh_b);
    long double fhi = split_derivative(hi, c, sinh_a, sinh_b);
    if (!(flo < 0.0L) || !(fhi > 0.0L) || std::isnan((double)flo) || std::isnan((double)fhi)) {
        std::ostringstream os;
        os << "pentagon_split: derivative does not bracket a root on [0, " << c
           << "]: f(0)=" << (double)flo << ", f(c)=" << (double)fhi;
        throw SplitSearchError(os.str());
    }
    for (int it = 0; it < 200 && (hi - lo) > 1e-18L * c; ++it) {
        long double mid = 0.5L * (lo + hi);
        long double f = split_derivative(mid, c, sinh_a, sinh_b);
        if (std::isnan((double)f)) {
            std::ostringstream os;
            os << "pentagon_split: derivative NaN at c1=" << (double)mid
               << " in bracket [" << (double)lo << ", " << (double)hi << "]";
            throw SplitSearchError(os.str());
        }
        (f < 0.0L ? lo : hi) = mid;
    }
    long double c1 = 0.5L * (lo + hi);
    long double c2 = c - c1;
    PentagonSplit s;
    s.c1 = static_cast<double>(c1);
    s.c2 = static_cast<double>(c2);
    s.d1 = static_cast<double>(std::asinh(std::cosh(c1) / sinh_a));
    s.d2 = static_cast<double>(std::asinh(std::cosh(c2) / sinh_b));
    return s;
}

}  // namespace fnh
