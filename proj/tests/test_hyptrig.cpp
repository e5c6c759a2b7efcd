#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cfloat>
#include <cmath>

#include "fnh/hyptrig.hpp"
#include "fnh/kernels.hpp"
#include "test_util.hpp"

using namespace fnh;
using fnh_test::Rng;
using fnh_test::rel_err;

namespace {

// Independent route for r(x): with s = sinh x and u = 1/(sqrt(1+s^2)+s),
// r = log(1 + (1+u)/s), free of the cancellation the naive
// log((1+sqrt(1+s^2))/s) suffers at large x.
long double collar_reference(long double x) {
    long double s = std::sinh(x);
    long double u = 1.0L / (std::sqrt(1.0L + s * s) + s);
    return std::log1p((1.0L + u) / s);
}

// Hexagon rule evaluated naively in extended precision.  Trustworthy only
// while acosh is well-conditioned, i.e. away from d ~ 0.
long double hexagon_reference(long double l1, long double l2, long double lp) {
    long double a = l1 / 2, b = l2 / 2, c = lp / 2;
    long double ch = (std::cosh(c) + std::cosh(a) * std::cosh(b)) /
                     (std::sinh(a) * std::sinh(b));
    return std::acosh(ch);
}

// Third route to the split: the foot satisfies
// sinh(c1) cosh(b) = sinh(c2) cosh(a); solve by bisection.
double foot_identity_split(double a, double b, double c) {
    double lo = 0.0, hi = c;
    auto g = [&](double c1) {
        return std::sinh(c1) * std::cosh(b) - std::sinh(c - c1) * std::cosh(a);
    };
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        (g(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("collar width fixed point and limits") {
    const double x0 = std::asinh(1.0);
    CHECK(rel_err(collar_width(x0), x0) <= 4 * DBL_EPSILON);

    // r(x) ~ 2 e^-x for large x.
    for (double x : {20.0, 40.0}) {
        double ratio = collar_width(x) / (2.0 * std::exp(-x));
        CHECK(ratio == doctest::Approx(1.0).epsilon(1e-8));
    }

    // r(2 log 10) is within 5% of 2/100.
    CHECK(rel_err(collar_width(2.0 * std::log(10.0)), 0.02) < 0.05);
}

TEST_CASE("collar width matches the reference route to a few ulps") {
    for (double x = 0.01; x < 300.0; x *= 1.37) {
        double want = static_cast<double>(collar_reference((long double)x));
        CHECK(rel_err(collar_width(x), want) <= 4 * DBL_EPSILON);
    }
    // Large-argument branch.
    for (double x : {400.0, 500.0, 600.0}) {
        double want = static_cast<double>(2.0L * std::exp((long double)-x));
        CHECK(rel_err(collar_width(x), want) <= 1e-12);
    }
}

TEST_CASE("collar width is strictly decreasing and rejects bad input") {
    double prev = collar_width(1e-3);
    for (double x = 2e-3; x < 500.0; x *= 1.5) {
        double cur = collar_width(x);
        CHECK(cur < prev);
        prev = cur;
    }
    CHECK_THROWS_AS(collar_width(0.0), std::domain_error);
    CHECK_THROWS_AS(collar_width(-1.0), std::domain_error);
    CHECK_THROWS_AS(collar_width(std::nan("")), std::domain_error);
    CHECK_THROWS_AS(collar_width(INFINITY), std::domain_error);
}

TEST_CASE("orthodistance symmetric closed form") {
    const double l = 2.0 * std::acosh(2.0);
    double d = orthodistance(PantsGeom{l, l, l});
    CHECK(d == doctest::Approx(std::acosh(2.0)).epsilon(1e-14));
}

TEST_CASE("orthodistance cusp identity d = 2 r(a)") {
    for (double a : {1.0, 2.0, 5.0}) {
        double d = orthodistance(PantsGeom{2.0 * a, 2.0 * a, 0.0});
        CHECK(rel_err(d, 2.0 * collar_width(a)) < 1e-13);
    }
}

TEST_CASE("orthodistance agrees with the naive hexagon rule") {
    Rng rng(20240811);
    int checked = 0;
    for (int i = 0; i < 4000; ++i) {
        double l1 = rng.uniform(0.01, 60.0);
        double l2 = rng.uniform(0.01, 60.0);
        double lp = rng.uniform(0.0, 60.0);
        double want = static_cast<double>(hexagon_reference(l1, l2, lp));
        if (want < 0.01) continue;  // acosh ill-conditioned in the reference
        ++checked;
        CHECK(rel_err(orthodistance(PantsGeom{l1, l2, lp}), want) < 1e-13);
    }
    CHECK(checked > 1500);
    // Log-domain branch (arguments beyond 30): stable form in extended
    // precision, since the naive acosh is useless for near-touching seams.
    auto stable_reference = [](double l1, double l2, double lp) {
        long double a = l1 / 2.0L, b = l2 / 2.0L, c = lp / 2.0L;
        long double t = (std::cosh(c) + std::cosh(a - b)) /
                        (std::sinh(a) * std::sinh(b));
        return static_cast<double>(std::log1p(t + std::sqrt(t * (t + 2.0L))));
    };
    for (double l : {70.0, 120.0, 300.0}) {
        double want = stable_reference(l, l, 10.0);
        CHECK(rel_err(orthodistance(PantsGeom{l, l, 10.0}), want) < 1e-12);
        double mixed = stable_reference(l, 3.0, 1.0);
        CHECK(rel_err(orthodistance(PantsGeom{l, 3.0, 1.0}), mixed) < 1e-12);
    }
}

TEST_CASE("collar sandwich over random pants") {
    Rng rng(7);
    for (int i = 0; i < 10000; ++i) {
        PantsGeom p{rng.uniform(0.01, 20.0), rng.uniform(0.01, 20.0), rng.uniform(0.01, 20.0)};
        double d = orthodistance(p);
        OrthodistanceBounds b = orthodistance_bounds(p);
        CHECK(b.lower - 1e-9 <= d);
        CHECK(d <= b.upper + 1e-9);
        CHECK(b.upper - b.lower == doctest::Approx(p.lp / 2).epsilon(1e-12));
    }
}

TEST_CASE("orthodistance bounds meet at a cusp") {
    PantsGeom p{2.0, 3.0, 0.0};
    OrthodistanceBounds b = orthodistance_bounds(p);
    CHECK(b.upper == b.lower);
    CHECK(std::abs(orthodistance(p) - b.lower) <= 1e-9);

    OrthodistanceBounds wide = orthodistance_bounds(PantsGeom{2.0, 2.0, 6.0});
    CHECK(wide.upper - wide.lower == doctest::Approx(3.0));
}

TEST_CASE("orthodistance monotone in each boundary length") {
    const double h = 1e-6;
    Rng rng(99);
    for (int i = 0; i < 200; ++i) {
        double l1 = rng.uniform(0.1, 10.0), l2 = rng.uniform(0.1, 10.0), lp = rng.uniform(0.1, 10.0);
        double d = orthodistance(PantsGeom{l1, l2, lp});
        CHECK(orthodistance(PantsGeom{l1, l2, lp + h}) > d);
        CHECK(orthodistance(PantsGeom{l1 + h, l2, lp}) < d);
        CHECK(orthodistance(PantsGeom{l1, l2 + h, lp}) < d);
    }
}

TEST_CASE("orthodistance asymptotics along log-length pants") {
    // l1 = l2 = 4 log(n+1), lp = 0: terms settle onto 2(1/n^2 + 1/(n+1)^2).
    auto ratio = [](std::size_t n) {
        double l = 4.0 * std::log(static_cast<double>(n) + 1.0);
        double d = orthodistance(PantsGeom{l, l, 0.0});
        double asym = 2.0 * (1.0 / double(n) / double(n) + 1.0 / double(n + 1) / double(n + 1));
        return d / asym;
    };
    CHECK(std::abs(ratio(100) - 1.0) < 0.10);
    CHECK(std::abs(ratio(1000) - 1.0) < 0.02);
}

TEST_CASE("orthodistance continuous as lp -> 0") {
    double at_zero = orthodistance(PantsGeom{3.0, 4.0, 0.0});
    double prev = orthodistance(PantsGeom{3.0, 4.0, 1.0});
    for (double lp = 0.1; lp > 1e-7; lp *= 0.1) {
        double cur = orthodistance(PantsGeom{3.0, 4.0, lp});
        CHECK(cur < prev);
        prev = cur;
    }
    CHECK(orthodistance(PantsGeom{3.0, 4.0, 1e-12}) ==
          doctest::Approx(at_zero).epsilon(1e-12));
}

TEST_CASE("orthodistance rejects degenerate boundaries") {
    CHECK_THROWS_AS(orthodistance(PantsGeom{0.0, 1.0, 1.0}), std::domain_error);
    CHECK_THROWS_AS(orthodistance(PantsGeom{1.0, 0.0, 1.0}), std::domain_error);
    CHECK_THROWS_AS(orthodistance(PantsGeom{-1.0, 1.0, 1.0}), std::domain_error);
    CHECK_THROWS_AS(orthodistance(PantsGeom{1.0, 1.0, INFINITY}), std::domain_error);
}

TEST_CASE("pentagon split: symmetric case") {
    const double l = 2.0 * std::acosh(2.0);
    PentagonSplit s = pentagon_split(PantsGeom{l, l, l});
    CHECK(s.c1 == doctest::Approx(s.c2).epsilon(1e-12));
    CHECK(s.c1 == doctest::Approx(l / 4).epsilon(1e-12));
    CHECK(s.d1 == doctest::Approx(std::asinh(1.0 / std::sqrt(2.0))).epsilon(1e-12));
    CHECK(s.d1 + s.d2 == doctest::Approx(orthodistance(PantsGeom{l, l, l})).epsilon(1e-12));
}

TEST_CASE("pentagon split: cusp case") {
    PentagonSplit s = pentagon_split(PantsGeom{2.0, 5.0, 0.0});
    CHECK(s.c1 == 0.0);
    CHECK(s.c2 == 0.0);
    CHECK(s.d1 == doctest::Approx(collar_width(1.0)).epsilon(1e-14));
    CHECK(s.d2 == doctest::Approx(collar_width(2.5)).epsilon(1e-14));
}

TEST_CASE("pentagon split minimization reproduces the hexagon rule") {
    Rng rng(424242);
    for (int i = 0; i < 1000; ++i) {
        PantsGeom p{rng.uniform(0.01, 20.0), rng.uniform(0.01, 20.0), rng.uniform(0.01, 20.0)};
        PentagonSplit s = pentagon_split(p);
        CHECK(s.c1 + s.c2 == doctest::Approx(p.lp / 2).epsilon(1e-12));
        CHECK(std::abs(s.d1 + s.d2 - orthodistance(p)) <= 1e-9);
    }
}

TEST_CASE("pentagon split sits at the foot identity") {
    // Third route: at the minimizing split sinh(c1) cosh(b) = sinh(c2) cosh(a).
    Rng rng(31337);
    for (int i = 0; i < 200; ++i) {
        double l1 = rng.uniform(0.1, 15.0), l2 = rng.uniform(0.1, 15.0), lp = rng.uniform(0.1, 15.0);
        double a = l1 / 2, b = l2 / 2, c = lp / 2;
        PentagonSplit s = pentagon_split(PantsGeom{l1, l2, lp});
        double c1_foot = foot_identity_split(a, b, c);
        CHECK(s.c1 == doctest::Approx(c1_foot).epsilon(1e-8));
        double d_foot = std::asinh(std::cosh(c1_foot) / std::sinh(a)) +
                        std::asinh(std::cosh(c - c1_foot) / std::sinh(b));
        CHECK(std::abs(d_foot - orthodistance(PantsGeom{l1, l2, lp})) <= 1e-9);
    }
}

TEST_CASE("pentagon split is a genuine minimum") {
    Rng rng(5150);
    for (int i = 0; i < 100; ++i) {
        PantsGeom p{rng.uniform(0.1, 10.0), rng.uniform(0.1, 10.0), rng.uniform(0.5, 10.0)};
        double a = p.l1 / 2, b = p.l2 / 2, c = p.lp / 2;
        PentagonSplit s = pentagon_split(p);
        auto objective = [&](double c1) {
            return std::asinh(std::cosh(c1) / std::sinh(a)) +
                   std::asinh(std::cosh(c - c1) / std::sinh(b));
        };
        double at_min = objective(s.c1);
        for (double delta : {1e-3, 1e-2, 1e-1}) {
            if (s.c1 + delta <= c) CHECK(objective(s.c1 + delta) >= at_min);
            if (s.c1 - delta >= 0) CHECK(objective(s.c1 - delta) >= at_min);
        }
    }
}

TEST_CASE("parallel kernels agree with the serial reference exactly") {
    Rng rng(808);
    std::vector<PantsGeom> ps;
    std::vector<double> xs;
    for (int i = 0; i < 5000; ++i) {
        ps.push_back(PantsGeom{rng.uniform(0.01, 30.0), rng.uniform(0.01, 30.0),
                               rng.uniform(0.0, 30.0)});
        xs.push_back(rng.uniform(0.001, 100.0));
    }
    CHECK(batch_orthodistance(ps) == batch_orthodistance_serial(ps));
    CHECK(batch_collar_width(xs) == batch_collar_width_serial(xs));

    auto pb = batch_bounds(ps);
    auto sb = batch_bounds_serial(ps);
    REQUIRE(pb.size() == sb.size());
    for (std::size_t i = 0; i < pb.size(); ++i) {
        CHECK(pb[i].lower == sb[i].lower);
        CHECK(pb[i].upper == sb[i].upper);
    }
    auto pp = batch_pentagon_split(ps);
    auto sp = batch_pentagon_split_serial(ps);
    REQUIRE(pp.size() == sp.size());
    for (std::size_t i = 0; i < pp.size(); ++i) {
        CHECK(pp[i].c1 == sp[i].c1);
        CHECK(pp[i].d1 == sp[i].d1);
        CHECK(pp[i].d2 == sp[i].d2);
    }
}
