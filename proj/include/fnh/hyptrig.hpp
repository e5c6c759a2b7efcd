// Hyperbolic trigonometry for pairs of pants: collar widths, the
// right-angled-hexagon orthodistance, its collar-sandwich bounds, and the
// pentagon-split minimization used as an independent cross-check.
#pragma once

#include <stdexcept>

namespace fnh {

// A hyperbolic pair of pants given by three boundary lengths.  A zero
// length encodes a cusp; the all-zero case is the thrice-punctured sphere.
struct PantsGeom {
    double l1 = 0.0;
    double l2 = 0.0;
    double lp = 0.0;

    void validate() const;
};

// Half-width r(x) = arcsinh(1 / sinh x) of the standard collar around a
// geodesic of half-length x.  Strictly decreasing; relative error within a
// few machine epsilons (evaluated in extended precision).
double collar_width(double x);

// Distance between the l1- and l2-boundary geodesics, from the hexagon
// relation  cosh d = (cosh c + cosh a cosh b) / (sinh a sinh b)  with
// a = l1/2, b = l2/2, c = lp/2.  Evaluated via
// cosh d - 1 = (cosh c + cosh(a-b)) / (sinh a sinh b), which is stable for
// nearly-touching geodesics, and in the log domain once arguments exceed
// 30 so lengths like 4 log n never overflow.
double orthodistance(const PantsGeom& p);

struct OrthodistanceBounds {
    double lower = 0.0;  // r(l1/2) + r(l2/2)
    double upper = 0.0;  // lower + lp/2
};

// Collar sandwich: lower <= orthodistance(p) <= upper.
OrthodistanceBounds orthodistance_bounds(const PantsGeom& p);

struct PentagonSplit {
    double c1 = 0.0;
    double c2 = 0.0;  // c1 + c2 == lp/2
    double d1 = 0.0;  // arcsinh(cosh c1 / sinh(l1/2))
    double d2 = 0.0;  // arcsinh(cosh c2 / sinh(l2/2))
};

// Splits the half-seam c = lp/2 into (c1, c2) minimizing d1 + d2.  The
// minimum is attained at the foot of the common perpendicular, so
// d1 + d2 reproduces orthodistance(p); the two routes cross-check each
// other.  The objective is strictly convex, so the interior critical point
// is found by bisection on the derivative.
//
// At the true split the feet also satisfy sinh(c1) cosh(b) = sinh(c2) cosh(a)
// (eliminating the cut length between the two pentagon relations
// cosh a = sinh c1 sinh h and cosh b = sinh c2 sinh h); tests use this as a
// third route.
PentagonSplit pentagon_split(const PantsGeom& p);

// Thrown when the split search fails to bracket or converge; carries the
// bracket state for diagnostics.
struct SplitSearchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace fnh
