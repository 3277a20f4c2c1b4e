#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>

#include "cubix/hermitian.hpp"

namespace cubix {

// Numeric model of the complex hyperbolic 4-ball
//   B4 = { lines l in P^4 : h restricted to l is negative },
// carried by the continuous form with Gram diag(-1,1,1,1,1).

using Complex = std::complex<double>;
using ComplexVector = std::array<Complex, 5>;

namespace tolerances {
// make_point rejects representatives with h(z,z) >= -kBallMargin.
inline constexpr double kBallMargin = 1e-9;
// Stored points satisfy |h(z,z) + 1| <= kNormalization.
inline constexpr double kNormalization = 1e-12;
// Default tolerance for arrangement membership queries.
inline constexpr double kMembership = 1e-8;
// Isometry-invariance checks of dist and hyperplane_gap hold to this.
inline constexpr double kInvariance = 1e-10;
// Additive slack allowed in the triangle inequality.
inline constexpr double kTriangleSlack = 1e-9;
} // namespace tolerances

// The continuous hermitian form, linear in the first argument.
Complex herm_c(const ComplexVector& v, const ComplexVector& w);

// a + b omega with omega = exp(2 pi i / 3).
ComplexVector embed(const LatticeVector& v);

struct BallPoint {
    // Normalized representative: h(z,z) = -1 and z[0] real positive (the
    // phase gauge; |z1| >= 1 holds automatically for points of the ball).
    ComplexVector z;
};

// Scales and phase-gauges a representative.  NotInBall when h(raw,raw) is
// not below -kBallMargin.
BallPoint make_point(const ComplexVector& raw);

BallPoint center(); // (1,0,0,0,0)

// dist(x,y) = 2 arccosh sqrt( h(x,y) h(y,x) / (h(x,x) h(y,y)) ); the metric
// of constant holomorphic sectional curvature, normalized so that this
// quotient is cosh^2(d/2).
double dist(const BallPoint& x, const BallPoint& y);

struct HyperplaneNormal {
    LatticeVector v;        // exact, herm(v,v) = 1
    ComplexVector embedded; // complex image of v
};

HyperplaneNormal make_normal(const LatticeVector& v); // BadNorm unless h(v,v)=1

// Distance from x to the hyperplane v-perp:
//   sinh^2(d/2) = -h(x,v) h(v,x) / (h(x,x) h(v,v)).
double hyperplane_gap(const BallPoint& x, const HyperplaneNormal& n);

// Scans the canonical norm-1 vectors of the given height bound and returns
// the first whose hyperplane passes within tol of x.  A height-bounded
// semi-decision: the full arrangement has infinitely many hyperplanes, so
// "no hit" only certifies absence up to the bound.
std::optional<HyperplaneNormal> in_arrangement(const BallPoint& x,
                                               std::int64_t height_bound,
                                               double tol = tolerances::kMembership);

// The isometry action on the ball, re-normalized after applying M.
BallPoint apply(const Isometry& M, const BallPoint& x);

// The cusp attached to a primitive null lattice vector: coordinatewise
// reduction mod theta, projectively canonicalized; one of the 40 null
// points.  NotNull when herm(n,n) != 0; Imprimitive when theta divides n.
F3Vector cusp_class(const LatticeVector& n);

} // namespace cubix
