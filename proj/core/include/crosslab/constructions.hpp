#ifndef CROSSLAB_CONSTRUCTIONS_HPP
#define CROSSLAB_CONSTRUCTIONS_HPP

#include "crosslab/drawing.hpp"

namespace crosslab {

// Raised when a realization cannot reproduce the combinatorial crossing
// count of its layout even at the maximum retry resolution.
class FidelityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GeneratedTwoPage {
  TwoPageLayout layout;
  Drawing drawing;
};

struct GeneratedCylindrical {
  CylindricalLayout layout;
  Drawing drawing;
};

// Straight-line drawing with vertices in convex position: x_i = i and
// y_i = i^2 + (i^3 mod 97)/97.  The cubic perturbation keeps the set convex
// (second differences stay positive) while breaking the three-chord
// concurrences that the exact parabola develops from n = 10 on; every pair
// of disjoint chords then meets in a distinct point, so the drawing has
// exactly C(n,4) crossings.
Drawing convex(int n);

// Book drawing on the identity spine that meets the conjectured minimum:
// edge {u,v} goes to the top page iff (u+v) mod n < ceil(n/2).  This is the
// slope-class rule for the diagonals of a regular n-gon (positive slope
// inside, rest outside) transported to spine coordinates; it realizes
// exactly zeta(n) crossings for every n.
GeneratedTwoPage blazek_koman(int n);

// Two concentric rings: ceil(n/2) vertices (ids 0..) on the outer circle,
// floor(n/2) (remaining ids) on the inner one.  Ring positions are slightly
// irregular (i/s + i/(s^3+1)) and the inner ring is rotated by a quarter of
// the outer spacing; annulus edges take the geodesic sweep (|delta| <= 1/2
// turn, exact 1/2 resolved to +1/2).  Realizes exactly zeta(n) crossings.
GeneratedCylindrical harary_hill(int n);

// Seeded random cylindrical layout on the same ring split as harary_hill:
// distinct random ring positions, annulus edges taking the geodesic sweep.
// (Non-geodesic sweeps are never generated: an extra full turn would force
// some annulus pair to cross twice, which no good drawing allows.)
// Deterministic in the seed.
CylindricalLayout random_cylindrical(int n, std::uint64_t seed);

// Geometric realizations.  Both check the realized crossing count against
// the combinatorial count of the layout and densify (doubling `resolution`,
// a bounded number of times) on mismatch; persistent mismatch raises
// FidelityError.  The returned Drawing carries the layout and class tag.
//
// Two-page: spine at (pos+1, 0); each edge is an arch over (top page) or
// under (bottom page) the spine: two steep walls near the endpoints joined
// by a flat parabolic hump sampled with `resolution` segments.  Heights are
// ordered by (span, edge index), so arches of different spans nest cleanly
// and arches of equal span cross exactly once per interleaving; realized
// crossings provably equal the interleaving count.
Drawing realize(const TwoPageLayout& l, int resolution = 8);

// Cylindrical: inner circle radius 1, outer radius 2, vertices exactly on
// their circles (rational points via tan-half-angle approximation of the
// turn).  Inner-ring edges are straight chords; outer-ring edges are the
// circle-inversion images of chords (arcs outside the outer circle);
// annulus edges are spirals with angle linear in radius, sampled with
// `resolution` segments per edge.
Drawing realize(const CylindricalLayout& l, int resolution = 64);

// Exact rational point at `turn` full turns on the circle of radius
// `radius` centred at the origin (the same turn always maps to the same
// point).  The point lies exactly on the circle; its angle differs from
// 2*pi*turn by less than 2^-30.
Point circle_point(const TurnFraction& turn, const Rational& radius);

// Class predicates.  Strictly x-monotone polylines have their x-extremes at
// the endpoints, so is_monotone implies is_x_bounded; the implication is
// checked at runtime.
bool is_monotone(const Drawing& d);
bool is_x_bounded(const Drawing& d);

} // namespace crosslab

#endif
