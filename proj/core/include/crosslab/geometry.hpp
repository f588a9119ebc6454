#ifndef CROSSLAB_GEOMETRY_HPP
#define CROSSLAB_GEOMETRY_HPP

#include "crosslab/rational.hpp"

#include <compare>
#include <optional>
#include <vector>

namespace crosslab {

struct Point {
  Rational x;
  Rational y;

  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Point& o) const { return !(*this == o); }
  // Lexicographic; used for deterministic maps keyed by exact coordinates.
  bool operator<(const Point& o) const {
    if (x != o.x) return x < o.x;
    return y < o.y;
  }
};

using Polyline = std::vector<Point>;

// Twice the signed area of triangle (a, b, c); > 0 iff counter-clockwise.
Rational cross3(const Point& a, const Point& b, const Point& c);
// Sign of cross3: +1 ccw, -1 cw, 0 collinear.
int orientation(const Point& a, const Point& b, const Point& c);

// Closed (inclusive) test: p on segment [a, b].
bool point_on_segment(const Point& p, const Point& a, const Point& b);

struct BBox {
  Rational minx, maxx, miny, maxy;
  static BBox of(const Point& a, const Point& b);
  static BBox of(const Polyline& pts);
  bool intersects(const BBox& o) const;
};

// How two closed segments meet.  `overlap` means collinear with a shared
// sub-segment of positive length; `touch` is a single shared point that is an
// endpoint of at least one segment; `proper` is a transversal interior-interior
// crossing with its (exact) intersection point.
enum class SegContact { none, proper, touch, overlap };

struct SegMeet {
  SegContact type = SegContact::none;
  Point at; // valid for proper and touch
};

SegMeet classify_segments(const Point& a1, const Point& a2, const Point& b1, const Point& b2);

// Parameter of p along segment [a, b] (p assumed on the segment); in [0, 1].
Rational segment_parameter(const Point& p, const Point& a, const Point& b);

// Sum over consecutive pairs of cross(p_i, p_{i+1}); no closing term, so the
// value negates when the polyline is reversed and concatenations add up.
Rational open_shoelace(const Polyline& pts);

// Signed count of crossings of the horizontal ray {x > p.x, y = p.y} by the
// directed polyline (upward +1, downward -1); additive under concatenation.
// Precondition: p does not lie on the polyline.
long long ray_crossings(const Polyline& pts, const Point& p);

// p strictly inside the region enclosed by a closed curve given as a point
// loop (last point joins first)?  Uses the winding number.
bool point_in_loop(const Polyline& loop, const Point& p);

bool point_on_polyline(const Point& p, const Polyline& pts);

} // namespace crosslab

#endif
