#include "crosslab/geometry.hpp"

#include <algorithm>
#include <cassert>

namespace crosslab {

Rational cross3(const Point& a, const Point& b, const Point& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

int orientation(const Point& a, const Point& b, const Point& c) {
  return sign(cross3(a, b, c));
}

bool point_on_segment(const Point& p, const Point& a, const Point& b) {
  if (orientation(a, b, p) != 0) return false;
  if (p.x < std::min(a.x, b.x) || p.x > std::max(a.x, b.x)) return false;
  if (p.y < std::min(a.y, b.y) || p.y > std::max(a.y, b.y)) return false;
  return true;
}

BBox BBox::of(const Point& a, const Point& b) {
  return BBox{std::min(a.x, b.x), std::max(a.x, b.x), std::min(a.y, b.y), std::max(a.y, b.y)};
}

BBox BBox::of(const Polyline& pts) {
  assert(!pts.empty());
  BBox box = BBox::of(pts.front(), pts.front());
  for (const Point& p : pts) {
    box.minx = std::min(box.minx, p.x);
    box.maxx = std::max(box.maxx, p.x);
    box.miny = std::min(box.miny, p.y);
    box.maxy = std::max(box.maxy, p.y);
  }
  return box;
}

bool BBox::intersects(const BBox& o) const {
  return !(maxx < o.minx || o.maxx < minx || maxy < o.miny || o.maxy < miny);
}

SegMeet classify_segments(const Point& a1, const Point& a2, const Point& b1, const Point& b2) {
  const int o1 = orientation(b1, b2, a1);
  const int o2 = orientation(b1, b2, a2);
  const int o3 = orientation(a1, a2, b1);
  const int o4 = orientation(a1, a2, b2);

  if (o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) {
    // Transversal interior-interior crossing; solve the 2x2 system exactly.
    const Rational d = (a2.x - a1.x) * (b2.y - b1.y) - (a2.y - a1.y) * (b2.x - b1.x);
    assert(d != 0);
    const Rational t = ((b1.x - a1.x) * (b2.y - b1.y) - (b1.y - a1.y) * (b2.x - b1.x)) / d;
    return SegMeet{SegContact::proper, Point{a1.x + t * (a2.x - a1.x), a1.y + t * (a2.y - a1.y)}};
  }

  if (o1 == 0 && o2 == 0 && o3 == 0 && o4 == 0) {
    // Collinear: decide whether they share a point or a positive-length piece.
    auto cmp = (a1.x != a2.x) ? [](const Point& u, const Point& v) { return u.x < v.x; }
                              : [](const Point& u, const Point& v) { return u.y < v.y; };
    Point alo = a1, ahi = a2, blo = b1, bhi = b2;
    if (cmp(ahi, alo)) std::swap(alo, ahi);
    if (cmp(bhi, blo)) std::swap(blo, bhi);
    const Point& lo = cmp(alo, blo) ? blo : alo; // max of the lows
    const Point& hi = cmp(ahi, bhi) ? ahi : bhi; // min of the highs
    if (cmp(hi, lo)) return SegMeet{};
    if (lo == hi) return SegMeet{SegContact::touch, lo};
    return SegMeet{SegContact::overlap, lo};
  }

  // Non-collinear contact, if any, is a single point involving an endpoint.
  for (const Point& e : {a1, a2})
    if (point_on_segment(e, b1, b2)) return SegMeet{SegContact::touch, e};
  for (const Point& e : {b1, b2})
    if (point_on_segment(e, a1, a2)) return SegMeet{SegContact::touch, e};
  return SegMeet{};
}

Rational segment_parameter(const Point& p, const Point& a, const Point& b) {
  const Rational dx = b.x - a.x;
  if (dx != 0) return (p.x - a.x) / dx;
  const Rational dy = b.y - a.y;
  assert(dy != 0);
  return (p.y - a.y) / dy;
}

Rational open_shoelace(const Polyline& pts) {
  Rational acc = 0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    acc += pts[i].x * pts[i + 1].y - pts[i + 1].x * pts[i].y;
  return acc;
}

long long ray_crossings(const Polyline& pts, const Point& p) {
  long long w = 0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const Point& a = pts[i];
    const Point& b = pts[i + 1];
    if (a.y <= p.y) {
      if (b.y > p.y && orientation(a, b, p) > 0) ++w; // upward, p left of a->b
    } else {
      if (b.y <= p.y && orientation(a, b, p) < 0) --w; // downward, p right of a->b
    }
  }
  return w;
}

bool point_in_loop(const Polyline& loop, const Point& p) {
  assert(loop.size() >= 3);
  Polyline closed = loop;
  if (closed.front() != closed.back()) closed.push_back(closed.front());
  return ray_crossings(closed, p) != 0;
}

bool point_on_polyline(const Point& p, const Polyline& pts) {
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    if (point_on_segment(p, pts[i], pts[i + 1])) return true;
  return false;
}

} // namespace crosslab
