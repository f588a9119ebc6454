#include "doctest.h"

#include "crosslab/constructions.hpp"

using namespace crosslab;

namespace {

long long zeta(int n) {
  long long a = n / 2, b = (n - 1) / 2, c = (n - 2) / 2, d = (n - 3) / 2;
  return a * b * c * d / 4;
}

long long choose4(long long n) { return n * (n - 1) * (n - 2) * (n - 3) / 24; }

} // namespace

TEST_CASE("convex drawings are good and have C(n,4) crossings") {
  for (int n = 3; n <= 12; ++n) {
    CAPTURE(n);
    Drawing d = convex(n);
    CHECK(d.cls == DrawingClass::convex);
    auto rep = validate_good_drawing(d);
    CHECK(rep.ok());
    CHECK(total_crossings(compute_crossings_geometric(d)) == choose4(n));
    CHECK(is_x_bounded(d));
    CHECK(is_monotone(d));
  }
}

TEST_CASE("circle points are exactly on their circle") {
  for (int num = 0; num < 24; ++num) {
    const TurnFraction t(num, 24);
    for (int r = 1; r <= 2; ++r) {
      Point p = circle_point(t, Rational(r));
      CHECK(p.x * p.x + p.y * p.y == Rational(r * r));
    }
  }
  // Identical turns give identical points; a full-turn shift is absorbed.
  CHECK(circle_point(Rational(1, 3), 1) == circle_point(Rational(4, 3), 1));
  // Cardinal directions are exact.
  CHECK(circle_point(Rational(0), 2) == Point{Rational(2), Rational(0)});
  CHECK(circle_point(Rational(1, 2), 2) == Point{Rational(-2), Rational(0)});
  CHECK(circle_point(Rational(1, 4), 1) == Point{Rational(0), Rational(1)});
  CHECK(circle_point(Rational(3, 4), 1) == Point{Rational(0), Rational(-1)});
}

TEST_CASE("book construction meets the conjectured minimum, small n") {
  for (int n = 3; n <= 9; ++n) {
    CAPTURE(n);
    GeneratedTwoPage g = blazek_koman(n);
    CHECK(crossings_two_page(g.layout) == zeta(n));
    CHECK(total_crossings(compute_crossings_geometric(g.drawing)) == zeta(n));
    CHECK(g.drawing.cls == DrawingClass::two_page);
    REQUIRE(g.drawing.layout.has_value());
    CHECK(is_monotone(g.drawing));
    CHECK(is_x_bounded(g.drawing));
  }
}

TEST_CASE("cylindrical construction meets the conjectured minimum, small n") {
  for (int n = 3; n <= 9; ++n) {
    CAPTURE(n);
    GeneratedCylindrical g = harary_hill(n);
    CHECK(static_cast<int>(g.layout.outer.size()) == (n + 1) / 2);
    CHECK(static_cast<int>(g.layout.inner.size()) == n / 2);
    CHECK(crossings_cylindrical(g.layout) == zeta(n));
    CHECK(total_crossings(compute_crossings_geometric(g.drawing)) == zeta(n));
    CHECK(g.drawing.cls == DrawingClass::cylindrical);
  }
}

TEST_CASE("cylindrical construction survives the near-concurrent regime") {
  // From n = 10 on, equal-size rings make some spiral triples meet at a
  // single ideal point; the realization must keep the three pairwise
  // crossings distinct while preserving the count.
  for (int n : {10, 11, 12}) {
    CAPTURE(n);
    GeneratedCylindrical g = harary_hill(n);
    CHECK(crossings_cylindrical(g.layout) == zeta(n));
    CHECK(total_crossings(compute_crossings_geometric(g.drawing)) == zeta(n));
  }
}

TEST_CASE("realized two-page drawings respect every page assignment") {
  // All edges on one page: convex-equivalent count.
  TwoPageLayout l;
  l.spine = {0, 1, 2, 3, 4};
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) l.pages[EdgeKey{u, v}] = Page::top;
  Drawing d = realize(l);
  CHECK(total_crossings(compute_crossings_geometric(d)) == 5);

  // K_3 never crosses, whatever the pages.
  TwoPageLayout k3;
  k3.spine = {0, 1, 2};
  k3.pages[EdgeKey{0, 1}] = Page::top;
  k3.pages[EdgeKey{0, 2}] = Page::bottom;
  k3.pages[EdgeKey{1, 2}] = Page::top;
  CHECK(total_crossings(compute_crossings_geometric(realize(k3))) == 0);
}

TEST_CASE("realization respects non-identity spines") {
  TwoPageLayout l;
  l.spine = {2, 0, 3, 1};
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) l.pages[EdgeKey{u, v}] = Page::top;
  Drawing d = realize(l);
  // Spine order 2,0,3,1: the interleaving pair is {2,3} x {0,1}.
  CHECK(total_crossings(compute_crossings_geometric(d)) == 1);
  // Vertex 2 sits at spine position 0, i.e. x = 1.
  CHECK(d.vertices.at(2).x == Rational(1));
}

TEST_CASE("random cylindrical layouts realize with matching counts") {
  for (std::uint64_t seed : {1ull, 7ull}) {
    CAPTURE(seed);
    CylindricalLayout l = random_cylindrical(7, seed);
    const long long combinatorial = crossings_cylindrical(l);
    Drawing d = realize(l);
    CHECK(total_crossings(compute_crossings_geometric(d)) == combinatorial);
    CHECK(combinatorial >= zeta(7));
  }
  // Determinism in the seed.
  CylindricalLayout a = random_cylindrical(8, 5);
  CylindricalLayout b = random_cylindrical(8, 5);
  CHECK(a.delta == b.delta);
}

TEST_CASE("deleting the outer ring leaves the inner convex drawing") {
  // The five inner vertices sit on a circle joined by straight chords, so
  // the sub-drawing is a convex K_5 with one crossing per 4-subset.
  const GeneratedCylindrical g = harary_hill(10);
  const Drawing inner = delete_vertices(g.drawing, {0, 1, 2, 3, 4});
  CHECK(inner.n() == 5);
  CHECK(total_crossings(compute_crossings_geometric(inner)) == 5);
}

TEST_CASE("monotonicity predicates") {
  Drawing d = convex(4);
  CHECK(is_monotone(d));
  CHECK(is_x_bounded(d));
  // An S-shaped detour that doubles back in x is not monotone, and here it
  // also leaves the endpoint strip.
  d.edges[EdgeKey{0, 1}] = Polyline{d.vertices.at(0), Point{Rational(3, 2), Rational(-1)},
                                    Point{Rational(-1), Rational(-2)},
                                    d.vertices.at(1)};
  CHECK(!is_monotone(d));
  CHECK(!is_x_bounded(d));
  // Cylindrical drawings wrap around; they are neither.
  Drawing hh = harary_hill(5).drawing;
  CHECK(!is_monotone(hh));
}
