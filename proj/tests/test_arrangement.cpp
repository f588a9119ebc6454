#include "doctest.h"

#include "crosslab/arrangement.hpp"
#include "crosslab/constructions.hpp"
#include "crosslab/kedges.hpp"

#include <algorithm>

using namespace crosslab;

namespace {

FaceRef outer() { return FaceRef::unbounded(); }

FaceRef at(int num_x, int den_x, int num_y, int den_y) {
  return FaceRef::at(Point{Rational(num_x, den_x), Rational(num_y, den_y)});
}

// Mirror image across the x-axis; reverses every rotation.
Drawing flipped(const Drawing& d) {
  Drawing out = d;
  for (auto& [id, p] : out.vertices) p.y = -p.y;
  for (auto& [e, pl] : out.edges) {
    for (Point& p : pl) p.y = -p.y;
  }
  return out;
}

std::size_t walk_total(const Arrangement& a) {
  std::size_t total = 0;
  for (const auto& f : a.faces) total += f.walk.size();
  return total;
}

} // namespace

TEST_CASE("planarization counts nodes, arcs, and faces correctly") {
  const Arrangement a3 = planarize(convex(3));
  CHECK(a3.nodes.size() == 3);
  CHECK(a3.arcs.size() == 3);
  CHECK(a3.faces.size() == 2);

  const Arrangement a4 = planarize(convex(4));
  CHECK(a4.nodes.size() == 5);
  CHECK(a4.arcs.size() == 8);
  CHECK(a4.faces.size() == 5);

  const Arrangement a5 = planarize(convex(5));
  CHECK(a5.nodes.size() == 10);
  CHECK(a5.arcs.size() == 20);
  CHECK(a5.faces.size() == 12);

  // n + Z(n) nodes, C(n,2) + 2 Z(n) arcs, faces forced by the Euler relation.
  const Arrangement ah = planarize(harary_hill(8).drawing);
  CHECK(ah.nodes.size() == 26);
  CHECK(ah.arcs.size() == 64);
  CHECK(ah.faces.size() == 40);
}

TEST_CASE("every directed arc lies on exactly one face walk") {
  for (const Drawing& d : {convex(4), convex(6), blazek_koman(6).drawing}) {
    const Arrangement a = planarize(d);
    CHECK(walk_total(a) == 2 * a.arcs.size());
    int unbounded = 0;
    for (const auto& f : a.faces) unbounded += f.unbounded ? 1 : 0;
    CHECK(unbounded == 1);
  }
}

TEST_CASE("tiny drawings planarize to a single unbounded face") {
  Drawing k1;
  k1.vertices.emplace(0, Point{Rational(0), Rational(0)});
  const Arrangement a1 = planarize(k1);
  CHECK(a1.faces.size() == 1);
  CHECK(boundary_vertices(a1, outer()) == std::set<int>{0});

  Drawing k2 = k1;
  k2.vertices.emplace(1, Point{Rational(1), Rational(0)});
  k2.edges.emplace(EdgeKey{0, 1}, Polyline{k2.vertices[0], k2.vertices[1]});
  const Arrangement a2 = planarize(k2);
  CHECK(a2.nodes.size() == 2);
  CHECK(a2.arcs.size() == 1);
  CHECK(a2.faces.size() == 1);
  CHECK(boundary_vertices(a2, outer()) == std::set<int>{0, 1});
}

TEST_CASE("boundary vertices of designated faces are found") {
  const Arrangement a3 = planarize(convex(3));
  CHECK(boundary_vertices(a3, outer()) == std::set<int>{0, 1, 2});

  const Arrangement a5 = planarize(convex(5));
  CHECK(boundary_vertices(a5, outer()) == std::set<int>{0, 1, 2, 3, 4});

  // Every bounded face of the convex K_4 is a triangle with the crossing as
  // one corner and two original vertices as the others.
  const Arrangement a4 = planarize(convex(4));
  for (int face = 0; face < static_cast<int>(a4.faces.size()); ++face) {
    if (face == a4.unbounded_face) continue;
    CHECK(boundary_vertices(a4, face).size() == 2);
  }
  CHECK(boundary_vertices(a4, at(5, 6, 4, 3)) == std::set<int>{0, 1});

  // The central face of convex K_6 is bounded by three diagonal pieces and
  // touches no original vertex at all.
  const Arrangement a6 = planarize(convex(6));
  CHECK(boundary_vertices(a6, at(5, 2, 35, 4)).empty());
}

TEST_CASE("face location rejects reference points on the drawing") {
  const Arrangement a = planarize(convex(4));
  CHECK_THROWS_AS(locate_face(a, FaceRef::at(Point{Rational(0), Rational(0)})),
                  std::invalid_argument);
  CHECK_THROWS_AS(locate_face(a, at(1, 1, 198, 97)), std::invalid_argument);
  CHECK(locate_face(a, outer()) == a.unbounded_face);
}

TEST_CASE("interior points designate their own face") {
  for (const Drawing& d : {convex(5), blazek_koman(6).drawing}) {
    const Arrangement a = planarize(d);
    for (int face = 0; face < static_cast<int>(a.faces.size()); ++face) {
      CAPTURE(face);
      const Point p = face_interior_point(a, face);
      CHECK_FALSE(on_arrangement(a, p));
      CHECK(locate_face(a, FaceRef::at(p)) == face);
    }
  }
}

TEST_CASE("face reference points persist across vertex deletions") {
  // The central point of convex K_6 still designates a face after deleting
  // a vertex; only the face's identity changes, never the point's meaning.
  const Drawing d6 = convex(6);
  const Drawing d5 = delete_vertices(d6, {0});
  const Arrangement a5 = planarize(d5);
  const int face = locate_face(a5, at(5, 2, 35, 4));
  CHECK(face != a5.unbounded_face);
}

TEST_CASE("induced orders on convex drawings walk the hull") {
  const Drawing d4 = convex(4);
  CHECK(induced_boundary_order(d4, 0, outer()) == std::vector<int>{1, 2, 3});
  CHECK(induced_boundary_order(d4, 1, outer()) == std::vector<int>{2, 3, 0});
  CHECK(induced_boundary_order(d4, 2, outer()) == std::vector<int>{3, 0, 1});
  CHECK(induced_boundary_order(d4, 3, outer()) == std::vector<int>{0, 1, 2});

  const Drawing d3 = convex(3);
  CHECK(induced_boundary_order(d3, 0, outer()) == std::vector<int>{1, 2});
  CHECK(induced_boundary_order(d3, 1, outer()) == std::vector<int>{2, 0});
}

TEST_CASE("induced orders respect a bounded designated face") {
  const Drawing d4 = convex(4);
  // Face inside the triangle at hull edge {0,1}: its boundary edges at each
  // vertex come first and last, and the orientation inverts.
  CHECK(induced_boundary_order(d4, 0, at(5, 6, 4, 3)) == std::vector<int>{2, 3, 1});
  CHECK(induced_boundary_order(d4, 1, at(5, 6, 4, 3)) == std::vector<int>{0, 2, 3});
  CHECK_THROWS_AS(induced_boundary_order(d4, 2, at(5, 6, 4, 3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(induced_boundary_order(d4, 9, outer()), std::invalid_argument);
}

TEST_CASE("mirroring the drawing reverses every induced order") {
  const Drawing d5 = convex(5);
  const Drawing m5 = flipped(d5);
  for (int x = 0; x < 5; ++x) {
    CAPTURE(x);
    std::vector<int> ord = induced_boundary_order(d5, x, outer());
    std::vector<int> rev = induced_boundary_order(m5, x, outer());
    std::reverse(rev.begin(), rev.end());
    CHECK(ord == rev);
  }
}

TEST_CASE("book drawings expose only the spine extremes to the outside") {
  const GeneratedTwoPage bk = blazek_koman(6);
  const Arrangement a = planarize(bk.drawing);
  CHECK(boundary_vertices(a, outer()) == std::set<int>{0, 5});
  CHECK(induced_boundary_order(bk.drawing, 0, outer()) ==
        std::vector<int>{5, 4, 3, 1, 2});
  CHECK(induced_boundary_order(bk.drawing, 5, outer()) ==
        std::vector<int>{1, 2, 3, 4, 0});
}

TEST_CASE("boundary orders reach each position with the predicted class") {
  // Wherever a vertex lies on the unbounded boundary, the i-th vertex of its
  // induced order is joined to it by a min(i-1, n-1-i)-edge.
  std::vector<Drawing> drawings;
  drawings.push_back(convex(6));
  drawings.push_back(blazek_koman(6).drawing);
  drawings.push_back(blazek_koman(8).drawing);
  drawings.push_back(harary_hill(8).drawing);
  for (const Drawing& d : drawings) {
    const Arrangement a = planarize(d);
    const std::set<int> boundary = boundary_vertices(a, outer());
    CHECK_FALSE(boundary.empty());
    for (int x : boundary) {
      CAPTURE(d.n());
      CAPTURE(x);
      const LastPointReport rep = check_prop_lastpoint(d, x, outer());
      CHECK(rep.pass);
    }
  }
}

TEST_CASE("class checks refuse vertices interior to the designated face") {
  CHECK_THROWS_AS(check_prop_lastpoint(convex(6), 0, at(5, 2, 35, 4)),
                  std::invalid_argument);
  // Only vertices 1 and 2 border the unbounded face of this drawing.
  const GeneratedCylindrical hh = harary_hill(8);
  const Arrangement a = planarize(hh.drawing);
  CHECK(boundary_vertices(a, outer()) == std::set<int>{1, 2});
  CHECK_THROWS_AS(check_prop_lastpoint(hh.drawing, 0, outer()),
                  std::invalid_argument);
  CHECK(check_prop_lastpoint(hh.drawing, 1, outer()).pass);
}
