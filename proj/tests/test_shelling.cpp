#include "doctest.h"

#include "crosslab/arrangement.hpp"
#include "crosslab/constructions.hpp"
#include "crosslab/shelling.hpp"

#include <algorithm>
#include <set>

using namespace crosslab;

namespace {

// Straight-line complete drawing on the given integer points, ids 0..n-1.
Drawing straight(const std::vector<std::pair<long long, long long>>& pts) {
  Drawing d;
  for (std::size_t i = 0; i < pts.size(); ++i)
    d.vertices.emplace(static_cast<int>(i),
                       Point{Rational(pts[i].first), Rational(pts[i].second)});
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      d.edges.emplace(EdgeKey(static_cast<int>(i), static_cast<int>(j)),
                      Polyline{d.vertices.at(static_cast<int>(i)),
                               d.vertices.at(static_cast<int>(j))});
  return d;
}

// K5 whose crossing pairs are {0,2}x{1,4}, {0,3}x{1,2}, {0,3}x{1,4}; the
// x-order cycle passes the cycle condition with one allowed crossing.
Drawing flat_fan() { return straight({{0, -4}, {1, -4}, {2, -3}, {3, -3}, {4, 0}}); }

// K8 whose crossing-free subgraph has no cycle longer than the triangle
// 0-4-7, so the cycle route fails while the x-order route still applies.
Drawing tall_zigzag() {
  return straight({{0, 10}, {1, 9}, {2, 6}, {3, -2}, {4, -8}, {5, 4}, {6, 9}, {7, 11}});
}

// tall_zigzag with edge {0,4} rerouted through the empty sector below
// vertex 4: the crossing set is unchanged, but the edge leaves the
// vertical strip of its endpoints, so the drawing is no longer x-bounded.
Drawing tall_zigzag_bent() {
  Drawing d = tall_zigzag();
  d.edges[EdgeKey(0, 4)] = Polyline{Point{Rational(0), Rational(10)},
                                    Point{Rational(39, 10), Rational(-151, 20)},
                                    Point{Rational(21, 5), Rational(-12)},
                                    Point{Rational(4), Rational(-8)}};
  return d;
}

bool mentions(const std::vector<std::string>& violations, const std::string& needle) {
  return std::any_of(violations.begin(), violations.end(), [&](const std::string& v) {
    return v.find(needle) != std::string::npos;
  });
}

// Interior reference point of the bounded face of a convex K4 whose
// boundary meets exactly vertices 1 and 2.
FaceRef k4_side_pocket(const Drawing& k4) {
  Arrangement a = planarize(k4);
  for (int f = 0; f < static_cast<int>(a.faces.size()); ++f) {
    if (f == a.unbounded_face) continue;
    if (boundary_vertices(a, f) == std::set<int>{1, 2})
      return FaceRef::at(face_interior_point(a, f));
  }
  REQUIRE(false);
  return FaceRef::unbounded();
}

} // namespace

TEST_CASE("crossing-free cycles satisfy the cycle condition") {
  CHECK(check_lemma_cycle(convex(3), {0, 1, 2}).pass);

  const Drawing bk8 = blazek_koman(8).drawing;
  const std::vector<int> rim = {0, 1, 2, 3, 4, 5, 6, 7};
  const CycleWitness w = check_lemma_cycle(bk8, rim);
  CHECK(w.pass);
  CHECK(w.violations.empty());
  CHECK(w.closing.ok);
  CHECK(cycle_witness_face(bk8, rim).is_unbounded());
}

TEST_CASE("the cycle condition rejects off-cycle endpoints and crossed closing edges") {
  const Drawing k4 = convex(4);

  CycleWitness w = check_lemma_cycle(k4, {0, 1, 3});
  CHECK_FALSE(w.pass);
  REQUIRE(w.violations.size() == 1);
  CHECK(mentions(w.violations, "endpoint off the cycle"));
  CHECK(w.steps[0].ok);
  REQUIRE(w.steps[1].crossings.size() == 1);
  CHECK(w.steps[1].crossings[0].edge == EdgeKey(0, 2));
  CHECK_FALSE(w.steps[1].ok);
  CHECK(w.closing.ok);

  w = check_lemma_cycle(k4, {2, 3, 0});
  CHECK_FALSE(w.pass);
  REQUIRE(w.violations.size() == 1);
  CHECK(mentions(w.violations, "closing edge"));
  CHECK_FALSE(w.closing.ok);
  CHECK(w.closing.cycle_edge == EdgeKey(0, 2));
  REQUIRE(w.closing.crossings.size() == 1);
  CHECK(w.closing.crossings[0].edge == EdgeKey(1, 3));
}

TEST_CASE("the cycle condition classifies crossings by their cycle window") {
  const Drawing fan = flat_fan();

  // x-order: the only crossing on a step edge sits at positions (1,4)
  // around step k=2, which the condition allows.
  CycleWitness good = check_lemma_cycle(fan, {0, 1, 2, 3, 4});
  CHECK(good.pass);
  REQUIRE(good.steps[1].crossings.size() == 1);
  CHECK(good.steps[1].crossings[0].edge == EdgeKey(0, 3));
  CHECK(good.steps[1].crossings[0].i == 1);
  CHECK(good.steps[1].crossings[0].j == 4);
  CHECK(good.steps[1].crossings[0].ok);

  // Reordering the same vertices moves crossings outside their windows.
  CycleWitness bad = check_lemma_cycle(fan, {1, 2, 0, 3, 4});
  CHECK_FALSE(bad.pass);
  CHECK(bad.violations.size() == 4);
  CHECK(mentions(bad.violations, "outside"));
  REQUIRE(bad.steps[0].crossings.size() == 1);
  CHECK(bad.steps[0].crossings[0].edge == EdgeKey(0, 3));
  CHECK(bad.steps[0].crossings[0].i == 3);
  CHECK(bad.steps[0].crossings[0].j == 4);
  CHECK_FALSE(bad.steps[0].crossings[0].ok);
  CHECK(bad.steps[1].ok); // {0,2} crossed by {1,4} at (1,5): allowed
  CHECK_FALSE(bad.steps[2].ok);
  CHECK(bad.closing.crossings.size() == 2);

  CHECK_THROWS_AS(check_lemma_cycle(fan, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(check_lemma_cycle(fan, {0, 1, 9}), std::invalid_argument);
  CHECK_THROWS_AS(check_lemma_cycle(fan, {0, 1, 0}), std::invalid_argument);
}

TEST_CASE("the cycle search honours target length and budget") {
  const Drawing k5 = convex(5);
  CHECK_FALSE(find_crossing_free_cycle(k5, 6).has_value());
  auto hull = find_crossing_free_cycle(k5, 3);
  REQUIRE(hull.has_value());
  CHECK(*hull == std::vector<int>{0, 1, 2, 3, 4});
  CHECK_FALSE(find_crossing_free_cycle(k5, 5, 1).has_value());
  CHECK_THROWS_AS(find_crossing_free_cycle(k5, 2), std::invalid_argument);

  const Drawing zig = tall_zigzag();
  CHECK_FALSE(find_crossing_free_cycle(zig, 4).has_value());
  auto tri = find_crossing_free_cycle(zig, 3);
  REQUIRE(tri.has_value());
  CHECK(*tri == std::vector<int>{0, 4, 7});
}

TEST_CASE("direct verification accepts hull shellings and their cycle witnesses") {
  const Drawing bk8 = blazek_koman(8).drawing;
  const std::vector<int> rim = {0, 1, 2, 3, 4, 5, 6, 7};
  ShellingCertificate cert = verify_shelling_direct(bk8, rim, FaceRef::unbounded());
  CHECK(cert.valid);
  CHECK(cert.pairs.size() == 28);
  CHECK(std::all_of(cert.pairs.begin(), cert.pairs.end(),
                    [](const PairVerdict& p) { return p.pass(); }));

  // A cycle passing the cycle condition must verify directly against the
  // face seated next to its closing edge.
  const Drawing fan = flat_fan();
  const std::vector<int> xorder = {0, 1, 2, 3, 4};
  REQUIRE(check_lemma_cycle(fan, xorder).pass);
  const FaceRef seat = cycle_witness_face(fan, xorder);
  CHECK_FALSE(seat.is_unbounded());
  CHECK(verify_shelling_direct(fan, xorder, seat).valid);
}

TEST_CASE("direct verification pinpoints the failing pair") {
  const Drawing k4 = convex(4);
  ShellingCertificate cert = verify_shelling_direct(k4, {0, 1, 2, 3}, k4_side_pocket(k4));
  CHECK_FALSE(cert.valid);
  std::vector<PairVerdict> failing;
  for (const PairVerdict& p : cert.pairs)
    if (!p.pass()) failing.push_back(p);
  REQUIRE(failing.size() == 1);
  CHECK(failing[0].i == 1);
  CHECK(failing[0].j == 4);
  CHECK_FALSE(failing[0].vi_on_boundary);
  CHECK_FALSE(failing[0].vj_on_boundary);
}

TEST_CASE("singleton shellings reduce to boundary membership") {
  const Drawing k4 = convex(4);
  ShellingCertificate ok = verify_shelling_direct(k4, {2}, FaceRef::unbounded());
  CHECK(ok.valid);
  CHECK(ok.pairs.size() == 1);
  ShellingCertificate bad = verify_shelling_direct(k4, {0}, k4_side_pocket(k4));
  CHECK_FALSE(bad.valid);
}

TEST_CASE("direct verification validates its arguments") {
  const Drawing k4 = convex(4);
  CHECK_THROWS_AS(verify_shelling_direct(k4, {}, FaceRef::unbounded()),
                  std::invalid_argument);
  CHECK_THROWS_AS(verify_shelling_direct(k4, {0, 9}, FaceRef::unbounded()),
                  std::invalid_argument);
  CHECK_THROWS_AS(verify_shelling_direct(k4, {0, 1, 0}, FaceRef::unbounded()),
                  std::invalid_argument);
  // Witness reference points must avoid the drawing itself.
  CHECK_THROWS_AS(verify_shelling_direct(
                      k4, {0, 1, 2, 3},
                      FaceRef::at(Point{Rational(0), Rational(0)})),
                  std::invalid_argument);
}

TEST_CASE("the crossing floor pipeline certifies the stock constructions") {
  PipelineVerdict v = theorem1_pipeline(blazek_koman(8).drawing);
  CHECK(v.n == 8);
  CHECK(v.crossings == 18);
  CHECK(v.zeta_n == 18);
  CHECK(v.kind == CertificateKind::lemma_cycle);
  CHECK(v.S == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7});
  CHECK(v.s == 8);
  CHECK(v.witness.is_unbounded());
  CHECK(v.conclusive);
  CHECK(v.bound_chain_ok);

  v = theorem1_pipeline(blazek_koman(9).drawing);
  CHECK(v.crossings == 36);
  CHECK(v.kind == CertificateKind::lemma_cycle);
  CHECK(v.s == 9);
  CHECK(v.conclusive);
  CHECK(v.bound_chain_ok);

  // The cylindrical drawings certify through a short inner cycle whose
  // witness face is bounded; the cumulative bounds hold there even though
  // they fail at the unbounded face.
  v = theorem1_pipeline(harary_hill(10).drawing);
  CHECK(v.crossings == 60);
  CHECK(v.zeta_n == 60);
  CHECK(v.kind == CertificateKind::lemma_cycle);
  CHECK(v.S == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(v.s == 5);
  CHECK_FALSE(v.witness.is_unbounded());
  CHECK(v.conclusive);
  CHECK(v.bound_chain_ok);

  v = theorem1_pipeline(harary_hill(12).drawing);
  CHECK(v.crossings == 150);
  CHECK(v.s == 6);
  CHECK(v.conclusive);
  CHECK(v.bound_chain_ok);
}

TEST_CASE("the pipeline falls back to the spatial order when no long cycle exists") {
  PipelineVerdict v = theorem1_pipeline(tall_zigzag());
  CHECK(v.n == 8);
  CHECK(v.crossings == 25);
  CHECK(v.zeta_n == 18);
  CHECK(v.kind == CertificateKind::x_order);
  CHECK(v.S == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7});
  CHECK(v.s == 8);
  CHECK(v.witness.is_unbounded());
  CHECK(v.conclusive);
  CHECK(v.bound_chain_ok);
}

TEST_CASE("the pipeline reports inconclusive without a certificate and accepts a caller order") {
  const Drawing bent = tall_zigzag_bent();
  REQUIRE(validate_good_drawing(bent).ok());
  REQUIRE(total_crossings(compute_crossings_geometric(bent)) == 25);

  PipelineVerdict v = theorem1_pipeline(bent);
  CHECK(v.kind == CertificateKind::none);
  CHECK_FALSE(v.conclusive);
  CHECK(v.s == 0);

  const std::vector<int> xorder = {0, 1, 2, 3, 4, 5, 6, 7};
  v = theorem1_pipeline(bent, xorder, FaceRef::unbounded());
  CHECK(v.kind == CertificateKind::direct);
  CHECK(v.s == 8);
  CHECK(v.conclusive);
  CHECK(v.bound_chain_ok);

  // A caller order is only a fallback: the cycle route still wins.
  v = theorem1_pipeline(blazek_koman(8).drawing, xorder, FaceRef::unbounded());
  CHECK(v.kind == CertificateKind::lemma_cycle);
}

TEST_CASE("conclusive verdicts sit at or above the crossing floor") {
  PipelineVerdict v = theorem1_pipeline(flat_fan());
  CHECK(v.n == 5);
  CHECK(v.crossings == 3);
  CHECK(v.zeta_n == 1);
  CHECK(v.kind == CertificateKind::lemma_cycle);
  CHECK(v.S == std::vector<int>{0, 1, 3, 2, 4});
  CHECK(v.s == 5);
  CHECK_FALSE(v.witness.is_unbounded());
  CHECK(v.conclusive);
  CHECK(v.bound_chain_ok);
  CHECK(v.crossings >= v.zeta_n);

  CHECK(to_string(CertificateKind::lemma_cycle) == "lemma-cycle");
  CHECK(to_string(CertificateKind::x_order) == "x-order");
  CHECK(to_string(CertificateKind::direct) == "direct");
  CHECK(to_string(CertificateKind::none) == "none");
}
