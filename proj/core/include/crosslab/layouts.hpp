#ifndef CROSSLAB_LAYOUTS_HPP
#define CROSSLAB_LAYOUTS_HPP

#include "crosslab/rational.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace crosslab {

// Unordered pair of vertex ids in canonical (u < v) form.
struct EdgeKey {
  int u = 0;
  int v = 0;
  EdgeKey() = default;
  EdgeKey(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}
  bool operator==(const EdgeKey& o) const { return u == o.u && v == o.v; }
  bool operator<(const EdgeKey& o) const { return u != o.u ? u < o.u : v < o.v; }
};

enum class Page { top, bottom };

// Combinatorial 2-page book layout: a spine permutation of the vertices and a
// page for every edge.  Crossings are determined purely by interleaving.
struct TwoPageLayout {
  std::vector<int> spine;           // spine[i] = vertex at spine position i
  std::map<EdgeKey, Page> pages;    // one entry per edge of K_n

  int n() const { return static_cast<int>(spine.size()); }
};

// Angular position on a circle measured in turns (1 turn = full revolution).
using TurnFraction = Rational;

// Combinatorial cylindrical layout: two concentric circles of vertices plus a
// winding displacement (in turns) for every inner-outer edge.  Same-circle
// edges are chords of their circle (inner ones inside the inner disk, outer
// ones routed through the outer region); an inner-outer edge sweeps from its
// inner angle by `delta` turns while moving outward.
struct CylindricalLayout {
  struct RingVertex {
    int id = 0;
    TurnFraction turn; // position in [0, 1)
  };
  std::vector<RingVertex> inner;
  std::vector<RingVertex> outer;
  std::map<EdgeKey, TurnFraction> delta; // one entry per inner-outer edge

  int n() const { return static_cast<int>(inner.size() + outer.size()); }
};

// Spine-position interleaving count over same-page pairs; this is the exact
// crossing number of any good geometric realization of the layout.
long long crossings_two_page(const TwoPageLayout& l);

// Exact crossing count of a cylindrical layout: interleaving same-circle
// pairs (inner and outer separately) plus, for every pair of inner-outer
// edges sharing no endpoint, the number of integers strictly between d(0) and
// d(1), where d(t) is the angular difference of the two sweeps at radial
// parameter t.
long long crossings_cylindrical(const CylindricalLayout& l);

// Helper for the above: crossings of two sweeps with angular difference d0 at
// the inner end and d1 at the outer end.
long long sweep_crossings(const Rational& d0, const Rational& d1);

// Reduce an angular displacement to the geodesic representative in
// (-1/2, 1/2]; an exact half turn maps to +1/2 (deterministic tie rule).
TurnFraction geodesic_turn(const TurnFraction& t);

// Identity spine, independently uniform page per edge (mt19937_64-driven,
// reproducible across platforms for a fixed seed).
TwoPageLayout random_two_page(int n, std::uint64_t seed);

} // namespace crosslab

#endif
