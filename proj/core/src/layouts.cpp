#include "crosslab/layouts.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace crosslab {

namespace {

// position of each vertex id on the spine
std::vector<int> spine_positions(const TwoPageLayout& l) {
  std::vector<int> pos(l.spine.size());
  std::vector<bool> seen(l.spine.size(), false);
  for (std::size_t i = 0; i < l.spine.size(); ++i) {
    const int v = l.spine[i];
    if (v < 0 || v >= static_cast<int>(l.spine.size()) || seen[v])
      throw std::invalid_argument("spine is not a permutation of 0..n-1");
    seen[v] = true;
    pos[v] = static_cast<int>(i);
  }
  return pos;
}

bool interleave(int a, int b, int c, int d) {
  // open intervals (a,b), (c,d) with a<b, c<d on a line: proper interleaving
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

} // namespace

long long crossings_two_page(const TwoPageLayout& l) {
  const auto pos = spine_positions(l);
  const int n = l.n();
  if (static_cast<int>(l.pages.size()) != n * (n - 1) / 2)
    throw std::invalid_argument("page map must cover every edge of K_n");
  struct E { int a, b; Page p; };
  std::vector<E> es;
  es.reserve(l.pages.size());
  for (const auto& [e, p] : l.pages) {
    if (e.u < 0 || e.v >= n || e.u == e.v) throw std::invalid_argument("bad edge key in page map");
    int a = pos[e.u], b = pos[e.v];
    if (a > b) std::swap(a, b);
    es.push_back({a, b, p});
  }
  long long count = 0;
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      if (es[i].p != es[j].p) continue;
      if (interleave(es[i].a, es[i].b, es[j].a, es[j].b)) ++count;
    }
  return count;
}

TurnFraction geodesic_turn(const TurnFraction& t) {
  TurnFraction r = t - Rational(floor_int(t));  // now in [0, 1)
  if (r > Rational(1, 2)) r -= 1;               // (-1/2, 1/2]; exact 1/2 stays +1/2
  return r;
}

long long sweep_crossings(const Rational& d0, const Rational& d1) {
  const Int c = integers_strictly_between(d0, d1);
  return c.convert_to<long long>();
}

long long crossings_cylindrical(const CylindricalLayout& l) {
  auto ring_check = [](const std::vector<CylindricalLayout::RingVertex>& ring) {
    for (const auto& rv : ring)
      if (rv.turn < 0 || rv.turn >= 1)
        throw std::invalid_argument("ring positions must lie in [0, 1)");
    for (std::size_t i = 0; i < ring.size(); ++i)
      for (std::size_t j = i + 1; j < ring.size(); ++j)
        if (ring[i].turn == ring[j].turn)
          throw std::invalid_argument("coincident ring positions");
  };
  ring_check(l.inner);
  ring_check(l.outer);

  // Same-circle chords cross iff their endpoints interleave in circular order.
  auto chord_crossings = [](const std::vector<CylindricalLayout::RingVertex>& ring) {
    std::vector<CylindricalLayout::RingVertex> sorted = ring;
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.turn < b.turn; });
    const long long s = static_cast<long long>(sorted.size());
    // Every 4-subset of a circle contributes exactly one interleaving chord pair.
    return s < 4 ? 0 : s * (s - 1) * (s - 2) * (s - 3) / 24;
  };

  long long total = chord_crossings(l.inner) + chord_crossings(l.outer);

  struct Sweep { int in_id, out_id; TurnFraction alpha, delta; };
  std::vector<Sweep> sweeps;
  std::map<int, TurnFraction> inner_turn;
  std::map<int, TurnFraction> outer_turn;
  for (const auto& rv : l.inner) inner_turn[rv.id] = rv.turn;
  for (const auto& rv : l.outer) outer_turn[rv.id] = rv.turn;
  for (const auto& [e, dl] : l.delta) {
    const bool u_in = inner_turn.count(e.u) > 0;
    const bool v_in = inner_turn.count(e.v) > 0;
    if (u_in == v_in) throw std::invalid_argument("delta entry is not an inner-outer edge");
    const int in_id = u_in ? e.u : e.v;
    const int out_id = u_in ? e.v : e.u;
    // The sweep must land on the recorded outer position (mod full turns).
    const Rational land = inner_turn[in_id] + dl;
    if (land - Rational(floor_int(land)) != outer_turn[out_id])
      throw std::invalid_argument("delta is inconsistent with the ring positions");
    sweeps.push_back({in_id, out_id, inner_turn[in_id], dl});
  }
  const std::size_t expected = l.inner.size() * l.outer.size();
  if (sweeps.size() != expected)
    throw std::invalid_argument("delta map must cover every inner-outer edge");

  for (std::size_t i = 0; i < sweeps.size(); ++i)
    for (std::size_t j = i + 1; j < sweeps.size(); ++j) {
      const Sweep& a = sweeps[i];
      const Sweep& b = sweeps[j];
      if (a.in_id == b.in_id || a.out_id == b.out_id) continue; // adjacent
      const Rational d0 = b.alpha - a.alpha;
      const Rational d1 = d0 + (b.delta - a.delta);
      total += sweep_crossings(d0, d1);
    }
  return total;
}

TwoPageLayout random_two_page(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  TwoPageLayout l;
  l.spine.resize(n);
  for (int i = 0; i < n; ++i) l.spine[i] = i;
  std::mt19937_64 rng(seed);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      l.pages[EdgeKey(u, v)] = (rng() & 1) ? Page::top : Page::bottom;
  return l;
}

} // namespace crosslab
