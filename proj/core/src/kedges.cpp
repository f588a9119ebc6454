#include "crosslab/kedges.hpp"

#include "crosslab/arrangement.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace crosslab {

namespace {

long long pair_count(int n) { return static_cast<long long>(n) * (n - 1) / 2; }

// C(m, 3) in long long; m stays far below overflow range here.
long long binom3(long long m) {
  return m < 3 ? 0 : m * (m - 1) * (m - 2) / 6;
}

void require_vertex(const Drawing& d, int v, const char* what) {
  if (d.vertices.find(v) == d.vertices.end()) {
    throw std::invalid_argument(std::string(what) + ": unknown vertex id " +
                                std::to_string(v));
  }
}

} // namespace

// ---------------------------------------------------------------------------
// SideOracle
// ---------------------------------------------------------------------------

SideOracle::SideOracle(const Drawing& d, FaceRef f) : d_(&d), f_(std::move(f)) {
  require_face_ref_off_drawing(d, f_);
  for (const auto& [e, pl] : d.edges) shoelace_[e] = open_shoelace(pl);
}

Rational SideOracle::directed_weight(int a, int b) const {
  auto it = shoelace_.find(EdgeKey{a, b});
  if (it == shoelace_.end()) {
    throw std::invalid_argument("no edge between " + std::to_string(a) + " and " +
                                std::to_string(b));
  }
  return a < b ? it->second : -it->second;
}

bool SideOracle::reference_inside_loop(int p, int q, int r) const {
  // Concatenate the three directed polylines into one closed loop, dropping
  // each repeated joint; point_in_loop closes the final gap itself.
  Polyline loop;
  const int trip[3][2] = {{p, q}, {q, r}, {r, p}};
  for (const auto& leg : trip) {
    Polyline pl = d_->edge(leg[0], leg[1]);
    if (leg[0] > leg[1]) std::reverse(pl.begin(), pl.end());
    for (std::size_t i = loop.empty() ? 0 : 1; i < pl.size(); ++i)
      loop.push_back(pl[i]);
  }
  loop.pop_back();  // the closing point equals the first
  return point_in_loop(loop, *f_.point);
}

Side SideOracle::side(int p, int q, int r) const {
  if (p == q || p == r || q == r) {
    throw std::invalid_argument("side query needs three distinct vertices");
  }
  const Rational area2 =
      directed_weight(p, q) + directed_weight(q, r) + directed_weight(r, p);
  if (area2 == 0) {
    throw std::invalid_argument(
        "triangle loop has zero signed area; the drawing cannot be good");
  }
  bool ccw = area2 > 0;
  if (!f_.is_unbounded() && reference_inside_loop(p, q, r)) ccw = !ccw;
  return ccw ? Side::left : Side::right;
}

int SideOracle::edge_class(int u, int v) const {
  require_vertex(*d_, u, "edge_class");
  require_vertex(*d_, v, "edge_class");
  int left = 0, right = 0;
  for (const auto& [id, pos] : d_->vertices) {
    if (id == u || id == v) continue;
    (side(u, v, id) == Side::left ? left : right)++;
  }
  return std::min(left, right);
}

Side side_of(const Drawing& d, int p, int q, int r, const FaceRef& f) {
  require_vertex(d, p, "side_of");
  require_vertex(d, q, "side_of");
  require_vertex(d, r, "side_of");
  return SideOracle(d, f).side(p, q, r);
}

// ---------------------------------------------------------------------------
// Spectra and cumulative tables
// ---------------------------------------------------------------------------

KEdgeSpectrum spectrum(const SideOracle& o) {
  const Drawing& d = o.drawing();
  KEdgeSpectrum s;
  s.n = d.n();
  s.counts.assign(std::max(0, s.n / 2), 0);
  for (const auto& [e, pl] : d.edges) {
    const int k = o.edge_class(e.u, e.v);
    if (k < 0 || k >= static_cast<int>(s.counts.size())) {
      throw std::logic_error("edge class out of range for the vertex count");
    }
    ++s.counts[k];
  }
  long long total = 0;
  for (long long c : s.counts) total += c;
  if (total != pair_count(s.n)) {
    throw std::logic_error("class counts do not sum to the number of edges");
  }
  return s;
}

KEdgeSpectrum spectrum(const Drawing& d, const FaceRef& f) {
  return spectrum(SideOracle(d, f));
}

CumulativeTable cumulative(const KEdgeSpectrum& s) {
  const std::size_t m = s.counts.size();
  CumulativeTable t;
  t.n = s.n;
  t.leq.resize(m);
  t.leqleq.resize(m);

  long long run = 0;
  for (std::size_t k = 0; k < m; ++k) {
    run += s.counts[k];
    t.leq[k] = run;
  }

  // Three independent expansions of the same quantity.
  std::vector<long long> by_prefix(m), by_double(m), by_weight(m);
  run = 0;
  for (std::size_t k = 0; k < m; ++k) {
    run += t.leq[k];
    by_prefix[k] = run;
  }
  for (std::size_t k = 0; k < m; ++k) {
    long long total = 0;
    for (std::size_t j = 0; j <= k; ++j)
      for (std::size_t i = 0; i <= j; ++i) total += s.counts[i];
    by_double[k] = total;
  }
  for (std::size_t k = 0; k < m; ++k) {
    long long total = 0;
    for (std::size_t i = 0; i <= k; ++i)
      total += static_cast<long long>(k + 1 - i) * s.counts[i];
    by_weight[k] = total;
  }
  if (by_prefix != by_double || by_double != by_weight) {
    throw std::logic_error("cumulative table expansions disagree");
  }
  t.leqleq = by_prefix;
  return t;
}

long long leq_at(const KEdgeSpectrum& s, int k) {
  if (k < 0) return 0;
  long long total = 0;
  const int top = std::min<int>(k, static_cast<int>(s.counts.size()) - 1);
  for (int i = 0; i <= top; ++i) total += s.counts[i];
  return total;
}

long long leqleq_at(const KEdgeSpectrum& s, int k) {
  long long total = 0;
  for (int j = 0; j <= k; ++j) total += leq_at(s, j);
  return total;
}

// ---------------------------------------------------------------------------
// The crossing identity
// ---------------------------------------------------------------------------

long long zeta(int n) {
  if (n < 1) throw std::invalid_argument("zeta: n must be at least 1");
  const long long a = n / 2, b = (n - 1) / 2, c = (n - 2) / 2, e = (n - 3) / 2;
  return a * b * c * e / 4;  // the product of two consecutive-halves pairs is
                             // divisible by 4, so integer division is exact
}

long long crossings_from_spectrum(const CumulativeTable& t) {
  const int n = t.n;
  if (n < 3) throw std::domain_error("crossing identity needs n >= 3");
  if (t.leqleq.size() != static_cast<std::size_t>(n / 2)) {
    throw std::invalid_argument("cumulative table size does not match n");
  }
  const int top = n / 2 - 2;  // -1 for n = 3: empty sum, vanishing last term
  Rational total(0);
  for (int k = 0; k <= top; ++k) total += 2 * Rational(t.leqleq[k]);
  total -= Rational(pair_count(n) * ((n - 2) / 2), 2);
  if (n % 2 == 0 && top >= 0) total -= Rational(t.leqleq[top]);
  if (denominator(total) != 1) {
    throw std::logic_error("crossing identity produced a non-integer; "
                           "the table does not belong to a good drawing");
  }
  return numerator(total).convert_to<long long>();
}

Identity2Report check_identity2(const Drawing& d) {
  Identity2Report rep;
  rep.crossings = total_crossings(compute_crossings_geometric(d));
  rep.formula =
      crossings_from_spectrum(cumulative(spectrum(d, FaceRef::unbounded())));
  rep.equal = rep.crossings == rep.formula;
  return rep;
}

// ---------------------------------------------------------------------------
// Invariant edges and the deletion recurrence
// ---------------------------------------------------------------------------

namespace {

// Invariant edges between a drawing and its one-vertex deletion, counted up
// to class k, given ready-made oracles for both drawings.
long long invariant_count(const SideOracle& big, const SideOracle& small, int k) {
  long long count = 0;
  for (const auto& [e, pl] : small.drawing().edges) {
    const int cb = big.edge_class(e.u, e.v);
    if (cb > k) continue;  // classes only drop under deletion
    if (cb == small.edge_class(e.u, e.v)) ++count;
  }
  return count;
}

} // namespace

long long invariant_leq_k_count(const Drawing& d, int y, int k, const FaceRef& f) {
  require_vertex(d, y, "invariant_leq_k_count");
  const int n = d.n();
  // n = 3 admits no invariant class at all: the deleted drawing is a single
  // edge, so the range below is treated as empty rather than {0}.
  if (n < 4 || k < 0 || 2 * k > n - 3) {
    throw std::domain_error("invariant_leq_k_count: k must satisfy 0 <= k <= (n-3)/2");
  }
  const Drawing sub = delete_vertices(d, {y});
  const SideOracle big(d, f), small(sub, f);
  return invariant_count(big, small, k);
}

LastPointReport check_prop_lastpoint(const Drawing& d, int x, const FaceRef& f) {
  LastPointReport rep;
  rep.order = induced_boundary_order(d, x, f);
  const SideOracle oracle(d, f);
  const int n = d.n();
  for (int i = 1; i <= static_cast<int>(rep.order.size()); ++i) {
    const int expected = std::min(i - 1, n - 1 - i);
    const int actual = oracle.edge_class(x, rep.order[i - 1]);
    if (actual != expected) {
      rep.pass = false;
      rep.failing_index = i;
      rep.expected = expected;
      rep.actual = actual;
      return rep;
    }
  }
  return rep;
}

DeletionTrace check_recurrence(const Drawing& d, const std::vector<int>& order,
                               int kprime) {
  if (order.empty()) throw std::invalid_argument("check_recurrence: empty order");
  if (kprime < 0) throw std::invalid_argument("check_recurrence: negative k'");
  {
    std::set<int> seen;
    for (int v : order) {
      require_vertex(d, v, "check_recurrence");
      if (!seen.insert(v).second) {
        throw std::invalid_argument("check_recurrence: repeated vertex " +
                                    std::to_string(v));
      }
    }
  }

  DeletionTrace trace;
  trace.order = order;
  trace.kprime = kprime;
  trace.all_hold = true;

  const FaceRef f = FaceRef::unbounded();
  Drawing current = d;
  std::optional<SideOracle> big;
  big.emplace(current, f);

  for (int r = static_cast<int>(order.size()); r >= 1; --r) {
    const int victim = order[r - 1];
    DeletionStep step;
    step.r = r;
    step.vertex = victim;
    step.sub_n = current.n();
    step.kprime_in_range = kprime <= step.sub_n / 2;

    const KEdgeSpectrum spec_big = spectrum(*big);
    step.lhs = leqleq_at(spec_big, kprime);

    // Classes of the edges incident to the deleted vertex.
    step.e_counts.assign(kprime + 1, 0);
    long long incident_sum = 0;
    for (const auto& [id, pos] : current.vertices) {
      if (id == victim) continue;
      const int c = big->edge_class(victim, id);
      if (c <= kprime) ++step.e_counts[c];
    }
    for (int l = 0; l <= kprime; ++l)
      incident_sum += static_cast<long long>(kprime + 1 - l) * step.e_counts[l];

    long long smaller_term = 0;
    if (current.n() >= 2) {
      const Drawing next = delete_vertices(current, {victim});
      SideOracle small(next, f);
      const KEdgeSpectrum spec_small = spectrum(small);
      smaller_term = leqleq_at(spec_small, kprime - 1);
      step.invariant_count = invariant_count(*big, small, kprime);
      step.rhs = smaller_term + incident_sum + step.invariant_count;
      current = next;
      big.emplace(current, f);
    } else {
      // Deleting the final vertex: every term of the smaller drawing is 0.
      step.invariant_count = 0;
      step.rhs = incident_sum;
      big.reset();
    }

    step.holds = step.lhs == step.rhs;
    if (!step.holds) trace.all_hold = false;
    trace.steps.push_back(step);
    if (!big) break;
  }
  return trace;
}

// ---------------------------------------------------------------------------
// Shellable lower bounds
// ---------------------------------------------------------------------------

std::vector<BoundVerdict> check_shellable_bound(const Drawing& d, const FaceRef& f,
                                                int kmax) {
  const int n = d.n();
  if (kmax < 0 || 2 * kmax > n - 3) {
    throw std::domain_error("check_shellable_bound: kmax must satisfy 0 <= kmax <= (n-3)/2");
  }
  const CumulativeTable t = cumulative(spectrum(d, f));
  std::vector<BoundVerdict> verdicts;
  for (int k = 0; k <= kmax; ++k) {
    BoundVerdict v;
    v.k = k;
    v.lhs = t.leqleq[k];
    v.rhs = 3 * binom3(k + 3);
    v.pass = v.lhs >= v.rhs;
    verdicts.push_back(v);
  }
  return verdicts;
}

long long lower_bound_from_table(int n) {
  if (n < 3) throw std::invalid_argument("lower_bound_from_table: n must be >= 3");
  const int top = n / 2 - 2;
  Rational total(0);
  for (int k = 0; k <= top; ++k) total += 2 * Rational(3 * binom3(k + 3));
  total -= Rational(pair_count(n) * ((n - 2) / 2), 2);
  if (n % 2 == 0 && top >= 0) total -= Rational(3 * binom3(top + 3));
  if (denominator(total) != 1) {
    throw std::logic_error("lower bound evaluation produced a non-integer");
  }
  return numerator(total).convert_to<long long>();
}

} // namespace crosslab
