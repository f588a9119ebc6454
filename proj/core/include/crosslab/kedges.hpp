#ifndef CROSSLAB_KEDGES_HPP
#define CROSSLAB_KEDGES_HPP

#include "crosslab/drawing.hpp"

#include <vector>

namespace crosslab {

// ---------------------------------------------------------------------------
// Edge classification.  For a directed edge pq and a third vertex r, the
// closed curve pq∘qr∘rp is simple (adjacent edges of a good drawing never
// cross).  r is on the left of pq when the disk bounded by that curve and
// not containing the designated face lies to the left of the traversal;
// with the unbounded face designated this is the sign of the signed area.
// An edge with exactly k vertices on one side (and n-2-k on the other) is a
// k-edge; k = min of the two side counts, so 0 <= k <= n/2 - 1.
// ---------------------------------------------------------------------------

enum class Side { left, right };

struct KEdgeSpectrum {
  int n = 0;                      // vertex count of the classified drawing
  std::vector<long long> counts;  // counts[k] = number of k-edges
};

// Prefix sums of a spectrum: leq[k] counts edges of class at most k, and
// leqleq[k] = sum of leq[0..k], equivalently sum of (k+1-i)*counts[i].
struct CumulativeTable {
  int n = 0;
  std::vector<long long> leq;
  std::vector<long long> leqleq;
};

// Precomputes the open shoelace weight of every edge so the signed area of
// any triangle loop is three lookups; only the designated-face membership
// test (skipped entirely for the unbounded face) walks polylines.
//
// Precondition throughout: the drawing is a valid good drawing.  The
// constructor rejects a reference point that lies on the drawing but does
// not re-run full validation.
class SideOracle {
 public:
  SideOracle(const Drawing& d, FaceRef f);
  // The oracle keeps a reference to the drawing, so binding a temporary
  // would dangle after the constructor returns.
  SideOracle(Drawing&&, FaceRef) = delete;

  // Side of r relative to the directed edge pq.
  Side side(int p, int q, int r) const;

  // min(#left, #right) over the other n-2 vertices.
  int edge_class(int u, int v) const;

  const Drawing& drawing() const { return *d_; }
  const FaceRef& face() const { return f_; }

 private:
  const Drawing* d_;
  FaceRef f_;
  std::map<EdgeKey, Rational> shoelace_;  // weight of the u -> v traversal

  Rational directed_weight(int a, int b) const;
  bool reference_inside_loop(int p, int q, int r) const;
};

// One-off classification; builds a throwaway oracle.
Side side_of(const Drawing& d, int p, int q, int r, const FaceRef& f);

// Class counts of every edge; sums to C(n, 2).
KEdgeSpectrum spectrum(const SideOracle& o);
KEdgeSpectrum spectrum(const Drawing& d, const FaceRef& f);

// Builds both prefix tables; the three equivalent expansions of leqleq
// (iterated prefix sums, the double sum, and the weighted single sum) are
// computed independently and must agree.
CumulativeTable cumulative(const KEdgeSpectrum& s);

// leq/leqleq extended beyond the table: leq saturates at C(n, 2), leqleq
// continues the running sum; k = -1 gives 0.  Used by the deletion
// recurrence, whose index can exceed the sub-drawing's top class.
long long leq_at(const KEdgeSpectrum& s, int k);
long long leqleq_at(const KEdgeSpectrum& s, int k);

// (1/4) * floor(n/2) * floor((n-1)/2) * floor((n-2)/2) * floor((n-3)/2),
// the conjectured minimum crossing number of K_n.
long long zeta(int n);

// Exact crossing count of a good drawing from its cumulative table:
//   2 * sum_{k=0}^{n/2-2} leqleq[k]
//     - (1/2) C(n,2) floor((n-2)/2)
//     - (1/2) (1 + (-1)^n) leqleq[n/2-2].
// The halves are computed in exact rationals; a non-integer result means
// the table does not belong to a good drawing and raises std::logic_error.
long long crossings_from_spectrum(const CumulativeTable& t);

// Recounts the crossings of d two independent ways: geometrically, and via
// the spectrum identity above with the unbounded face designated.
struct Identity2Report {
  long long crossings = 0;  // geometric pair count
  long long formula = 0;    // value of the spectrum identity
  bool equal = false;
};
Identity2Report check_identity2(const Drawing& d);

// Number of edges not incident to y whose class is the same in d and in
// d - y, and at most k.  Classes in both drawings are taken with respect to
// the face containing f's reference point (the unbounded face stays the
// unbounded face).  Requires 0 <= k <= (n-3)/2.
long long invariant_leq_k_count(const Drawing& d, int y, int k, const FaceRef& f);

// For x on the boundary of the designated face, the i-th vertex of the
// order induced by x must be joined to x by a min(i-1, n-1-i)-edge; checks
// every position and reports the first offender if any.
struct LastPointReport {
  bool pass = true;
  std::vector<int> order;  // the induced order that was checked
  int failing_index = 0;   // 1-based position of the first offender
  int expected = 0;
  int actual = 0;
};
LastPointReport check_prop_lastpoint(const Drawing& d, int x, const FaceRef& f);

// ---------------------------------------------------------------------------
// Deletion recurrence.  For a drawing D and vertex v, deleting v moves each
// edge not incident to v down by at most one class, and exactly the edges
// keeping their class (the invariant ones, counted up to k') make up the
// difference between the two cumulative tables:
//
//   leqleq_{k'}(D) = leqleq_{k'-1}(D - v)
//                    + sum_{l=0}^{k'} (k'+1-l) * e_l(v)
//                    + invariant count up to k'
//
// where e_l(v) is the number of l-edges of D incident to v.  The trace
// applies this step-by-step along a vertex sequence, deleting from the end.
// ---------------------------------------------------------------------------

struct DeletionStep {
  int r = 0;                       // 1-based step index in the order
  int vertex = -1;                 // vertex deleted at this step
  int sub_n = 0;                   // size of the larger drawing of the step
  bool kprime_in_range = false;    // k' <= sub_n / 2
  std::vector<long long> e_counts; // e_l for l = 0..k'
  long long invariant_count = 0;
  long long lhs = 0;               // leqleq_{k'} of the larger drawing
  long long rhs = 0;               // recurrence right-hand side
  bool holds = false;
};

struct DeletionTrace {
  std::vector<int> order;
  int kprime = 0;
  std::vector<DeletionStep> steps;  // step r = order.size() first
  bool all_hold = false;
};

DeletionTrace check_recurrence(const Drawing& d, const std::vector<int>& order,
                               int kprime);

// Per-k verdicts of leqleq[k] >= 3 * C(k+3, 3) for k = 0..kmax, the lower
// bound that holds whenever the drawing is (k+2)-shellable with the
// designated face as witness.  Requires kmax <= (n-3)/2.
struct BoundVerdict {
  int k = 0;
  long long lhs = 0;
  long long rhs = 0;
  bool pass = false;
};
std::vector<BoundVerdict> check_shellable_bound(const Drawing& d, const FaceRef& f,
                                                int kmax);

// Evaluates the crossing identity with every leqleq[k] replaced by its
// shellable lower bound 3 * C(k+3, 3); the result equals zeta(n), which is
// how the bound machinery certifies the minimum.  Requires n >= 3.
long long lower_bound_from_table(int n);

} // namespace crosslab

#endif
