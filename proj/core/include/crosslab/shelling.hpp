#ifndef CROSSLAB_SHELLING_HPP
#define CROSSLAB_SHELLING_HPP

#include "crosslab/drawing.hpp"
#include "crosslab/kedges.hpp"

#include <optional>
#include <string>
#include <vector>

namespace crosslab {

// One crossing found on a cycle edge.  The crossing edge's endpoints are
// resolved to 1-based positions along the cycle (-1 when the endpoint is not
// a cycle vertex), with i < j whenever both resolve.
struct CycleCrossing {
  EdgeKey edge;
  int i = -1;
  int j = -1;
  bool ok = false;
};

// Evidence for the cycle edge between positions k and k+1 (the closing edge
// v_s v_1 is reported with k = s).
struct CycleEdgeReport {
  int k = 0;
  EdgeKey cycle_edge;
  std::vector<CycleCrossing> crossings;
  bool ok = true;
};

// Verdict of the two-part cycle condition: the closing edge v_s v_1 must be
// crossing-free, and every crossing on the k-th cycle edge must come from an
// edge between cycle positions i < k and j > k+1.  A passing cycle proves
// the drawing s-shellable with the cycle sequence as the shelling order.
struct CycleWitness {
  std::vector<int> cycle;
  std::vector<CycleEdgeReport> steps;  // k = 1..s-1
  CycleEdgeReport closing;             // k = s; any crossing here fails
  std::vector<std::string> violations;
  bool pass = false;
};

// Evaluates the cycle condition.  The cycle is given as a vertex sequence
// v_1..v_s, s >= 3, of distinct vertices of d; repeated or unknown vertices
// raise std::invalid_argument.
CycleWitness check_lemma_cycle(const Drawing& d, const std::vector<int>& cycle);

// The deterministic witness region paired with a passing cycle condition: a
// persistent reference to the face on the left of the closing edge's first
// segment, traversed from v_s towards v_1.  Returned as the unbounded face
// or an interior point, so it survives vertex deletions.
FaceRef cycle_witness_face(const Drawing& d, const std::vector<int>& cycle);

// Searches the subgraph of crossing-free edges for a simple cycle with at
// least `target` (>= 3) vertices: vertices of degree < 2 are pruned, then a
// depth-first search runs from each start in ascending id order, extending
// paths by ascending neighbour id.  Every edge extension consumes budget;
// std::nullopt means the search was exhausted (or ran out of budget), which
// is not a proof that no such cycle exists.
std::optional<std::vector<int>> find_crossing_free_cycle(const Drawing& d, int target,
                                                         long long budget = 10'000'000);

// Boundary-membership verdict for the sub-drawing that keeps v_i..v_j (plus
// every vertex outside the shelling sequence).  Positions are 1-based.
struct PairVerdict {
  int i = 0;
  int j = 0;
  bool vi_on_boundary = false;
  bool vj_on_boundary = false;
  bool pass() const { return vi_on_boundary && vj_on_boundary; }
};

struct ShellingCertificate {
  std::vector<int> S;
  FaceRef witness;
  std::vector<PairVerdict> pairs;  // lexicographic (i, j), i < j
  bool valid = false;
};

// The definitional check: for every pair i < j, delete the prefix v_1..v_i-1
// and suffix v_j+1..v_s, locate the face containing the witness reference,
// and require v_i and v_j on its boundary.  A single vertex is checked
// against the witness face of d itself (reported as the degenerate pair
// (1, 1)).  A witness point that lands on a sub-drawing raises
// std::invalid_argument: the caller must re-seat the reference point.
ShellingCertificate verify_shelling_direct(const Drawing& d, const std::vector<int>& S,
                                           const FaceRef& witness);

enum class CertificateKind { none, lemma_cycle, x_order, direct };
std::string to_string(CertificateKind k);

// Outcome of the certification pipeline.  `conclusive` means a shelling
// certificate with s >= n/2 was found, which guarantees crossings >= zeta(n)
// (asserted); the bound chain reports leqleq[k] >= 3*C(k+3, 3) for
// k <= min(s-2, (n-3)/2) with the spectrum designated at the certificate's
// witness face.  An inconclusive verdict never claims non-shellability.
struct PipelineVerdict {
  int n = 0;
  long long crossings = 0;
  long long zeta_n = 0;
  CertificateKind kind = CertificateKind::none;
  std::vector<int> S;
  FaceRef witness;
  int s = 0;
  std::vector<BoundVerdict> bound_chain;
  bool bound_chain_ok = false;
  bool conclusive = false;
};

// Tries, in order: (a) a crossing-free cycle of length >= max(3, ceil(n/2))
// promoted by the cycle condition; (b) for drawings that are x-bounded with
// pairwise distinct vertex x-coordinates, the x-order sequence verified
// definitionally against the unbounded face; (c) a caller-supplied sequence
// and witness, verified definitionally.
PipelineVerdict theorem1_pipeline(const Drawing& d);
PipelineVerdict theorem1_pipeline(const Drawing& d,
                                  const std::optional<std::vector<int>>& caller_s,
                                  const FaceRef& caller_witness);

}  // namespace crosslab

#endif  // CROSSLAB_SHELLING_HPP
