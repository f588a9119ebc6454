#include "doctest.h"

#include "crosslab/kedges.hpp"
#include "crosslab/optimizer.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace crosslab;

namespace {

long long binom2(int n) { return static_cast<long long>(n) * (n - 1) / 2; }

long long binom4(int n) {
  return static_cast<long long>(n) * (n - 1) * (n - 2) * (n - 3) / 24;
}

} // namespace

TEST_CASE("conflict graphs pair exactly the interleaving edges") {
  for (int n : {3, 4, 5, 6, 8, 10}) {
    const ConflictGraph g = build_conflict_graph(n);
    CHECK(g.n == n);
    CHECK(g.node_count() == binom2(n));
    CHECK(g.conflicts == binom4(n));
    long long arcs = 0;
    for (int v = 0; v < g.node_count(); ++v) {
      for (int nb : g.adjacency[v]) {
        CHECK(nb != v);
        const auto& back = g.adjacency[nb];
        CHECK(std::find(back.begin(), back.end(), v) != back.end());
      }
      arcs += static_cast<long long>(g.adjacency[v].size());
    }
    CHECK(arcs == 2 * g.conflicts);
  }

  // K4 has the single conflict {0,2} vs {1,3}.
  const ConflictGraph g4 = build_conflict_graph(4);
  REQUIRE(g4.nodes.size() == 6);
  CHECK(g4.nodes[1] == EdgeKey(0, 2));
  CHECK(g4.nodes[4] == EdgeKey(1, 3));
  CHECK(g4.adjacency[1] == std::vector<int>{4});
  CHECK(g4.adjacency[4] == std::vector<int>{1});

  CHECK_THROWS_AS(build_conflict_graph(2), std::invalid_argument);
}

TEST_CASE("exact search reaches the closed-form floor and proves it") {
  for (int n = 4; n <= 8; ++n) {
    const OptResult r = exact_min_crossings(n);
    CHECK(r.n == n);
    CHECK(r.crossings == zeta(n));
    CHECK(r.method == OptMethod::exact);
    CHECK(r.status == ProofStatus::optimal);
    CHECK(static_cast<long long>(r.assignment.size()) == binom2(n));
  }

  // A starved budget returns the incumbent and says so.
  const OptResult starved = exact_min_crossings(8, 10);
  CHECK(starved.status == ProofStatus::heuristic);
  CHECK(starved.crossings >= zeta(8));
  const OptResult none = exact_min_crossings(8, 0);
  CHECK(none.status == ProofStatus::heuristic);
  CHECK(none.crossings >= zeta(8));

  CHECK_THROWS_AS(exact_min_crossings(8, -1), std::invalid_argument);
  CHECK_THROWS_AS(exact_min_crossings(2), std::invalid_argument);
}

TEST_CASE("local search is deterministic and echoes its knobs") {
  const OptResult a = local_search(6, 42);
  const OptResult b = local_search(6, 42);
  CHECK(a.crossings == 3);
  CHECK(a.crossings == b.crossings);
  CHECK(a.assignment == b.assignment);
  CHECK(a.method == OptMethod::local_search);
  CHECK(a.status == ProofStatus::heuristic);
  CHECK(a.seed == 42);
  CHECK(a.restarts == 8);
  CHECK(a.iterations == 20'000);

  // restarts = 0 skips the annealing and returns the greedy baseline.
  const OptResult greedy = local_search(6, 42, 0);
  CHECK(greedy.crossings >= zeta(6));
  CHECK(greedy.restarts == 0);
  CHECK(greedy.crossings == local_search(6, 42, 0).crossings);

  CHECK_THROWS_AS(local_search(6, 1, -1), std::invalid_argument);
  CHECK_THROWS_AS(local_search(6, 1, 2, -5), std::invalid_argument);
  CHECK_THROWS_AS(local_search(2, 1), std::invalid_argument);
}

TEST_CASE("local search reaches the floor reliably at moderate sizes") {
  for (int n : {9, 10, 11, 12}) {
    int hits = 0;
    for (std::uint64_t s = 1; s <= 20; ++s) {
      const OptResult r = local_search(n, s);
      CHECK(r.crossings >= zeta(n));
      if (r.crossings == zeta(n)) ++hits;
    }
    CHECK(hits >= 19); // at least 95% of the seeded runs
  }
}

TEST_CASE("reported assignments admit no improving single flip") {
  const OptResult r = local_search(9, 3);
  const ConflictGraph g = build_conflict_graph(9);
  for (int v = 0; v < g.node_count(); ++v) {
    int same = 0, other = 0;
    for (int nb : g.adjacency[v])
      ++(r.assignment[nb] == r.assignment[v] ? same : other);
    CHECK(other >= same);
  }
}

TEST_CASE("assembled layouts recount to the reported value") {
  for (int n = 5; n <= 8; ++n) {
    const OptResult r = exact_min_crossings(n);
    CHECK(crossings_two_page(assemble_layout(r)) == r.crossings);
  }
  const OptResult r10 = local_search(10, 11);
  const TwoPageLayout l = assemble_layout(r10);
  CHECK(l.n() == 10);
  CHECK(crossings_two_page(l) == r10.crossings);

  OptResult torn = r10;
  torn.assignment.pop_back();
  CHECK_THROWS_AS(assemble_layout(torn), std::invalid_argument);
}

TEST_CASE("certification re-verifies geometry and rejects fabrications") {
  const OptResult r8 = exact_min_crossings(8);
  const CertifyReport rep = certify_result(r8);
  CHECK(rep.zeta_n == 18);
  CHECK(rep.at_or_above_floor);
  CHECK(rep.layout_crossings == 18);
  CHECK(rep.pipeline.conclusive);
  CHECK(rep.pipeline.kind == CertificateKind::lemma_cycle);
  CHECK(rep.pipeline.bound_chain_ok);
  CHECK(rep.ok);

  const CertifyReport rep12 = certify_result(local_search(12, 7));
  CHECK(rep12.layout_crossings == rep12.pipeline.crossings);
  CHECK(rep12.ok);

  // A claim below the floor contradicts a theorem: rejected unseen.
  OptResult fake = r8;
  fake.crossings = 5;
  const CertifyReport rejected = certify_result(fake);
  CHECK_FALSE(rejected.at_or_above_floor);
  CHECK_FALSE(rejected.ok);

  // A tampered count above the floor is caught by the recount.
  OptResult tampered = r8;
  tampered.crossings = 19;
  CHECK_THROWS_AS(certify_result(tampered), std::logic_error);
}

TEST_CASE("the optimum is invariant under spine relabeling") {
  // Exhaustively minimize over all 2^10 page assignments of K5 for 20
  // random spine orders: every labeling bottoms out at the same value.
  std::mt19937_64 rng(2026);
  std::vector<int> spine(5);
  std::iota(spine.begin(), spine.end(), 0);
  for (int trial = 0; trial < 20; ++trial) {
    std::shuffle(spine.begin(), spine.end(), rng);
    TwoPageLayout l;
    l.spine = spine;
    long long best = -1;
    for (int mask = 0; mask < (1 << 10); ++mask) {
      l.pages.clear();
      int bit = 0;
      for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
          l.pages.emplace(EdgeKey(i, j),
                          (mask >> bit++) & 1 ? Page::bottom : Page::top);
      const long long c = crossings_two_page(l);
      if (best < 0 || c < best) best = c;
    }
    CHECK(best == zeta(5));
  }
}

TEST_CASE("optimizer enums print their contract names") {
  CHECK(to_string(OptMethod::exact) == "exact");
  CHECK(to_string(OptMethod::local_search) == "local-search");
  CHECK(to_string(ProofStatus::optimal) == "optimal");
  CHECK(to_string(ProofStatus::heuristic) == "heuristic");
}
