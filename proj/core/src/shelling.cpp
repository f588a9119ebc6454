#include "crosslab/shelling.hpp"

#include "crosslab/arrangement.hpp"
#include "crosslab/constructions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace crosslab {

namespace {

void validate_cycle(const Drawing& d, const std::vector<int>& cycle, std::size_t min_len) {
  if (cycle.size() < min_len)
    throw std::invalid_argument("cycle must list at least " + std::to_string(min_len) +
                                " vertices");
  std::set<int> seen;
  for (int v : cycle) {
    if (!d.vertices.count(v))
      throw std::invalid_argument("cycle vertex " + std::to_string(v) +
                                  " is not in the drawing");
    if (!seen.insert(v).second)
      throw std::invalid_argument("cycle repeats vertex " + std::to_string(v));
  }
}

std::string edge_name(const EdgeKey& e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

// crossing partners of every edge, from precomputed records
std::map<EdgeKey, std::vector<EdgeKey>> crossing_partners(
    const std::vector<CrossingRecord>& records) {
  std::map<EdgeKey, std::vector<EdgeKey>> m;
  for (const CrossingRecord& r : records) {
    m[r.a].push_back(r.b);
    m[r.b].push_back(r.a);
  }
  return m;
}

CycleWitness check_lemma_cycle_impl(const Drawing& d, const std::vector<int>& cycle,
                                    const std::vector<CrossingRecord>& records) {
  validate_cycle(d, cycle, 3);
  const int s = static_cast<int>(cycle.size());
  std::map<int, int> pos;  // vertex id -> 1-based cycle position
  for (int k = 0; k < s; ++k) pos[cycle[k]] = k + 1;
  const auto partners = crossing_partners(records);

  CycleWitness w;
  w.cycle = cycle;
  auto report_edge = [&](int k, int u, int v) {
    CycleEdgeReport rep;
    rep.k = k;
    rep.cycle_edge = EdgeKey(u, v);
    const auto it = partners.find(rep.cycle_edge);
    if (it == partners.end()) return rep;
    for (const EdgeKey& f : it->second) {
      CycleCrossing c;
      c.edge = f;
      const auto pu = pos.find(f.u), pv = pos.find(f.v);
      if (pu != pos.end()) c.i = pu->second;
      if (pv != pos.end()) c.j = pv->second;
      if (c.i > c.j && c.j != -1) std::swap(c.i, c.j);
      if (k == s) {
        c.ok = false;  // the closing edge admits no crossing at all
        w.violations.push_back("closing edge " + edge_name(rep.cycle_edge) +
                               " is crossed by " + edge_name(f));
      } else if (c.i == -1 || c.j == -1) {
        c.ok = false;
        w.violations.push_back("edge " + edge_name(f) + " crossing cycle edge " +
                               std::to_string(k) + " has an endpoint off the cycle");
      } else {
        c.ok = c.i < k && c.j > k + 1;
        if (!c.ok)
          w.violations.push_back("edge " + edge_name(f) + " crossing cycle edge " +
                                 std::to_string(k) + " sits at positions (" +
                                 std::to_string(c.i) + "," + std::to_string(c.j) +
                                 "), outside i<" + std::to_string(k) + ", j>" +
                                 std::to_string(k + 1));
      }
      rep.ok = rep.ok && c.ok;
      rep.crossings.push_back(c);
    }
    return rep;
  };

  w.pass = true;
  for (int k = 1; k < s; ++k) {
    w.steps.push_back(report_edge(k, cycle[k - 1], cycle[k]));
    w.pass = w.pass && w.steps.back().ok;
  }
  w.closing = report_edge(s, cycle[s - 1], cycle[0]);
  w.pass = w.pass && w.closing.ok;
  return w;
}

FaceRef cycle_witness_face_impl(const Drawing& d, const std::vector<int>& cycle,
                                const std::vector<CrossingRecord>& records) {
  validate_cycle(d, cycle, 3);
  const int vs = cycle.back();
  const int v1 = cycle.front();
  const Arrangement a = planarize(d, records);
  const EdgeKey key(vs, v1);
  int h = -1;  // directed arc leaving vs along the closing edge
  for (std::size_t i = 0; i < a.arcs.size(); ++i) {
    const Arrangement::Arc& arc = a.arcs[i];
    if (!(arc.edge == key)) continue;
    if (a.nodes[arc.a].vertex_id == vs) h = 2 * static_cast<int>(i);
    if (a.nodes[arc.b].vertex_id == vs) h = 2 * static_cast<int>(i) + 1;
    if (h >= 0) break;
  }
  if (h < 0) throw std::logic_error("closing edge has no arc at its tail vertex");
  for (std::size_t f = 0; f < a.faces.size(); ++f)
    for (int g : a.faces[f].walk)
      if (g == h)
        return static_cast<int>(f) == a.unbounded_face
                   ? FaceRef::unbounded()
                   : FaceRef::at(face_interior_point(a, static_cast<int>(f)));
  throw std::logic_error("directed arc missing from every face walk");
}

std::optional<std::vector<int>> find_cycle_impl(const Drawing& d,
                                               const std::vector<CrossingRecord>& records,
                                               int target, long long budget) {
  if (target < 3) throw std::invalid_argument("cycle search needs target >= 3");
  std::set<EdgeKey> crossed;
  for (const CrossingRecord& r : records) {
    crossed.insert(r.a);
    crossed.insert(r.b);
  }
  std::map<int, std::vector<int>> adj;
  for (const auto& [e, pl] : d.edges) {
    if (crossed.count(e)) continue;
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  // prune vertices that cannot lie on any cycle
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (auto it = adj.begin(); it != adj.end();) {
      if (static_cast<int>(it->second.size()) >= 2) {
        ++it;
        continue;
      }
      for (int w : it->second) {
        auto& back = adj[w];
        back.erase(std::remove(back.begin(), back.end(), it->first), back.end());
      }
      it = adj.erase(it);
      shrunk = true;
    }
  }
  for (auto& [v, nb] : adj) std::sort(nb.begin(), nb.end());

  std::vector<int> path;
  std::set<int> on_path;
  long long left = budget;
  // depth-first over simple paths whose smallest vertex is the start
  std::function<std::optional<std::vector<int>>(int, int)> dfs =
      [&](int start, int u) -> std::optional<std::vector<int>> {
    for (int w : adj[u]) {
      if (--left < 0) return std::nullopt;
      if (w == start && static_cast<int>(path.size()) >= target) return path;
      if (w <= start || on_path.count(w)) continue;
      path.push_back(w);
      on_path.insert(w);
      if (auto found = dfs(start, w)) return found;
      if (left < 0) return std::nullopt;
      on_path.erase(w);
      path.pop_back();
    }
    return std::nullopt;
  };
  for (const auto& [start, nb] : adj) {
    path = {start};
    on_path = {start};
    if (auto found = dfs(start, start)) return found;
    if (left < 0) return std::nullopt;
  }
  return std::nullopt;
}

ShellingCertificate verify_shelling_impl(const Drawing& d,
                                         const std::vector<CrossingRecord>& records,
                                         const std::vector<int>& S, const FaceRef& witness) {
  validate_cycle(d, S, 1);  // distinct, known; a single vertex is allowed
  if (!witness.is_unbounded()) require_face_ref_off_drawing(d, witness);
  ShellingCertificate cert;
  cert.S = S;
  cert.witness = witness;
  const int s = static_cast<int>(S.size());

  auto check_pair = [&](int i, int j) {
    std::set<int> victims;
    for (int t = 0; t < s; ++t)
      if (t < i - 1 || t >= j) victims.insert(S[t]);
    const Drawing sub = victims.empty() ? d : delete_vertices(d, victims);
    const Arrangement a = planarize(sub, filter_records(records, sub));
    const std::set<int> boundary = boundary_vertices(a, locate_face(a, witness));
    PairVerdict v;
    v.i = i;
    v.j = j;
    v.vi_on_boundary = boundary.count(S[i - 1]) > 0;
    v.vj_on_boundary = boundary.count(S[j - 1]) > 0;
    return v;
  };

  cert.valid = true;
  if (s == 1) {
    PairVerdict v = check_pair(1, 1);
    cert.valid = v.pass();
    cert.pairs.push_back(v);
    return cert;
  }
  for (int i = 1; i <= s; ++i)
    for (int j = i + 1; j <= s; ++j) {
      PairVerdict v = check_pair(i, j);
      cert.valid = cert.valid && v.pass();
      cert.pairs.push_back(v);
    }
  return cert;
}

bool distinct_x(const Drawing& d) {
  std::set<Rational> xs;
  for (const auto& [id, p] : d.vertices)
    if (!xs.insert(p.x).second) return false;
  return true;
}

std::vector<int> x_order(const Drawing& d) {
  std::vector<int> ids = d.vertex_ids();
  std::sort(ids.begin(), ids.end(),
            [&](int a, int b) { return d.vertices.at(a).x < d.vertices.at(b).x; });
  return ids;
}

}  // namespace

CycleWitness check_lemma_cycle(const Drawing& d, const std::vector<int>& cycle) {
  return check_lemma_cycle_impl(d, cycle, compute_crossings_geometric(d));
}

FaceRef cycle_witness_face(const Drawing& d, const std::vector<int>& cycle) {
  return cycle_witness_face_impl(d, cycle, compute_crossings_geometric(d));
}

std::optional<std::vector<int>> find_crossing_free_cycle(const Drawing& d, int target,
                                                         long long budget) {
  return find_cycle_impl(d, compute_crossings_geometric(d), target, budget);
}

ShellingCertificate verify_shelling_direct(const Drawing& d, const std::vector<int>& S,
                                           const FaceRef& witness) {
  return verify_shelling_impl(d, compute_crossings_geometric(d), S, witness);
}

std::string to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::none: return "none";
    case CertificateKind::lemma_cycle: return "lemma-cycle";
    case CertificateKind::x_order: return "x-order";
    case CertificateKind::direct: return "direct";
  }
  throw std::logic_error("unknown certificate kind");
}

PipelineVerdict theorem1_pipeline(const Drawing& d) {
  return theorem1_pipeline(d, std::nullopt, FaceRef::unbounded());
}

PipelineVerdict theorem1_pipeline(const Drawing& d,
                                  const std::optional<std::vector<int>>& caller_s,
                                  const FaceRef& caller_witness) {
  const std::vector<CrossingRecord> records = compute_crossings_geometric(d);
  PipelineVerdict v;
  v.n = d.n();
  v.crossings = total_crossings(records);
  v.zeta_n = zeta(v.n);

  const int target = std::max(3, (v.n + 1) / 2);
  if (auto cyc = find_cycle_impl(d, records, target, 10'000'000)) {
    const CycleWitness cw = check_lemma_cycle_impl(d, *cyc, records);
    if (!cw.pass)
      throw std::logic_error("crossing-free cycle failed the cycle condition");
    v.kind = CertificateKind::lemma_cycle;
    v.S = *cyc;
    v.witness = cycle_witness_face_impl(d, *cyc, records);
  } else if (distinct_x(d) && is_x_bounded(d)) {
    const std::vector<int> order = x_order(d);
    const ShellingCertificate cert =
        verify_shelling_impl(d, records, order, FaceRef::unbounded());
    if (cert.valid) {
      v.kind = CertificateKind::x_order;
      v.S = order;
      v.witness = FaceRef::unbounded();
    }
  }
  if (v.kind == CertificateKind::none && caller_s) {
    const ShellingCertificate cert =
        verify_shelling_impl(d, records, *caller_s, caller_witness);
    if (cert.valid) {
      v.kind = CertificateKind::direct;
      v.S = *caller_s;
      v.witness = caller_witness;
    }
  }
  if (v.kind == CertificateKind::none) return v;

  v.s = static_cast<int>(v.S.size());
  if (2 * v.s < v.n) return v;  // certificate too short for the bound
  v.conclusive = true;
  if (v.crossings < v.zeta_n)
    throw std::logic_error("shellable drawing reported fewer crossings than its floor");
  const int kmax = std::min(v.s - 2, (v.n - 3) / 2);
  if (kmax >= 0) {
    v.bound_chain = check_shellable_bound(d, v.witness, kmax);
    v.bound_chain_ok = true;
    for (const BoundVerdict& b : v.bound_chain) v.bound_chain_ok = v.bound_chain_ok && b.pass;
  }
  return v;
}

}  // namespace crosslab
