#include "crosslab/drawing.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace crosslab {

std::string to_string(DrawingClass c) {
  switch (c) {
    case DrawingClass::generic: return "generic";
    case DrawingClass::two_page: return "two_page";
    case DrawingClass::cylindrical: return "cylindrical";
    case DrawingClass::convex: return "convex";
    case DrawingClass::spherical_projected: return "spherical_projected";
  }
  throw std::logic_error("unknown drawing class");
}

DrawingClass drawing_class_from_string(const std::string& s) {
  if (s == "generic") return DrawingClass::generic;
  if (s == "two_page") return DrawingClass::two_page;
  if (s == "cylindrical") return DrawingClass::cylindrical;
  if (s == "convex") return DrawingClass::convex;
  if (s == "spherical_projected") return DrawingClass::spherical_projected;
  throw std::invalid_argument("unknown drawing class: " + s);
}

const Polyline& Drawing::edge(int u, int v) const {
  auto it = edges.find(EdgeKey{u, v});
  if (it == edges.end()) {
    throw std::out_of_range("no edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
  }
  return it->second;
}

std::vector<int> Drawing::vertex_ids() const {
  std::vector<int> ids;
  ids.reserve(vertices.size());
  for (const auto& [id, p] : vertices) ids.push_back(id);
  return ids;
}

std::string GoodnessReport::summary() const {
  if (ok()) return "ok";
  std::ostringstream os;
  os << structural.size() << " structural problem(s), " << violations.size()
     << " goodness violation(s)";
  for (const auto& s : structural) os << "\n  [structural] " << s;
  for (const auto& v : violations) os << "\n  [violation] " << v;
  return os.str();
}

InvalidDrawing::InvalidDrawing(const GoodnessReport& r)
    : std::runtime_error("invalid drawing: " + r.summary()), report(r) {}

namespace {

std::string edge_name(const EdgeKey& e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

std::string point_name(const Point& p) {
  std::ostringstream os;
  os << "(" << p.x << ", " << p.y << ")";
  return os.str();
}

// Conservative floating-point bounds around an exact coordinate: the exact
// value always lies inside [lo(x), hi(x)], so a disjointness test on these
// bounds can produce false candidates but never rejects a true contact.
double bound_lo(const Rational& x) {
  const double v = x.convert_to<double>();
  return v - (std::fabs(v) + 1.0) * 1e-9;
}
double bound_hi(const Rational& x) {
  const double v = x.convert_to<double>();
  return v + (std::fabs(v) + 1.0) * 1e-9;
}

struct SegRef {
  EdgeKey edge;
  int seg;             // segment index within the edge's polyline
  Point a, b;          // segment endpoints
  double fminx, fmaxx, fminy, fmaxy;  // conservative bounds

  void set_bounds() {
    fminx = std::min(bound_lo(a.x), bound_lo(b.x));
    fmaxx = std::max(bound_hi(a.x), bound_hi(b.x));
    fminy = std::min(bound_lo(a.y), bound_lo(b.y));
    fmaxy = std::max(bound_hi(a.y), bound_hi(b.y));
  }
};

std::vector<SegRef> build_segments(const Drawing& d) {
  std::vector<SegRef> segs;
  for (const auto& [e, pl] : d.edges) {
    for (std::size_t i = 0; i + 1 < pl.size(); ++i) {
      SegRef s{e, static_cast<int>(i), pl[i], pl[i + 1], 0, 0, 0, 0};
      s.set_bounds();
      segs.push_back(std::move(s));
    }
  }
  // Sorting by the left x-bound turns the pair scan into a sweep: for a
  // fixed i only the j with fminx <= segs[i].fmaxx can touch it.
  std::sort(segs.begin(), segs.end(),
            [](const SegRef& p, const SegRef& q) { return p.fminx < q.fminx; });
  return segs;
}

// Calls f(s, t) for every segment pair whose conservative bounds overlap.
template <typename F>
void for_each_candidate_pair(const std::vector<SegRef>& segs, F&& f) {
  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      if (segs[j].fminx > segs[i].fmaxx) break;
      if (segs[j].fminy > segs[i].fmaxy || segs[i].fminy > segs[j].fmaxy) continue;
      f(segs[i], segs[j]);
    }
  }
}

// An interior meeting point of two edges, with the local directions of both
// strands so transversality can be checked exactly.
struct MeetPoint {
  Point at;
  // Directions of the two polylines through `at` (incoming reversed so that
  // all four germ directions leave `at`); empty pair slot = endpoint of edge.
  std::vector<std::pair<Point, Point>> germs_a, germs_b;
};

// Germ directions of edge `pl` at a point `p` lying on it (exactly).  For an
// interior point of a segment: the two opposite segment directions.  For a
// joint of segments i, i+1: direction back along i and forward along i+1.
// For an endpoint of the polyline only one direction exists.
std::vector<Point> germ_directions(const Polyline& pl, const Point& p) {
  std::vector<Point> dirs;
  auto add = [&dirs](const Point& from, const Point& to) {
    Point d{to.x - from.x, to.y - from.y};
    dirs.push_back(d);
  };
  for (std::size_t i = 0; i + 1 < pl.size(); ++i) {
    const Point& a = pl[i];
    const Point& b = pl[i + 1];
    if (p == a) {
      add(p, b);
    } else if (p == b) {
      add(p, a);
    } else if (point_on_segment(p, a, b)) {
      add(p, a);
      add(p, b);
    }
  }
  return dirs;
}

// True if the two edges genuinely cross (not touch) at a common interior
// point: walking around the point, the four germ directions must alternate
// between the two edges.  Checked by sorting the directions with an exact
// angular comparator; a germ of one edge parallel to a germ of the other is
// tangential contact, not a crossing.
bool is_transversal(const std::vector<Point>& da, const std::vector<Point>& db) {
  if (da.size() != 2 || db.size() != 2) return false;
  auto side = [](const Point& u, const Point& v) {
    Rational c = u.x * v.y - u.y * v.x;
    return c == 0 ? 0 : (c > 0 ? 1 : -1);
  };
  int s0 = side(da[0], db[0]);
  int s1 = side(da[0], db[1]);
  int t0 = side(da[1], db[0]);
  int t1 = side(da[1], db[1]);
  if (s0 == 0 || s1 == 0 || t0 == 0 || t1 == 0) return false;  // tangential germ
  struct Tagged {
    Point d;
    int who;  // 0 = a, 1 = b
  };
  std::vector<Tagged> all = {{da[0], 0}, {da[1], 0}, {db[0], 1}, {db[1], 1}};
  auto half = [](const Point& d) {
    // 0 for upper half-plane (y > 0 or (y == 0 and x > 0)), 1 for lower.
    if (d.y > 0) return 0;
    if (d.y < 0) return 1;
    return d.x > 0 ? 0 : 1;
  };
  std::sort(all.begin(), all.end(), [&](const Tagged& p, const Tagged& q) {
    int hp = half(p.d), hq = half(q.d);
    if (hp != hq) return hp < hq;
    Rational c = p.d.x * q.d.y - p.d.y * q.d.x;
    return c > 0;
  });
  return all[0].who != all[1].who && all[1].who != all[2].who && all[2].who != all[3].who;
}

} // namespace

GoodnessReport validate_good_drawing(const Drawing& d) {
  GoodnessReport rep;

  // --- structural checks ---------------------------------------------------
  if (d.n() < 1) rep.structural.push_back("drawing has no vertices");
  for (const auto& [e, pl] : d.edges) {
    if (!d.vertices.count(e.u) || !d.vertices.count(e.v)) {
      rep.structural.push_back("edge " + edge_name(e) + " references unknown vertex");
      continue;
    }
    if (pl.size() < 2) {
      rep.structural.push_back("edge " + edge_name(e) + " has fewer than 2 points");
      continue;
    }
    if (!(pl.front() == d.vertices.at(e.u)) || !(pl.back() == d.vertices.at(e.v))) {
      rep.structural.push_back("edge " + edge_name(e) +
                               " endpoints do not match vertex positions");
    }
    for (std::size_t i = 0; i + 1 < pl.size(); ++i) {
      if (pl[i] == pl[i + 1]) {
        rep.structural.push_back("edge " + edge_name(e) + " has a zero-length segment");
        break;
      }
    }
  }
  // Completeness: exactly one edge per vertex pair.
  {
    std::vector<int> ids = d.vertex_ids();
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t j = i + 1; j < ids.size(); ++j) {
        EdgeKey e{ids[i], ids[j]};
        if (!d.edges.count(e)) {
          rep.structural.push_back("missing edge " + edge_name(e));
        }
      }
    }
    if (d.edges.size() > ids.size() * (ids.size() - 1) / 2) {
      rep.structural.push_back("drawing has surplus edges");
    }
  }
  // Distinct vertex positions.
  {
    std::map<Point, std::vector<int>> at;
    for (const auto& [id, p] : d.vertices) at[p].push_back(id);
    for (const auto& [p, ids] : at) {
      if (ids.size() > 1) {
        std::string names;
        for (int id : ids) names += (names.empty() ? "" : ", ") + std::to_string(id);
        rep.structural.push_back("vertices " + names + " share position " + point_name(p));
      }
    }
  }
  if (!rep.structural.empty()) return rep;

  // --- build segment table with conservative bounds ------------------------
  const std::vector<SegRef> segs = build_segments(d);

  // --- self-intersection of single edges -----------------------------------
  for (const auto& [e, pl] : d.edges) {
    std::vector<std::array<double, 4>> bounds;  // minx, maxx, miny, maxy
    bounds.reserve(pl.size());
    for (std::size_t i = 0; i + 1 < pl.size(); ++i) {
      bounds.push_back({std::min(bound_lo(pl[i].x), bound_lo(pl[i + 1].x)),
                        std::max(bound_hi(pl[i].x), bound_hi(pl[i + 1].x)),
                        std::min(bound_lo(pl[i].y), bound_lo(pl[i + 1].y)),
                        std::max(bound_hi(pl[i].y), bound_hi(pl[i + 1].y))});
    }
    for (std::size_t i = 0; i + 1 < pl.size(); ++i) {
      for (std::size_t j = i + 1; j + 1 < pl.size(); ++j) {
        if (j != i + 1) {
          if (bounds[i][0] > bounds[j][1] || bounds[j][0] > bounds[i][1] ||
              bounds[i][2] > bounds[j][3] || bounds[j][2] > bounds[i][3]) {
            continue;
          }
        }
        SegMeet m = classify_segments(pl[i], pl[i + 1], pl[j], pl[j + 1]);
        if (m.type == SegContact::none) continue;
        if (j == i + 1) {
          // Consecutive segments share the joint; anything beyond a single
          // touch at the joint (overlap = doubling back) is a violation.
          if (m.type == SegContact::overlap) {
            rep.violations.push_back("edge " + edge_name(e) + " doubles back on itself");
          } else if (m.type == SegContact::proper ||
                     (m.type == SegContact::touch && !(m.at == pl[j]))) {
            rep.violations.push_back("edge " + edge_name(e) + " self-intersects near " +
                                     point_name(m.at));
          }
        } else {
          rep.violations.push_back("edge " + edge_name(e) + " self-intersects at " +
                                   point_name(m.at));
        }
      }
    }
  }

  // --- vertices in the interior of non-incident edges ----------------------
  for (const auto& [id, p] : d.vertices) {
    for (const auto& [e, pl] : d.edges) {
      if (e.u == id || e.v == id) continue;
      if (point_on_polyline(p, pl)) {
        rep.violations.push_back("vertex " + std::to_string(id) + " lies on edge " +
                                 edge_name(e));
      }
    }
  }

  // --- pairwise edge contacts ----------------------------------------------
  // Collect every interior common point of every edge pair, then classify.
  // meets[{e,f}] = set of common points (vertex-shared endpoints excluded).
  std::map<std::pair<EdgeKey, EdgeKey>, std::set<Point>> meets;
  std::map<std::pair<EdgeKey, EdgeKey>, bool> has_overlap;
  for_each_candidate_pair(segs, [&](const SegRef& s, const SegRef& t) {
    if (s.edge == t.edge) return;
    SegMeet m = classify_segments(s.a, s.b, t.a, t.b);
    if (m.type == SegContact::none) return;
    EdgeKey e = s.edge, f = t.edge;
    if (f < e) std::swap(e, f);
    auto key = std::make_pair(e, f);
    if (m.type == SegContact::overlap) {
      has_overlap[key] = true;
      return;
    }
    meets[key].insert(m.at);
  });

  for (const auto& [key, flag] : has_overlap) {
    if (flag) {
      rep.violations.push_back("edges " + edge_name(key.first) + " and " +
                               edge_name(key.second) + " overlap along a segment");
    }
  }

  // Meeting points per location, for concurrency detection: location -> set
  // of edges passing through it transversally or tangentially (excluding the
  // graph vertices themselves, which legitimately carry n-1 edges).
  std::map<Point, std::set<EdgeKey>> edges_through;

  for (auto& [key, pts] : meets) {
    const EdgeKey& e = key.first;
    const EdgeKey& f = key.second;
    bool share_vertex =
        e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v;
    int crossings_here = 0;
    for (const Point& p : pts) {
      bool p_is_vertex = false;
      for (const auto& [id, q] : d.vertices) {
        if (q == p) { p_is_vertex = true; break; }
      }
      if (p_is_vertex) {
        // Shared endpoint of incident edges: allowed, not a crossing.  A
        // non-shared vertex on either edge was already reported above.
        continue;
      }
      auto ga = germ_directions(d.edge(e.u, e.v), p);
      auto gb = germ_directions(d.edge(f.u, f.v), p);
      if (ga.size() != 2 || gb.size() != 2) {
        rep.violations.push_back("edges " + edge_name(e) + " and " + edge_name(f) +
                                 " meet at an edge endpoint " + point_name(p));
        continue;
      }
      std::vector<Point> da = {ga[0], ga[1]}, db = {gb[0], gb[1]};
      if (is_transversal(da, db)) {
        ++crossings_here;
        edges_through[p].insert(e);
        edges_through[p].insert(f);
        if (share_vertex) {
          rep.violations.push_back("incident edges " + edge_name(e) + " and " +
                                   edge_name(f) + " cross at " + point_name(p));
        }
      } else {
        rep.violations.push_back("edges " + edge_name(e) + " and " + edge_name(f) +
                                 " touch without crossing at " + point_name(p));
      }
    }
    if (crossings_here > 1 && !share_vertex) {
      rep.violations.push_back("edges " + edge_name(e) + " and " + edge_name(f) +
                               " cross " + std::to_string(crossings_here) + " times");
    }
  }

  // --- three or more edges through one crossing point ----------------------
  for (const auto& [p, through] : edges_through) {
    if (through.size() >= 3) {
      std::string names;
      for (const auto& e : through) names += (names.empty() ? "" : ", ") + edge_name(e);
      rep.violations.push_back("edges " + names + " pass through the common point " +
                               point_name(p));
    }
  }

  return rep;
}

void require_face_ref_off_drawing(const Drawing& d, const FaceRef& f) {
  if (f.is_unbounded()) return;
  const Point& p = *f.point;
  for (const auto& [id, q] : d.vertices) {
    if (p == q) {
      throw std::invalid_argument("face reference point coincides with vertex " +
                                  std::to_string(id));
    }
  }
  for (const auto& [e, pl] : d.edges) {
    if (point_on_polyline(p, pl)) {
      throw std::invalid_argument("face reference point lies on edge " + edge_name(e));
    }
  }
}

std::vector<CrossingRecord> compute_crossings_geometric(const Drawing& d) {
  GoodnessReport rep = validate_good_drawing(d);
  if (!rep.ok()) throw InvalidDrawing(rep);

  const std::vector<SegRef> segs = build_segments(d);

  std::map<std::pair<EdgeKey, EdgeKey>, std::set<Point>> meets;
  for_each_candidate_pair(segs, [&](const SegRef& s, const SegRef& t) {
    if (s.edge == t.edge) return;
    const EdgeKey& e = s.edge;
    const EdgeKey& f = t.edge;
    if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v) return;
    SegMeet m = classify_segments(s.a, s.b, t.a, t.b);
    if (m.type == SegContact::none) return;
    EdgeKey a = e, b = f;
    if (b < a) std::swap(a, b);
    meets[{a, b}].insert(m.at);
  });

  std::vector<CrossingRecord> out;
  for (const auto& [key, pts] : meets) {
    for (const Point& p : pts) {
      out.push_back(CrossingRecord{key.first, key.second, p, 1});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

long long total_crossings(const std::vector<CrossingRecord>& records) {
  long long t = 0;
  for (const auto& r : records) t += r.multiplicity;
  return t;
}

Drawing delete_vertices(const Drawing& d, const std::set<int>& victims) {
  for (int v : victims) {
    if (!d.vertices.count(v)) {
      throw std::invalid_argument("delete_vertices: unknown vertex " + std::to_string(v));
    }
  }
  if (victims.size() >= d.vertices.size()) {
    throw std::invalid_argument("delete_vertices: would remove every vertex");
  }
  Drawing sub;
  sub.cls = d.cls;
  for (const auto& [id, p] : d.vertices) {
    if (!victims.count(id)) sub.vertices.emplace(id, p);
  }
  for (const auto& [e, pl] : d.edges) {
    if (!victims.count(e.u) && !victims.count(e.v)) sub.edges.emplace(e, pl);
  }
  // Layout metadata (spine order, ring membership) is restricted likewise.
  if (d.layout) {
    if (std::holds_alternative<TwoPageLayout>(*d.layout)) {
      const auto& L = std::get<TwoPageLayout>(*d.layout);
      TwoPageLayout S;
      for (int v : L.spine) {
        if (!victims.count(v)) S.spine.push_back(v);
      }
      for (const auto& [e, pg] : L.pages) {
        if (!victims.count(e.u) && !victims.count(e.v)) S.pages.emplace(e, pg);
      }
      sub.layout = S;
    } else {
      const auto& L = std::get<CylindricalLayout>(*d.layout);
      CylindricalLayout S;
      for (const auto& rv : L.inner) {
        if (!victims.count(rv.id)) S.inner.push_back(rv);
      }
      for (const auto& rv : L.outer) {
        if (!victims.count(rv.id)) S.outer.push_back(rv);
      }
      for (const auto& [e, t] : L.delta) {
        if (!victims.count(e.u) && !victims.count(e.v)) S.delta.emplace(e, t);
      }
      sub.layout = S;
    }
  }
  return sub;
}

std::vector<CrossingRecord> filter_records(const std::vector<CrossingRecord>& records,
                                           const Drawing& sub) {
  std::vector<CrossingRecord> out;
  for (const auto& r : records) {
    if (sub.edges.count(r.a) && sub.edges.count(r.b)) out.push_back(r);
  }
  return out;
}

} // namespace crosslab
