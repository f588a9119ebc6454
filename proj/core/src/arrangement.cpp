#include "crosslab/arrangement.hpp"

#include "crosslab/kedges.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace crosslab {

namespace {

// ---------------------------------------------------------------------------
// Germ directions and exact angular order
// ---------------------------------------------------------------------------

struct Dir {
  Rational dx, dy;
};

// 0 for angles in [0, pi), 1 for [pi, 2*pi); ties on the axes resolved by the
// sign of dx so that every nonzero vector lands in exactly one half.
int half_plane(const Dir& d) {
  if (d.dy != 0) return d.dy > 0 ? 0 : 1;
  return d.dx > 0 ? 0 : 1;
}

// Strict counter-clockwise ordering of directions starting at the positive
// x-axis.  Germs of distinct arcs at a node never share a direction (equal
// directions would mean overlapping initial segments, which validation
// rejects), so this is a total order in practice.
bool ccw_less(const Dir& a, const Dir& b) {
  const int ha = half_plane(a), hb = half_plane(b);
  if (ha != hb) return ha < hb;
  return a.dx * b.dy - a.dy * b.dx > 0;
}

// ---------------------------------------------------------------------------
// Edge subdivision
// ---------------------------------------------------------------------------

// Position of a split point along a polyline: containing segment plus the
// squared-length-scaled offset inside it (monotone along the curve, exact).
struct SplitPos {
  int seg = 0;
  Rational along;
  Point p;
  int node = 0;

  bool operator<(const SplitPos& o) const {
    if (seg != o.seg) return seg < o.seg;
    return along < o.along;
  }
};

SplitPos position_on(const Polyline& pl, const Point& p, int node) {
  for (int i = 0; i + 1 < static_cast<int>(pl.size()); ++i) {
    if (point_on_segment(p, pl[i], pl[i + 1])) {
      const Rational dx = p.x - pl[i].x, dy = p.y - pl[i].y;
      const Rational ex = pl[i + 1].x - pl[i].x, ey = pl[i + 1].y - pl[i].y;
      return SplitPos{i, dx * ex + dy * ey, p, node};
    }
  }
  throw std::logic_error("crossing point does not lie on its edge");
}

// Sub-polyline from one split position to the next (interior joints kept,
// duplicate consecutive points dropped).
Polyline piece_between(const Polyline& pl, const SplitPos& from, const SplitPos& to) {
  Polyline out{from.p};
  for (int j = from.seg + 1; j <= to.seg; ++j) {
    if (pl[j] != out.back()) out.push_back(pl[j]);
  }
  if (to.p != out.back()) out.push_back(to.p);
  if (out.size() < 2) throw std::logic_error("degenerate arc piece");
  return out;
}

Polyline reversed(Polyline p) {
  std::reverse(p.begin(), p.end());
  return p;
}

// Closed point cycle of a face walk (concatenated directed arc paths with
// the repeated joints dropped; the last point equals the first and is
// removed so the loop closes implicitly).
Polyline walk_loop(const Arrangement& a, const std::vector<int>& walk) {
  Polyline loop;
  for (int h : walk) {
    const Polyline p = a.directed_path(h);
    for (std::size_t i = loop.empty() ? 0 : 1; i < p.size(); ++i) {
      loop.push_back(p[i]);
    }
  }
  if (loop.size() > 1 && loop.front() == loop.back()) loop.pop_back();
  return loop;
}

} // namespace

Polyline Arrangement::directed_path(int h) const {
  const Arc& c = arcs[h / 2];
  return h % 2 ? reversed(c.path) : c.path;
}

// ---------------------------------------------------------------------------
// planarize
// ---------------------------------------------------------------------------

Arrangement planarize(const Drawing& d) {
  return planarize(d, compute_crossings_geometric(d));
}

Arrangement planarize(const Drawing& d, const std::vector<CrossingRecord>& records) {
  Arrangement a;

  // Nodes: original vertices first, then one node per crossing record.
  std::map<int, int> vertex_node;
  for (const auto& [id, pos] : d.vertices) {
    vertex_node[id] = static_cast<int>(a.nodes.size());
    a.nodes.push_back({pos, id});
  }
  std::map<EdgeKey, std::vector<SplitPos>> splits;
  for (const CrossingRecord& r : records) {
    const int node = static_cast<int>(a.nodes.size());
    a.nodes.push_back({r.at, -1});
    splits[r.a].push_back(position_on(d.edges.at(r.a), r.at, node));
    splits[r.b].push_back(position_on(d.edges.at(r.b), r.at, node));
  }

  // Arcs: each edge's polyline cut at its crossing points, in curve order.
  for (const auto& [e, pl] : d.edges) {
    std::vector<SplitPos> cuts;
    if (auto it = splits.find(e); it != splits.end()) {
      cuts = it->second;
      std::sort(cuts.begin(), cuts.end());
      for (std::size_t i = 1; i < cuts.size(); ++i) {
        if (cuts[i].p == cuts[i - 1].p) {
          throw std::logic_error("two crossings coincide on one edge");
        }
      }
    }
    SplitPos prev{0, Rational(0), pl.front(), vertex_node.at(e.u)};
    // The polyline runs from the smaller to the larger endpoint id.
    for (const SplitPos& cut : cuts) {
      a.arcs.push_back({prev.node, cut.node, piece_between(pl, prev, cut), e});
      prev = cut;
    }
    const SplitPos last{static_cast<int>(pl.size()) - 2, Rational(0), pl.back(),
                        vertex_node.at(e.v)};
    a.arcs.push_back({prev.node, last.node, piece_between(pl, prev, last), e});
  }

  // Rotation system: outgoing directed arcs of every node in ccw order.
  const int num_nodes = static_cast<int>(a.nodes.size());
  std::vector<std::vector<int>> rotation(num_nodes);
  for (int arc = 0; arc < static_cast<int>(a.arcs.size()); ++arc) {
    rotation[a.arcs[arc].a].push_back(2 * arc);
    rotation[a.arcs[arc].b].push_back(2 * arc + 1);
  }
  auto germ = [&a](int h) {
    const Polyline p = a.directed_path(h);
    return Dir{p[1].x - p[0].x, p[1].y - p[0].y};
  };
  for (auto& germs : rotation) {
    std::sort(germs.begin(), germs.end(),
              [&](int x, int y) { return ccw_less(germ(x), germ(y)); });
  }
  // Index of each directed arc inside its tail's rotation.
  std::vector<int> slot(2 * a.arcs.size());
  for (const auto& germs : rotation) {
    for (int i = 0; i < static_cast<int>(germs.size()); ++i) slot[germs[i]] = i;
  }

  // Face tracing: the successor of h is the ccw-predecessor of rev(h) in the
  // rotation at head(h); every directed arc then lies on exactly one face
  // walk, and each walk keeps its face on the left.
  auto next = [&](int h) {
    const int r = h ^ 1;
    const auto& germs = rotation[a.tail(r)];
    const int i = slot[r];
    return germs[(i + germs.size() - 1) % germs.size()];
  };
  std::vector<int> face_of(2 * a.arcs.size(), -1);
  for (int h0 = 0; h0 < static_cast<int>(face_of.size()); ++h0) {
    if (face_of[h0] != -1) continue;
    Arrangement::Face f;
    int h = h0;
    do {
      face_of[h] = static_cast<int>(a.faces.size());
      f.walk.push_back(h);
      h = next(h);
    } while (h != h0);
    a.faces.push_back(std::move(f));
  }
  if (a.faces.empty()) a.faces.push_back({});  // edgeless drawing: one face

  // The unbounded face is the unique one whose walk has non-positive signed
  // area (clockwise, because the region it bounds lies on the outside).
  if (a.faces.size() == 1) {
    a.unbounded_face = 0;
    a.faces[0].unbounded = true;
  } else {
    int found = -1;
    for (int i = 0; i < static_cast<int>(a.faces.size()); ++i) {
      Polyline loop = walk_loop(a, a.faces[i].walk);
      Rational area2 = open_shoelace(loop);
      if (!loop.empty()) {
        area2 += loop.back().x * loop.front().y - loop.back().y * loop.front().x;
      }
      if (area2 <= 0) {
        if (found != -1) throw std::logic_error("two clockwise face walks");
        found = i;
      }
    }
    if (found == -1) throw std::logic_error("no clockwise face walk");
    a.unbounded_face = found;
    a.faces[found].unbounded = true;
  }

  // Euler relation for a connected planar subdivision.
  const long long euler = static_cast<long long>(a.nodes.size()) -
                          static_cast<long long>(a.arcs.size()) +
                          static_cast<long long>(a.faces.size());
  if (euler != 2) throw std::logic_error("Euler relation violated");

  // Incidence indices.
  a.node_faces.assign(num_nodes, {});
  for (int i = 0; i < static_cast<int>(a.faces.size()); ++i) {
    for (int h : a.faces[i].walk) a.node_faces[a.tail(h)].insert(i);
  }
  if (a.arcs.empty()) {
    for (int nd = 0; nd < num_nodes; ++nd) a.node_faces[nd].insert(0);
  }
  for (int nd = 0; nd < num_nodes; ++nd) {
    if (a.nodes[nd].vertex_id >= 0) {
      a.vertex_faces[a.nodes[nd].vertex_id] = a.node_faces[nd];
    }
  }
  return a;
}

// ---------------------------------------------------------------------------
// Point location and boundary queries
// ---------------------------------------------------------------------------

bool on_arrangement(const Arrangement& a, const Point& p) {
  for (const auto& nd : a.nodes) {
    if (nd.p == p) return true;
  }
  for (const auto& arc : a.arcs) {
    if (point_on_polyline(p, arc.path)) return true;
  }
  return false;
}

int locate_face(const Arrangement& a, const FaceRef& f) {
  if (f.is_unbounded()) return a.unbounded_face;
  const Point& p = *f.point;
  if (on_arrangement(a, p)) {
    throw std::invalid_argument(
        "face reference point lies on the drawing and designates no face");
  }
  int found = -1;
  for (int i = 0; i < static_cast<int>(a.faces.size()); ++i) {
    if (i == a.unbounded_face) continue;
    if (point_in_loop(walk_loop(a, a.faces[i].walk), p)) {
      if (found != -1) throw std::logic_error("point inside two bounded faces");
      found = i;
    }
  }
  return found == -1 ? a.unbounded_face : found;
}

std::set<int> boundary_vertices(const Arrangement& a, int face) {
  if (face < 0 || face >= static_cast<int>(a.faces.size())) {
    throw std::invalid_argument("no such face");
  }
  std::set<int> out;
  for (const auto& [v, faces] : a.vertex_faces) {
    if (faces.count(face)) out.insert(v);
  }
  return out;
}

std::set<int> boundary_vertices(const Arrangement& a, const FaceRef& f) {
  return boundary_vertices(a, locate_face(a, f));
}

Point face_interior_point(const Arrangement& a, int face) {
  if (face < 0 || face >= static_cast<int>(a.faces.size())) {
    throw std::invalid_argument("no such face");
  }
  if (face == a.unbounded_face) {
    Rational mx(1), my(1);
    for (const auto& nd : a.nodes) {
      if (mx < nd.p.x) mx = nd.p.x;
      if (my < nd.p.y) my = nd.p.y;
    }
    for (const auto& arc : a.arcs) {
      for (const Point& p : arc.path) {
        if (mx < p.x) mx = p.x;
        if (my < p.y) my = p.y;
      }
    }
    return Point{mx + 1, my + 1};
  }
  // Walk into the face from the midpoint of a boundary segment: the face is
  // locally on the left of its walk, so a small enough left offset lands
  // strictly inside; exactness makes the containment test reliable.
  const Polyline path = a.directed_path(a.faces[face].walk.front());
  const Point mid{(path[0].x + path[1].x) / 2, (path[0].y + path[1].y) / 2};
  const Rational nx = path[0].y - path[1].y;  // left normal of path[0]->path[1]
  const Rational ny = path[1].x - path[0].x;
  Rational scale(1, 2);
  for (int attempt = 0; attempt < 300; ++attempt, scale /= 2) {
    const Point c{mid.x + nx * scale, mid.y + ny * scale};
    if (on_arrangement(a, c)) continue;
    if (locate_face(a, FaceRef::at(c)) == face) return c;
  }
  throw std::logic_error("could not find an interior point of the face");
}

// ---------------------------------------------------------------------------
// Induced boundary order
// ---------------------------------------------------------------------------

std::vector<int> induced_boundary_order(const Drawing& d, int x, const FaceRef& f) {
  if (d.vertices.find(x) == d.vertices.end()) {
    throw std::invalid_argument("induced_boundary_order: unknown vertex id " +
                                std::to_string(x));
  }
  if (d.n() <= 2) {
    std::vector<int> rest;
    for (const auto& [id, pos] : d.vertices) {
      if (id != x) rest.push_back(id);
    }
    return rest;
  }

  const Arrangement a = planarize(d);
  const int face = locate_face(a, f);
  if (!boundary_vertices(a, face).count(x)) {
    throw std::invalid_argument(
        "induced_boundary_order: vertex is not on the boundary of the designated face");
  }
  int node_x = -1;
  for (int i = 0; i < static_cast<int>(a.nodes.size()); ++i) {
    if (a.nodes[i].vertex_id == x) node_x = i;
  }

  // The face's corner at x: the walk enters on h_in and leaves on h_out.  A
  // good drawing's face touches a boundary vertex in exactly one corner.
  const auto& walk = a.faces[face].walk;
  int h_in = -1, h_out = -1;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    if (a.head(walk[i]) == node_x) {
      if (h_in != -1) {
        throw std::logic_error(
            "designated face touches the vertex in more than one corner");
      }
      h_in = walk[i];
      h_out = walk[(i + 1) % walk.size()];
    }
  }

  // Rotation at x, counter-clockwise.
  std::vector<int> germs;
  for (int arc = 0; arc < static_cast<int>(a.arcs.size()); ++arc) {
    if (a.arcs[arc].a == node_x) germs.push_back(2 * arc);
    if (a.arcs[arc].b == node_x) germs.push_back(2 * arc + 1);
  }
  auto dir_of = [&a](int h) {
    const Polyline p = a.directed_path(h);
    return Dir{p[1].x - p[0].x, p[1].y - p[0].y};
  };
  std::sort(germs.begin(), germs.end(),
            [&](int l, int r) { return ccw_less(dir_of(l), dir_of(r)); });

  // The face's angular sector at x is the ccw gap from h_out to rev(h_in);
  // list the germs sweeping ccw across the complement, boundary to boundary.
  const int w = h_in ^ 1;
  const auto it_w = std::find(germs.begin(), germs.end(), w);
  const auto it_u = std::find(germs.begin(), germs.end(), h_out);
  if (it_w == germs.end() || it_u == germs.end()) {
    throw std::logic_error("face corner arcs missing from the rotation");
  }
  const int start = static_cast<int>(it_w - germs.begin());
  if (germs[(start + germs.size() - 1) % germs.size()] != h_out) {
    throw std::logic_error("face sector is not a single rotation gap");
  }
  std::vector<int> order;
  for (std::size_t i = 0; i < germs.size(); ++i) {
    const int h = germs[(start + i) % germs.size()];
    const EdgeKey& e = a.arcs[h / 2].edge;
    if (e.u != x && e.v != x) {
      throw std::logic_error("arc at an original vertex belongs to a foreign edge");
    }
    order.push_back(e.u == x ? e.v : e.u);
  }

  // Orient so that the triangle x, first, last keeps the designated face on
  // its outside (counter-clockwise in the inverted picture).
  if (side_of(d, x, order.front(), order.back(), f) != Side::left) {
    std::reverse(order.begin(), order.end());
  }
  return order;
}

} // namespace crosslab
