#ifndef CROSSLAB_ARRANGEMENT_HPP
#define CROSSLAB_ARRANGEMENT_HPP

#include "crosslab/drawing.hpp"

#include <set>
#include <vector>

namespace crosslab {

// Planar subdivision induced by a good drawing: every crossing point becomes
// a degree-4 node subdividing its two edges, and the plane decomposes into
// faces bounded by the resulting arcs.
struct Arrangement {
  struct Node {
    Point p;
    int vertex_id = -1;  // original vertex id, or -1 for a crossing node
  };

  // Undirected curve piece between nodes a and b; `path` runs a -> b and is
  // crossing-free in its interior.
  struct Arc {
    int a = 0;
    int b = 0;
    Polyline path;
    EdgeKey edge;  // the drawing edge this piece belongs to
  };

  // A directed arc is 2*arc + 0 (a -> b) or 2*arc + 1 (b -> a).  Each
  // directed arc lies on the boundary walk of exactly one face and keeps
  // that face on its left; bounded walks are counter-clockwise.
  struct Face {
    std::vector<int> walk;
    bool unbounded = false;
  };

  std::vector<Node> nodes;
  std::vector<Arc> arcs;
  std::vector<Face> faces;
  int unbounded_face = 0;
  std::map<int, std::set<int>> vertex_faces;  // original id -> incident faces
  std::vector<std::set<int>> node_faces;      // node index -> incident faces

  int tail(int h) const { return h % 2 ? arcs[h / 2].b : arcs[h / 2].a; }
  int head(int h) const { return h % 2 ? arcs[h / 2].a : arcs[h / 2].b; }
  Polyline directed_path(int h) const;  // tail -> head
};

// Subdivides the drawing at its crossings and traces the faces; the Euler
// relation #nodes - #arcs + #faces = 2 is asserted, as is the existence of
// exactly one unbounded face.  The one-argument form validates the drawing
// and computes the crossings itself; the two-argument form trusts records
// previously obtained from compute_crossings_geometric.
Arrangement planarize(const Drawing& d);
Arrangement planarize(const Drawing& d, const std::vector<CrossingRecord>& records);

// True if p lies on a node or an arc of the arrangement.
bool on_arrangement(const Arrangement& a, const Point& p);

// Face designated by f: the unbounded face, or the unique face strictly
// containing the reference point.  A reference point on the drawing itself
// designates no face and raises invalid_argument.
int locate_face(const Arrangement& a, const FaceRef& f);

// Original vertices incident to the boundary of the designated face.
std::set<int> boundary_vertices(const Arrangement& a, int face);
std::set<int> boundary_vertices(const Arrangement& a, const FaceRef& f);

// A point strictly inside the given face (off every arc), usable as a
// persistent FaceRef for sub-drawings.
Point face_interior_point(const Arrangement& a, int face);

// The other n-1 vertices in the rotation order their edges leave x, cut at
// the designated face's corner and oriented so that the triangle through x
// and the first and last listed vertices keeps the designated face outside.
// Precondition: x lies on the boundary of the designated face.
std::vector<int> induced_boundary_order(const Drawing& d, int x, const FaceRef& f);

} // namespace crosslab

#endif
