#ifndef CROSSLAB_DRAWING_HPP
#define CROSSLAB_DRAWING_HPP

#include "crosslab/geometry.hpp"
#include "crosslab/layouts.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace crosslab {

enum class DrawingClass { generic, two_page, cylindrical, convex, spherical_projected };

std::string to_string(DrawingClass c);
DrawingClass drawing_class_from_string(const std::string& s);

// A drawing of a complete graph: every vertex has a position and every pair of
// vertices an explicit polyline.  Vertex ids are stable under deletion, so a
// sub-drawing keeps the ids (and the untouched polylines) of its parent.
struct Drawing {
  std::map<int, Point> vertices;
  std::map<EdgeKey, Polyline> edges;
  DrawingClass cls = DrawingClass::generic;
  std::optional<std::variant<TwoPageLayout, CylindricalLayout>> layout;

  int n() const { return static_cast<int>(vertices.size()); }
  const Polyline& edge(int u, int v) const;
  std::vector<int> vertex_ids() const;
};

// Designates a face of a drawing, either the unbounded one or the face
// containing an explicit reference point.  The point must lie strictly
// inside a face: a reference on the drawing itself is always an error,
// never silently resolved.  Queries on sub-drawings keep the point, not the
// face identity — the designated face of a sub-drawing is whichever face of
// the smaller arrangement contains the same point.
struct FaceRef {
  std::optional<Point> point;  // empty = the unbounded face

  static FaceRef unbounded() { return FaceRef{}; }
  static FaceRef at(Point p) { return FaceRef{std::move(p)}; }
  bool is_unbounded() const { return !point.has_value(); }
};

// Throws std::invalid_argument if the reference point lies on any edge of
// the drawing (or coincides with a vertex position).
void require_face_ref_off_drawing(const Drawing& d, const FaceRef& f);

// One transversal crossing between two edges; records are ordered
// lexicographically by ((a.u, a.v), (b.u, b.v)) with a < b.
struct CrossingRecord {
  EdgeKey a;
  EdgeKey b;
  Point at;
  int multiplicity = 1;
  bool operator<(const CrossingRecord& o) const {
    if (!(a == o.a)) return a < o.a;
    return b < o.b;
  }
};

// Structural problems (malformed data) are reported separately from goodness
// violations (well-formed drawing that is not a good drawing).
struct GoodnessReport {
  std::vector<std::string> structural;
  std::vector<std::string> violations;
  bool ok() const { return structural.empty() && violations.empty(); }
  std::string summary() const;
};

class InvalidDrawing : public std::runtime_error {
 public:
  explicit InvalidDrawing(const GoodnessReport& r);
  GoodnessReport report;
};

// Full incidence analysis in exact arithmetic: self-intersections,
// pairwise contact classification, vertex-on-edge incidences, concurrences.
GoodnessReport validate_good_drawing(const Drawing& d);

// All pairwise crossings of a good drawing, deterministically ordered.
// Throws InvalidDrawing if validation fails.
std::vector<CrossingRecord> compute_crossings_geometric(const Drawing& d);

long long total_crossings(const std::vector<CrossingRecord>& records);

// Sub-drawing on the remaining vertices; polylines are untouched and the
// class tag is kept (each supported class is closed under vertex deletion).
// Deleting every vertex (or an unknown id) is an error.
Drawing delete_vertices(const Drawing& d, const std::set<int>& victims);

// Crossing records of a sub-drawing are exactly the parent records whose two
// edges both survive; this avoids re-running the geometric analysis.
std::vector<CrossingRecord> filter_records(const std::vector<CrossingRecord>& records,
                                           const Drawing& sub);

} // namespace crosslab

#endif
