#ifndef CROSSLAB_SPHERICAL_HPP
#define CROSSLAB_SPHERICAL_HPP

#include <cstdint>
#include <vector>

namespace crosslab {

// Direction in 3-space.  Spherical sampling is the one deliberately
// floating-point corner of the library: it feeds Monte Carlo statistics only
// and never enters the exact rational pipeline.
struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

double dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
double norm(const Vec3& a);

// Drawing of K_n on the unit sphere: vertex i sits at points[i] (a unit
// vector) and every edge is the minor great-circle arc between its endpoints.
// Invariant: no two points are equal or antipodal beyond tolerance, so every
// minor arc is well defined.
struct SphericalDrawing {
  std::vector<Vec3> points;

  int n() const { return static_cast<int>(points.size()); }
};

// Strict crossing test for the minor great-circle arcs a--b and c--d.  The
// predicate is scale-invariant (only ray directions matter), treats arcs
// sharing an endpoint as non-crossing, and resolves the antipodal ambiguity
// of the two great-circle intersection points: both arcs must pass through
// the same one.  Sign tests within `tolerance` of zero count as degenerate
// and report no crossing.
bool arcs_cross(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d,
                double tolerance = 1e-9);

// Number of crossing pairs of disjoint edges.  Arcs between four points in
// general position cross in at most one of the three pairings, so the count
// also equals the number of "crossing quadruples" of vertices.
long long count_spherical_crossings(const SphericalDrawing& d);

struct SphericalSample {
  SphericalDrawing drawing;
  long long crossings = 0;
};

// Draws n independent uniform unit vectors (normalized Gaussian triples) and
// counts the arc crossings.  Deterministic given (n, seed).  Near-equal or
// near-antipodal pairs are resampled internally with a bounded retry budget.
// Throws std::invalid_argument for n < 4 and std::runtime_error if the retry
// budget is ever exhausted.
SphericalSample random_spherical(int n, std::uint64_t seed);

// Mean crossing count over `samples` independent drawings.  Sample i uses a
// seed derived from (seed, i), so batches could be farmed out independently
// and summed in any order.  Throws std::invalid_argument for samples < 1.
double mean_spherical_crossings(int n, int samples, std::uint64_t seed);

// Expected crossing count of a uniform random spherical drawing of K_n:
// n(n-1)(n-2)(n-3)/64, i.e. 3/8 per vertex quadruple.
double expected_spherical_crossings(int n);

}  // namespace crosslab

#endif  // CROSSLAB_SPHERICAL_HPP
