#include "crosslab/spherical.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace crosslab {

double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

namespace {

Vec3 scaled_sum(double s, const Vec3& a, double t, const Vec3& b) {
  return {s * a.x + t * b.x, s * a.y + t * b.y, s * a.z + t * b.z};
}

// strictly opposite signs, both clear of the degeneracy band
bool straddle(double u, double v, double tol) {
  return (u > tol && v < -tol) || (u < -tol && v > tol);
}

// splitmix64 step: decorrelates consecutive sample indices into seeds
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t i) {
  std::uint64_t z = seed + (i + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

} // namespace

bool arcs_cross(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d,
                double tolerance) {
  const Vec3 n1 = cross(a, b);   // normal of the great circle through a, b
  const Vec3 n2 = cross(c, d);
  // Each arc must cross the other's great-circle plane strictly.  Arcs that
  // share an endpoint fail here: the shared point lies in the other plane.
  const double hc = dot(n1, c), hd = dot(n1, d);
  if (!straddle(hc, hd, tolerance)) return false;
  const double ha = dot(n2, a), hb = dot(n2, b);
  if (!straddle(ha, hb, tolerance)) return false;
  // Arc c--d meets plane 1 at the positive combination |hd|c + |hc|d (the
  // chord's plane intersection projected from the center), and likewise for
  // arc a--b in plane 2.  Both points lie on both great circles, so each is
  // one of the two antipodal circle intersections; the arcs cross if and only
  // if they pass through the same one.
  const Vec3 p = scaled_sum(std::abs(hd), c, std::abs(hc), d);
  const Vec3 q = scaled_sum(std::abs(hb), a, std::abs(ha), b);
  return dot(p, q) > tolerance;
}

long long count_spherical_crossings(const SphericalDrawing& d) {
  const int n = d.n();
  long long total = 0;
  // Disjoint edge pairs grouped by their vertex quadruple: three pairings each.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          const Vec3& pi = d.points[i];
          const Vec3& pj = d.points[j];
          const Vec3& pk = d.points[k];
          const Vec3& pl = d.points[l];
          total += arcs_cross(pi, pj, pk, pl) ? 1 : 0;
          total += arcs_cross(pi, pk, pj, pl) ? 1 : 0;
          total += arcs_cross(pi, pl, pj, pk) ? 1 : 0;
        }
  return total;
}

SphericalSample random_spherical(int n, std::uint64_t seed) {
  if (n < 4) throw std::invalid_argument("random_spherical requires n >= 4");
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  SphericalSample s;
  s.drawing.points.reserve(n);
  constexpr double kParallelTol = 1e-9;   // reject |dot| > 1 - tol pairs
  constexpr int kMaxRetries = 256;
  for (int i = 0; i < n; ++i) {
    int attempts = 0;
    for (;;) {
      if (++attempts > kMaxRetries)
        throw std::runtime_error("degenerate spherical sample: retry budget exhausted");
      Vec3 p{gauss(gen), gauss(gen), gauss(gen)};
      const double r = norm(p);
      if (r < 1e-6) continue;               // too close to the center to direct
      p = {p.x / r, p.y / r, p.z / r};
      bool clear = true;
      for (const Vec3& q : s.drawing.points)
        if (std::abs(dot(p, q)) > 1.0 - kParallelTol) { clear = false; break; }
      if (!clear) continue;                 // near-equal or near-antipodal pair
      s.drawing.points.push_back(p);
      break;
    }
  }
  s.crossings = count_spherical_crossings(s.drawing);
  return s;
}

double mean_spherical_crossings(int n, int samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("mean_spherical_crossings requires samples >= 1");
  long long total = 0;
  for (int i = 0; i < samples; ++i)
    total += random_spherical(n, mix_seed(seed, static_cast<std::uint64_t>(i))).crossings;
  return static_cast<double>(total) / static_cast<double>(samples);
}

double expected_spherical_crossings(int n) {
  return static_cast<double>(n) * (n - 1) * (n - 2) * (n - 3) / 64.0;
}

}  // namespace crosslab
