#pragma once

#include <array>
#include <vector>

#include "fpppart/finite_field.hpp"

namespace fpp {

// Point of the projective plane in homogeneous coordinates. Each coordinate
// is a canonically encoded field element; the point is normalized so its
// first nonzero coordinate is 1.
struct ProjPoint {
  std::array<uint32_t, 3> c{0, 0, 0};

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
};

// Projective plane of order q: n = q^2 + q + 1 points and lines. Line i is
// indexed by its normal point i and holds the indices j of all points with
// dot(points[i], points[j]) = 0, sorted ascending.
//
// Point enumeration is fixed: the (1,a,b) block with (a,b) ascending by
// canonical integer, then (0,1,a) ascending, then (0,0,1). This makes point
// indices, line tables and intersections reproducible across runs.
class ProjPlane {
 public:
  static ProjPlane build(uint32_t q);

  uint32_t q() const { return q_; }
  uint32_t n() const { return n_; }
  const GaloisField& field() const { return gf_; }
  const std::vector<ProjPoint>& points() const { return points_; }
  const std::vector<std::vector<uint32_t>>& lines() const { return lines_; }

  // Scales raw so the first nonzero coordinate becomes 1; idempotent.
  // DomainError on the zero vector.
  ProjPoint normalize(const std::array<uint32_t, 3>& raw) const;

  // Index of a normalized point under the canonical enumeration, O(1).
  uint32_t point_index(const ProjPoint& pt) const;

  uint32_t dot(const ProjPoint& a, const ProjPoint& b) const;
  bool incident(uint32_t line, uint32_t point) const;

  // The unique common point of two distinct lines. Served from the n*n
  // table when n is small enough, otherwise computed as a cross product.
  // DomainError when i == j.
  uint32_t line_intersection(uint32_t i, uint32_t j) const;

  bool has_intersection_table() const { return !isect_.empty(); }

  // Explicit line tables take n*(q+1) entries, so plane construction is
  // capped; fields alone go up to GaloisField::kMaxOrder.
  static constexpr uint32_t kMaxOrder = 256;
  static constexpr uint64_t kMaxTableEntries = 1ull << 21;

 private:
  ProjPlane(GaloisField gf, uint32_t q);

  std::array<uint32_t, 3> cross(const ProjPoint& a, const ProjPoint& b) const;

  GaloisField gf_;
  uint32_t q_ = 0;
  uint32_t n_ = 0;
  std::vector<ProjPoint> points_;
  std::vector<std::vector<uint32_t>> lines_;
  std::vector<uint32_t> isect_;  // n*n, diagonal unused; empty when n too big
};

// Exhaustive incidence axioms, used by the CLI dump and the verification
// suites. All checks run in O(n^2 * q).
struct PlaneAxiomReport {
  bool counts_ok = false;        // n points, n lines
  bool line_size_ok = false;     // q+1 points per line
  bool point_degree_ok = false;  // q+1 lines per point
  bool duality_ok = false;       // j on line i  <=>  i on line j
  bool line_pairs_ok = false;    // two distinct lines meet in exactly 1 point
  bool point_pairs_ok = false;   // two distinct points lie on exactly 1 line
  bool quadrilateral_ok = false; // 4 points, no 3 collinear

  bool all() const {
    return counts_ok && line_size_ok && point_degree_ok && duality_ok &&
           line_pairs_ok && point_pairs_ok && quadrilateral_ok;
  }
};

PlaneAxiomReport check_plane_axioms(const ProjPlane& plane);

}  // namespace fpp
