#pragma once

// Exact rational convex geometry for full-dimensional polytopes in dimension
// at most 4: hulls, the negated polar dual, star triangulations, volumes,
// barycenters, lattice points and support values.

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "kstab/rational.hpp"

namespace kstab {

inline constexpr std::size_t kMaxDimension = 4;
inline constexpr std::uint64_t kDefaultLatticeCap = 10'000'000;

/// Half-space <normal, m> >= offset. The normal is a primitive integer vector
/// (stored as Rat for arithmetic convenience) pointing into the polytope.
struct Facet {
  RatVec normal;
  Rat offset;

  friend bool operator==(const Facet&, const Facet&) = default;
};

/// Which vertex serves as the apex at every level of the star triangulation.
enum class Pivot { LexMin, LexMax };

/// A simplex of a triangulation: indices into Polytope::vertices().
using SimplexIndices = std::vector<std::size_t>;

class Polytope {
 public:
  std::size_t dim() const { return dim_; }
  const std::vector<RatVec>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  /// For each facet, the sorted indices of the vertices lying on it.
  const std::vector<std::vector<std::size_t>>& facet_vertices() const { return incidence_; }

  bool contains(const RatVec& point) const;

  /// <m_F, x> <= 1 form of each facet, available when the origin is interior.
  RatVec facet_functional(std::size_t facet) const;

  /// Star triangulation: the apex is joined to the recursively triangulated
  /// faces not containing it.
  std::vector<SimplexIndices> triangulate(Pivot pivot = Pivot::LexMin) const;

  friend bool operator==(const Polytope& a, const Polytope& b) {
    return a.dim_ == b.dim_ && a.vertices_ == b.vertices_ && a.facets_ == b.facets_;
  }

 private:
  friend Polytope convex_hull(const std::vector<RatVec>& points);

  std::size_t dim_ = 0;
  std::vector<RatVec> vertices_;
  std::vector<Facet> facets_;
  std::vector<std::vector<std::size_t>> incidence_;
};

/// Beneath-beyond hull over the points in lexicographic order. The result is
/// canonical: vertices deduplicated and sorted, facets sorted by (normal, offset).
/// Throws NotFullDimensional or DimensionCap.
Polytope convex_hull(const std::vector<RatVec>& points);
Polytope convex_hull(const std::vector<LatticeVec>& points);

/// P = {m : <m, v> >= -1 for all v in Q}. Throws OriginNotInterior.
Polytope polar_dual_negated(const Polytope& q);

struct VolumeBarycenter {
  Rat volume;
  RatVec barycenter;
};

VolumeBarycenter volume_barycenter(const Polytope& p, Pivot pivot = Pivot::LexMin);

/// |det| of the edge matrix of a simplex, i.e. n! times its volume.
Rat simplex_weight(const Polytope& p, const SimplexIndices& simplex);

/// All integer points of k*P, lexicographically sorted. Throws OverflowGuard
/// when the bounding box holds more than `cap` points.
std::vector<LatticeVec> lattice_points(const Polytope& p, std::int64_t k,
                                       std::uint64_t cap = kDefaultLatticeCap);

/// max over P of <., u>. Throws ZeroDirection.
Rat support_value(const Polytope& p, const LatticeVec& u);
/// min over P of <., u>. Throws ZeroDirection.
Rat min_value(const Polytope& p, const LatticeVec& u);

/// P intersected with {<normal, m> >= offset}. Throws NotFullDimensional when
/// the intersection has no interior.
Polytope clip(const Polytope& p, const RatVec& normal, const Rat& offset);

bool lex_less(const RatVec& a, const RatVec& b);

}  // namespace kstab
