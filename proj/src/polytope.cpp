#include "kstab/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "kstab/error.hpp"
#include "kstab/linalg.hpp"

namespace kstab {

bool lex_less(const RatVec& a, const RatVec& b) { return a < b; }

namespace {

struct WorkFacet {
  RatVec normal;  // primitive integer, inward
  Rat offset;
  std::vector<std::size_t> on;  // sorted indices into the point list
};

RatVec difference(const RatVec& a, const RatVec& b) {
  RatVec d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

// Hyperplane through `through` (must span an (n-1)-flat), oriented so that
// `inside` is strictly on the positive side.
WorkFacet hyperplane(const std::vector<RatVec>& pts, const std::vector<std::size_t>& through,
                     const RatVec& inside) {
  const std::size_t n = inside.size();
  linalg::Matrix rows;
  for (std::size_t i = 1; i < through.size(); ++i) rows.push_back(difference(pts[through[i]], pts[through[0]]));
  auto basis = linalg::nullspace(std::move(rows), n);
  // `through` is affinely independent by construction, so the kernel is a line.
  RatVec normal = primitive_integer_direction(basis.front());
  Rat offset = dot(normal, pts[through[0]]);
  if (dot(normal, inside) < offset) {
    for (auto& c : normal) c = -c;
    offset = -offset;
  }
  return WorkFacet{std::move(normal), std::move(offset), {}};
}

// Greedily picks an affinely independent subset of `candidates` of size `want`.
std::vector<std::size_t> independent_subset(const std::vector<RatVec>& pts,
                                            const std::vector<std::size_t>& candidates, std::size_t want) {
  std::vector<std::size_t> chosen;
  std::vector<const RatVec*> chosen_pts;
  for (auto idx : candidates) {
    if (chosen.size() == want) break;
    chosen_pts.push_back(&pts[idx]);
    if (linalg::affine_dim(chosen_pts) == static_cast<int>(chosen_pts.size()) - 1) {
      chosen.push_back(idx);
    } else {
      chosen_pts.pop_back();
    }
  }
  return chosen;
}

int affine_dim_of(const std::vector<RatVec>& pts, const std::vector<std::size_t>& idx) {
  std::vector<const RatVec*> ptrs;
  ptrs.reserve(idx.size());
  for (auto i : idx) ptrs.push_back(&pts[i]);
  return linalg::affine_dim(ptrs);
}

std::vector<std::size_t> intersect(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

Polytope convex_hull(const std::vector<LatticeVec>& points) {
  std::vector<RatVec> pts;
  pts.reserve(points.size());
  for (const auto& p : points) pts.push_back(to_rat(p));
  return convex_hull(pts);
}

Polytope convex_hull(const std::vector<RatVec>& input) {
  if (input.empty()) throw Error(ErrorCode::NotFullDimensional, "no points");
  const std::size_t n = input.front().size();
  if (n == 0) throw Error(ErrorCode::NotFullDimensional, "zero-dimensional points");
  if (n > kMaxDimension) {
    throw Error(ErrorCode::DimensionCap, "dimension " + std::to_string(n) + " exceeds cap " +
                                             std::to_string(kMaxDimension));
  }
  for (const auto& p : input) {
    if (p.size() != n) throw Error(ErrorCode::NotFullDimensional, "points of mixed dimension");
  }

  std::vector<RatVec> pts(input);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  std::vector<std::size_t> all(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) all[i] = i;
  const auto simplex = independent_subset(pts, all, n + 1);
  if (simplex.size() < n + 1) {
    throw Error(ErrorCode::NotFullDimensional, "points do not affinely span R^" + std::to_string(n));
  }

  RatVec inside(n, Rat(0));
  for (auto i : simplex) {
    for (std::size_t j = 0; j < n; ++j) inside[j] += pts[i][j];
  }
  for (auto& c : inside) c /= Rat(static_cast<long>(n + 1));

  std::vector<WorkFacet> facets;
  for (std::size_t omit = 0; omit <= n; ++omit) {
    std::vector<std::size_t> face;
    for (std::size_t i = 0; i <= n; ++i) {
      if (i != omit) face.push_back(simplex[i]);
    }
    auto f = hyperplane(pts, face, inside);
    std::sort(face.begin(), face.end());
    f.on = std::move(face);
    facets.push_back(std::move(f));
  }

  std::vector<std::size_t> processed(simplex.begin(), simplex.end());
  std::sort(processed.begin(), processed.end());

  for (std::size_t p = 0; p < pts.size(); ++p) {
    if (std::binary_search(processed.begin(), processed.end(), p)) continue;

    std::vector<Rat> side(facets.size());
    bool any_visible = false;
    for (std::size_t f = 0; f < facets.size(); ++f) {
      side[f] = dot(facets[f].normal, pts[p]) - facets[f].offset;
      any_visible = any_visible || side[f] < 0;
    }

    std::vector<WorkFacet> created;
    if (any_visible) {
      // Horizon ridges: (n-2)-dimensional intersections of a visible facet
      // with a non-visible one.
      for (std::size_t v = 0; v < facets.size(); ++v) {
        if (side[v] >= 0) continue;
        for (std::size_t w = 0; w < facets.size(); ++w) {
          if (side[w] < 0) continue;
          auto ridge = intersect(facets[v].on, facets[w].on);
          if (affine_dim_of(pts, ridge) != static_cast<int>(n) - 2) continue;
          if (side[w] == 0) continue;  // p extends facet w itself
          auto through = independent_subset(pts, ridge, n - 1);
          through.push_back(p);
          auto nf = hyperplane(pts, through, inside);
          const bool dup = std::any_of(created.begin(), created.end(), [&](const WorkFacet& c) {
            return c.normal == nf.normal && c.offset == nf.offset;
          });
          if (!dup) created.push_back(std::move(nf));
        }
      }
    }

    std::vector<WorkFacet> next;
    next.reserve(facets.size() + created.size());
    for (std::size_t f = 0; f < facets.size(); ++f) {
      if (side[f] < 0) continue;
      if (side[f] == 0) {
        facets[f].on.insert(std::upper_bound(facets[f].on.begin(), facets[f].on.end(), p), p);
      }
      next.push_back(std::move(facets[f]));
    }
    processed.insert(std::upper_bound(processed.begin(), processed.end(), p), p);
    for (auto& nf : created) {
      for (auto q : processed) {
        if (dot(nf.normal, pts[q]) == nf.offset) nf.on.push_back(q);
      }
      next.push_back(std::move(nf));
    }
    facets = std::move(next);
  }

  // Vertices: processed points whose incident facet normals span R^n.
  std::vector<std::vector<std::size_t>> facets_at(pts.size());
  for (std::size_t f = 0; f < facets.size(); ++f) {
    for (auto q : facets[f].on) facets_at[q].push_back(f);
  }
  std::vector<std::size_t> vertex_ids;
  for (auto q : processed) {
    if (facets_at[q].size() < n) continue;
    linalg::Matrix normals;
    for (auto f : facets_at[q]) normals.push_back(facets[f].normal);
    if (linalg::rank(std::move(normals)) == n) vertex_ids.push_back(q);
  }

  Polytope out;
  out.dim_ = n;
  for (auto q : vertex_ids) out.vertices_.push_back(pts[q]);
  std::sort(facets.begin(), facets.end(), [](const WorkFacet& a, const WorkFacet& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.offset < b.offset;
  });
  for (auto& f : facets) {
    std::vector<std::size_t> on;
    for (std::size_t i = 0; i < out.vertices_.size(); ++i) {
      if (dot(f.normal, out.vertices_[i]) == f.offset) on.push_back(i);
    }
    out.facets_.push_back(Facet{std::move(f.normal), std::move(f.offset)});
    out.incidence_.push_back(std::move(on));
  }

  // Cross-validate the two representations.
  for (std::size_t f = 0; f < out.facets_.size(); ++f) {
    for (const auto& v : out.vertices_) {
      if (dot(out.facets_[f].normal, v) < out.facets_[f].offset) {
        throw Error(ErrorCode::InvalidArgument, "hull validation failed: vertex outside facet");
      }
    }
    if (affine_dim_of(out.vertices_, out.incidence_[f]) != static_cast<int>(n) - 1) {
      throw Error(ErrorCode::InvalidArgument, "hull validation failed: degenerate facet");
    }
  }
  return out;
}

bool Polytope::contains(const RatVec& point) const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Facet& f) { return dot(f.normal, point) >= f.offset; });
}

RatVec Polytope::facet_functional(std::size_t facet) const {
  const Facet& f = facets_.at(facet);
  if (f.offset >= 0) throw Error(ErrorCode::OriginNotInterior, "origin is not interior to the polytope");
  RatVec m(f.normal.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = f.normal[i] / f.offset;
  return m;
}

Polytope polar_dual_negated(const Polytope& q) {
  std::vector<RatVec> pts;
  pts.reserve(q.facets().size());
  for (std::size_t f = 0; f < q.facets().size(); ++f) {
    RatVec m = q.facet_functional(f);
    for (auto& c : m) c = -c;
    pts.push_back(std::move(m));
  }
  return convex_hull(pts);
}

namespace {

void triangulate_face(const Polytope& p, const std::vector<std::size_t>& face, int d, Pivot pivot,
                      std::vector<SimplexIndices>& out, SimplexIndices& prefix) {
  if (d == 0) {
    prefix.push_back(face.front());
    out.push_back(prefix);
    std::sort(out.back().begin(), out.back().end());
    prefix.pop_back();
    return;
  }
  const std::size_t apex = pivot == Pivot::LexMin ? face.front() : face.back();
  std::set<std::vector<std::size_t>> subfaces;
  for (const auto& on : p.facet_vertices()) {
    auto sub = intersect(face, on);
    if (sub.size() < static_cast<std::size_t>(d)) continue;
    if (std::binary_search(sub.begin(), sub.end(), apex)) continue;
    if (affine_dim_of(p.vertices(), sub) != d - 1) continue;
    subfaces.insert(std::move(sub));
  }
  prefix.push_back(apex);
  for (const auto& sub : subfaces) triangulate_face(p, sub, d - 1, pivot, out, prefix);
  prefix.pop_back();
}

}  // namespace

std::vector<SimplexIndices> Polytope::triangulate(Pivot pivot) const {
  std::vector<std::size_t> all(vertices_.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::vector<SimplexIndices> out;
  SimplexIndices prefix;
  triangulate_face(*this, all, static_cast<int>(dim_), pivot, out, prefix);
  return out;
}

Rat simplex_weight(const Polytope& p, const SimplexIndices& simplex) {
  linalg::Matrix edges;
  const RatVec& base = p.vertices()[simplex.front()];
  for (std::size_t i = 1; i < simplex.size(); ++i) edges.push_back(difference(p.vertices()[simplex[i]], base));
  return abs(linalg::determinant(std::move(edges)));
}

VolumeBarycenter volume_barycenter(const Polytope& p, Pivot pivot) {
  const std::size_t n = p.dim();
  Rat factorial = 1;
  for (std::size_t i = 2; i <= n; ++i) factorial *= Rat(static_cast<long>(i));
  Rat total = 0;
  RatVec moment(n, Rat(0));
  for (const auto& s : p.triangulate(pivot)) {
    const Rat w = simplex_weight(p, s);
    total += w;
    for (auto idx : s) {
      for (std::size_t j = 0; j < n; ++j) moment[j] += w * p.vertices()[idx][j];
    }
  }
  // each simplex centroid is the mean of its n+1 vertices
  for (auto& c : moment) c /= total * Rat(static_cast<long>(n + 1));
  return VolumeBarycenter{total / factorial, std::move(moment)};
}

std::vector<LatticeVec> lattice_points(const Polytope& p, std::int64_t k, std::uint64_t cap) {
  if (k <= 0) throw Error(ErrorCode::InvalidArgument, "dilation factor must be positive");
  const std::size_t n = p.dim();
  std::vector<std::int64_t> lo(n), hi(n);
  long double box = 1;
  for (std::size_t j = 0; j < n; ++j) {
    Rat mn = p.vertices().front()[j], mx = mn;
    for (const auto& v : p.vertices()) {
      mn = std::min(mn, v[j]);
      mx = std::max(mx, v[j]);
    }
    lo[j] = ceil_int(mn * k).convert_to<std::int64_t>();
    hi[j] = floor_int(mx * k).convert_to<std::int64_t>();
    box *= static_cast<long double>(hi[j] - lo[j] + 1);
  }
  if (box > static_cast<long double>(cap)) {
    throw Error(ErrorCode::OverflowGuard, "bounding box of kP exceeds the lattice-point cap");
  }

  // <normal, m> is an integer, so each facet becomes <normal, m> >= ceil(k*offset).
  std::vector<LatticeVec> normals;
  std::vector<std::int64_t> bounds;
  for (const auto& f : p.facets()) {
    LatticeVec nv(n);
    for (std::size_t j = 0; j < n; ++j) nv[j] = numerator(f.normal[j]).convert_to<std::int64_t>();
    normals.push_back(std::move(nv));
    bounds.push_back(ceil_int(f.offset * k).convert_to<std::int64_t>());
  }

  std::vector<LatticeVec> out;
  LatticeVec m(lo);
  while (true) {
    bool inside = true;
    for (std::size_t f = 0; f < normals.size() && inside; ++f) inside = dot(normals[f], m) >= bounds[f];
    if (inside) out.push_back(m);
    std::size_t j = n;
    while (j > 0) {
      --j;
      if (m[j] < hi[j]) {
        ++m[j];
        break;
      }
      m[j] = lo[j];
      if (j == 0) return out;
    }
  }
}

Rat support_value(const Polytope& p, const LatticeVec& u) {
  if (is_zero(u)) throw Error(ErrorCode::ZeroDirection, "direction must be nonzero");
  Rat best = dot(p.vertices().front(), u);
  for (const auto& v : p.vertices()) best = std::max(best, dot(v, u));
  return best;
}

Rat min_value(const Polytope& p, const LatticeVec& u) {
  if (is_zero(u)) throw Error(ErrorCode::ZeroDirection, "direction must be nonzero");
  Rat best = dot(p.vertices().front(), u);
  for (const auto& v : p.vertices()) best = std::min(best, dot(v, u));
  return best;
}

Polytope clip(const Polytope& p, const RatVec& normal, const Rat& offset) {
  const auto& vs = p.vertices();
  std::vector<Rat> val(vs.size());
  std::vector<RatVec> pts;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    val[i] = dot(normal, vs[i]) - offset;
    if (val[i] >= 0) pts.push_back(vs[i]);
  }
  // Crossings of every vertex pair straddling the hyperplane; non-edge pairs
  // only add points inside the clipped body, which the hull discards.
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (val[i] <= 0) continue;
    for (std::size_t j = 0; j < vs.size(); ++j) {
      if (val[j] >= 0) continue;
      const Rat t = val[i] / (val[i] - val[j]);
      RatVec x(vs[i].size());
      for (std::size_t c = 0; c < x.size(); ++c) x[c] = vs[i][c] + t * (vs[j][c] - vs[i][c]);
      pts.push_back(std::move(x));
    }
  }
  if (pts.empty()) throw Error(ErrorCode::NotFullDimensional, "clipped polytope is empty");
  return convex_hull(pts);
}

}  // namespace kstab
