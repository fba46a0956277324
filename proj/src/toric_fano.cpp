#include "kstab/toric_fano.hpp"

#include <algorithm>
#include <utility>

#include "kstab/error.hpp"

namespace kstab {

ToricValuation::ToricValuation(LatticeVec u) : u_(std::move(u)) {
  if (u_.empty() || is_zero(u_)) throw Error(ErrorCode::ZeroDirection, "valuation vector must be nonzero");
  if (!is_primitive(u_)) throw Error(ErrorCode::NotPrimitive, "valuation vector " + to_string(u_) + " is not primitive");
}

ToricFano build(const std::vector<LatticeVec>& rays, std::string name) {
  if (rays.empty()) throw Error(ErrorCode::NotFano, "no rays");
  const std::size_t n = rays.front().size();
  if (n > kMaxDimension) throw Error(ErrorCode::DimensionCap, "dimension exceeds cap");
  for (const auto& r : rays) {
    if (r.size() != n || n == 0) throw Error(ErrorCode::NotFano, "rays must share one positive dimension");
    if (!is_primitive(r)) throw Error(ErrorCode::NotPrimitive, "ray " + to_string(r) + " is not primitive");
  }
  if (rays.size() < n + 1) throw Error(ErrorCode::NotFano, "need at least n+1 rays");
  {
    auto sorted = rays;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(ErrorCode::NotFano, "duplicate ray");
    }
  }

  ToricFano x;
  x.dim_ = n;
  x.name_ = std::move(name);
  x.rays_ = rays;
  try {
    x.q_ = convex_hull(rays);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotFullDimensional) throw Error(ErrorCode::NotFano, e.what());
    throw;
  }
  for (const auto& f : x.q_.facets()) {
    if (f.offset >= 0) throw Error(ErrorCode::NotFano, "origin is not in the interior of conv(rays)");
  }
  if (x.q_.vertices().size() != rays.size()) {
    throw Error(ErrorCode::NotFano, "some ray is not a vertex of conv(rays)");
  }

  Int index = 1;
  for (std::size_t f = 0; f < x.q_.facets().size(); ++f) {
    auto m = x.q_.facet_functional(f);
    for (const auto& c : m) index = boost::multiprecision::lcm(index, denominator(c));
    x.functionals_.push_back(std::move(m));
  }
  x.cartier_index_ = index.convert_to<std::int64_t>();
  x.p_ = polar_dual_negated(x.q_);
  auto vb = volume_barycenter(x.p_);
  Rat factorial = 1;
  for (std::size_t i = 2; i <= n; ++i) factorial *= Rat(static_cast<long>(i));
  x.degree_ = vb.volume * factorial;
  x.barycenter_ = std::move(vb.barycenter);
  return x;
}

Rat log_discrepancy(const ToricFano& x, const LatticeVec& u) {
  if (u.size() != x.dim()) throw Error(ErrorCode::InvalidArgument, "dimension mismatch");
  Rat best = dot(x.facet_functionals().front(), u);
  for (const auto& m : x.facet_functionals()) best = std::max(best, dot(m, u));
  return best;
}

Rat log_discrepancy(const ToricFano& x, const ToricValuation& v) { return log_discrepancy(x, v.u()); }

SectionOrder section_vanishing_order(const ToricFano& x, std::int64_t k, const LatticeVec& m,
                                     const ToricValuation& v) {
  if (k <= 0) throw Error(ErrorCode::InvalidArgument, "k must be positive");
  return SectionOrder{Rat(dot(m, v.u())) + Rat(k) * log_discrepancy(x, v), !x.divides_index(k)};
}

}  // namespace kstab
