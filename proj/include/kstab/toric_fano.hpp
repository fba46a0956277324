#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kstab/polytope.hpp"
#include "kstab/rational.hpp"

namespace kstab {

/// A torus-invariant prime divisor over X, given by a primitive lattice vector.
class ToricValuation {
 public:
  /// Throws ZeroDirection for u = 0 and NotPrimitive for non-primitive u.
  explicit ToricValuation(LatticeVec u);

  const LatticeVec& u() const { return u_; }
  std::size_t dim() const { return u_.size(); }

  friend bool operator==(const ToricValuation&, const ToricValuation&) = default;
  friend bool operator<(const ToricValuation& a, const ToricValuation& b) { return a.u_ < b.u_; }

 private:
  LatticeVec u_;
};

/// Toric Q-Fano variety given by the primitive ray generators of its fan.
/// Immutable after build().
class ToricFano {
 public:
  std::size_t dim() const { return dim_; }
  const std::string& name() const { return name_; }
  const std::vector<LatticeVec>& rays() const { return rays_; }
  /// conv(rays)
  const Polytope& ray_polytope() const { return q_; }
  /// The anticanonical section polytope -Q°.
  const Polytope& section_polytope() const { return p_; }
  /// (-K_X)^n = n! vol(P)
  const Rat& degree() const { return degree_; }
  const RatVec& barycenter() const { return barycenter_; }
  std::int64_t cartier_index() const { return cartier_index_; }
  /// m_F with <m_F, .> = 1 on each facet F of Q.
  const std::vector<RatVec>& facet_functionals() const { return functionals_; }

  bool divides_index(std::int64_t k) const { return k % cartier_index_ == 0; }

 private:
  friend ToricFano build(const std::vector<LatticeVec>& rays, std::string name);

  std::size_t dim_ = 0;
  std::string name_;
  std::vector<LatticeVec> rays_;
  Polytope q_;
  Polytope p_;
  Rat degree_;
  RatVec barycenter_;
  std::int64_t cartier_index_ = 1;
  std::vector<RatVec> functionals_;
};

/// Throws NotPrimitive, NotFano (origin not interior, duplicate or non-vertex
/// ray, too few rays) or DimensionCap.
ToricFano build(const std::vector<LatticeVec>& rays, std::string name = "");

/// A_X(F) for the valuation: the gauge of Q at u, max over facets of <m_F, u>.
Rat log_discrepancy(const ToricFano& x, const ToricValuation& v);
Rat log_discrepancy(const ToricFano& x, const LatticeVec& u);

struct SectionOrder {
  Rat value;
  /// Set when k is not a multiple of the Cartier index; the value may then be
  /// non-integral but is still the exact vanishing bound.
  bool index_warning = false;
};

/// Order of vanishing of the monomial section chi^m of -kK_X along the
/// valuation: <m, u> + k A(u).
SectionOrder section_vanishing_order(const ToricFano& x, std::int64_t k, const LatticeVec& m,
                                     const ToricValuation& v);

}  // namespace kstab
