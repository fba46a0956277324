#pragma once

// Finite-level invariants: monomial bases of H^0(-kK_X), vanishing sums S_k,
// delta_k over a search box, and basis-type divisors.

#include <cstdint>
#include <vector>

#include "kstab/invariants.hpp"
#include "kstab/rational.hpp"
#include "kstab/toric_fano.hpp"

namespace kstab {

/// The monomial basis of H^0(-kK_X): lattice points of kP.
class QuantizedSlice {
 public:
  QuantizedSlice(const ToricFano& x, std::int64_t k);

  std::int64_t k() const { return k_; }
  const std::vector<LatticeVec>& points() const { return points_; }
  std::int64_t count() const { return static_cast<std::int64_t>(points_.size()); }
  /// Sum of all points, used for O(1) vanishing sums.
  const LatticeVec& point_sum() const { return sum_; }
  /// Whether every vanishing order is an integer (k multiple of the Cartier index).
  bool integral_orders() const { return integral_; }

 private:
  std::int64_t k_;
  std::vector<LatticeVec> points_;
  LatticeVec sum_;
  bool integral_;
};

/// #{m in kP : <m,u> + k A(u) >= a}
std::int64_t h0_count(const ToricFano& x, std::int64_t k, const ToricValuation& v, const Rat& a);
std::int64_t h0_count(const ToricFano& x, const QuantizedSlice& slice, const ToricValuation& v, const Rat& a);

/// S_k(u) = sum over m of floor(<m,u> + k A(u)), divided by k N_k.
Rat sk_sum(const ToricFano& x, std::int64_t k, const ToricValuation& v);
Rat sk_sum(const ToricFano& x, const QuantizedSlice& slice, const ToricValuation& v);

struct DeltaK {
  Rat value;
  ToricValuation witness;
  Rat sk_at_witness;
  std::int64_t n_k;
};

/// min of A/S_k over the rays and all primitive u with |u|_inf <= radius.
/// Directions with S_k = 0 contribute +infinity and are skipped. Ties go to the
/// lexicographically smallest ray, then the smallest box direction.
DeltaK delta_k(const ToricFano& x, std::int64_t k, int radius = 8);

/// Basis-type divisor of any monomial basis: c_j = sum(<m,v_j> + k) / (k N_k).
InvariantDivisor monomial_basis_divisor(const ToricFano& x, std::int64_t k);

struct BasisCertificate {
  Rat value;
  /// Monomials by decreasing vanishing order along u (ties lexicographic):
  /// a basis compatible with the vanishing filtration.
  std::vector<LatticeVec> monomials;
  std::vector<Rat> orders;
};

BasisCertificate worst_basis_vanishing(const ToricFano& x, std::int64_t k, const ToricValuation& v);

}  // namespace kstab
