#pragma once

#include <vector>

#include "kstab/polynomial.hpp"
#include "kstab/polytope.hpp"
#include "kstab/rational.hpp"

namespace kstab {

/// Continuous piecewise polynomial on [0, width]: piece i lives on
/// [breakpoints[i], breakpoints[i+1]]. Left of 0 the curve is constant at its
/// value at 0; right of width it is 0.
class VolumeCurve {
 public:
  VolumeCurve() = default;
  /// Throws InvalidArgument unless breakpoints start at 0, strictly increase and
  /// number pieces.size() + 1.
  VolumeCurve(std::vector<Rat> breakpoints, std::vector<Polynomial> pieces);

  const std::vector<Rat>& breakpoints() const { return breakpoints_; }
  const std::vector<Polynomial>& pieces() const { return pieces_; }
  Rat width() const { return breakpoints_.empty() ? Rat(0) : breakpoints_.back(); }

  Rat operator()(const Rat& x) const;

  /// Integral of the curve over [lo, hi] (clamped to its support).
  Rat integral(const Rat& lo, const Rat& hi) const;
  Rat integral() const { return integral(0, width()); }
  /// Integral of x * curve(x) over [lo, hi].
  Rat first_moment(const Rat& lo, const Rat& hi) const;

 private:
  std::vector<Rat> breakpoints_;
  std::vector<Polynomial> pieces_;
};

/// C(x) = n! * vol{m in P : <m,u> - base >= x} as an exact piecewise
/// polynomial on [0, max_P<.,u> - base]. Requires base <= min_P<.,u>.
/// Throws ZeroDirection, or InvalidArgument if base is above the minimum.
VolumeCurve slice_volume_curve(const Polytope& p, const LatticeVec& u, const Rat& base);

/// Fraction of a simplex's volume where the linear height exceeds t, as a
/// polynomial in t valid for t between `lower` and the next larger vertex
/// height. `heights` are the values at the n+1 vertices; `lower` is either one
/// of them or anything below all of them.
Polynomial simplex_upper_fraction(std::vector<Rat> heights, const Rat& lower);

}  // namespace kstab
