#include "kstab/volume_curve.hpp"

#include <algorithm>
#include <utility>

#include "kstab/error.hpp"

namespace kstab {

VolumeCurve::VolumeCurve(std::vector<Rat> breakpoints, std::vector<Polynomial> pieces)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
  if (breakpoints_.empty() || breakpoints_.front() != 0 || breakpoints_.size() != pieces_.size() + 1) {
    throw Error(ErrorCode::InvalidArgument, "volume curve breakpoints must start at 0 and bound every piece");
  }
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    if (breakpoints_[i] <= breakpoints_[i - 1]) {
      throw Error(ErrorCode::InvalidArgument, "volume curve breakpoints must increase strictly");
    }
  }
}

Rat VolumeCurve::operator()(const Rat& x) const {
  if (pieces_.empty() || x >= width()) return 0;
  if (x <= 0) return pieces_.front()(Rat(0));
  const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  const auto piece = static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
  return pieces_[piece](x);
}

Rat VolumeCurve::integral(const Rat& lo, const Rat& hi) const {
  Rat total = 0;
  if (pieces_.empty()) return total;
  if (lo < 0) total += pieces_.front()(Rat(0)) * (std::min(hi, Rat(0)) - lo);
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const Rat a = std::max(lo, breakpoints_[i]);
    const Rat b = std::min(hi, breakpoints_[i + 1]);
    if (a < b) total += pieces_[i].integrate(a, b);
  }
  return total;
}

Rat VolumeCurve::first_moment(const Rat& lo, const Rat& hi) const {
  Rat total = 0;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const Rat a = std::max(lo, breakpoints_[i]);
    const Rat b = std::min(hi, breakpoints_[i + 1]);
    if (a < b) total += pieces_[i].times_x().integrate(a, b);
  }
  return total;
}

Polynomial simplex_upper_fraction(std::vector<Rat> h, const Rat& lower) {
  // For uniform X in the simplex, P(height(X) >= t) is the divided difference
  // of g(s) = (s - t)_+^n over the vertex heights. On (lower, upper) the
  // function g is (s - t)^n at larger heights and 0 at heights <= lower, so
  // the confluent table only needs derivatives of a polynomial or of zero.
  std::sort(h.begin(), h.end());
  const std::size_t m = h.size();
  const unsigned n = static_cast<unsigned>(m - 1);

  // Taylor coefficient g^(r)(s)/r! = C(n,r) (s - t)^(n-r), as a polynomial in t.
  auto taylor = [&](const Rat& s, unsigned r) -> Polynomial {
    if (s <= lower) return {};
    Rat binom = 1;
    for (unsigned i = 0; i < r; ++i) binom = binom * (n - i) / (i + 1);
    return Polynomial::power_of_difference(s, n - r) * binom;
  };

  std::vector<Polynomial> col(m);
  for (std::size_t i = 0; i < m; ++i) col[i] = taylor(h[i], 0);
  for (std::size_t span = 1; span < m; ++span) {
    for (std::size_t i = 0; i + span < m; ++i) {
      const std::size_t j = i + span;
      if (h[i] == h[j]) {
        col[i] = taylor(h[i], static_cast<unsigned>(span));
      } else {
        Polynomial d = col[i + 1] - col[i];
        d /= (h[j] - h[i]);
        col[i] = std::move(d);
      }
    }
  }
  return col[0];
}

VolumeCurve slice_volume_curve(const Polytope& p, const LatticeVec& u, const Rat& base) {
  const Rat lowest = min_value(p, u);  // throws ZeroDirection
  if (base > lowest) throw Error(ErrorCode::InvalidArgument, "base must not exceed min over P of <.,u>");

  std::vector<Rat> height(p.vertices().size());
  std::vector<Rat> bps{Rat(0)};
  for (std::size_t i = 0; i < height.size(); ++i) {
    height[i] = dot(p.vertices()[i], u) - base;
    bps.push_back(height[i]);
  }
  std::sort(bps.begin(), bps.end());
  bps.erase(std::unique(bps.begin(), bps.end()), bps.end());

  std::vector<Polynomial> pieces(bps.size() - 1);
  for (const auto& simplex : p.triangulate(Pivot::LexMin)) {
    const Rat weight = simplex_weight(p, simplex);
    std::vector<Rat> h;
    h.reserve(simplex.size());
    for (auto idx : simplex) h.push_back(height[idx]);
    const auto [lo_it, hi_it] = std::minmax_element(h.begin(), h.end());
    const Rat lo = *lo_it, hi = *hi_it;

    // The fraction is one polynomial between consecutive distinct heights of
    // this simplex; cache it while walking the global intervals.
    Polynomial cached;
    Rat cached_lower = -1;
    for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
      const Rat& a = bps[i];
      const Rat& b = bps[i + 1];
      if (b <= lo) {
        pieces[i] += Polynomial::constant(weight);
        continue;
      }
      if (a >= hi) break;
      Rat local_lower = lo;
      for (const auto& x : h) {
        if (x <= a && x > local_lower) local_lower = x;
      }
      if (local_lower != cached_lower) {
        cached = simplex_upper_fraction(h, local_lower) * weight;
        cached_lower = local_lower;
      }
      pieces[i] += cached;
    }
  }
  return VolumeCurve(std::move(bps), std::move(pieces));
}

}  // namespace kstab
