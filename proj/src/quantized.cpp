#include "kstab/quantized.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <utility>

#include "kstab/error.hpp"

namespace kstab {

QuantizedSlice::QuantizedSlice(const ToricFano& x, std::int64_t k)
    : k_(k), points_(lattice_points(x.section_polytope(), k)), sum_(x.dim(), 0), integral_(x.divides_index(k)) {
  for (const auto& m : points_) {
    for (std::size_t j = 0; j < m.size(); ++j) sum_[j] += m[j];
  }
}

std::int64_t h0_count(const ToricFano& x, const QuantizedSlice& slice, const ToricValuation& v, const Rat& a) {
  const Rat shift = Rat(slice.k()) * log_discrepancy(x, v);
  // <m,u> is an integer, so the test is <m,u> >= ceil(a - kA).
  const auto threshold = ceil_int(a - shift).convert_to<std::int64_t>();
  return std::count_if(slice.points().begin(), slice.points().end(),
                       [&](const LatticeVec& m) { return dot(m, v.u()) >= threshold; });
}

std::int64_t h0_count(const ToricFano& x, std::int64_t k, const ToricValuation& v, const Rat& a) {
  return h0_count(x, QuantizedSlice(x, k), v, a);
}

Rat sk_sum(const ToricFano& x, const QuantizedSlice& slice, const ToricValuation& v) {
  const Rat shift = Rat(slice.k()) * log_discrepancy(x, v);
  Int total = 0;
  for (const auto& m : slice.points()) total += floor_int(Rat(dot(m, v.u())) + shift);
  return Rat(total) / (Rat(slice.k()) * Rat(slice.count()));
}

Rat sk_sum(const ToricFano& x, std::int64_t k, const ToricValuation& v) { return sk_sum(x, QuantizedSlice(x, k), v); }

DeltaK delta_k(const ToricFano& x, std::int64_t k, int radius) {
  if (k <= 0) throw Error(ErrorCode::InvalidArgument, "k must be positive");
  if (radius < 1) throw Error(ErrorCode::InvalidArgument, "search radius must be at least 1");
  const QuantizedSlice slice(x, k);
  // rays first so that ties resolve to a ray; each group is lexicographic and
  // only a strict improvement replaces the witness
  const std::set<LatticeVec> rays(x.rays().begin(), x.rays().end());
  std::vector<LatticeVec> candidates(rays.begin(), rays.end());
  for (auto& u : primitive_box(x.dim(), radius)) {
    if (!rays.contains(u)) candidates.push_back(std::move(u));
  }

  const Rat denom = Rat(k) * Rat(slice.count());
  std::optional<DeltaK> best;
  for (const auto& u : candidates) {
    // floor(<m,u> + kA) = <m,u> + floor(kA) since <m,u> is an integer.
    const Rat a = log_discrepancy(x, u);
    const Rat sk = (Rat(dot(slice.point_sum(), u)) + Rat(slice.count()) * Rat(floor_int(Rat(k) * a))) / denom;
    if (sk <= 0) continue;
    Rat ratio = a / sk;
    if (!best || ratio < best->value) best = DeltaK{std::move(ratio), ToricValuation(u), sk, slice.count()};
  }
  if (!best) throw Error(ErrorCode::ZeroDivisor, "S_k vanishes in every searched direction");
  return *best;
}

InvariantDivisor monomial_basis_divisor(const ToricFano& x, std::int64_t k) {
  const QuantizedSlice slice(x, k);
  InvariantDivisor d;
  const Rat denom = Rat(k) * Rat(slice.count());
  for (const auto& ray : x.rays()) {
    d.coefficients.push_back((Rat(dot(slice.point_sum(), ray)) + Rat(k) * Rat(slice.count())) / denom);
  }
  return d;
}

BasisCertificate worst_basis_vanishing(const ToricFano& x, std::int64_t k, const ToricValuation& v) {
  const QuantizedSlice slice(x, k);
  const Rat shift = Rat(k) * log_discrepancy(x, v);
  std::vector<std::pair<Rat, LatticeVec>> ordered;
  ordered.reserve(slice.points().size());
  for (const auto& m : slice.points()) ordered.emplace_back(Rat(dot(m, v.u())) + shift, m);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  BasisCertificate cert{sk_sum(x, slice, v), {}, {}};
  for (auto& [order, m] : ordered) {
    cert.orders.push_back(std::move(order));
    cert.monomials.push_back(std::move(m));
  }
  return cert;
}

}  // namespace kstab
