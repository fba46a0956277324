#include "kstab/invariants.hpp"

#include <algorithm>
#include <utility>

#include "kstab/error.hpp"
#include "kstab/linalg.hpp"

namespace kstab {

const char* const kAssumptionNote =
    "Invariants are minimized over torus-invariant valuations only. A NotKSemistable verdict is "
    "unconditional (the witness has beta < 0). Positive verdicts assume that torus-invariant "
    "valuations compute delta and alpha for this toric variety.";

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::NotKSemistable: return "NotKSemistable";
    case Verdict::KSemistableEquivariant: return "KSemistableEquivariant";
    case Verdict::UniformlyKStableEquivariant: return "UniformlyKStableEquivariant";
  }
  return "Unknown";
}

Rat pseudo_effective_threshold(const ToricFano& x, const LatticeVec& u) {
  return log_discrepancy(x, u) + support_value(x.section_polytope(), u);
}

Rat expected_vanishing(const ToricFano& x, const LatticeVec& u) {
  return log_discrepancy(x, u) + dot(x.barycenter(), u);
}

ValuationProfile profile(const ToricFano& x, const ToricValuation& v) {
  const LatticeVec& u = v.u();
  const Rat a = log_discrepancy(x, u);
  const Rat tau = pseudo_effective_threshold(x, u);
  const Rat s = a + dot(x.barycenter(), u);
  // min_P <., u> = -A(u), so the curve is measured from the bottom of P.
  VolumeCurve curve = slice_volume_curve(x.section_polytope(), u, -a);
  const Rat integral = curve.integral();

  const Rat beta_curve = x.degree() * a - integral;
  const Rat beta_bary = -x.degree() * dot(x.barycenter(), u);
  if (beta_curve != beta_bary) {
    throw Error(ErrorCode::OracleMismatch, "beta disagrees between curve and barycenter at u=" + to_string(u));
  }
  const Rat j = x.degree() * tau - integral;
  if (j != x.degree() * (tau - s)) {
    throw Error(ErrorCode::OracleMismatch, "j disagrees between curve and barycenter at u=" + to_string(u));
  }
  return ValuationProfile{v, a, tau, s, beta_curve, j, std::move(curve)};
}

namespace {

template <typename Ratio>
Extremum min_over_rays(const ToricFano& x, Ratio ratio) {
  std::optional<Extremum> best;
  for (const auto& ray : x.rays()) {
    Rat r = ratio(ray);
    if (!best || r < best->value || (r == best->value && ray < best->witness.u())) {
      best = Extremum{std::move(r), ToricValuation(ray)};
    }
  }
  return *best;
}

}  // namespace

Extremum delta(const ToricFano& x) {
  // A = 1 on every ray, so A/S = 1/(1 + <b, v>).
  return min_over_rays(x, [&](const LatticeVec& v) { return 1 / (1 + dot(x.barycenter(), v)); });
}

Extremum alpha_bound(const ToricFano& x) {
  return min_over_rays(x, [&](const LatticeVec& v) { return 1 / (1 + support_value(x.section_polytope(), v)); });
}

Extremum uniform_margin_with_witness(const ToricFano& x) {
  // beta/j = -<b,u> / (h_P(u) - <b,u>) with h_P the support function of P. Both
  // are linear on the normal fan of P, whose rays are the negated rays of X; A
  // cancels, so the fan of X is the wrong place to look.
  std::optional<Extremum> best;
  for (const auto& ray : x.rays()) {
    LatticeVec u(ray);
    for (auto& c : u) c = -c;
    const Rat bu = dot(x.barycenter(), u);
    Rat r = -bu / (support_value(x.section_polytope(), u) - bu);
    if (!best || r < best->value || (r == best->value && u < best->witness.u())) {
      best = Extremum{std::move(r), ToricValuation(u)};
    }
  }
  return *best;
}

Rat uniform_margin(const ToricFano& x) { return uniform_margin_with_witness(x).value; }

Rat lct_invariant(const ToricFano& x, const InvariantDivisor& d) {
  if (d.coefficients.size() != x.rays().size()) {
    throw Error(ErrorCode::InvalidArgument, "divisor needs one coefficient per ray");
  }
  std::optional<Rat> best;
  for (const auto& c : d.coefficients) {
    if (c < 0) throw Error(ErrorCode::InvalidArgument, "divisor coefficients must be nonnegative");
    if (c == 0) continue;
    Rat r = 1 / c;
    if (!best || r < *best) best = std::move(r);
  }
  if (!best) throw Error(ErrorCode::ZeroDivisor, "all coefficients are zero");
  return *best;
}

OkounkovCheck okounkov_barycenter_check(const ToricFano& x, const ToricValuation& v, const Rat& eps) {
  if (eps < 0) throw Error(ErrorCode::InvalidArgument, "eps must be nonnegative");
  const LatticeVec& u = v.u();
  const Rat a = log_discrepancy(x, u);
  const Rat tau = pseudo_effective_threshold(x, u);
  if (eps >= tau) throw Error(ErrorCode::EpsTooLarge, "eps must be below tau(u) = " + to_string(tau));

  const RatVec normal = to_rat(u);
  const Polytope body = clip(x.section_polytope(), normal, eps - a);
  const auto vb = volume_barycenter(body);
  const Rat b1 = dot(vb.barycenter, u) + a - eps;

  const VolumeCurve curve = slice_volume_curve(x.section_polytope(), u, -a);
  const Rat ratio = curve.integral(eps, tau) / curve(eps);

  const auto n = static_cast<long>(x.dim());
  return OkounkovCheck{b1, (tau - eps) * Rat(n, n + 1), ratio == b1, ratio};
}

InvariantDivisor invariant_member(const ToricFano& x, std::int64_t k, const LatticeVec& m) {
  if (k <= 0) throw Error(ErrorCode::InvalidArgument, "k must be positive");
  InvariantDivisor d;
  for (const auto& ray : x.rays()) {
    const std::int64_t coeff = dot(m, ray) + k;
    if (coeff < 0) throw Error(ErrorCode::InvalidArgument, "m = " + to_string(m) + " is not in kP");
    d.coefficients.emplace_back(coeff, k);
  }
  return d;
}

bool alpha_K2_check(const ToricFano& x, std::int64_t k, const InvariantDivisor& d) {
  if (k <= 0) throw Error(ErrorCode::InvalidArgument, "k must be positive");
  if (d.coefficients.size() != x.rays().size()) {
    throw Error(ErrorCode::DegreeMismatch, "divisor needs one coefficient per ray");
  }
  // D ~ -K_X as (1/k)|-kK_X| member: c_j = <m', v_j> + 1 with k m' integral
  // and k c_j integral.
  linalg::Matrix rows;
  RatVec rhs;
  for (std::size_t j = 0; j < x.rays().size(); ++j) {
    const Rat& c = d.coefficients[j];
    if (c < 0 || !is_integer(c * k)) {
      throw Error(ErrorCode::DegreeMismatch, "coefficient " + to_string(c) + " is not in (1/k)Z_{>=0}");
    }
    rows.push_back(to_rat(x.rays()[j]));
    rhs.push_back(c - 1);
  }
  const auto m = linalg::solve(std::move(rows), std::move(rhs));
  if (!m) throw Error(ErrorCode::DegreeMismatch, "divisor is not linearly equivalent to -K_X");
  for (const auto& c : *m) {
    if (!is_integer(c * k)) throw Error(ErrorCode::DegreeMismatch, "divisor is not in (1/k)|-kK_X|");
  }
  return lct_invariant(x, d) >= Rat(1, static_cast<long>(x.dim() + 1));
}

std::vector<LatticeVec> primitive_box(std::size_t dim, int radius) {
  std::vector<LatticeVec> out;
  LatticeVec u(dim, -radius);
  while (true) {
    if (is_primitive(u)) out.push_back(u);
    std::size_t j = dim;
    while (j > 0) {
      --j;
      if (u[j] < radius) {
        ++u[j];
        break;
      }
      u[j] = -radius;
      if (j == 0) return out;
    }
  }
}

StabilityReport verdict(const ToricFano& x, int radius) {
  if (radius < 1) throw Error(ErrorCode::InvalidArgument, "search radius must be at least 1");
  auto d = delta(x);
  auto al = alpha_bound(x);
  const Rat margin = uniform_margin(x);

  const auto box = primitive_box(x.dim(), radius);
  for (const auto& u : box) {
    const Rat a = log_discrepancy(x, u);
    const Rat s = a + dot(x.barycenter(), u);
    const Rat tau = a + support_value(x.section_polytope(), u);
    if (a / s < d.value || a / tau < al.value || (a - s) / (tau - s) < margin) {
      throw Error(ErrorCode::OracleMismatch, "sampled direction " + to_string(u) + " beats the ray minimum");
    }
  }

  std::vector<ValuationProfile> profiles;
  profiles.reserve(x.rays().size());
  for (const auto& ray : x.rays()) profiles.push_back(profile(x, ToricValuation(ray)));

  Verdict v = Verdict::KSemistableEquivariant;
  if (d.value < 1) {
    v = Verdict::NotKSemistable;
  } else if (margin > 0) {
    v = Verdict::UniformlyKStableEquivariant;
  }
  Rat eps = 1 - 1 / d.value;
  return StabilityReport{std::move(d.value), std::move(d.witness), std::move(al.value), std::move(al.witness),
                         margin,             std::move(eps),       v,
                         kAssumptionNote,    std::move(profiles),  radius,
                         box.size()};
}

}  // namespace kstab
