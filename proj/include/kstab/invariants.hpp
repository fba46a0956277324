#pragma once

// Large-k invariants of a toric Fano variety along torus-invariant valuations
// and the stability verdicts they certify.

#include <optional>
#include <string>
#include <vector>

#include "kstab/rational.hpp"
#include "kstab/toric_fano.hpp"
#include "kstab/volume_curve.hpp"

namespace kstab {

/// Everything known about one valuation F = u.
struct ValuationProfile {
  ToricValuation u;
  Rat A;     // log discrepancy
  Rat tau;   // pseudo-effective threshold
  Rat S;     // expected vanishing order, integral of vol / degree
  Rat beta;  // degree * A - integral of vol
  Rat j;     // integral over [0, tau] of (degree - vol)
  VolumeCurve curve;  // x -> vol(-K_X - xF)
};

/// Torus-invariant effective Q-divisor sum c_j D_j, one coefficient per ray.
struct InvariantDivisor {
  std::vector<Rat> coefficients;
};

enum class Verdict { NotKSemistable, KSemistableEquivariant, UniformlyKStableEquivariant };
const char* to_string(Verdict v);

struct StabilityReport {
  Rat delta;
  ToricValuation delta_witness;
  Rat alpha_bound;
  ToricValuation alpha_witness;
  Rat uniform_margin;
  /// Largest eps with (1 - eps) A deg >= integral of vol over the same
  /// valuations, i.e. 1 - 1/delta.
  Rat uniform_epsilon;
  Verdict verdict;
  std::string assumption_note;
  std::vector<ValuationProfile> per_ray_profiles;
  int search_radius;
  std::size_t sampled_directions;
};

extern const char* const kAssumptionNote;

/// tau(u) = A(u) + max_P <., u>
Rat pseudo_effective_threshold(const ToricFano& x, const LatticeVec& u);
/// S(u) = A(u) + <b, u>
Rat expected_vanishing(const ToricFano& x, const LatticeVec& u);

/// Full profile including the exact volume curve. beta is evaluated both from
/// the curve and from the barycenter; a disagreement throws OracleMismatch.
ValuationProfile profile(const ToricFano& x, const ToricValuation& v);

struct Extremum {
  Rat value;
  ToricValuation witness;
};

/// inf over torus-invariant valuations of A/S, attained at a ray.
Extremum delta(const ToricFano& x);
/// inf of A/tau over torus-invariant valuations; an upper bound for alpha(X).
Extremum alpha_bound(const ToricFano& x);
/// inf of beta/j over torus-invariant valuations, attained at a negated ray.
Rat uniform_margin(const ToricFano& x);
Extremum uniform_margin_with_witness(const ToricFano& x);

/// min over rays with c_j > 0 of 1/c_j. Throws ZeroDivisor if D = 0.
Rat lct_invariant(const ToricFano& x, const InvariantDivisor& d);

struct OkounkovCheck {
  Rat b1;
  Rat hammer_upper;
  bool slice_identity_ok;
  /// integral of vol over [eps, tau] divided by vol at eps
  Rat curve_ratio;
};

/// Barycenter of the sliced body {m in P : <m,u> + A(u) >= eps} in the
/// coordinate nu_1 = <m,u> + A(u) - eps, compared with the curve-side ratio.
/// Throws EpsTooLarge when eps >= tau(u), InvalidArgument when eps < 0.
OkounkovCheck okounkov_barycenter_check(const ToricFano& x, const ToricValuation& v, const Rat& eps);

/// (1/k) times the torus-invariant member div(chi^m) + k sum D_j of |-kK_X|.
InvariantDivisor invariant_member(const ToricFano& x, std::int64_t k, const LatticeVec& m);

/// Whether lct(X; D) >= 1/(n+1) for D = (1/k) * (a torus-invariant member of
/// |-kK_X|). Throws DegreeMismatch if D is not of that form.
bool alpha_K2_check(const ToricFano& x, std::int64_t k, const InvariantDivisor& d);

/// Assembles delta, alpha_bound, the uniform margin and per-ray profiles, and
/// scans every primitive u with |u|_inf <= radius to confirm that no sampled
/// direction beats the ray minima (OracleMismatch otherwise).
StabilityReport verdict(const ToricFano& x, int radius = 8);

/// Primitive vectors with |u|_inf <= radius, in lexicographic order.
std::vector<LatticeVec> primitive_box(std::size_t dim, int radius);

}  // namespace kstab
