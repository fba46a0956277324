#pragma once

// Brute-force validators for the closed forms. These run in the test suite
// and behind the CLI's --oracle flag; nothing in the production path calls them.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "kstab/document.hpp"
#include "kstab/rational.hpp"
#include "kstab/toric_fano.hpp"
#include "kstab/volume_curve.hpp"

namespace kstab::oracle {

struct CorpusSpec {
  std::uint64_t seed = 1;
  std::size_t count = 1;
  std::size_t dim = 2;
  std::size_t min_rays = 3;
  std::size_t max_rays = 6;
  std::int64_t coordinate_bound = 2;
  /// Attempts allowed per requested instance before GenerationExhausted.
  std::size_t retry_budget = 10'000;
};

/// Seeded, bit-reproducible list of random toric Fano varieties.
std::vector<ToricFano> random_fano_corpus(const CorpusSpec& spec);

enum class Functional { AOverS, AOverTau, BetaOverJ, AOverSk };
const char* to_string(Functional f);

struct Sampled {
  Rat value;
  LatticeVec witness;
  std::size_t directions;
};

/// Exhaustive exact minimum of the functional over primitive u with
/// |u|_inf <= radius (lexicographically smallest witness). `k` is used only
/// for AOverSk, whose S_k is summed point by point.
Sampled sampled_infimum(const ToricFano& x, Functional f, int radius, std::int64_t k = 1);

/// Midpoint rule with Richardson extrapolation, in floating point.
double midpoint_integral(const VolumeCurve& curve);

/// Exact piecewise integral, cross-checked against midpoint_integral to 1e-9
/// relative. Throws OracleMismatch on disagreement.
Rat numeric_curve_integral(const VolumeCurve& curve);

/// v_u(D) for the basis-type divisor of the basis whose i-th section is the
/// i-th lexicographic monomial of kP plus coefficient(i, j) times each later
/// monomial j. A section vanishes to the least order over its support since
/// distinct monomials never cancel.
Rat basis_vanishing(const ToricFano& x, std::int64_t k, const ToricValuation& v,
                    const std::function<std::int64_t(std::size_t, std::size_t)>& coefficient);

/// Unit upper-triangular recombination with entries in [-3, 3] drawn from the
/// seed. Requires k to be a multiple of the Cartier index.
Rat random_basis_divisor_vanishing(const ToricFano& x, std::int64_t k, const ToricValuation& v,
                                   std::uint64_t seed);

/// Input document (same schema the CLI reads) naming the failing check.
ojson counterexample_document(const ToricFano& x, const std::string& check, const LatticeVec& u);

}  // namespace kstab::oracle
