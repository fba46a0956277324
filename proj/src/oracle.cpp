#include "kstab/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <random>
#include <set>

#include "kstab/error.hpp"
#include "kstab/invariants.hpp"
#include "kstab/quantized.hpp"

namespace kstab::oracle {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace

const char* to_string(Functional f) {
  switch (f) {
    case Functional::AOverS: return "A/S";
    case Functional::AOverTau: return "A/tau";
    case Functional::BetaOverJ: return "beta/j";
    case Functional::AOverSk: return "A/S_k";
  }
  return "?";
}

std::vector<ToricFano> random_fano_corpus(const CorpusSpec& spec) {
  if (spec.dim < 1 || spec.dim > kMaxDimension || spec.coordinate_bound < 1 || spec.min_rays < spec.dim + 1 ||
      spec.max_rays < spec.min_rays) {
    throw Error(ErrorCode::InvalidArgument, "corpus bounds are not sane");
  }
  std::mt19937_64 rng(spec.seed);
  std::vector<ToricFano> out;
  std::size_t attempts = 0;
  const std::size_t budget = spec.retry_budget * std::max<std::size_t>(spec.count, 1);
  while (out.size() < spec.count) {
    if (attempts++ >= budget) {
      throw Error(ErrorCode::GenerationExhausted, "retry budget spent after " + std::to_string(out.size()) +
                                                      " of " + std::to_string(spec.count) + " instances");
    }
    const auto want = static_cast<std::size_t>(
        draw(rng, static_cast<std::int64_t>(spec.min_rays), static_cast<std::int64_t>(spec.max_rays)));
    std::set<LatticeVec> rays;
    for (std::size_t i = 0; i < want; ++i) {
      LatticeVec v(spec.dim);
      for (auto& c : v) c = draw(rng, -spec.coordinate_bound, spec.coordinate_bound);
      if (!is_zero(v)) rays.insert(primitive_part(v));
    }
    if (rays.size() < spec.min_rays) continue;  // duplicates collapsed below the requested range
    try {
      out.push_back(build(std::vector<LatticeVec>(rays.begin(), rays.end()),
                          "random-" + std::to_string(spec.seed) + "-" + std::to_string(out.size())));
    } catch (const Error&) {
      // origin not interior or a sample inside the hull: discard and redraw
    }
  }
  return out;
}

Sampled sampled_infimum(const ToricFano& x, Functional f, int radius, std::int64_t k) {
  const auto box = primitive_box(x.dim(), radius);
  std::optional<QuantizedSlice> slice;
  if (f == Functional::AOverSk) slice.emplace(x, k);
  std::optional<Sampled> best;
  for (const auto& u : box) {
    const Rat a = log_discrepancy(x, u);
    Rat value;
    switch (f) {
      case Functional::AOverS: value = a / expected_vanishing(x, u); break;
      case Functional::AOverTau: value = a / pseudo_effective_threshold(x, u); break;
      case Functional::BetaOverJ: {
        const Rat s = expected_vanishing(x, u);
        value = (x.degree() * (a - s)) / (x.degree() * (pseudo_effective_threshold(x, u) - s));
        break;
      }
      case Functional::AOverSk: {
        const Rat sk = sk_sum(x, *slice, ToricValuation(u));
        if (sk <= 0) continue;
        value = a / sk;
        break;
      }
    }
    if (!best || value < best->value) best = Sampled{std::move(value), u, 0};
  }
  best->directions = box.size();
  return *best;
}

double midpoint_integral(const VolumeCurve& curve) {
  double total = 0;
  for (std::size_t i = 0; i < curve.pieces().size(); ++i) {
    const double a = to_double(curve.breakpoints()[i]);
    const double b = to_double(curve.breakpoints()[i + 1]);
    const auto& poly = curve.pieces()[i];
    auto midpoint = [&](int n) {
      const double h = (b - a) / n;
      double s = 0;
      for (int j = 0; j < n; ++j) s += poly.evaluate(a + (j + 0.5) * h);
      return s * h;
    };
    double coarse = midpoint(1);
    double previous = coarse;
    for (int n = 2; n <= (1 << 20); n *= 2) {
      const double fine = midpoint(n);
      const double extrapolated = (4 * fine - coarse) / 3;
      if (std::abs(extrapolated - previous) <= 1e-13 * std::max(1.0, std::abs(extrapolated))) {
        previous = extrapolated;
        break;
      }
      previous = extrapolated;
      coarse = fine;
    }
    total += previous;
  }
  return total;
}

Rat numeric_curve_integral(const VolumeCurve& curve) {
  const Rat exact = curve.integral();
  const double numeric = midpoint_integral(curve);
  const double reference = to_double(exact);
  if (std::abs(numeric - reference) > 1e-9 * std::max(std::abs(reference), 1e-300) &&
      std::abs(numeric - reference) > 1e-12) {
    throw Error(ErrorCode::OracleMismatch, "curve integral " + kstab::to_string(exact) + " vs numeric " +
                                               std::to_string(numeric));
  }
  return exact;
}

Rat basis_vanishing(const ToricFano& x, std::int64_t k, const ToricValuation& v,
                    const std::function<std::int64_t(std::size_t, std::size_t)>& coefficient) {
  const QuantizedSlice slice(x, k);
  const auto& pts = slice.points();
  const std::size_t count = pts.size();
  std::vector<std::int64_t> level(count);
  for (std::size_t i = 0; i < count; ++i) level[i] = dot(pts[i], v.u());
  // Candidate support monomials by increasing order: the first one present in
  // section i (the diagonal always is) fixes its vanishing.
  std::vector<std::size_t> by_level(count);
  std::iota(by_level.begin(), by_level.end(), std::size_t{0});
  std::stable_sort(by_level.begin(), by_level.end(),
                   [&](std::size_t a, std::size_t b) { return level[a] < level[b]; });
  std::int64_t level_sum = 0;
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j : by_level) {
      if (j < i) continue;
      if (j == i || coefficient(i, j) != 0) {
        level_sum += level[j];
        break;
      }
    }
  }
  const auto c = static_cast<std::int64_t>(count);
  const Rat total = Rat(level_sum) + Rat(c) * Rat(k) * log_discrepancy(x, v);
  return total / (Rat(k) * Rat(c));
}

Rat random_basis_divisor_vanishing(const ToricFano& x, std::int64_t k, const ToricValuation& v,
                                   std::uint64_t seed) {
  if (!x.divides_index(k)) throw Error(ErrorCode::InvalidArgument, "k must be a multiple of the Cartier index");
  const std::uint64_t s = splitmix64(seed);
  return basis_vanishing(x, k, v, [s](std::size_t i, std::size_t j) {
    const std::uint64_t h = splitmix64(s ^ splitmix64((static_cast<std::uint64_t>(i) << 32) ^ j));
    return static_cast<std::int64_t>(h % 7) - 3;
  });
}

ojson counterexample_document(const ToricFano& x, const std::string& check, const LatticeVec& u) {
  InputDocument doc = document_for(x);
  doc.name = (x.name().empty() ? std::string("instance") : x.name()) + " | counterexample: " + check +
             " at u=" + kstab::to_string(u);
  return to_json(doc);
}

}  // namespace kstab::oracle
