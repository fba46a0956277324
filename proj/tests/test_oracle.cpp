#include <doctest.h>

#include "kstab/document.hpp"
#include "kstab/error.hpp"
#include "kstab/invariants.hpp"
#include "kstab/oracle.hpp"
#include "kstab/quantized.hpp"
#include "test_support.hpp"

using namespace kstab;
using test::R;

namespace {

ToricFano cat(const char* name) { return realize(catalog_entry(name)); }

}  // namespace

TEST_CASE("corpus is deterministic and closed under build") {
  oracle::CorpusSpec spec;
  spec.seed = 1;
  spec.count = 5;
  const auto a = oracle::random_fano_corpus(spec);
  const auto b = oracle::random_fano_corpus(spec);
  REQUIRE(a.size() == 5);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].rays() == b[i].rays());
    CHECK(a[i].name() == b[i].name());
    CHECK_NOTHROW(build(a[i].rays()));
    CHECK(a[i].rays().size() >= spec.min_rays);
    CHECK(a[i].rays().size() <= spec.max_rays);
  }
  spec.seed = 2;
  const auto c = oracle::random_fano_corpus(spec);
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) differs = differs || a[i].rays() != c[i].rays();
  CHECK(differs);
}

TEST_CASE("coordinate bound 1 in dimension 2 gives reflexive polygons") {
  oracle::CorpusSpec spec;
  spec.seed = 7;
  spec.count = 40;
  spec.coordinate_bound = 1;
  spec.max_rays = 8;
  for (const auto& x : oracle::random_fano_corpus(spec)) {
    CHECK(x.cartier_index() == 1);
    for (const auto& r : x.rays()) {
      for (auto c : r) CHECK(std::abs(c) <= 1);
    }
    // reflexive: every vertex of P is a lattice point
    for (const auto& v : x.section_polytope().vertices()) {
      for (const auto& c : v) CHECK(is_integer(c));
    }
  }
}

TEST_CASE("corpus generation gives up when nothing can be built") {
  oracle::CorpusSpec spec;
  spec.min_rays = 9;  // more than the 8 vectors available with bound 1
  spec.max_rays = 9;
  spec.coordinate_bound = 1;
  spec.retry_budget = 50;
  CHECK_THROWS_AS(oracle::random_fano_corpus(spec), Error);
}

TEST_CASE("sampled_infimum examples") {
  const auto f1 = oracle::sampled_infimum(cat("F1"), oracle::Functional::AOverS, 4);
  CHECK(f1.value == R(6, 7));
  CHECK(f1.witness == LatticeVec{1, 1});
  CHECK(oracle::sampled_infimum(cat("P2"), oracle::Functional::BetaOverJ, 4).value == 0);
  CHECK(oracle::sampled_infimum(cat("P(1,1,3)"), oracle::Functional::AOverS, 4).value == R(3, 5));
  CHECK(oracle::sampled_infimum(cat("F1"), oracle::Functional::AOverSk, 3, 2).value == R(5, 6));
}

TEST_CASE("closed forms are never beaten by sampling and are attained") {
  for (const auto& name : catalog_names()) {
    const auto x = cat(name.c_str());
    const int radius = x.dim() == 3 ? 2 : 4;
    const auto d = delta(x);
    const auto a = alpha_bound(x);
    const auto m = uniform_margin_with_witness(x);
    CHECK(oracle::sampled_infimum(x, oracle::Functional::AOverS, radius).value == d.value);
    CHECK(oracle::sampled_infimum(x, oracle::Functional::AOverTau, radius).value == a.value);
    CHECK(oracle::sampled_infimum(x, oracle::Functional::BetaOverJ, radius).value == m.value);
    CHECK(delta_k(x, 1, radius).value == oracle::sampled_infimum(x, oracle::Functional::AOverSk, radius, 1).value);
  }
}

TEST_CASE("numeric_curve_integral examples") {
  const auto p2 = profile(cat("P2"), ToricValuation({1, 0}));
  CHECK(oracle::numeric_curve_integral(p2.curve) == 9);
  const auto sq = profile(cat("P1xP1"), ToricValuation({1, 0}));
  CHECK(oracle::numeric_curve_integral(sq.curve) == 8);
  const VolumeCurve empty({0}, {});
  CHECK(oracle::numeric_curve_integral(empty) == 0);
}

TEST_CASE("curve integral is degree times S for every profiled direction") {
  for (const auto& name : catalog_names()) {
    const auto x = cat(name.c_str());
    for (const auto& u : primitive_box(x.dim(), 1)) {
      const auto p = profile(x, ToricValuation(u));
      CHECK(oracle::numeric_curve_integral(p.curve) == x.degree() * p.S);
    }
  }
}

TEST_CASE("random bases never beat the filtration-compatible basis") {
  const auto p2 = cat("P2");
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    CHECK(oracle::random_basis_divisor_vanishing(p2, 1, ToricValuation({1, 0}), seed) <= 1);
  }

  const auto f1 = cat("F1");
  const ToricValuation v({1, 1});
  const Rat worst = worst_basis_vanishing(f1, 1, v).value;
  CHECK(worst == R(11, 9));
  bool strict = false;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const Rat r = oracle::random_basis_divisor_vanishing(f1, 1, v, seed);
    CHECK(r <= worst);
    strict = strict || r < worst;
  }
  CHECK(strict);

  // the identity recombination is a monomial basis
  CHECK(oracle::basis_vanishing(f1, 1, v, [](std::size_t, std::size_t) { return 0; }) == worst);

  CHECK_THROWS_AS(oracle::random_basis_divisor_vanishing(cat("P(1,1,3)"), 1, ToricValuation({1, 0}), 1), Error);
}

TEST_CASE("counterexample documents round-trip through the input schema") {
  const auto x = cat("P(1,1,3)");
  const auto doc = oracle::counterexample_document(x, "beta/j", {0, -1});
  const auto back = realize(parse_input_text(doc.dump()));
  CHECK(back.rays() == x.rays());
  CHECK(back.section_polytope() == x.section_polytope());
  CHECK(back.name().find("beta/j") != std::string::npos);
}
