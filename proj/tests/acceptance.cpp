// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "kstab/document.hpp"
#include "kstab/error.hpp"
#include "kstab/invariants.hpp"
#include "kstab/oracle.hpp"
#include "kstab/polynomial.hpp"
#include "kstab/quantized.hpp"
#include "kstab/report.hpp"

using namespace kstab;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Collects failures for one criterion; the first few are printed.
struct Tally {
  std::size_t checks = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::function<std::string()>& what) {
    ++checks;
    if (!ok) failures.push_back(what());
  }
};

int failed_criteria = 0;

void report(int id, const char* title, const Tally& t, double secs, const std::string& note = "") {
  const bool ok = t.failures.empty();
  if (!ok) ++failed_criteria;
  std::printf("%s  [%2d] %-40s %7zu checks  %6.2f s%s%s\n", ok ? "PASS" : "FAIL", id, title, t.checks, secs,
              note.empty() ? "" : "  ", note.c_str());
  for (std::size_t i = 0; i < t.failures.size() && i < 5; ++i) std::printf("        - %s\n", t.failures[i].c_str());
  if (t.failures.size() > 5) std::printf("        ... %zu more\n", t.failures.size() - 5);
  std::fflush(stdout);
}

ToricFano cat(const char* name) { return realize(catalog_entry(name)); }

std::string str(const Rat& r) { return to_string(r); }

Rat pow_n(const Rat& x, std::size_t n) {
  Rat r = 1;
  for (std::size_t i = 0; i < n; ++i) r *= x;
  return r;
}

Rat n_over_n1(std::size_t n) { return Rat(static_cast<long>(n), static_cast<long>(n + 1)); }

// 200 seeded instances: 100 in each of dimensions 2 and 3.
std::vector<ToricFano> corpus() {
  oracle::CorpusSpec two;
  two.seed = 20240601;
  two.count = 100;
  two.dim = 2;
  two.min_rays = 3;
  two.max_rays = 8;
  two.coordinate_bound = 3;
  oracle::CorpusSpec three = two;
  three.dim = 3;
  three.min_rays = 4;
  three.max_rays = 8;
  three.coordinate_bound = 2;
  auto out = oracle::random_fano_corpus(two);
  for (auto& x : oracle::random_fano_corpus(three)) out.push_back(std::move(x));
  return out;
}

// ---------------------------------------------------------------------------

void criterion_1() {
  const auto t0 = Clock::now();
  Tally t;
  struct Expect {
    const char* name;
    const char* field;
    std::string value;
  };
  const std::vector<Expect> expected = {
      {"P1", "degree", "2"},           {"P1", "delta", "1"},           {"P1", "alpha", "1/2"},
      {"P2", "degree", "9"},           {"P2", "barycenter", "[0,0]"},  {"P2", "delta", "1"},
      {"P2", "alpha", "1/3"},          {"P2", "margin", "0"},          {"P1xP1", "degree", "8"},
      {"P1xP1", "delta", "1"},         {"P1xP1", "alpha", "1/2"},      {"F1", "degree", "8"},
      {"F1", "barycenter", "[1/12,1/12]"}, {"F1", "beta[1,1]", "-4/3"}, {"F1", "delta", "6/7"},
      {"F1", "margin", "-1/5"},        {"F1", "verdict", "NotKSemistable"}, {"dP7", "degree", "7"},
      {"dP7", "barycenter", "[-2/21,4/21]"}, {"dP7", "delta", "21/25"}, {"dP6", "degree", "6"},
      {"dP6", "barycenter", "[0,0]"},  {"dP6", "delta", "1"},          {"dP6", "alpha", "1/2"},
      {"P3", "degree", "64"},          {"P3", "delta", "1"},           {"P3", "alpha", "1/4"},
      {"P(1,1,3)", "cartier", "3"},    {"P(1,1,3)", "delta", "3/5"},   {"P(1,1,3)", "verdict", "NotKSemistable"},
  };
  for (const auto& e : expected) {
    const ojson r = report_json(cat(e.name), {});
    std::string got;
    const std::string f = e.field;
    if (f == "degree") got = r["degree"];
    if (f == "delta") got = r["delta"]["value"];
    if (f == "alpha") got = r["alpha_bound"]["value"];
    if (f == "margin") got = r["uniform_margin"];
    if (f == "verdict") got = r["verdict"];
    if (f == "cartier") got = std::to_string(r["cartier_index"].get<std::int64_t>());
    if (f == "barycenter") {
      got = "[";
      for (std::size_t i = 0; i < r["barycenter"].size(); ++i) {
        got += (i ? "," : "") + r["barycenter"][i].get<std::string>();
      }
      got += "]";
    }
    if (f == "beta[1,1]") {
      for (const auto& row : r["per_ray"]) {
        if (row["ray"] == ojson::array({1, 1})) got = row["beta"];
      }
    }
    t.expect(got == e.value, [&] { return std::string(e.name) + " " + e.field + ": " + got + " != " + e.value; });
  }
  const double secs = seconds_since(t0);
  t.expect(secs < 5.0, [&] { return "took " + std::to_string(secs) + " s (limit 5 s)"; });
  report(1, "catalog exactness (< 5 s)", t, secs);
}

// Criteria 2, 3 and the corpus-wide part of 6 share the profiles; the S-bound
// tally is returned for criterion 6.
Tally criteria_2_3(const std::vector<ToricFano>& xs) {
  const auto t0 = Clock::now();
  Tally beta;
  Tally sandwich;
  Tally hammer;
  for (const auto& x : xs) {
    const auto n = x.dim();
    for (const auto& u : primitive_box(n, 4)) {
      // profile() itself refuses to return when beta or j disagree; here the
      // identity is re-checked from the raw curve.
      std::optional<ValuationProfile> got;
      try {
        got = profile(x, ToricValuation(u));
      } catch (const Error& e) {
        beta.expect(false, [&] { return x.name() + " " + e.what(); });
        continue;
      }
      const ValuationProfile& p = *got;
      const Rat integral = p.curve.integral();
      beta.expect(x.degree() * p.A - integral == -x.degree() * dot(x.barycenter(), u),
                  [&] { return x.name() + " u=" + to_string(u); });

      sandwich.expect(x.degree() * p.tau >= integral, [&] { return x.name() + " upper u=" + to_string(u); });
      sandwich.expect(integral >= x.degree() * p.tau / Rat(static_cast<long>(n + 1)),
                      [&] { return x.name() + " lower u=" + to_string(u); });
      for (const auto& bp : p.curve.breakpoints()) {
        sandwich.expect(p.curve(bp) >= x.degree() * pow_n((p.tau - bp) / p.tau, n),
                        [&] { return x.name() + " concavity u=" + to_string(u) + " x=" + str(bp); });
      }
      hammer.expect(p.tau / Rat(static_cast<long>(n + 1)) <= p.S && p.S <= p.tau * n_over_n1(n),
                    [&] { return x.name() + " S bounds u=" + to_string(u); });
    }
  }
  const double secs = seconds_since(t0);

  const auto p2 = cat("P2");
  const auto pr = profile(p2, ToricValuation({1, 0}));
  const Rat upper = p2.degree() * pr.tau;
  const Rat mid = pr.curve.integral();
  const Rat lower = p2.degree() * pr.tau / 3;
  sandwich.expect(upper == 27 && mid == 9 && lower == 9,
                  [&] { return "P2 (1,0): " + str(upper) + " >= " + str(mid) + " >= " + str(lower); });

  const std::string note = std::to_string(xs.size()) + " instances, box radius 4";
  report(2, "beta identity on the corpus", beta, secs, note);
  report(3, "sandwich and concavity bounds", sandwich, secs, note + " (shared pass)");
  return hammer;
}

// ---------------------------------------------------------------------------

void criterion_4() {
  const auto t0 = Clock::now();
  Tally t;
  for (const auto& name : catalog_names()) {
    const auto x = cat(name.c_str());
    const auto l = x.cartier_index();
    std::set<LatticeVec> dirs(x.rays().begin(), x.rays().end());
    for (auto& u : primitive_box(x.dim(), 2)) dirs.insert(std::move(u));
    for (std::int64_t k = l; k <= 3 * l; k += l) {
      for (const auto& u : dirs) {
        const ToricValuation v(u);
        const auto cert = worst_basis_vanishing(x, k, v);
        Rat attained = 0;
        for (const auto& o : cert.orders) attained += o;
        attained /= Rat(k) * Rat(static_cast<long>(cert.orders.size()));
        t.expect(attained == cert.value && cert.value == sk_sum(x, k, v),
                 [&] { return name + " k=" + std::to_string(k) + " certificate u=" + to_string(u); });
        for (std::uint64_t seed = 1; seed <= 50; ++seed) {
          const Rat r = oracle::random_basis_divisor_vanishing(x, k, v, seed);
          t.expect(r <= cert.value, [&] {
            return name + " k=" + std::to_string(k) + " seed=" + std::to_string(seed) + " u=" + to_string(u) + ": " +
                   str(r) + " > " + str(cert.value);
          });
        }
      }
    }
  }
  report(4, "random bases vs filtration basis", t, seconds_since(t0), "k in {l,2l,3l}, 50 bases per (k,u)");
}

void criterion_5() {
  const auto t0 = Clock::now();
  Tally t;
  const auto p2 = cat("P2");
  for (std::int64_t k = 1; k <= 4; ++k) {
    const Rat s = sk_sum(p2, k, ToricValuation({1, 0}));
    t.expect(s == 1, [&] { return "S_" + std::to_string(k) + "(P2,(1,0)) = " + str(s); });
  }
  const auto f1 = cat("F1");
  const ToricValuation v({1, 1});
  const Rat s1 = sk_sum(f1, 1, v);
  const Rat s2 = sk_sum(f1, 2, v);
  t.expect(s1 == Rat(11, 9), [&] { return "S_1(F1) = " + str(s1); });
  t.expect(s2 == Rat(6, 5), [&] { return "S_2(F1) = " + str(s2); });
  t.expect(abs(s2 - Rat(7, 6)) < abs(s1 - Rat(7, 6)), [] { return "|S_k - 7/6| not decreasing"; });
  const Rat d1 = delta_k(f1, 1, 3).value;
  const Rat d2 = delta_k(f1, 2, 3).value;
  t.expect(d1 == Rat(9, 11), [&] { return "delta_1(F1) = " + str(d1); });
  t.expect(d2 == Rat(5, 6), [&] { return "delta_2(F1) = " + str(d2); });
  const Rat l1 = lct_invariant(f1, monomial_basis_divisor(f1, 1));
  const Rat l2 = lct_invariant(f1, monomial_basis_divisor(f1, 2));
  t.expect(l1 == Rat(9, 11) && l2 == Rat(5, 6), [&] { return "lct chain " + str(l1) + ", " + str(l2); });
  const Rat d = delta(f1).value;
  t.expect(l1 < l2 && l2 < d && d == Rat(6, 7), [&] { return "no approach to delta = " + str(d); });
  report(5, "quantized convergence", t, seconds_since(t0));
}

void criterion_6(Tally& t) {
  const auto t0 = Clock::now();
  for (const auto& name : catalog_names()) {
    const auto x = cat(name.c_str());
    for (const auto& ray : x.rays()) {
      for (const Rat& eps : {Rat(0), Rat(1, 4)}) {
        const auto c = okounkov_barycenter_check(x, ToricValuation(ray), eps);
        t.expect(c.slice_identity_ok, [&] { return name + " slice identity ray " + to_string(ray) + " eps " + str(eps); });
        t.expect(c.b1 <= c.hammer_upper, [&] {
          return name + " b1 " + str(c.b1) + " > " + str(c.hammer_upper) + " ray " + to_string(ray);
        });
      }
    }
  }
  report(6, "slice identity and barycenter bounds", t, seconds_since(t0), "catalog slices + corpus S bounds");
}

void criterion_7() {
  const auto t0 = Clock::now();
  Tally t;
  for (const auto& name : catalog_names()) {
    const auto x = cat(name.c_str());
    if (delta(x).value < 1) continue;
    const Rat a = alpha_bound(x).value;
    const Rat floor_bound(1, static_cast<long>(x.dim() + 1));
    t.expect(a >= floor_bound, [&] { return name + " alpha_bound " + str(a); });
    for (std::int64_t k = 1; k <= 2; ++k) {
      for (const auto& m : lattice_points(x.section_polytope(), k * x.cartier_index())) {
        const auto kk = k * x.cartier_index();
        t.expect(alpha_K2_check(x, kk, invariant_member(x, kk, m)), [&] { return name + " member m=" + to_string(m); });
      }
    }
  }
  const Rat ap2 = alpha_bound(cat("P2")).value;
  const Rat ap1 = alpha_bound(cat("P1")).value;
  t.expect(ap2 == Rat(1, 3), [&] { return "alpha(P2) = " + str(ap2); });
  t.expect(ap1 == Rat(1, 2), [&] { return "alpha(P1) = " + str(ap1); });

  // D = 3 * line on P2: lct * degree against the integral of vol(-K - xD) = degree (1 - x)^2 on [0, 1]
  const auto p2 = cat("P2");
  const InvariantDivisor d{{3, 0, 0}};
  const Rat lct = lct_invariant(p2, d);
  const Rat integral = (Polynomial::power_of_difference(1, 2) * p2.degree()).integrate(0, 1);
  t.expect(lct == Rat(1, 3) && lct * p2.degree() == integral && alpha_K2_check(p2, 1, d),
           [&] { return "tightness: lct " + str(lct) + ", lct*deg " + str(lct * p2.degree()) + ", integral " + str(integral); });
  report(7, "alpha >= 1/(n+1) when delta >= 1", t, seconds_since(t0));
}

void criterion_8(const std::vector<ToricFano>& xs) {
  const auto t0 = Clock::now();
  Tally t;
  auto check = [&](const ToricFano& x) {
    const Rat d = delta(x).value;
    const Rat a = alpha_bound(x).value;
    t.expect(!(a > n_over_n1(x.dim()) && d < 1), [&] { return x.name() + ": alpha " + str(a) + ", delta " + str(d); });
    t.expect(d <= 1, [&] { return x.name() + ": delta " + str(d) + " > 1"; });
    t.expect(verdict(x, 2).verdict != Verdict::UniformlyKStableEquivariant,
             [&] { return x.name() + ": uniform verdict on toric input"; });
  };
  for (const auto& name : catalog_names()) check(cat(name.c_str()));
  for (const auto& x : xs) check(x);
  report(8, "alpha/delta consistency, delta <= 1", t, seconds_since(t0), "catalog + corpus");
}

void criterion_9(const std::vector<ToricFano>& xs) {
  const auto t0 = Clock::now();
  Tally t;
  std::vector<ojson> dumps;
  for (const auto& x : xs) {
    const auto o = oracle_section(x, 4);
    for (const auto& c : o.json["checks"]) {
      t.expect(c["ok"].get<bool>(), [&] { return x.name() + " " + c["check"].get<std::string>(); });
    }
    if (o.counterexample) dumps.push_back(*o.counterexample);
  }
  std::string note = "sampling radius 4";
  if (!dumps.empty()) {
    std::ofstream f("acceptance_counterexamples.jsonl");
    for (const auto& d : dumps) f << d.dump() << "\n";
    note += "; counterexamples in acceptance_counterexamples.jsonl";
  }
  report(9, "oracle supremacy gate", t, seconds_since(t0), note);
}

void criterion_10() {
  const auto t0 = Clock::now();
  Tally t;
  std::ostringstream note;

  // a random dimension-3 instance with as many rays as the generator gives, and
  // a fixed 20-ray instance (lattice points of norm^2 5, all on a sphere)
  oracle::CorpusSpec spec;
  spec.seed = 99;
  spec.count = 3;
  spec.dim = 3;
  spec.min_rays = 10;
  spec.max_rays = 20;
  spec.coordinate_bound = 3;
  auto pool = oracle::random_fano_corpus(spec);
  const ToricFano* biggest = &pool.front();
  for (const auto& x : pool) {
    if (x.rays().size() > biggest->rays().size()) biggest = &x;
  }
  std::vector<LatticeVec> sphere;
  for (std::int64_t a = -2; a <= 2; ++a) {
    for (std::int64_t b = -2; b <= 2; ++b) {
      for (std::int64_t c = -2; c <= 2; ++c) {
        if (a * a + b * b + c * c == 5 && !(c == 0 && a * b == 2)) sphere.push_back({a, b, c});
      }
    }
  }
  const ToricFano fixed = build(sphere, "sphere-20");
  for (const ToricFano* x : {biggest, &fixed}) {
    const auto r0 = Clock::now();
    const ojson r = report_json(*x, {});
    const double secs = seconds_since(r0);
    t.expect(x->rays().size() <= 20 && secs < 1.0,
             [&] { return x->name() + ": report took " + std::to_string(secs) + " s"; });
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s (%zu rays) %.3f s; ", x->name().c_str(), x->rays().size(), secs);
    note << buf;
  }

  // P3 at k = 20: C(83, 3) = 91881 lattice points
  const auto e0 = Clock::now();
  const auto pts = lattice_points(cat("P3").section_polytope(), 20);
  const double esecs = seconds_since(e0);
  t.expect(pts.size() == 91881, [&] { return "P3 k=20 gave " + std::to_string(pts.size()) + " points"; });
  t.expect(esecs < 5.0, [&] { return "enumeration took " + std::to_string(esecs) + " s"; });
  char buf[96];
  std::snprintf(buf, sizeof buf, "%zu points %.2f s", pts.size(), esecs);
  note << buf;
  report(10, "performance", t, seconds_since(t0), note.str());
}

}  // namespace

int main() {
  std::printf("kstab acceptance suite\n");
  const auto t0 = Clock::now();
  try {
    const auto xs = corpus();
    std::printf("corpus: %zu instances built in %.2f s\n", xs.size(), seconds_since(t0));
    criterion_1();
    Tally hammer = criteria_2_3(xs);
    criterion_4();
    criterion_5();
    criterion_6(hammer);
    criterion_7();
    criterion_8(xs);
    criterion_9(xs);
    criterion_10();
  } catch (const std::exception& e) {
    std::printf("FAIL  aborted: %s\n", e.what());
    return 1;
  }
  std::printf("%s: %d criteria failed, %.2f s total\n", failed_criteria ? "FAILED" : "ALL PASSED", failed_criteria,
              seconds_since(t0));
  return failed_criteria ? 1 : 0;
}
