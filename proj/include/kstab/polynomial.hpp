#pragma once

#include <string>
#include <vector>

#include "kstab/rational.hpp"

namespace kstab {

/// Univariate polynomial with exact rational coefficients, lowest degree first.
/// Trailing zero coefficients are trimmed, so the zero polynomial has no
/// coefficients at all.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rat> coefficients);
  static Polynomial constant(const Rat& c);
  /// (a - x)^n expanded
  static Polynomial power_of_difference(const Rat& a, unsigned n);

  const std::vector<Rat>& coefficients() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  Rat operator()(const Rat& x) const;
  double evaluate(double x) const;

  /// Exact integral over [lo, hi].
  Rat integrate(const Rat& lo, const Rat& hi) const;
  Polynomial antiderivative() const;
  /// x * p(x)
  Polynomial times_x() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rat& s);
  Polynomial& operator/=(const Rat& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rat& s) { return a *= s; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

}  // namespace kstab
