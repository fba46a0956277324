#include "kstab/polynomial.hpp"

#include <utility>

namespace kstab {

Polynomial::Polynomial(std::vector<Rat> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::constant(const Rat& c) { return Polynomial(std::vector<Rat>{c}); }

Polynomial Polynomial::power_of_difference(const Rat& a, unsigned n) {
  // coefficient of x^i is C(n,i) a^(n-i) (-1)^i
  std::vector<Rat> c(n + 1);
  Rat binom = 1;
  for (unsigned i = 0; i <= n; ++i) {
    Rat term = binom;
    for (unsigned p = 0; p < n - i; ++p) term *= a;
    if (i % 2 == 1) term = -term;
    c[i] = term;
    binom = binom * (n - i) / (i + 1);
  }
  return Polynomial(std::move(c));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat Polynomial::operator()(const Rat& x) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Polynomial::evaluate(double x) const {
  double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + to_double(*it);
  return acc;
}

Polynomial Polynomial::antiderivative() const {
  std::vector<Rat> c(coeffs_.size() + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i + 1] = coeffs_[i] / Rat(static_cast<long>(i + 1));
  return Polynomial(std::move(c));
}

Rat Polynomial::integrate(const Rat& lo, const Rat& hi) const {
  const auto anti = antiderivative();
  return anti(hi) - anti(lo);
}

Polynomial Polynomial::times_x() const {
  if (coeffs_.empty()) return {};
  std::vector<Rat> c(coeffs_.size() + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i + 1] = coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rat& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

Polynomial& Polynomial::operator/=(const Rat& s) {
  for (auto& c : coeffs_) c /= s;
  return *this;
}

}  // namespace kstab
