#include "kstab/rational.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "kstab/error.hpp"

namespace kstab {

Int floor_int(const Rat& r) {
  Int q = numerator(r) / denominator(r);  // truncates toward zero
  if (q * denominator(r) != numerator(r) && r < 0) q -= 1;
  return q;
}

Int ceil_int(const Rat& r) {
  Int q = numerator(r) / denominator(r);
  if (q * denominator(r) != numerator(r) && r > 0) q += 1;
  return q;
}

bool is_integer(const Rat& r) { return denominator(r) == 1; }

std::string to_string(const Rat& r) { return r.str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorCode::MalformedInput, "not a rational literal: '" + std::string(text) + "'");
  }
  Int n{std::string(num)};
  Int d{std::string(den)};
  if (d == 0) throw Error(ErrorCode::MalformedInput, "zero denominator in '" + std::string(text) + "'");
  Rat r(n, d);
  return negative ? Rat(-r) : r;
}

double to_double(const Rat& r) { return r.convert_to<double>(); }

RatVec to_rat(const LatticeVec& v) {
  RatVec out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(x);
  return out;
}

Rat dot(const RatVec& a, const RatVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const RatVec& a, const LatticeVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] != 0) s += a[i] * b[i];
  }
  return s;
}

std::int64_t dot(const LatticeVec& a, const LatticeVec& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::int64_t gcd_of(const LatticeVec& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  return g;
}

bool is_primitive(const LatticeVec& v) { return gcd_of(v) == 1; }

bool is_zero(const LatticeVec& v) {
  for (auto x : v) {
    if (x != 0) return false;
  }
  return true;
}

LatticeVec primitive_part(const LatticeVec& v) {
  const auto g = gcd_of(v);
  if (g == 0) return v;
  LatticeVec out(v);
  for (auto& x : out) x /= g;
  return out;
}

RatVec primitive_integer_direction(const RatVec& v) {
  Int l = 1;
  for (const auto& x : v) l = boost::multiprecision::lcm(l, denominator(x));
  std::vector<Int> ints;
  ints.reserve(v.size());
  Int g = 0;
  for (const auto& x : v) {
    ints.push_back(numerator(x) * (l / denominator(x)));
    g = boost::multiprecision::gcd(g, ints.back());
  }
  RatVec out;
  out.reserve(v.size());
  for (const auto& x : ints) out.emplace_back(g == 0 ? Int(0) : Int(x / g));
  return out;
}

std::string to_string(const LatticeVec& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

std::string to_string(const RatVec& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].str();
  os << ']';
  return os.str();
}

}  // namespace kstab
