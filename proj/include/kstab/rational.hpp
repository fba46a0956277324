#pragma once

// Exact arithmetic primitives shared by every module. Rat is GMP's mpq behind
// Boost.Multiprecision: always canonical (lowest terms, positive denominator).

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace kstab {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using RatVec = std::vector<Rat>;
using LatticeVec = std::vector<std::int64_t>;

inline Int numerator(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rat& r) { return boost::multiprecision::denominator(r); }

Int floor_int(const Rat& r);
Int ceil_int(const Rat& r);
bool is_integer(const Rat& r);

/// Canonical text form: "p/q" in lowest terms, "n" for integers, sign on the numerator.
std::string to_string(const Rat& r);

/// Accepts "n" or "p/q" (optional leading '-', decimal digits only, q != 0).
/// Throws Error(MalformedInput) on anything else.
Rat parse_rational(std::string_view text);

double to_double(const Rat& r);

RatVec to_rat(const LatticeVec& v);
Rat dot(const RatVec& a, const RatVec& b);
Rat dot(const RatVec& a, const LatticeVec& b);
std::int64_t dot(const LatticeVec& a, const LatticeVec& b);

std::int64_t gcd_of(const LatticeVec& v);
bool is_primitive(const LatticeVec& v);
bool is_zero(const LatticeVec& v);

/// Divides by the gcd of the entries; zero stays zero.
LatticeVec primitive_part(const LatticeVec& v);

/// Scales a nonzero rational vector to the unique primitive integer vector with
/// the same direction (positive multiple).
RatVec primitive_integer_direction(const RatVec& v);

std::string to_string(const LatticeVec& v);
std::string to_string(const RatVec& v);

}  // namespace kstab
