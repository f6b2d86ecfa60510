#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace fpp {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Exact vector of reduced fractions. boost keeps gcd(num, den) = 1 and
// den > 0 after every operation, which is the normal form we rely on.
using RatVector = std::vector<Rat>;

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  return Rat(num) / Rat(den);
}

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline Int floor_div(const Int& a, const Int& b) {
  if (b == 0) throw std::invalid_argument("floor_div: zero divisor");
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int rat_floor(const Rat& r) { return floor_div(numerator(r), denominator(r)); }

// Canonical representative of r mod Z in [0, 1).
inline Rat mod_one(const Rat& r) { return r - Rat(rat_floor(r)); }

// Canonical representative of r mod 2Z in [0, 2).
inline Rat mod_two(const Rat& r) {
  Rat half = r / 2;
  return (half - Rat(rat_floor(half))) * 2;
}

inline Int lcm_denominators(const RatVector& v) {
  Int l = 1;
  for (const Rat& r : v) l = boost::multiprecision::lcm(l, denominator(r));
  return l;
}

inline std::string to_string(const Rat& r) {
  if (is_integer(r)) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace fpp
