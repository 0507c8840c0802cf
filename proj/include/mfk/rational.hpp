#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "mfk/error.hpp"

namespace mfk {

using Rational = mpq_class;
using Integer = mpz_class;

using RationalVector = std::vector<Rational>;
using IntegerVector = std::vector<Integer>;

/// Parses "p/q" or an integer; decimals are rejected.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty() || s.find_first_of(".eE") != std::string::npos) {
    throw Error(ErrorCode::kParseError, "not an exact rational: '" + s + "'");
  }
  Rational q;
  if (q.set_str(s, 10) != 0) {
    throw Error(ErrorCode::kParseError, "not an exact rational: '" + s + "'");
  }
  if (q.get_den() == 0) throw Error(ErrorCode::kParseError, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(10); }

inline std::string to_string(const Integer& z) { return z.get_str(10); }

/// Smallest positive integer multiple of v with coprime entries (zero stays zero).
inline IntegerVector primitive_integer(const RationalVector& v) {
  Integer den = 1;
  for (const auto& q : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  IntegerVector out(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational scaled = v[i] * den;
    out[i] = scaled.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  if (g > 1) {
    for (auto& z : out) z /= g;
  }
  return out;
}

inline IntegerVector primitive_integer(const IntegerVector& v) {
  Integer g = 0;
  for (const auto& z : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
  if (g <= 1) return v;
  IntegerVector out(v);
  for (auto& z : out) z /= g;
  return out;
}

}  // namespace mfk
