#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "curvrank/error.hpp"

namespace curvrank {

/// Arbitrary-precision rational in canonical reduced form (denominator > 0,
/// gcd(numerator, denominator) = 1). GMP keeps the canonical form for all
/// arithmetic; helpers below canonicalize at construction boundaries.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long n) { return Rational(n); }

inline Rational rat(long n, long d) {
  if (d == 0) fail(Errc::BadParams, "rational with zero denominator");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

/// Serializes as "n/d", or "n" when the denominator is 1.
inline std::string format_rational(const Rational& r) { return r.get_str(); }

/// Parses "n", "-n", "n/d"; throws ParseError on malformed text or zero denominator.
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) fail(Errc::ParseError, "empty rational literal");
  std::size_t i = 0;
  bool seen_digit = false, seen_slash = false;
  if (text[i] == '-' || text[i] == '+') ++i;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c >= '0' && c <= '9') {
      seen_digit = true;
    } else if (c == '/' && seen_digit && !seen_slash) {
      seen_slash = true;
      seen_digit = false;
    } else {
      fail(Errc::ParseError, "malformed rational literal '" + text + "'");
    }
  }
  if (!seen_digit) fail(Errc::ParseError, "malformed rational literal '" + text + "'");
  Rational r;
  if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0)
    fail(Errc::ParseError, "malformed rational literal '" + text + "'");
  if (sgn(r.get_den()) == 0) fail(Errc::ParseError, "zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

/// Exact square root when the argument is a perfect rational square, else nullopt.
inline std::optional<Rational> exact_sqrt(const Rational& r) {
  if (sgn(r) < 0) return std::nullopt;
  const Integer& num = r.get_num();
  const Integer& den = r.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  Integer sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  Rational root(sn, sd);
  root.canonicalize();
  return root;
}

}  // namespace curvrank
