#pragma once

#include <gmpxx.h>

#include <string>

#include "tl/errors.hpp"

namespace tl {

// Exact rational coefficients. GMP keeps values canonical (reduced,
// positive denominator), so structural equality is semantic equality.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline std::string rational_str(const Rational& q) { return q.get_str(); }

// Accepts "p", "-p" and "p/q" with q > 0 after canonicalization.
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw Error(ErrorCode::BadParameter, "empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw Error(ErrorCode::BadParameter, "bad rational literal '" + s + "'");
  if (sgn(q.get_den()) == 0)
    throw Error(ErrorCode::DivisionByZero, "rational literal with zero denominator");
  q.canonicalize();
  return q;
}

}  // namespace tl
