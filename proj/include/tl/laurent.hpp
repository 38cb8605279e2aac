#pragma once

#include <map>
#include <string>
#include <vector>

#include "tl/rational.hpp"

namespace tl {

// Laurent polynomial in t over the rationals, stored sparsely as
// exponent -> coefficient. Invariant: no stored coefficient is zero, so
// two values are equal iff their maps are equal (the zero polynomial is
// the empty map).
class LaurentPoly {
 public:
  using TermMap = std::map<int, Rational>;

  LaurentPoly() = default;

  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly one() { return term(0, 1); }
  static LaurentPoly t() { return term(1, 1); }
  // coeff * t^exp
  static LaurentPoly term(int exp, const Rational& coeff);
  static LaurentPoly from_terms(TermMap terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  const TermMap& terms() const { return terms_; }
  Rational coeff(int exp) const;

  // Lowest/highest exponent with nonzero coefficient; valid only when nonzero.
  int min_exp() const;
  int max_exp() const;
  const Rational& leading_coeff() const;   // coefficient at max_exp
  const Rational& trailing_coeff() const;  // coefficient at min_exp

  bool is_ordinary() const { return is_zero() || min_exp() >= 0; }
  int degree() const { return is_zero() ? -1 : max_exp(); }

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& rhs) const;
  LaurentPoly operator-(const LaurentPoly& rhs) const;
  LaurentPoly operator*(const LaurentPoly& rhs) const;
  LaurentPoly scaled(const Rational& c) const;
  LaurentPoly shifted(int k) const;  // multiply by t^k

  bool operator==(const LaurentPoly& rhs) const = default;

  std::string str() const;  // human-readable, for diagnostics

 private:
  TermMap terms_;
};

LaurentPoly pow(const LaurentPoly& base, unsigned e);

// Ordinary-polynomial division: a = q*b + r with deg r < deg b.
// Both inputs must be ordinary (no negative exponents), b nonzero.
LaurentPoly poly_divmod(const LaurentPoly& a, const LaurentPoly& b,
                        LaurentPoly* remainder);
inline LaurentPoly poly_div_exact(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  LaurentPoly q = poly_divmod(a, b, &r);
  if (!r.is_zero())
    throw Error(ErrorCode::BadParameter, "polynomial division is not exact");
  return q;
}
LaurentPoly poly_mod(const LaurentPoly& a, const LaurentPoly& b);

// Monic gcd of ordinary polynomials over the rationals, computed with a
// subresultant pseudo-remainder sequence over the integers to keep the
// intermediate coefficients small. gcd(0, b) = monic(b), gcd(0, 0) = 0.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

// n-th cyclotomic polynomial.
LaurentPoly cyclotomic_poly(int n);

// Minimal polynomial of the primitive 2*ell-th root of unity; ell >= 3.
LaurentPoly cyclotomic_modulus(int ell);

int euler_phi(int n);

}  // namespace tl
