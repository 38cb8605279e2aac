#include "tl/scalar.hpp"

namespace tl {

Scalar Scalar::ratio(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero())
    throw Error(ErrorCode::DivisionByZero, "scalar with zero denominator");
  Scalar s;
  if (num.is_zero()) return s;  // 0/den = 0/1

  // Push the denominator's power of t into the numerator, making the
  // denominator ordinary with nonzero constant term.
  int dshift = den.min_exp();
  LaurentPoly d0 = den.shifted(-dshift);
  LaurentPoly n = num.shifted(-dshift);

  // Split the numerator as t^nshift * ordinary-with-nonzero-constant.
  int nshift = n.min_exp();
  LaurentPoly n0 = n.shifted(-nshift);

  LaurentPoly g = poly_gcd(n0, d0);
  if (!g.is_one()) {
    n0 = poly_div_exact(n0, g);
    d0 = poly_div_exact(d0, g);
  }

  // Monic denominator.
  const Rational& lead = d0.leading_coeff();
  if (lead != 1) {
    Rational inv = Rational(1) / lead;
    n0 = n0.scaled(inv);
    d0 = d0.scaled(inv);
  }

  s.num_ = n0.shifted(nshift);
  s.den_ = d0;
  return s;
}

Scalar Scalar::d() {
  return Scalar(LaurentPoly::term(1, 1) + LaurentPoly::term(-1, 1));
}

Scalar Scalar::operator-() const {
  Scalar s;
  s.num_ = -num_;
  s.den_ = den_;
  return s;
}

Scalar Scalar::operator+(const Scalar& rhs) const {
  if (is_zero()) return rhs;
  if (rhs.is_zero()) return *this;
  if (den_ == rhs.den_) return ratio(num_ + rhs.num_, den_);
  return ratio(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

Scalar Scalar::operator-(const Scalar& rhs) const {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return -rhs;
  if (den_ == rhs.den_) return ratio(num_ - rhs.num_, den_);
  return ratio(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
}

Scalar Scalar::operator*(const Scalar& rhs) const {
  if (is_zero() || rhs.is_zero()) return Scalar();
  // Polynomial-by-polynomial products need no reduction.
  if (den_.is_one() && rhs.den_.is_one()) {
    Scalar s;
    s.num_ = num_ * rhs.num_;
    return s;
  }
  return ratio(num_ * rhs.num_, den_ * rhs.den_);
}

Scalar Scalar::operator/(const Scalar& rhs) const {
  if (rhs.is_zero()) throw Error(ErrorCode::DivisionByZero, "scalar division by zero");
  if (is_zero()) return Scalar();
  return ratio(num_ * rhs.den_, den_ * rhs.num_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero scalar");
  return ratio(den_, num_);
}

std::string Scalar::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

Scalar quantum_integer(int m) {
  if (m == 0) return Scalar::zero();
  bool negate = m < 0;
  int n = negate ? -m : m;
  LaurentPoly::TermMap terms;
  for (int e = 1 - n; e <= n - 1; e += 2) terms[e] = negate ? -1 : 1;
  return Scalar(LaurentPoly::from_terms(std::move(terms)));
}

Scalar pow(const Scalar& base, unsigned e) {
  Scalar acc = Scalar::one();
  Scalar b = base;
  while (e > 0) {
    if (e & 1u) acc *= b;
    e >>= 1u;
    if (e > 0) b *= b;
  }
  return acc;
}

}  // namespace tl
