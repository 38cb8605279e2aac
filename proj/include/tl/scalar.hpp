#pragma once

#include <string>

#include "tl/laurent.hpp"

namespace tl {

// Element of the generic coefficient field Q(t), kept as a fully reduced
// ratio of Laurent polynomials. Canonical form:
//   - den is an ordinary polynomial, monic, with nonzero constant term
//     (all powers of t are pushed into num);
//   - gcd(num cleared of negative exponents, den) = 1.
// Structural equality is therefore field equality.
class Scalar {
 public:
  Scalar() : num_(), den_(LaurentPoly::one()) {}
  Scalar(long value) : Scalar(Rational(value)) {}
  explicit Scalar(const Rational& value)
      : num_(LaurentPoly::term(0, value)), den_(LaurentPoly::one()) {}
  explicit Scalar(const LaurentPoly& p) : num_(p), den_(LaurentPoly::one()) {}

  // num/den, normalized. Throws DivisionByZero when den = 0.
  static Scalar ratio(const LaurentPoly& num, const LaurentPoly& den);

  static Scalar zero() { return Scalar(); }
  static Scalar one() { return Scalar(1); }
  static Scalar t_power(int k) { return Scalar(LaurentPoly::term(k, 1)); }
  // The loop parameter d = t + 1/t.
  static Scalar d();

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  Scalar operator-() const;
  Scalar operator+(const Scalar& rhs) const;
  Scalar operator-(const Scalar& rhs) const;
  Scalar operator*(const Scalar& rhs) const;
  Scalar operator/(const Scalar& rhs) const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
  Scalar& operator-=(const Scalar& rhs) { return *this = *this - rhs; }
  Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }
  Scalar& operator/=(const Scalar& rhs) { return *this = *this / rhs; }

  bool operator==(const Scalar& rhs) const = default;

  std::string str() const;

 private:
  LaurentPoly num_;
  LaurentPoly den_;
};

// Quantum integer [m] = (t^m - t^-m)/(t - t^-1):
// t^(m-1) + t^(m-3) + ... + t^(1-m) for m >= 1, [0] = 0, [-m] = -[m].
Scalar quantum_integer(int m);

Scalar pow(const Scalar& base, unsigned e);

}  // namespace tl
