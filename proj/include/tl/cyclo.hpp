#pragma once

#include <string>
#include <vector>

#include "tl/scalar.hpp"

namespace tl {

// Shared tables for arithmetic in Q[t] / Phi_{2 ell}(t), the field
// generated by the primitive 2*ell-th root of unity tau (so that
// d(tau) = tau + 1/tau = 2 cos(pi/ell) > 0). Built once per ell.
class CycloContext {
 public:
  static const CycloContext& get(int ell);

  int ell() const { return ell_; }
  int degree() const { return degree_; }  // phi(2 ell)
  const LaurentPoly& modulus() const { return modulus_; }
  // tau^k as coordinates in the power basis, for 0 <= k < 2 ell.
  const std::vector<Rational>& tau_power(int k) const;

 private:
  explicit CycloContext(int ell);

  int ell_;
  int degree_;
  LaurentPoly modulus_;
  std::vector<std::vector<Rational>> tau_powers_;
};

// Element of the cyclotomic field at level ell, as coordinates in the
// power basis 1, tau, ..., tau^(phi(2 ell) - 1).
class CycloScalar {
 public:
  explicit CycloScalar(int ell);
  CycloScalar(int ell, std::vector<Rational> coeffs);

  static CycloScalar zero(int ell) { return CycloScalar(ell); }
  static CycloScalar one(int ell);
  static CycloScalar from_rational(int ell, const Rational& value);
  static CycloScalar tau(int ell);
  // The specialized loop parameter d(tau) = tau + 1/tau.
  static CycloScalar d_value(int ell);

  int ell() const { return ell_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;

  CycloScalar operator-() const;
  CycloScalar operator+(const CycloScalar& rhs) const;
  CycloScalar operator-(const CycloScalar& rhs) const;
  CycloScalar operator*(const CycloScalar& rhs) const;
  CycloScalar operator/(const CycloScalar& rhs) const;
  CycloScalar inverse() const;

  CycloScalar& operator+=(const CycloScalar& rhs) { return *this = *this + rhs; }
  CycloScalar& operator-=(const CycloScalar& rhs) { return *this = *this - rhs; }
  CycloScalar& operator*=(const CycloScalar& rhs) { return *this = *this * rhs; }
  CycloScalar& operator/=(const CycloScalar& rhs) { return *this = *this / rhs; }

  bool operator==(const CycloScalar& rhs) const = default;

  std::string str() const;

 private:
  const CycloContext& ctx() const { return CycloContext::get(ell_); }
  void check_same_ring(const CycloScalar& rhs) const;

  int ell_;
  std::vector<Rational> coeffs_;
};

// Evaluation of a generic scalar at tau. Throws NotEvaluable when the
// reduced denominator vanishes at tau (a pole).
CycloScalar specialize(const Scalar& f, int ell);

// Evaluation of a Laurent polynomial at tau (always defined).
CycloScalar evaluate_at_tau(const LaurentPoly& p, int ell);

}  // namespace tl
