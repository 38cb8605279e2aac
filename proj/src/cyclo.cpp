#include "tl/cyclo.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace tl {

namespace {

// value mod m, normalized into [0, m)
int floor_mod(int value, int m) {
  int r = value % m;
  return r < 0 ? r + m : r;
}

}  // namespace

CycloContext::CycloContext(int ell)
    : ell_(ell), degree_(euler_phi(2 * ell)), modulus_(cyclotomic_modulus(ell)) {
  // t^k mod Phi for k = 0 .. 2 ell - 1, computed by repeated shift-reduce.
  std::vector<Rational> cur(static_cast<size_t>(degree_), Rational(0));
  cur[0] = 1;
  // Phi is monic: t^degree = -(lower part of Phi)
  std::vector<Rational> top(static_cast<size_t>(degree_), Rational(0));
  for (const auto& [e, c] : modulus_.terms())
    if (e < degree_) top[static_cast<size_t>(e)] = -c;
  for (int k = 0; k < 2 * ell; ++k) {
    tau_powers_.push_back(cur);
    // multiply by t
    Rational carry = cur[static_cast<size_t>(degree_ - 1)];
    for (int i = degree_ - 1; i > 0; --i) cur[static_cast<size_t>(i)] = cur[static_cast<size_t>(i - 1)];
    cur[0] = 0;
    if (!tl::is_zero(carry))
      for (int i = 0; i < degree_; ++i) cur[static_cast<size_t>(i)] += carry * top[static_cast<size_t>(i)];
  }
}

const CycloContext& CycloContext::get(int ell) {
  if (ell < 3)
    throw Error(ErrorCode::BadParameter,
                "root-of-unity order parameter must be at least 3");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CycloContext>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto it = registry.find(ell);
  if (it == registry.end())
    it = registry.emplace(ell, std::unique_ptr<CycloContext>(new CycloContext(ell))).first;
  return *it->second;
}

const std::vector<Rational>& CycloContext::tau_power(int k) const {
  return tau_powers_[static_cast<size_t>(floor_mod(k, 2 * ell_))];
}

CycloScalar::CycloScalar(int ell)
    : ell_(ell),
      coeffs_(static_cast<size_t>(CycloContext::get(ell).degree()), Rational(0)) {}

CycloScalar::CycloScalar(int ell, std::vector<Rational> coeffs)
    : ell_(ell), coeffs_(std::move(coeffs)) {
  const auto& c = CycloContext::get(ell);
  if (static_cast<int>(coeffs_.size()) != c.degree())
    throw Error(ErrorCode::BadParameter,
                "cyclotomic coordinate vector has wrong length");
}

CycloScalar CycloScalar::one(int ell) { return from_rational(ell, 1); }

CycloScalar CycloScalar::from_rational(int ell, const Rational& value) {
  CycloScalar s(ell);
  s.coeffs_[0] = value;
  return s;
}

CycloScalar CycloScalar::tau(int ell) {
  CycloScalar s(ell);
  s.coeffs_ = CycloContext::get(ell).tau_power(1);
  return s;
}

CycloScalar CycloScalar::d_value(int ell) {
  const auto& ctx = CycloContext::get(ell);
  CycloScalar s(ell);
  const auto& a = ctx.tau_power(1);
  const auto& b = ctx.tau_power(2 * ell - 1);
  for (size_t i = 0; i < s.coeffs_.size(); ++i) s.coeffs_[i] = a[i] + b[i];
  return s;
}

bool CycloScalar::is_zero() const {
  for (const auto& c : coeffs_)
    if (!tl::is_zero(c)) return false;
  return true;
}

bool CycloScalar::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (!tl::is_zero(coeffs_[i])) return false;
  return true;
}

void CycloScalar::check_same_ring(const CycloScalar& rhs) const {
  if (ell_ != rhs.ell_)
    throw Error(ErrorCode::RingMismatch,
                "cyclotomic scalars at different orders cannot be combined");
}

CycloScalar CycloScalar::operator-() const {
  CycloScalar s(ell_);
  for (size_t i = 0; i < coeffs_.size(); ++i) s.coeffs_[i] = -coeffs_[i];
  return s;
}

CycloScalar CycloScalar::operator+(const CycloScalar& rhs) const {
  check_same_ring(rhs);
  CycloScalar s(ell_);
  for (size_t i = 0; i < coeffs_.size(); ++i) s.coeffs_[i] = coeffs_[i] + rhs.coeffs_[i];
  return s;
}

CycloScalar CycloScalar::operator-(const CycloScalar& rhs) const {
  check_same_ring(rhs);
  CycloScalar s(ell_);
  for (size_t i = 0; i < coeffs_.size(); ++i) s.coeffs_[i] = coeffs_[i] - rhs.coeffs_[i];
  return s;
}

CycloScalar CycloScalar::operator*(const CycloScalar& rhs) const {
  check_same_ring(rhs);
  const auto& ctx = this->ctx();
  int deg = ctx.degree();
  // Convolve, then fold exponents >= deg back with the tau-power table.
  std::vector<Rational> conv(static_cast<size_t>(2 * deg - 1), Rational(0));
  for (int i = 0; i < deg; ++i) {
    if (tl::is_zero(coeffs_[static_cast<size_t>(i)])) continue;
    for (int j = 0; j < deg; ++j) {
      if (tl::is_zero(rhs.coeffs_[static_cast<size_t>(j)])) continue;
      conv[static_cast<size_t>(i + j)] += coeffs_[static_cast<size_t>(i)] * rhs.coeffs_[static_cast<size_t>(j)];
    }
  }
  CycloScalar s(ell_);
  for (int k = 0; k < deg; ++k) s.coeffs_[static_cast<size_t>(k)] = conv[static_cast<size_t>(k)];
  for (int k = deg; k < 2 * deg - 1; ++k) {
    if (tl::is_zero(conv[static_cast<size_t>(k)])) continue;
    const auto& fold = ctx.tau_power(k);
    for (int i = 0; i < deg; ++i)
      s.coeffs_[static_cast<size_t>(i)] += conv[static_cast<size_t>(k)] * fold[static_cast<size_t>(i)];
  }
  return s;
}

CycloScalar CycloScalar::inverse() const {
  if (is_zero())
    throw Error(ErrorCode::DivisionByZero, "inverse of zero cyclotomic scalar");
  // Extended Euclid in Q[t] against the (irreducible) modulus.
  const auto& ctx = this->ctx();
  LaurentPoly::TermMap terms;
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (!tl::is_zero(coeffs_[i])) terms[static_cast<int>(i)] = coeffs_[i];
  LaurentPoly a = LaurentPoly::from_terms(std::move(terms));
  LaurentPoly r0 = ctx.modulus(), r1 = a;
  LaurentPoly s0 = LaurentPoly::zero(), s1 = LaurentPoly::one();
  while (!r1.is_zero() && r1.degree() > 0) {
    LaurentPoly rem;
    LaurentPoly q = poly_divmod(r0, r1, &rem);
    r0 = r1;
    r1 = rem;
    LaurentPoly snew = s0 - q * s1;
    s0 = s1;
    s1 = snew;
  }
  if (r1.is_zero())
    throw Error(ErrorCode::DivisionByZero,
                "cyclotomic element is a zero divisor (unexpected: modulus is irreducible)");
  // r1 is a nonzero constant: s1 * a = r1 (mod Phi)
  LaurentPoly inv = s1.scaled(Rational(1) / r1.coeff(0));
  CycloScalar result(ell_);
  for (const auto& [e, c] : inv.terms()) {
    const auto& fold = ctx.tau_power(e);
    for (int i = 0; i < ctx.degree(); ++i)
      result.coeffs_[static_cast<size_t>(i)] += c * fold[static_cast<size_t>(i)];
  }
  return result;
}

CycloScalar CycloScalar::operator/(const CycloScalar& rhs) const {
  check_same_ring(rhs);
  return *this * rhs.inverse();
}

std::string CycloScalar::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ", ";
    os << coeffs_[i].get_str();
  }
  os << "] (ell=" << ell_ << ")";
  return os.str();
}

CycloScalar evaluate_at_tau(const LaurentPoly& p, int ell) {
  const auto& ctx = CycloContext::get(ell);
  CycloScalar s(ell);
  std::vector<Rational> acc(static_cast<size_t>(ctx.degree()), Rational(0));
  for (const auto& [e, c] : p.terms()) {
    const auto& fold = ctx.tau_power(e);  // exponents wrap: tau^(2 ell) = 1
    for (int i = 0; i < ctx.degree(); ++i) acc[static_cast<size_t>(i)] += c * fold[static_cast<size_t>(i)];
  }
  s = CycloScalar(ell, std::move(acc));
  return s;
}

CycloScalar specialize(const Scalar& f, int ell) {
  CycloScalar den = evaluate_at_tau(f.den(), ell);
  if (den.is_zero())
    throw Error(ErrorCode::NotEvaluable,
                "scalar has a pole at the primitive 2*" + std::to_string(ell) +
                    "-th root of unity");
  if (f.is_zero()) return CycloScalar::zero(ell);
  CycloScalar num = evaluate_at_tau(f.num(), ell);
  return num / den;
}

}  // namespace tl
