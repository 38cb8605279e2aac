#include "tl/laurent.hpp"

#include <sstream>

namespace tl {

LaurentPoly LaurentPoly::term(int exp, const Rational& coeff) {
  LaurentPoly p;
  if (!tl::is_zero(coeff)) p.terms_[exp] = coeff;
  return p;
}

LaurentPoly LaurentPoly::from_terms(TermMap terms) {
  LaurentPoly p;
  for (auto& [e, c] : terms)
    if (!tl::is_zero(c)) p.terms_.emplace(e, std::move(c));
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 &&
         terms_.begin()->second == 1;
}

Rational LaurentPoly::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Rational(0) : it->second;
}

int LaurentPoly::min_exp() const { return terms_.begin()->first; }
int LaurentPoly::max_exp() const { return terms_.rbegin()->first; }
const Rational& LaurentPoly::leading_coeff() const { return terms_.rbegin()->second; }
const Rational& LaurentPoly::trailing_coeff() const { return terms_.begin()->second; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
  return p;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
  LaurentPoly p = *this;
  for (const auto& [e, c] : rhs.terms_) {
    auto [it, inserted] = p.terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (tl::is_zero(it->second)) p.terms_.erase(it);
    }
  }
  return p;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const {
  LaurentPoly p = *this;
  for (const auto& [e, c] : rhs.terms_) {
    auto [it, inserted] = p.terms_.emplace(e, -c);
    if (!inserted) {
      it->second -= c;
      if (tl::is_zero(it->second)) p.terms_.erase(it);
    }
  }
  return p;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
  LaurentPoly p;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      int e = ea + eb;
      Rational prod = ca * cb;
      auto [it, inserted] = p.terms_.emplace(e, prod);
      if (!inserted) {
        it->second += prod;
        if (tl::is_zero(it->second)) p.terms_.erase(it);
      }
    }
  }
  return p;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  LaurentPoly p;
  if (tl::is_zero(c)) return p;
  for (const auto& [e, a] : terms_) p.terms_.emplace(e, a * c);
  return p;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p;
  for (const auto& [e, a] : terms_) p.terms_.emplace(e + k, a);
  return p;
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    Rational a = abs(c);
    if (e == 0 || a != 1) os << a.get_str();
    if (e != 0) {
      if (a != 1) os << "*";
      os << "t";
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

LaurentPoly pow(const LaurentPoly& base, unsigned e) {
  LaurentPoly acc = LaurentPoly::one();
  LaurentPoly b = base;
  while (e > 0) {
    if (e & 1u) acc = acc * b;
    e >>= 1u;
    if (e > 0) b = b * b;
  }
  return acc;
}

LaurentPoly poly_divmod(const LaurentPoly& a, const LaurentPoly& b,
                        LaurentPoly* remainder) {
  if (b.is_zero())
    throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (!a.is_ordinary() || !b.is_ordinary())
    throw Error(ErrorCode::BadParameter, "poly_divmod expects ordinary polynomials");
  LaurentPoly q;
  LaurentPoly r = a;
  int db = b.degree();
  const Rational& lb = b.leading_coeff();
  while (!r.is_zero() && r.degree() >= db) {
    Rational c = r.leading_coeff() / lb;
    int e = r.degree() - db;
    LaurentPoly m = LaurentPoly::term(e, c);
    q = q + m;
    r = r - m * b;
  }
  if (remainder) *remainder = r;
  return q;
}

LaurentPoly poly_mod(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  poly_divmod(a, b, &r);
  return r;
}

namespace {

// Dense integer polynomial, coefficients ascending.
using ZPoly = std::vector<Integer>;

int zdeg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

void ztrim(ZPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Integer zcontent(const ZPoly& p) {
  Integer g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void zdiv_scalar(ZPoly& p, const Integer& d) {
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
}

Integer zpow(const Integer& b, unsigned e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

// Pseudo-remainder prem(a, b): lc(b)^(deg a - deg b + 1) * a mod b.
// The full power of lc(b) matters: the subresultant divisions below are
// exact only for this exact normalization.
ZPoly zprem(ZPoly a, const ZPoly& b) {
  int db = zdeg(b);
  const Integer& lb = b.back();
  int e = zdeg(a) - db + 1;
  while (zdeg(a) >= db && !a.empty()) {
    Integer la = a.back();
    int shift = zdeg(a) - db;
    for (auto& c : a) c *= lb;
    for (int i = 0; i <= db; ++i) a[static_cast<size_t>(shift + i)] -= la * b[static_cast<size_t>(i)];
    ztrim(a);
    --e;
  }
  if (e > 0 && !a.empty()) {
    Integer scale = zpow(lb, static_cast<unsigned>(e));
    for (auto& c : a) c *= scale;
  }
  return a;
}

// Primitive part with positive leading coefficient.
ZPoly zprimitive(ZPoly p) {
  ztrim(p);
  if (p.empty()) return p;
  Integer c = zcontent(p);
  if (sgn(p.back()) < 0) c = -c;
  zdiv_scalar(p, c);
  return p;
}

// Subresultant PRS gcd of primitive integer polynomials.
ZPoly zgcd_subresultant(ZPoly a, ZPoly b) {
  a = zprimitive(std::move(a));
  b = zprimitive(std::move(b));
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (zdeg(a) < zdeg(b)) std::swap(a, b);
  Integer g = 1, h = 1;
  while (true) {
    int delta = zdeg(a) - zdeg(b);
    ZPoly r = zprem(a, b);
    if (r.empty()) return zprimitive(std::move(b));
    if (zdeg(r) == 0) return ZPoly{Integer(1)};
    a = std::move(b);
    Integer divisor = g * zpow(h, static_cast<unsigned>(delta));
    zdiv_scalar(r, divisor);
    b = std::move(r);
    g = a.back();
    if (delta > 0) {
      // h = g^delta / h^(delta-1), exact over the integers
      Integer num = zpow(g, static_cast<unsigned>(delta));
      Integer den = zpow(h, static_cast<unsigned>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
  }
}

// Clear denominators of an ordinary rational polynomial.
ZPoly to_zpoly(const LaurentPoly& p) {
  Integer lcm = 1;
  for (const auto& [e, c] : p.terms()) {
    (void)e;
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  ZPoly z(static_cast<size_t>(p.degree() + 1), Integer(0));
  for (const auto& [e, c] : p.terms()) {
    Rational scaled = c * Rational(lcm);
    z[static_cast<size_t>(e)] = scaled.get_num();
  }
  return z;
}

LaurentPoly from_zpoly_monic(const ZPoly& z) {
  LaurentPoly::TermMap terms;
  Rational lead(z.back());
  for (size_t i = 0; i < z.size(); ++i) {
    if (sgn(z[i]) == 0) continue;
    terms[static_cast<int>(i)] = Rational(z[i]) / lead;
  }
  return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (!a.is_ordinary() || !b.is_ordinary())
    throw Error(ErrorCode::BadParameter, "poly_gcd expects ordinary polynomials");
  auto monic = [](const LaurentPoly& p) {
    return p.is_zero() ? p : p.scaled(Rational(1) / p.leading_coeff());
  };
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  ZPoly g = zgcd_subresultant(to_zpoly(a), to_zpoly(b));
  return from_zpoly_monic(g);
}

LaurentPoly cyclotomic_poly(int n) {
  if (n < 1) throw Error(ErrorCode::BadParameter, "cyclotomic index must be positive");
  // Phi_n = (t^n - 1) / prod_{d | n, d < n} Phi_d
  LaurentPoly num = LaurentPoly::term(n, 1) - LaurentPoly::one();
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    num = poly_div_exact(num, cyclotomic_poly(d));
  }
  return num;
}

LaurentPoly cyclotomic_modulus(int ell) {
  if (ell < 3)
    throw Error(ErrorCode::BadParameter,
                "root-of-unity order parameter must be at least 3");
  return cyclotomic_poly(2 * ell);
}

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

}  // namespace tl
