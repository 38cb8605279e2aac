#include <doctest.h>

#include "oracles.hpp"
#include "tl/laurent.hpp"

using namespace tl;

namespace {

LaurentPoly L(std::initializer_list<std::pair<int, long>> terms) {
  LaurentPoly::TermMap map;
  for (const auto& [e, c] : terms) map[e] = Rational(c);
  return LaurentPoly::from_terms(std::move(map));
}

}  // namespace

TEST_SUITE_BEGIN("laurent");

TEST_CASE("zero coefficients are never stored") {
  LaurentPoly p = L({{2, 1}, {0, 0}, {-1, 3}});
  CHECK(p.terms().size() == 2);
  CHECK(p.coeff(0) == 0);
  CHECK((p - p).is_zero());
}

TEST_CASE("multiplication matches the schoolbook oracle") {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    LaurentPoly a = oracle::random_laurent(rng);
    LaurentPoly b = oracle::random_laurent(rng);
    LaurentPoly via_oracle =
        oracle::to_laurent(oracle::poly_mul(oracle::from_laurent(a), oracle::from_laurent(b)));
    CHECK(a * b == via_oracle);
  }
}

TEST_CASE("d squared expands to t^2 + 2 + t^-2") {
  LaurentPoly d = L({{1, 1}, {-1, 1}});
  LaurentPoly expected =
      oracle::to_laurent(oracle::poly_mul(oracle::from_laurent(d), oracle::from_laurent(d)));
  CHECK(d * d == expected);
  CHECK(d * d == L({{2, 1}, {0, 2}, {-2, 1}}));
}

TEST_CASE("division with remainder") {
  LaurentPoly a = L({{3, 2}, {1, -1}, {0, 5}});
  LaurentPoly b = L({{2, 1}, {0, 1}});
  LaurentPoly r;
  LaurentPoly q = poly_divmod(a, b, &r);
  CHECK(q * b + r == a);
  CHECK((r.is_zero() || r.degree() < b.degree()));
  CHECK_THROWS_AS(poly_divmod(a, LaurentPoly::zero(), &r), Error);
}

TEST_CASE("gcd agrees with Euclid and is monic") {
  Rng rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    LaurentPoly a = oracle::random_laurent(rng, true);
    LaurentPoly b = oracle::random_laurent(rng, true);
    // shift into ordinary polynomials
    a = a.shifted(a.is_zero() ? 0 : -a.min_exp());
    b = b.shifted(b.is_zero() ? 0 : -b.min_exp());
    LaurentPoly g = poly_gcd(a, b);
    LaurentPoly expected = oracle::to_laurent(
        oracle::poly_gcd_euclid(oracle::from_laurent(a), oracle::from_laurent(b)));
    CHECK(g == expected);
    if (!g.is_zero()) {
      CHECK(g.leading_coeff() == 1);
      CHECK(poly_mod(a, g).is_zero());
      CHECK(poly_mod(b, g).is_zero());
    }
  }
}

TEST_CASE("gcd of scaled common factor") {
  LaurentPoly h = L({{2, 1}, {1, 2}, {0, 1}});
  LaurentPoly a = h * L({{1, 3}, {0, 1}});
  LaurentPoly b = h * L({{2, 1}, {0, -1}});
  LaurentPoly g = poly_gcd(a, b);
  CHECK(poly_mod(g, h).is_zero());
  CHECK(poly_mod(h, g).is_zero());
}

TEST_CASE("cyclotomic polynomials for the roots used by the tower") {
  // Oracle: divide t^n - 1 by the product of the lower cyclotomics.
  for (int ell = 3; ell <= 9; ++ell) {
    int n = 2 * ell;
    oracle::Poly numerator = oracle::from_laurent(L({{n, 1}, {0, -1}}));
    oracle::Poly denominator = oracle::from_laurent(LaurentPoly::one());
    for (int d = 1; d < n; ++d)
      if (n % d == 0)
        denominator = oracle::poly_mul(denominator, oracle::from_laurent(cyclotomic_poly(d)));
    LaurentPoly expected = oracle::to_laurent(oracle::poly_div_exact(numerator, denominator));
    CHECK(cyclotomic_modulus(ell) == expected);
  }
  CHECK(cyclotomic_modulus(3) == L({{2, 1}, {1, -1}, {0, 1}}));
  CHECK(cyclotomic_modulus(4) == L({{4, 1}, {0, 1}}));
  CHECK(cyclotomic_modulus(5) == L({{4, 1}, {3, -1}, {2, 1}, {1, -1}, {0, 1}}));
  CHECK_THROWS_AS(cyclotomic_modulus(2), Error);
}

TEST_CASE("cyclotomic degree equals Euler phi") {
  for (int ell = 3; ell <= 8; ++ell)
    CHECK(cyclotomic_modulus(ell).degree() == euler_phi(2 * ell));
  CHECK(euler_phi(6) == 2);
  CHECK(euler_phi(8) == 4);
  CHECK(euler_phi(10) == 4);
  CHECK(euler_phi(12) == 4);
}

TEST_SUITE_END();
