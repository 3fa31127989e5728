#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "colourcong/dissection.hpp"
#include "colourcong/special_functions.hpp"
#include "oracles.hpp"

using namespace colourcong;

namespace {

const auto Z = CoefficientRing::exact();

LaurentSeries from_poly(const oracle::Poly& p) {
  return LaurentSeries::from_coefficients(Z, 0, p);
}

}  // namespace

TEST_CASE("pochhammer") {
  const auto e = pochhammer(ProductSpec{}.eta(1, 1), Z, 20);
  CHECK(e.coeff(0) == 1);
  CHECK(e.coeff(1) == -1);
  CHECK(e.coeff(2) == -1);
  CHECK(e.coeff(5) == 1);
  CHECK(e.coeff(7) == 1);
  CHECK(e.bound() == 20);

  CHECK(pochhammer(ProductSpec{}.eta(1, -2), Z, 10).coeff(3) == 10);

  const auto empty = pochhammer(ProductSpec{}, Z, 8);
  CHECK(equal_on_overlap(empty, one(Z, 8)));
  CHECK(empty.bound() == 8);

  CHECK_THROWS_AS(pochhammer(ProductSpec{}.eta(0, 1), Z, 8), std::invalid_argument);
  CHECK_THROWS_AS(pochhammer(ProductSpec{}.general(1, 0, 1), Z, 8), std::invalid_argument);
  CHECK_THROWS_AS(pochhammer(ProductSpec{}, Z, -1), std::invalid_argument);
}

TEST_CASE("pochhammer matches the factor-by-factor oracle") {
  const std::int64_t cases[][3] = {{1, 1, 4}, {3, 3, -2}, {2, 7, 3}, {5, 25, -1}, {20, 25, 1}};
  for (const auto& c : cases) {
    CAPTURE(c[0]);
    CAPTURE(c[1]);
    const auto got = pochhammer(ProductSpec{}.general(c[0], c[1], c[2]), Z, 80);
    CHECK(equal_on_overlap(got, from_poly(oracle::product(c[0], c[1], c[2], 80))));
  }
  const auto R = CoefficientRing::modular(11);
  CHECK(equal_on_overlap(pochhammer(ProductSpec{}.eta(1, -8), R, 80),
                         reduce_mod(from_poly(oracle::product(1, 1, -8, 80)), 11)));
}

TEST_CASE("theta_f") {
  CHECK(equal_on_overlap(theta_f({1, 2}, Z, 100), euler_product(1, Z, 100)));
  const auto t0 = theta_f({3, 4}, Z, 0);
  CHECK(t0.bound() == 0);
  CHECK(t0.coeff(0) == 1);
  // f(-q^7, -q^42): n = 1 gives -q^7, n = -1 gives -q^42
  const auto t = theta_f({7, 42}, Z, 70);
  CHECK(t.coeff(7) == -1);
  CHECK(t.coeff(42) == -1);
  CHECK(t.coeff(21) == 0);
  CHECK(t.coeff(63) == 1);
}

TEST_CASE("rr_F5") {
  const auto F = rr_F5(Z, 200);
  CHECK(F.offset() == 0);
  CHECK(F.coeff(0) == 1);
  CHECK(equal_on_overlap(F * invert(F), one(Z, 200)));
  for (Exponent e = 1; e <= 200; ++e) {
    if (e % 5 != 0) CHECK(F.coeff(e) == 0);
  }
  // (q^5;q^25)(q^20;q^25) / ((q^10;q^25)(q^15;q^25)), factor by factor
  const auto expected = oracle::mul(oracle::mul(oracle::product(5, 25, 1, 200),
                                                oracle::product(20, 25, 1, 200), 200),
                                    oracle::mul(oracle::product(10, 25, -1, 200),
                                                oracle::product(15, 25, -1, 200), 200),
                                    200);
  CHECK(equal_on_overlap(F, from_poly(expected)));
}

TEST_CASE("the reciprocal orientation of F(q^5) does not satisfy the quintic dissection") {
  // With numerator and denominator swapped, (q^25;q^25)(F^-1 - q - q^2 F)
  // already differs from (q;q) at q^5.
  const auto swapped = pochhammer(
      ProductSpec{}.general(10, 25, 1).general(15, 25, 1).general(5, 25, -1).general(20, 25, -1),
      Z, 100);
  const auto q = [&](Exponent e) { return monomial(Z, 1, e, 100); };
  const auto rhs = euler_product(25, Z, 100) * (invert(swapped) - q(1) - q(2) * swapped);
  const auto a = compare(euler_product(1, Z, 100), rhs);
  CHECK_FALSE(a.equal);
  CHECK(a.first_difference == 5);
}

TEST_CASE("jacobi_cube") {
  const auto j = jacobi_cube(Z, 500);
  CHECK(j.coeff(0) == 1);
  CHECK(j.coeff(1) == -3);
  CHECK(j.coeff(3) == 5);
  CHECK(j.coeff(6) == -7);
  CHECK(j.coeff(2) == 0);
  CHECK(equal_on_overlap(j, pow_int(pochhammer(ProductSpec{}.eta(1, 1), Z, 500), 3)));
}

TEST_CASE("abc7") {
  for (auto which : {ThetaQuotient::A, ThetaQuotient::B, ThetaQuotient::C}) {
    const auto s = abc7(which, Z, 300);
    CHECK(s.offset() == 0);
    CHECK(s.coeff(0) == 1);
    for (Exponent e = 1; e <= s.bound(); ++e) {
      if (e % 7 != 0) CHECK(s.coeff(e) == 0);
    }
  }
  // A = f(-q^14,-q^35) / f(-q^7,-q^42), cross-multiplied
  const auto A = abc7(ThetaQuotient::A, Z, 200);
  CHECK(equal_on_overlap(A * theta_f({7, 42}, Z, 200), theta_f({14, 35}, Z, 200)));
}

TEST_CASE("xi and T7") {
  const auto xi = xi_series(Z, 200);
  CHECK(xi.offset() == -2);
  CHECK(xi.coeff(-2) == 1);
  CHECK(xi.bound() == 200);
  const auto t7 = t7_series(Z, 200);
  CHECK(t7.offset() == -7);
  CHECK(t7.coeff(-7) == 1);
  CHECK(t7.bound() == 200);

  const auto back = shift(xi * euler_product(49, Z, 200), 2);
  CHECK(equal_on_overlap(back, euler_product(1, Z, 200)));
  CHECK(compare(back, euler_product(1, Z, 200)).high == 200);
}

TEST_CASE("property: pentagonal sparsity") {
  const auto e = euler_product(1, Z, 1000);
  const auto pent = oracle::generalized_pentagonal(1000);
  for (Exponent n = 0; n <= 1000; ++n) {
    const auto c = e.coeff(n);
    if (pent.count(n)) {
      CHECK((c == 1 || c == -1));
    } else {
      CHECK(c == 0);
    }
  }
  CHECK(equal_on_overlap(e, theta_f({1, 2}, Z, 1000)));
}

TEST_CASE("property: triangular residues of the cube") {
  const auto j = jacobi_cube(Z, 2000);
  for (Exponent e = 0; e <= 2000; ++e) {
    const auto c = j.coeff(e);
    if (c == 0) continue;
    const auto r7 = e % 7;
    CHECK((r7 == 0 || r7 == 1 || r7 == 3 || r7 == 6));
    if (r7 == 6) CHECK(c % 7 == 0);
    const auto r5 = e % 5;
    CHECK((r5 == 0 || r5 == 1 || r5 == 3));
    if (r5 == 3) CHECK(c % 5 == 0);
  }
}
