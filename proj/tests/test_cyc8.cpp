#include "doctest.h"
#include "theta2/cyc8.hpp"

using namespace theta2;

TEST_CASE("zeta powers reduce by zeta^4 = -1") {
  Cyc8 z = Cyc8::zeta_pow(1);
  CHECK(z * Cyc8::zeta_pow(3) == Cyc8(-1));
  CHECK(Cyc8::zeta_pow(4) == Cyc8(-1));
  CHECK(Cyc8::zeta_pow(8) == Cyc8(1));
  CHECK(Cyc8::zeta_pow(-1) == Cyc8::zeta_pow(7));
  CHECK(Cyc8::zeta_pow(2) * Cyc8::zeta_pow(2) == Cyc8(-1));  // i^2 = -1
}

TEST_CASE("sqrt2 squares to 2") {
  // zeta + zeta^{-1} = zeta - zeta^3
  Cyc8 s2 = Cyc8::zeta_pow(1) - Cyc8::zeta_pow(3);
  CHECK(s2 * s2 == Cyc8(2));
  // (zeta + zeta^3)^2 = (i*sqrt2)^2 = -2
  Cyc8 is2 = Cyc8::zeta_pow(1) + Cyc8::zeta_pow(3);
  CHECK(is2 * is2 == Cyc8(-2));
}

TEST_CASE("field inverse") {
  CHECK(Cyc8(2).inv() == Cyc8(Rat(1, 2)));
  Cyc8 a(Rat(3), Rat(-1, 2), Rat(0), Rat(5));
  CHECK(a * a.inv() == Cyc8::one());
  CHECK_THROWS_AS(Cyc8::zero().inv(), std::domain_error);
}

TEST_CASE("galois conjugation is multiplicative") {
  Cyc8 a(Rat(1), Rat(2), Rat(3), Rat(4));
  Cyc8 b(Rat(-1, 3), Rat(0), Rat(7), Rat(1, 5));
  for (int k : {3, 5, 7}) CHECK((a * b).galois(k) == a.galois(k) * b.galois(k));
}

TEST_CASE("embedding of Q and Q(i) is injective") {
  CHECK(Cyc8(Rat(1, 2)) != Cyc8(Rat(1, 3)));
  CHECK(Cyc8::imag_unit() != Cyc8(1));
  CHECK(!Cyc8::imag_unit().is_rational());
  CHECK(Cyc8(Rat(7)).rational_part() == 7);
}
