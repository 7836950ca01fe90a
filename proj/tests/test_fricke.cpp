#include "doctest.h"
#include "theta2/fricke.hpp"
#include "theta2/registry.hpp"

using namespace theta2;

namespace {
bool eq(FormExpr a, FormExpr b, int N) {
  return eval(a, N).comp(0).equals(eval(b, N).comp(0));
}
}  // namespace

TEST_CASE("calculus symbols agree with the theta realizations") {
  const int N = 4;
  for (const char* n : {"s1", "s2", "s3", "s4", "xi", "alpha", "D1", "D2", "eta",
                        "X1", "X5", "X10"})
    CHECK(eq(fricke_sym(n), named_form(n), N));
}

TEST_CASE("involution images of the ring generators") {
  const int N = 6;
  CHECK(eq(fricke_substitute(fricke_sym("s1")), named_form("s1"), N));
  CHECK(eq(fricke_substitute(fricke_sym("s2")), fricke_sym("W2_s2"), N));
  CHECK(eq(fricke_substitute(fricke_sym("alpha")), fricke_sym("W2_alpha"), N));
  CHECK(eq(fricke_substitute(fricke_sym("s3")), fricke_sym("W2_s3"), N));
  CHECK(eq(fricke_substitute(fricke_sym("D1")), fricke_sym("D2"), N));
  CHECK(eq(fricke_substitute(fricke_sym("D2")), fricke_sym("D1"), N));
}

TEST_CASE("the substitution is an involution on the generators") {
  const int N = 6;
  // Apply the substitution to the verified polynomial image and compare with
  // the original generator.
  CHECK(eq(fricke_substitute(fricke_sym("W2_s2")), fricke_sym("s2"), N));
  CHECK(eq(fricke_substitute(fricke_sym("W2_alpha")), fricke_sym("alpha"), N));
  CHECK(eq(fricke_substitute(fricke_sym("W2_s3")), fricke_sym("s3"), N));
}

TEST_CASE("atoms outside the calculus are rejected") {
  CHECK_THROWS_AS(fricke_substitute(named_form("chi5")), std::domain_error);
}

TEST_CASE("action on the X generators is the reference permutation") {
  const int N = 4;
  static const int w[10] = {1, 6, 8, 10, 7, 2, 5, 3, 9, 4};
  for (int i = 1; i <= 10; ++i) {
    FormExpr img = fricke_substitute(fricke_sym("X" + std::to_string(i)));
    CHECK(eq(img, named_form("X" + std::to_string(w[i - 1])), N));
  }
  FormExpr eta_img = fricke_substitute(fricke_sym("eta"));
  FormExpr rhs = ex_scale(
      Cyc8(Rat(1, 2)),
      ex_add({named_form("X1"), ex_neg(named_form("X2")), ex_neg(named_form("X3")),
              ex_neg(named_form("X4")), named_form("eta")}));
  CHECK(eq(eta_img, rhs, N));
}

TEST_CASE("xi maps to four theta product") {
  const int N = 4;
  FormExpr img = fricke_substitute(fricke_sym("xi"));
  FormExpr rhs = ex_scale(
      Cyc8(4), ex_mul({ex_theta(1), ex_theta(2), ex_theta(3), ex_theta(4)}));
  CHECK(eq(img, rhs, N));
}
