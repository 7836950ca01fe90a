#include "doctest.h"
#include "theta2/theta_qexp.hpp"

using namespace theta2;

namespace {
QSeries theta4(int i, int N) {
  QSeries t = theta_constant_qexp(i, N);
  return t * t * t * t;
}
QSeries theta2s(int i, int N) {
  QSeries t = theta_constant_qexp(i, N);
  return t * t;
}
}  // namespace

TEST_CASE("theta1 leading terms") {
  QSeries t = theta_constant_qexp(1, 3);
  CHECK(t.coeff(Expo{0, 0, 0}) == Cyc8(1));
  CHECK(t.coeff(Expo{4, 0, 0}) == Cyc8(2));
  CHECK(t.coeff(Expo{0, 0, 4}) == Cyc8(2));
  CHECK(t.coeff(Expo{4, 4, 4}) == Cyc8(2));
  CHECK(t.coeff(Expo{4, -4, 4}) == Cyc8(2));
  CHECK(t.coeff(Expo{4, 0, 4}) == Cyc8(0));
  CHECK(t.support_positive_semidefinite());
}

TEST_CASE("constant terms of second-order theta constants") {
  CHECK(theta_second_order_qexp(0, 0, 3).constant_term() == Cyc8(1));
  CHECK(theta_second_order_qexp(1, 1, 3).constant_term() == Cyc8(0));
}

TEST_CASE("Riemann bilinear relation at z=0 for all ten even characteristics") {
  const int N = 4;
  QSeries Th[2][2];
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) Th[a][b] = theta_second_order_qexp(a, b, N);
  for (int i = 1; i <= 10; ++i) {
    const Characteristic& ch = even_char(i);
    QSeries lhs = theta2s(i, N);
    QSeries rhs = QSeries::zero(N);
    for (int s1 = 0; s1 < 2; ++s1)
      for (int s2 = 0; s2 < 2; ++s2) {
        int sign = ((s1 * ch.eps[2] + s2 * ch.eps[3]) % 2) ? -1 : 1;
        QSeries prod = Th[s1][s2] * Th[(s1 + ch.eps[0]) % 2][(s2 + ch.eps[1]) % 2];
        rhs = (sign > 0) ? rhs + prod : rhs - prod;
      }
    CHECK(lhs.equals(rhs));
  }
}

TEST_CASE("quadratic theta-square relation for the pair (1,2)") {
  const int N = 6;
  QSeries lhs = theta2s(1, N) * theta2s(3, N) - theta2s(2, N) * theta2s(4, N) -
                theta2s(5, N) * theta2s(6, N);
  CHECK(lhs.is_zero());
}

TEST_CASE("linear relations among the fourth powers") {
  const int N = 5;
  std::array<QSeries, 11> x;
  for (int i = 1; i <= 10; ++i) x[size_t(i)] = theta4(i, N);
  CHECK((x[6] - (x[1] - x[2] + x[3] - x[4] - x[5])).is_zero());
  CHECK((x[7] - (x[2] - x[3] + x[5])).is_zero());
  CHECK((x[8] - (x[1] - x[4] - x[5])).is_zero());
  CHECK((x[9] - (-x[3] + x[4] + x[5])).is_zero());
  CHECK((x[10] - (x[1] - x[2] - x[5])).is_zero());
  // theta1^4 - theta4^4 - theta6^4 - theta7^4 = 0
  CHECK((x[1] - x[4] - x[6] - x[7]).is_zero());
}

TEST_CASE("Igusa quartic relation") {
  const int N = 6;
  QSeries s2 = QSeries::zero(N), s4 = QSeries::zero(N);
  for (int i = 1; i <= 10; ++i) {
    QSeries xi = theta4(i, N);
    s2 = s2 + xi * xi;
    s4 = s4 + xi * xi * xi * xi;
  }
  CHECK((s2 * s2 - s4.scaled(Cyc8(4))).is_zero());
}

TEST_CASE("genus-1 expansions and Jacobi derivative formula") {
  const int N = 6;
  QSeries t00 = theta_genus1_qexp(Genus1Theta::t00, N);
  QSeries t01 = theta_genus1_qexp(Genus1Theta::t01, N);
  QSeries t10 = theta_genus1_qexp(Genus1Theta::t10, N);
  QSeries g11 = theta_genus1_qexp(Genus1Theta::t11_gradient, N);
  CHECK(t00.coeff(Expo{0, 0, 0}) == Cyc8(1));
  CHECK(t00.coeff(Expo{4, 0, 0}) == Cyc8(2));
  CHECK(t00.coeff(Expo{16, 0, 0}) == Cyc8(2));
  CHECK(t01.constant_term() == Cyc8(1));
  CHECK(t10.coeff(Expo{1, 0, 0}) == Cyc8(2));  // leading exponent 1/4
  // Derivative formula: with the gradient normalized by 1/(pi i), the
  // classical factor -pi becomes -pi/(pi i) = i.
  QSeries rhs = (t00 * t01 * t10).scaled(Cyc8::imag_unit());
  CHECK(g11.equals(rhs));
}

TEST_CASE("odd gradient basic shape") {
  auto g1 = theta_gradient_qexp(1, 4);
  for (const auto& [e, c] : g1[0].terms()) {
    (void)c;
    CHECK(e.A > 0);
  }
  CHECK(!g1[1].is_zero());
  CHECK(g1[1].terms().front().first == Expo{0, 0, 1});
  // Coefficients lie in Z[i]: no zeta or zeta^3 parts.
  for (const auto& [e, c] : g1[1].terms()) {
    (void)e;
    CHECK(c.coeff(1) == 0);
    CHECK(c.coeff(3) == 0);
  }
}

TEST_CASE("duplication formulas via tau doubling") {
  const int N = 4;
  const int idx[4] = {1, 5, 7, 9};
  const int sgn[4][4] = {
      {1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}};
  QSeries dbl[4] = {QSeries::zero(N), QSeries::zero(N), QSeries::zero(N),
                    QSeries::zero(N)};
  for (int t = 0; t < 4; ++t)
    dbl[t] = theta2s(idx[t], (N + 1) / 2).doubled().truncated(N);
  for (int i = 0; i < 4; ++i) {
    QSeries rhs = QSeries::zero(N);
    for (int t = 0; t < 4; ++t) rhs = (sgn[i][t] > 0) ? rhs + dbl[t] : rhs - dbl[t];
    CHECK(theta2s(i + 1, N).equals(rhs));
  }
  // theta5^2(tau) = 2(theta1 theta5 + theta7 theta9)(2 tau) and
  // theta6^2(tau) = 2(theta1 theta5 - theta7 theta9)(2 tau).
  int M = (N + 1) / 2;
  QSeries t15 =
      (theta_constant_qexp(1, M) * theta_constant_qexp(5, M)).doubled().truncated(N);
  QSeries t79 =
      (theta_constant_qexp(7, M) * theta_constant_qexp(9, M)).doubled().truncated(N);
  CHECK(theta2s(5, N).equals((t15 + t79).scaled(Cyc8(2))));
  CHECK(theta2s(6, N).equals((t15 - t79).scaled(Cyc8(2))));
}

TEST_CASE("restriction to tau12 = 0 splits theta1 into genus-1 factors") {
  const int N = 4;
  QSeries lhs = theta_constant_qexp(1, N).specialize_r_to_one();
  QSeries rhs = theta_genus1_qexp(Genus1Theta::t00, N) *
                theta_genus1_qexp_q2(Genus1Theta::t00, N);
  CHECK(lhs.equals(rhs));
}

TEST_CASE("raw lattice support satisfies B^2 = A*C per term before collapse") {
  for (int i = 1; i <= 10; ++i)
    CHECK(theta_constant_qexp(i, 5).support_positive_semidefinite());
  for (int i = 1; i <= 6; ++i) {
    auto g = theta_gradient_qexp(i, 5);
    CHECK(g[0].support_positive_semidefinite());
    CHECK(g[1].support_positive_semidefinite());
  }
}
