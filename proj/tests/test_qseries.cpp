#include <random>

#include "doctest.h"
#include "theta2/qseries.hpp"

using namespace theta2;

namespace {

QSeries random_series(std::mt19937& rng, int order, int nterms) {
  std::uniform_int_distribution<int> dA(0, 4 * order), dB(-6, 6), dnum(-5, 5),
      dden(1, 4);
  std::vector<QSeries::Term> terms;
  for (int t = 0; t < nterms; ++t) {
    Expo e{dA(rng), dB(rng), dA(rng)};
    Cyc8 c(Rat(dnum(rng), dden(rng)), Rat(dnum(rng)), Rat(0), Rat(dnum(rng), 2));
    terms.emplace_back(e, c);
  }
  return QSeries::from_terms(std::move(terms), order);
}

}  // namespace

TEST_CASE("ring identities on random small series") {
  std::mt19937 rng(12345);
  for (int it = 0; it < 25; ++it) {
    QSeries a = random_series(rng, 3, 6);
    QSeries b = random_series(rng, 3, 6);
    QSeries c = random_series(rng, 3, 6);
    CHECK((a * b).equals(b * a));
    CHECK(((a * b) * c).equals(a * (b * c)));
    CHECK((a * (b + c)).equals(a * b + a * c));
    CHECK((QSeries::one(3) * a).equals(a));
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("multiplication respects truncation order") {
  std::mt19937 rng(99);
  QSeries a = random_series(rng, 4, 10);
  QSeries b = random_series(rng, 4, 10);
  QSeries p = a * b;
  CHECK(p.order() == 4);
  for (const auto& [e, c] : p.terms()) CHECK(e.grade() <= 16);
}

TEST_CASE("graded long division inverts multiplication") {
  std::mt19937 rng(7);
  for (int it = 0; it < 10; ++it) {
    QSeries b = QSeries::one(4) + random_series(rng, 4, 5) * QSeries::from_terms(
        {{Expo{1, 0, 0}, Cyc8(1)}}, 4);
    QSeries a = random_series(rng, 4, 8);
    QSeries q = (a * b).divided_by(b);
    CHECK(q.equals(a));
    CHECK((a.divided_by(b) * b).equals(a));
  }
  QSeries s = QSeries::one(4) + QSeries::from_terms({{Expo{2, 1, 1}, Cyc8(3)}}, 4);
  CHECK(s.divided_by(s).equals(QSeries::one(4)));
  CHECK_THROWS_AS(s.divided_by(QSeries::zero(4)), std::domain_error);
  QSeries nounit = QSeries::from_terms({{Expo{1, 0, 0}, Cyc8(1)}}, 4);
  CHECK_THROWS_AS(s.divided_by(nounit), std::domain_error);
}

TEST_CASE("tau derivative scalings") {
  QSeries c1 = QSeries::one(4);
  CHECK(c1.tau_derivative(QSeries::Deriv::d11).is_zero());
  QSeries q1 = QSeries::from_terms({{Expo{4, 0, 0}, Cyc8(1)}}, 4);
  QSeries d = q1.tau_derivative(QSeries::Deriv::d11);
  CHECK(d.coeff(Expo{4, 0, 0}) == Cyc8(Rat(1, 2)));
  QSeries m = QSeries::from_terms({{Expo{2, 3, 5}, Cyc8(8)}}, 4);
  CHECK(m.tau_derivative(QSeries::Deriv::d12).coeff(Expo{2, 3, 5}) == Cyc8(6));
  CHECK(m.tau_derivative(QSeries::Deriv::d22).coeff(Expo{2, 3, 5}) == Cyc8(5));
}

TEST_CASE("doubling composes to quadrupling") {
  std::mt19937 rng(21);
  QSeries a = random_series(rng, 3, 8);
  QSeries d2 = a.doubled().doubled();
  CHECK(d2.order() == 12);
  for (const auto& [e, c] : a.terms())
    CHECK(d2.coeff(Expo{4 * e.A, 4 * e.B, 4 * e.C}) == c);
  CHECK(QSeries::one(3).doubled().equals(QSeries::one(6)));
}

TEST_CASE("specializations") {
  QSeries s = QSeries::from_terms(
      {{Expo{4, 2, 4}, Cyc8(1)}, {Expo{4, -2, 4}, Cyc8(1)}, {Expo{4, 0, 0}, Cyc8(5)}},
      4);
  QSeries r1 = s.specialize_r_to_one();
  CHECK(r1.coeff(Expo{4, 0, 4}) == Cyc8(2));
  CHECK(r1.coeff(Expo{4, 0, 0}) == Cyc8(5));
  QSeries sg = s.specialize_siegel_slice();
  CHECK(sg.size() == 1);
  CHECK(sg.coeff(Expo{4, 0, 0}) == Cyc8(5));
  CHECK(QSeries::one(4).specialize_siegel_slice().equals(QSeries::one(4)));
}
