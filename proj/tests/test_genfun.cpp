#include "doctest.h"
#include "theta2/dims.hpp"
#include "theta2/genfun.hpp"

using namespace theta2;

TEST_CASE("closed dimension formulas at the quoted values") {
  CHECK(dim_s_gamma2(2, 5) == 9);
  CHECK(dim_m_gamma2(0, 2) == 5);
  CHECK(dim_m_gamma2(2, 4) == 15);
  CHECK(dim_s_gamma2(2, 7) == 40);
  CHECK(dim_m_gamma2(0, 4) == 15);
  CHECK(dim_m_gamma2(0, 9) == dim_m_gamma2(0, 4));
  CHECK(dim_m_gamma2(4, 4) == 35);
  CHECK(dim_s_gamma2(4, 4) == 5);
  CHECK(dim_s_gamma2(6, 3) == 1);
  CHECK_THROWS_AS(dim_m_gamma2(2, 2), std::domain_error);
}

TEST_CASE("generating function of M_{j,k}(Gamma[2]) matches the closed forms") {
  for (int j : {2, 4, 6}) {
    GenFunction g = genfun_m_gamma2(j);
    auto c = g.coeffs(24);
    for (int k = 3; k <= 24; ++k) {
      long expect = 0;
      if (k % 2 == 1 || k >= 4) expect = dim_m_gamma2(j, k);
      CHECK(c[size_t(k)] == expect);
    }
  }
}

TEST_CASE("numerator identities: both alternating sums vanish") {
  for (int j : {2, 4, 6, 8}) {
    auto a = gamma2_numerator_coeffs(j);  // a_3..a_12
    Rat odd(0), even(0);
    for (int i = 0; i < 10; ++i) {
      if ((i + 3) % 2 == 1) odd += a[size_t(i)];
      else even += a[size_t(i)];
    }
    CHECK(odd == 0);
    CHECK(even == 0);
  }
}

TEST_CASE("scalar multiplicity series reproduce the embedded table") {
  const char* names[11] = {"m0_mult_s6",    "m0_mult_s51",    "m0_mult_s42",
                           "m0_mult_s411",  "m0_mult_s33",    "m0_mult_s321",
                           "m0_mult_s3111", "m0_mult_s222",   "m0_mult_s2211",
                           "m0_mult_s21111", "m0_mult_s111111"};
  for (const auto& [k, row] : table_m0_gamma2())
    for (int p = 0; p < 11; ++p)
      CHECK(genfun_coeffs(names[p], 12)[size_t(k)] == row[size_t(p)]);
  // total dimension per row agrees with the closed formula
  const CharacterTable& t = character_table_s6();
  for (const auto& [k, row] : table_m0_gamma2()) {
    long total = 0;
    for (int p = 0; p < 11; ++p) total += row[size_t(p)] * t.dimension(p);
    CHECK(total == dim_m_gamma2(0, k));
  }
}

TEST_CASE("branching the scalar table reproduces the Gamma_1[2] table") {
  const CharacterTable& t6 = character_table_s6();
  const char* names[11] = {"m0_mult_s6",    "m0_mult_s51",    "m0_mult_s42",
                           "m0_mult_s411",  "m0_mult_s33",    "m0_mult_s321",
                           "m0_mult_s3111", "m0_mult_s222",   "m0_mult_s2211",
                           "m0_mult_s21111", "m0_mult_s111111"};
  for (const auto& [k, row] : table_m0_gamma1()) {
    IrrepMultiplicity m;
    m.table = &t6;
    for (int p = 0; p < 11; ++p)
      m.counts.push_back(genfun_coeffs(names[p], 12)[size_t(k)].get_si());
    auto b = branch_s6_to_s3(m);
    const CharacterTable& t3 = character_table_s3();
    CHECK(b.counts[size_t(t3.index_of({3}))] == row[0]);
    CHECK(b.counts[size_t(t3.index_of({2, 1}))] == row[1]);
    CHECK(b.counts[size_t(t3.index_of({1, 1, 1}))] == row[2]);
  }
  // and the Gamma_1[2] multiplicity series agree with that table
  for (const auto& [k, row] : table_m0_gamma1()) {
    CHECK(genfun_coeffs("gamma1_m0_mult_s3", 12)[size_t(k)] == row[0]);
    CHECK(genfun_coeffs("gamma1_m0_mult_s21", 12)[size_t(k)] == row[1]);
    CHECK(genfun_coeffs("gamma1_m0_mult_s111", 12)[size_t(k)] == row[2]);
  }
}

TEST_CASE("Eisenstein dimensions") {
  CHECK(dim_eisenstein(0, 8, Group::Gamma2) == 45);
  // For j >= 2 the consistent value is 15(j/2 + k/2 - 2): the tabulated
  // corollary is off by the shift, cf. the M-S defect at (2,8).
  CHECK(dim_eisenstein(2, 8, Group::Gamma2) == 45);
  CHECK(dim_m_gamma2(2, 8) - dim_s_gamma2(2, 8) == 15 * (2 + 8 - 4) / 2);
  CHECK(dim_eisenstein(2, 4, Group::Gamma2) == 15);
  // rep-level check: dim of the representation equals the closed form
  for (int j : {0, 2, 4}) {
    for (int k = 4; k <= 12; k += 2) {
      auto rep = eisenstein_rep_gamma2(j, k);
      long total = 0;
      for (size_t i = 0; i < rep.counts.size(); ++i)
        total += rep.counts[i] * rep.table->dimension(int(i));
      CHECK(total == dim_eisenstein(j, k, Group::Gamma2));
    }
  }
  // Gamma_1[2] and Gamma_0[2] counts at small weight
  CHECK(dim_eisenstein(0, 4, Group::Gamma1) == 5);
  CHECK(dim_eisenstein(0, 4, Group::Gamma0) == 3);
  CHECK(dim_eisenstein(2, 4, Group::Gamma1) == 0);
  // Eisenstein rep branches consistently
  for (int k = 4; k <= 10; k += 2) {
    auto rep = eisenstein_rep_gamma2(0, k);
    auto b = branch_s6_to_s3(rep);
    long d = 0;
    for (size_t i = 0; i < b.counts.size(); ++i)
      d += b.counts[i] * b.table->dimension(int(i));
    CHECK(d == dim_eisenstein(0, k, Group::Gamma1));
  }
}

TEST_CASE("module series fixtures") {
  auto s2 = genfun_coeffs("sigma2", 13);
  CHECK(s2[5] == 9);
  CHECK(s2[7] == 40);
  CHECK(s2[9] == 105);
  CHECK(s2[11] == 216);
  // sigma2 coefficients match the cusp dimension formula
  for (int k = 5; k <= 13; k += 2) CHECK(s2[size_t(k)] == dim_s_gamma2(2, k));
  auto m2 = genfun_coeffs("m2", 12);
  for (int k = 4; k <= 12; k += 2) CHECK(m2[size_t(k)] == dim_m_gamma2(2, k));
  auto m4 = genfun_coeffs("m4", 12);
  CHECK(m4[2] == 5);
  for (int k = 4; k <= 12; k += 2) CHECK(m4[size_t(k)] == dim_m_gamma2(4, k));
  auto s4 = genfun_coeffs("s4_even", 12);
  for (int k = 4; k <= 12; k += 2) CHECK(s4[size_t(k)] == dim_s_gamma2(4, k));
  // Gamma_1[2] module series
  auto s1g = genfun_coeffs("sigma1_gamma1", 21);
  CHECK(s1g[9] == 9);
  CHECK(s1g[13] == 40);
  CHECK(s1g[17] == 105);
  auto s3g = genfun_coeffs("sigma3_gamma1", 15);
  CHECK(s3g[7] == 4);
  CHECK(s3g[11] == 24);
  CHECK(s3g[15] == 72);
  for (int k = 7; k <= 19; k += 4) CHECK(s3g[size_t(std::min(k, 15))] >= 0);
  // and they agree with the Gamma_1[2] dimension formulas
  for (int k = 9; k <= 21; k += 4) CHECK(s1g[size_t(k)] == dim_s_gamma1(2, k));
  for (int k = 7; k <= 15; k += 4) CHECK(s3g[size_t(k)] == dim_s_gamma1(2, k));
}

TEST_CASE("remarkable dimension coincidences") {
  for (int k = 2; k <= 20; k += 2) {
    CHECK(dim_m_gamma2(0, k) == dim_m_gamma1(0, 2 * k));
    if (k >= 4) CHECK(dim_m_gamma2(2, k) == dim_m_gamma1(2, 2 * k));
    CHECK(dim_s_gamma2(2, k + 1) == dim_s_gamma1(2, 2 * k + 1));
  }
}

TEST_CASE("generating function coefficients are nonnegative") {
  for (const auto& name : genfun_names()) {
    auto c = genfun_coeffs(name, 24);
    for (const auto& v : c) CHECK(v >= 0);
  }
}
