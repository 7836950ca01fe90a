#include "theta2/dims.hpp"

#include <stdexcept>

#include "theta2/genfun.hpp"

namespace theta2 {

namespace {

long cubic_odd(long j, long k) {
  // 24 dim = 2(j+1)k^3 + 3(j^2-2j-8)k^2 + (j^3-9j^2-42j+118)k
  //          + (-2j^3-9j^2+152j-216)
  long v = 2 * (j + 1) * k * k * k + 3 * (j * j - 2 * j - 8) * k * k +
           (j * j * j - 9 * j * j - 42 * j + 118) * k +
           (-2 * j * j * j - 9 * j * j + 152 * j - 216);
  if (v % 24 != 0) throw std::logic_error("dimension is not integral");
  return v / 24;
}

long cubic_even(long j, long k) {
  long v = 2 * (j + 1) * k * k * k + 3 * (j * j - 2 * j + 2) * k * k +
           (j * j * j - 9 * j * j - 12 * j + 28) * k +
           (-2 * j * j * j - 9 * j * j + 182 * j - 336);
  if (v % 24 != 0) throw std::logic_error("dimension is not integral");
  return v / 24;
}

long b_jk(long j, long k) {
  long r = j / 2 + k;
  return (r % 2 != 0) ? r - 3 : r - 2;
}

}  // namespace

long dim_m_gamma2(int j, int k) {
  if (j % 2 != 0) return 0;  // -1 acts by -1 on odd j
  if (j == 0) {
    if (k < 0) return 0;
    if (k % 2 == 0) return (long(k) + 1) * (long(k) * k + 2 * k + 12) / 12;
    if (k < 5) return 0;
    return dim_m_gamma2(0, k - 5);
  }
  if (j >= 2) {
    if (k % 2 == 1) {
      if (k >= 3) return cubic_odd(j, k);
      if (k >= 0) return 0;  // S_{2,1} = (0) and no forms below
      throw std::domain_error("formula not applicable");
    }
    if (k >= 4) return cubic_even(j, k);
    throw std::domain_error("formula not applicable");
  }
  throw std::domain_error("formula not applicable");
}

long dim_s_gamma2(int j, int k) {
  if (j % 2 != 0) return 0;
  if (k % 2 == 1) {
    if (j == 0) {
      if (k < 5) return 0;
      return cubic_odd(0, k);
    }
    if (k >= 3) return cubic_odd(j, k);
    if (k >= 0) return 0;
    throw std::domain_error("formula not applicable");
  }
  // even k: subtract the Eisenstein part
  if (j == 0) {
    if (k <= 2) return 0;
    return dim_m_gamma2(0, k) - 15 * (long(k) / 2 - 1);
  }
  if (k >= 4) return dim_m_gamma2(j, k) - dim_eisenstein(j, k, Group::Gamma2);
  if (k >= 0) return 0;
  throw std::domain_error("formula not applicable");
}

long dim_eisenstein(int j, int k, Group g) {
  if (k % 2 != 0 || j % 2 != 0 || k < 2)
    throw std::domain_error("formula not applicable");
  long kk = k / 2;
  switch (g) {
    case Group::Gamma2:
      if (j == 0) return kk >= 2 ? 15 * (kk - 1) : 5;
      return 15 * (long(j) / 2 + kk - 2);
    case Group::Gamma1:
      if (j == 0) return kk >= 2 ? 6 * (kk / 2) - 1 : 1;
      return 3 * b_jk(j, kk);
    case Group::Gamma0:
      if (j == 0) return kk >= 2 ? 2 * (kk / 2) + 1 : 1;
      return b_jk(j, kk);
    default:
      throw std::domain_error("formula not applicable");
  }
}

long dim_m_gamma1(int j, int k) {
  if (j % 2 != 0 || j < 0) return 0;
  if (k < 0) return 0;
  if (j == 0) {
    if (k % 2 == 0) return registered_genfun("ring_gamma1_even").coeff(k).get_si();
    // odd weight: multiples of the weight-7 generator
    if (k < 7) return 0;
    return dim_m_gamma1(0, k - 7);
  }
  if (k % 2 == 0) return genfun_m_even_gamma1(j).coeff(k).get_si();
  return dim_s_gamma1(j, k);
}

long dim_s_gamma1(int j, int k) {
  if (j % 2 != 0 || j < 0 || k < 0) return 0;
  if (j == 0) throw std::domain_error("formula not applicable");
  if (k % 2 == 1) return genfun_s_odd_gamma1(j).coeff(k).get_si();
  return dim_m_gamma1(j, k) - dim_eisenstein(j, k, Group::Gamma1);
}

IrrepMultiplicity sym_s21_decomp(int r) {
  const CharacterTable& s3 = character_table_s3();
  if (r < 0) throw std::domain_error("formula not applicable");
  long a = 1 + r / 6 + (r % 6 == 1 ? -1 : 0);
  long b = (r + 2) / 3;
  long c = (r + 3) / 6 + (r % 6 == 4 ? -1 : 0);
  return make_mult(s3, {{{3}, a}, {{2, 1}, b}, {{1, 1, 1}, c}});
}

IrrepMultiplicity induct_boundary_to_s6(const IrrepMultiplicity& s3rep) {
  const CharacterTable& s6 = character_table_s6();
  const CharacterTable& s3 = character_table_s3();
  long a = s3rep.counts[size_t(s3.index_of({3}))];
  long b = s3rep.counts[size_t(s3.index_of({2, 1}))];
  long c = s3rep.counts[size_t(s3.index_of({1, 1, 1}))];
  return make_mult(s6, {{{6}, a},
                        {{5, 1}, a},
                        {{4, 2}, a + b},
                        {{3, 2, 1}, b},
                        {{2, 2, 2}, b},
                        {{3, 1, 1, 1}, c},
                        {{2, 1, 1, 1, 1}, c}});
}

IrrepMultiplicity eisenstein_rep_gamma2(int j, int k) {
  if (k % 2 != 0 || j % 2 != 0 || k < 2)
    throw std::domain_error("formula not applicable");
  const CharacterTable& s3 = character_table_s3();
  int r = (j + k) / 2;
  IrrepMultiplicity sym = sym_s21_decomp(r);
  sym.counts[size_t(s3.index_of({3}))] -= 1;
  sym.counts[size_t(s3.index_of({2, 1}))] -= 1;
  IrrepMultiplicity out = induct_boundary_to_s6(sym);
  if (j == 0) {
    const CharacterTable& s6 = character_table_s6();
    out.counts[size_t(s6.index_of({6}))] += 1;
    out.counts[size_t(s6.index_of({4, 2}))] += 1;
    out.counts[size_t(s6.index_of({2, 2, 2}))] += 1;
  }
  return out;
}

namespace {

std::map<int, std::vector<long>> rows(std::initializer_list<std::pair<int, std::vector<long>>> l) {
  return {l.begin(), l.end()};
}

}  // namespace

const std::map<int, std::vector<long>>& table_m0_gamma2() {
  static const auto t = rows({
      {2, {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0}},
      {4, {1, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0}},
      {6, {1, 0, 1, 0, 0, 0, 1, 2, 0, 1, 0}},
      {8, {1, 0, 3, 0, 0, 1, 1, 3, 0, 0, 0}},
      {10, {2, 0, 3, 0, 0, 2, 3, 4, 0, 2, 0}},
      {12, {3, 1, 6, 1, 0, 3, 4, 5, 0, 2, 0}},
  });
  return t;
}

const std::map<int, std::vector<long>>& table_m0_gamma1() {
  static const auto t = rows({
      {2, {1, 0, 0}},
      {4, {3, 1, 0}},
      {6, {4, 1, 0}},
      {8, {7, 4, 0}},
      {10, {9, 5, 0}},
      {12, {14, 10, 1}},
  });
  return t;
}

const std::map<int, std::vector<long>>& table_s2_gamma2() {
  static const auto t = rows({
      {5, {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0}},
      {7, {0, 0, 0, 1, 1, 1, 0, 0, 1, 0, 0}},
      {9, {0, 1, 0, 2, 1, 2, 1, 0, 3, 1, 1}},
      {11, {0, 2, 1, 4, 3, 5, 2, 0, 4, 1, 1}},
      {13, {0, 2, 2, 6, 5, 9, 4, 1, 8, 2, 1}},
  });
  return t;
}

const std::map<int, std::vector<long>>& table_m2_gamma2() {
  static const auto t = rows({
      {4, {0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0}},
      {6, {0, 0, 1, 0, 0, 2, 1, 1, 0, 0, 0}},
      {8, {0, 0, 2, 1, 0, 3, 3, 2, 1, 2, 0}},
      {10, {1, 2, 5, 3, 0, 5, 5, 3, 2, 3, 0}},
      {12, {0, 1, 7, 4, 1, 11, 8, 6, 4, 4, 0}},
  });
  return t;
}

const std::map<int, std::vector<long>>& table_m4_gamma2() {
  static const auto t = rows({
      {2, {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0}},
      {4, {0, 0, 1, 0, 0, 1, 0, 1, 0, 1, 0}},
      {6, {0, 0, 2, 0, 0, 3, 2, 2, 1, 2, 0}},
      {8, {1, 2, 5, 2, 0, 6, 4, 3, 2, 4, 0}},
      {10, {1, 2, 8, 4, 1, 12, 8, 6, 5, 6, 0}},
      {12, {2, 5, 14, 8, 3, 20, 13, 9, 8, 8, 0}},
  });
  return t;
}

const std::map<int, std::vector<long>>& table_s4_gamma2_even() {
  static const auto t = rows({
      {4, {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0}},
      {6, {0, 0, 1, 0, 0, 2, 1, 1, 1, 1, 0}},
      {8, {0, 1, 3, 2, 0, 5, 3, 2, 2, 3, 0}},
      {10, {1, 2, 6, 4, 1, 10, 7, 4, 5, 5, 0}},
      {12, {1, 4, 11, 8, 3, 18, 12, 7, 8, 7, 0}},
  });
  return t;
}

const std::map<int, std::vector<long>>& table_s4_gamma2_odd() {
  static const auto t = rows({
      {3, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
      {5, {0, 0, 0, 0, 0, 1, 0, 0, 1, 1, 0}},
      {7, {0, 1, 1, 1, 1, 3, 1, 0, 2, 1, 0}},
      {9, {0, 2, 2, 3, 2, 6, 3, 1, 5, 3, 1}},
      {11, {0, 4, 5, 7, 4, 12, 5, 2, 8, 4, 1}},
  });
  return t;
}

}  // namespace theta2
