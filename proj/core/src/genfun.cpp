#include "theta2/genfun.hpp"

#include <map>
#include <stdexcept>

namespace theta2 {

namespace {

std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
  std::vector<Int> out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

std::vector<Int> poly_add(std::vector<Int> a, const std::vector<Int>& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

std::vector<Int> one_minus_tpow(int e) {
  std::vector<Int> p(size_t(e) + 1, 0);
  p[0] = 1;
  p[size_t(e)] = -1;
  return p;
}

}  // namespace

GenFunction::GenFunction(std::vector<Int> num, std::vector<Int> den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.empty() || den_[0] == 0)
    throw std::invalid_argument("denominator needs a unit constant term");
  if (den_[0] < 0) {
    for (auto& c : num_) c = -c;
    for (auto& c : den_) c = -c;
  }
}

GenFunction GenFunction::with_denominator(
    std::vector<Int> num, const std::vector<std::pair<int, int>>& factors) {
  std::vector<Int> den = {1};
  for (auto [e, m] : factors)
    for (int t = 0; t < m; ++t) den = poly_mul(den, one_minus_tpow(e));
  return GenFunction(std::move(num), std::move(den));
}

std::vector<Int> GenFunction::coeffs(int upto) const {
  std::vector<Int> c(size_t(upto) + 1, 0);
  if (den_[0] != 1 && den_[0] != -1)
    throw std::logic_error("unnormalized denominator");
  for (int n = 0; n <= upto; ++n) {
    Int v = (size_t(n) < num_.size()) ? num_[size_t(n)] : Int(0);
    for (size_t k = 1; k < den_.size() && k <= size_t(n); ++k)
      v -= den_[k] * c[size_t(n) - k];
    c[size_t(n)] = v / den_[0];
  }
  return c;
}

GenFunction GenFunction::operator+(const GenFunction& o) const {
  return GenFunction(poly_add(poly_mul(num_, o.den_), poly_mul(o.num_, den_)),
                     poly_mul(den_, o.den_));
}

GenFunction GenFunction::operator-(const GenFunction& o) const {
  return *this + o.scaled(Int(-1));
}

GenFunction GenFunction::scaled(const Int& c) const {
  std::vector<Int> n = num_;
  for (auto& v : n) v *= c;
  return GenFunction(n, den_);
}

namespace {

std::vector<Int> monomial(int e, long c = 1) {
  std::vector<Int> p(size_t(e) + 1, 0);
  p[size_t(e)] = c;
  return p;
}

using Registry = std::map<std::string, GenFunction>;

Registry build_registry() {
  Registry r;
  using F = GenFunction;
  // Multiplicity series of the irreducibles in the scalar forms on Gamma[2].
  auto D1 = std::vector<std::pair<int, int>>{{4, 1}, {6, 1}, {10, 1}, {12, 1}};
  auto D2 = std::vector<std::pair<int, int>>{{4, 2}, {6, 2}};
  auto D5 = std::vector<std::pair<int, int>>{{2, 1}, {4, 1}, {6, 1}, {12, 1}};
  r.emplace("m0_mult_s6", F::with_denominator(poly_add(monomial(0), monomial(35)), D1));
  r.emplace("m0_mult_s111111",
            F::with_denominator(poly_add(monomial(5), monomial(30)), D1));
  r.emplace("m0_mult_s51",
            F::with_denominator(poly_add(monomial(11), monomial(12)), D2));
  r.emplace("m0_mult_s21111",
            F::with_denominator(poly_add(monomial(6), monomial(17)), D2));
  r.emplace("m0_mult_s42",
            F::with_denominator(poly_add(monomial(4), monomial(19)),
                                {{2, 1}, {4, 2}, {10, 1}}));
  r.emplace("m0_mult_s2211",
            F::with_denominator(monomial(9), {{2, 1}, {4, 2}, {5, 1}}));
  r.emplace("m0_mult_s411",
            F::with_denominator(poly_add(monomial(11), monomial(15)),
                                {{1, 1}, {4, 1}, {6, 1}, {12, 1}}));
  r.emplace("m0_mult_s3111",
            F::with_denominator(
                poly_add(poly_add(monomial(6), monomial(10)),
                         poly_add(monomial(17), monomial(21))),
                D5));
  r.emplace("m0_mult_s33",
            F::with_denominator(poly_add(monomial(7), monomial(20)), D5));
  r.emplace("m0_mult_s222",
            F::with_denominator(poly_add(monomial(2), monomial(25)), D5));
  r.emplace("m0_mult_s321",
            F::with_denominator(poly_mul(monomial(8), one_minus_tpow(8)),
                                {{2, 2}, {5, 1}, {6, 2}}));
  // Gamma_1[2] scalar multiplicities.
  auto DG1 = std::vector<std::pair<int, int>>{{2, 1}, {4, 2}, {6, 1}};
  r.emplace("gamma1_m0_mult_s3",
            F::with_denominator(poly_add(monomial(0), monomial(19)), DG1));
  r.emplace("gamma1_m0_mult_s21",
            F::with_denominator(
                poly_add(poly_add(monomial(4), monomial(8)),
                         poly_add(monomial(11), monomial(15))),
                DG1));
  r.emplace("gamma1_m0_mult_s111",
            F::with_denominator(poly_add(monomial(7), monomial(12)), DG1));
  // Module dimension series.
  auto T5 = std::vector<std::pair<int, int>>{{2, 5}};
  auto Q5 = std::vector<std::pair<int, int>>{{4, 5}};
  r.emplace("sigma2", F::with_denominator(
                          poly_add(poly_add(monomial(5, 9), monomial(7, -5)),
                                   poly_add(monomial(9, -5), monomial(11, 1))),
                          T5));
  r.emplace("m2", F::with_denominator(
                      poly_add(poly_add(monomial(4, 15), monomial(6, -19)),
                               poly_add(monomial(8, 5), monomial(10, -1))),
                      T5));
  r.emplace("m4", F::with_denominator(
                      poly_add(poly_add(monomial(2, 5), monomial(4, 10)),
                               poly_add(poly_add(monomial(6, -10), monomial(8, -10)),
                                        monomial(10, 5))),
                      T5));
  r.emplace("s4_even",
            F::with_denominator(
                poly_add(poly_add(monomial(4, 5), monomial(6, 45)),
                         poly_add(poly_add(monomial(8, -95), monomial(10, 55)),
                                  monomial(12, -10))),
                T5));
  r.emplace("sigma1_gamma1",
            F::with_denominator(poly_add(poly_add(monomial(9, 9), monomial(13, -5)),
                                         poly_add(monomial(17, -5), monomial(21, 1))),
                                Q5));
  r.emplace("sigma3_gamma1",
            F::with_denominator(poly_add(poly_add(monomial(7, 4), monomial(11, 4)),
                                         monomial(15, -8)),
                                Q5));
  r.emplace("ring_gamma2_even", F::with_denominator(one_minus_tpow(8), T5));
  r.emplace("ring_gamma0_even",
            F::with_denominator(one_minus_tpow(8), {{2, 1}, {4, 2}, {6, 1}}));
  r.emplace("ring_gamma1_even",
            F::with_denominator(poly_mul(one_minus_tpow(8), one_minus_tpow(12)),
                                {{2, 1}, {4, 4}, {6, 1}}));
  r.emplace("ring_gamma1_4k", F::with_denominator(one_minus_tpow(16), Q5));
  return r;
}

const Registry& genfun_registry() {
  static const Registry r = build_registry();
  return r;
}

Rat eval_poly(const std::vector<Rat>& coeffs, long j) {
  Rat acc(0), jp(1);
  for (const Rat& c : coeffs) {
    acc += c * jp;
    jp *= j;
  }
  return acc;
}

std::vector<Int> rational_numerator(const std::vector<Rat>& values, int shift) {
  std::vector<Int> out(size_t(shift) + values.size(), 0);
  for (size_t i = 0; i < values.size(); ++i) {
    Rat v = values[i];
    mpq_canonicalize(v.get_mpq_t());
    if (v.get_den() != 1)
      throw std::logic_error("generating function coefficient is not integral");
    out[size_t(shift) + i] = v.get_num();
  }
  return out;
}

}  // namespace

GenFunction registered_genfun(const std::string& name) {
  const auto& r = genfun_registry();
  auto it = r.find(name);
  if (it == r.end()) throw std::invalid_argument("unknown generating function: " + name);
  return it->second;
}

std::vector<std::string> genfun_names() {
  std::vector<std::string> out;
  for (const auto& [n, g] : genfun_registry()) {
    (void)g;
    out.push_back(n);
  }
  return out;
}

std::vector<Int> genfun_coeffs(const std::string& name, int upto) {
  return registered_genfun(name).coeffs(upto);
}

std::vector<Rat> gamma2_numerator_coeffs(int j) {
  if (j < 2 || j % 2 != 0) throw std::domain_error("formula not applicable");
  auto P = [&](std::initializer_list<long> c, long den) {
    std::vector<Rat> coeffs;
    for (long v : c) coeffs.push_back(Rat(v, den));
    Rat r = eval_poly(coeffs, j);
    mpq_canonicalize(r.get_mpq_t());
    return r;
  };
  // a_3 .. a_12 as polynomials in j (constant first).
  std::vector<Rat> a;
  a.push_back(P({-24, 26, -9, 1}, 24));            // (j-2)(j-3)(j-4)/24
  a.push_back(P({0, 166, 3, 2}, 24));              // j(2j^2+3j+166)/24
  a.push_back(P({72, -44, 33, -1}, 12));
  a.push_back(P({80, -84, 5, -1}, 4));             // -(j-1)(j^2-4j+80)/4
  a.push_back(P({-20, 25, -10, 0}, 2));
  a.push_back(P({-184, 126, -14, 1}, 4));          // j^3/4 - 7j^2/2 + 63j/2 - 46
  a.push_back(P({120, -172, 39, 1}, 12));
  a.push_back(P({432, -284, 33, -1}, 12));         // -j^3/12 + 11j^2/4 - 71j/3 + 36
  a.push_back(P({-120, 106, -15, -1}, 24));
  a.push_back(P({-80, 50, -5, 0}, 8));             // -5j^2/8 + 25j/4 - 10
  return a;
}

GenFunction genfun_m_gamma2(int j) {
  auto a = gamma2_numerator_coeffs(j);
  return GenFunction::with_denominator(rational_numerator(a, 3), {{2, 5}});
}

namespace {

std::vector<Rat> poly_vector(const long (*rows)[4], long den, long j) {
  std::vector<Rat> out;
  for (int i = 0; i < 12; ++i) {
    std::vector<Rat> c = {Rat(rows[i][0], den), Rat(rows[i][1], den),
                          Rat(rows[i][2], den), Rat(rows[i][3], den)};
    Rat v = eval_poly(c, j);
    mpq_canonicalize(v.get_mpq_t());
    out.push_back(v);
  }
  return out;
}

}  // namespace

GenFunction genfun_s_odd_gamma1(int j) {
  if (j < 2 || j % 2 != 0) throw std::domain_error("formula not applicable");
  // constant, j, j^2, j^3 per numerator coefficient a_3, a_5, ..., a_25
  static const long r0[12][4] = {
      {-192, 104, -18, 1},   {192, -104, 30, 2},    {960, -184, 126, -2},
      {-576, 688, -24, -7},  {-1344, 704, -252, -2}, {384, -704, -132, 8},
      {1344, -1472, 180, 8}, {384, -400, 240, -2},  {-1536, 1048, -18, -7},
      {-576, 680, -138, -2}, {768, -200, -18, 2},   {192, -160, 24, 1}};
  static const long r2[12][4] = {
      {-120, 92, -18, 1},    {72, -104, 30, 2},     {552, -136, 126, -2},
      {-288, 700, -24, -7},  {-432, 632, -252, -2}, {432, -752, -132, 8},
      {336, -1424, 180, 8},  {-288, -328, 240, -2}, {-984, 1036, -18, -7},
      {72, 632, -138, -2},   {648, -200, -18, 2},   {0, -148, 24, 1}};
  auto vals = (j % 4 == 0) ? poly_vector(r0, 192, j) : poly_vector(r2, 192, j);
  // entries sit at t^3, t^5, ..., t^25
  std::vector<Int> num(26, 0);
  for (int i = 0; i < 12; ++i) {
    Rat v = vals[size_t(i)];
    if (v.get_den() != 1)
      throw std::logic_error("generating function coefficient is not integral");
    num[size_t(3 + 2 * i)] = v.get_num();
  }
  return GenFunction::with_denominator(std::move(num), {{2, 1}, {4, 4}, {6, 1}});
}

GenFunction genfun_m_even_gamma1(int j) {
  if (j < 2 || j % 2 != 0) throw std::domain_error("formula not applicable");
  static const long r0[12][4] = {
      {0, 140, -3, 1},       {96, 68, 21, 1},       {864, -372, 45, -3},
      {0, -56, -36, -4},     {-2016, 592, -114, 2}, {-960, 192, -30, 6},
      {1440, -656, 102, 2},  {1920, -632, 96, -4},  {-288, 324, -27, -3},
      {-1440, 572, -63, 1},  {0, -28, -3, 1},       {384, -144, 12, 0}};
  static const long r2[12][4] = {
      {-228, 116, -3, 1},    {540, 68, 21, 1},      {1068, -276, 45, -3},
      {-816, -32, -36, -4},  {-1992, 448, -114, 2}, {-408, 96, -30, 6},
      {1848, -560, 102, 2},  {1296, -488, 96, -4},  {-852, 300, -27, -3},
      {-804, 476, -63, 1},   {156, -28, -3, 1},     {192, -120, 12, 0}};
  auto vals = (j % 4 == 0) ? poly_vector(r0, 96, j) : poly_vector(r2, 96, j);
  std::vector<Int> num(27, 0);
  for (int i = 0; i < 12; ++i) {
    Rat v = vals[size_t(i)];
    if (v.get_den() != 1)
      throw std::logic_error("generating function coefficient is not integral");
    num[size_t(4 + 2 * i)] = v.get_num();
  }
  return GenFunction::with_denominator(std::move(num), {{2, 1}, {4, 4}, {6, 1}});
}

}  // namespace theta2
