#include "theta2/chars.hpp"

#include <stdexcept>

namespace theta2 {

namespace {

const std::array<Characteristic, 6> kOdd = {{
    {{0, 1, 0, 1}},
    {{0, 1, 1, 1}},
    {{1, 0, 1, 0}},
    {{1, 0, 1, 1}},
    {{1, 1, 0, 1}},
    {{1, 1, 1, 0}},
}};

const std::array<Characteristic, 10> kEven = {{
    {{0, 0, 0, 0}},
    {{0, 0, 0, 1}},
    {{0, 0, 1, 0}},
    {{0, 0, 1, 1}},
    {{0, 1, 0, 0}},
    {{0, 1, 1, 0}},
    {{1, 0, 0, 0}},
    {{1, 0, 0, 1}},
    {{1, 1, 0, 0}},
    {{1, 1, 1, 1}},
}};

const std::array<TripleCorrespondence, 10> kTriples = {{
    {1, {1, 4, 6}, {2, 3, 5}},
    {2, {1, 3, 6}, {2, 4, 5}},
    {3, {1, 3, 5}, {2, 4, 6}},
    {4, {1, 4, 5}, {2, 3, 6}},
    {5, {1, 3, 4}, {2, 5, 6}},
    {6, {1, 5, 6}, {2, 3, 4}},
    {7, {1, 2, 3}, {4, 5, 6}},
    {8, {1, 2, 4}, {3, 5, 6}},
    {9, {1, 2, 6}, {3, 4, 5}},
    {10, {1, 2, 5}, {3, 4, 6}},
}};

}  // namespace

const Characteristic& odd_char(int i) {
  if (i < 1 || i > 6) throw std::out_of_range("odd characteristic index");
  return kOdd[i - 1];
}

const Characteristic& even_char(int i) {
  if (i < 1 || i > 10) throw std::out_of_range("even characteristic index");
  return kEven[i - 1];
}

int even_index(const Characteristic& c) {
  for (int i = 1; i <= 10; ++i)
    if (kEven[i - 1] == c) return i;
  return 0;
}

int odd_index(const Characteristic& c) {
  for (int i = 1; i <= 6; ++i)
    if (kOdd[i - 1] == c) return i;
  return 0;
}

const TripleCorrespondence& triples_for_even(int i) {
  if (i < 1 || i > 10) throw std::out_of_range("even characteristic index");
  return kTriples[i - 1];
}

std::set<int> odd_pair_to_quadruple(int i, int j) {
  if (i == j) throw std::invalid_argument("odd pair needs two distinct indices");
  std::set<int> out;
  for (int k = 1; k <= 6; ++k) {
    if (k == i || k == j) continue;
    Characteristic s = odd_char(i) + odd_char(j) + odd_char(k);
    int e = even_index(s);
    if (e == 0) throw std::logic_error("odd triple sum is not even");
    out.insert(e);
  }
  if (out.size() != 4) throw std::logic_error("odd pair quadruple has wrong size");
  return out;
}

std::set<int> partition_to_quadruple(const std::array<std::array<int, 2>, 3>& p) {
  std::set<int> seen;
  for (const auto& pair : p)
    for (int v : pair) {
      if (v < 1 || v > 6 || !seen.insert(v).second)
        throw std::invalid_argument("malformed partition of {1..6}");
    }
  std::set<int> out;
  for (int a : p[0])
    for (int b : p[1])
      for (int c : p[2]) {
        Characteristic s = odd_char(a) + odd_char(b) + odd_char(c);
        int e = even_index(s);
        if (e != 0) out.insert(e);
      }
  if (out.size() != 4) throw std::logic_error("partition quadruple has wrong size");
  return out;
}

Sp4Matrix Sp4Matrix::identity() {
  Sp4Matrix r;
  for (int i = 0; i < 4; ++i) r.m[i][i] = 1;
  return r;
}

const Sp4Matrix& Sp4Matrix::generator_x() {
  static const Sp4Matrix X = {{{{{1, 0, 1, 0}}, {{0, 1, 0, 0}}, {{0, 0, 1, 0}}, {{0, 0, 0, 1}}}}};
  return X;
}

const Sp4Matrix& Sp4Matrix::generator_y() {
  static const Sp4Matrix Y = {{{{{0, 1, 0, 1}}, {{1, 0, 1, 0}}, {{1, 0, 1, 1}}, {{-1, 1, 0, 1}}}}};
  return Y;
}

const Sp4Matrix& Sp4Matrix::generator_xprime() {
  // [[A,0],[0,A^-t]] with A = [[1,1],[0,1]].
  static const Sp4Matrix M = {{{{{1, 1, 0, 0}}, {{0, 1, 0, 0}}, {{0, 0, 1, 0}}, {{0, 0, -1, 1}}}}};
  return M;
}

const Sp4Matrix& Sp4Matrix::generator_yprime() {
  // [[B,0],[0,B^-t]] with B = [[0,1],[1,1]].
  static const Sp4Matrix M = {{{{{0, 1, 0, 0}}, {{1, 1, 0, 0}}, {{0, 0, -1, 1}}, {{0, 0, 1, 0}}}}};
  return M;
}

bool Sp4Matrix::is_symplectic() const {
  // M^t J M = J with J = [[0, I], [-I, 0]].
  long J[4][4] = {{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}};
  long t[4][4] = {};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) t[i][j] += m[k][i] * J[k][j];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      long v = 0;
      for (int k = 0; k < 4; ++k) v += t[i][k] * m[k][j];
      if (v != J[i][j]) return false;
    }
  return true;
}

Sp4Matrix Sp4Matrix::operator*(const Sp4Matrix& o) const {
  Sp4Matrix r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      long v = 0;
      for (int k = 0; k < 4; ++k) v += m[i][k] * o.m[k][j];
      r.m[i][j] = v;
    }
  return r;
}

Characteristic sp4_char_action(const Sp4Matrix& M, const Characteristic& c) {
  if (!M.is_symplectic()) throw std::invalid_argument("matrix is not symplectic");
  const auto& m = M.m;
  // Blocks of M = [[A,B],[C,D]].
  long A[2][2] = {{m[0][0], m[0][1]}, {m[1][0], m[1][1]}};
  long B[2][2] = {{m[0][2], m[0][3]}, {m[1][2], m[1][3]}};
  long C[2][2] = {{m[2][0], m[2][1]}, {m[3][0], m[3][1]}};
  long D[2][2] = {{m[2][2], m[2][3]}, {m[3][2], m[3][3]}};

  long v[4] = {};
  // [[D, -C], [-B, A]] acting on (mu1, mu2, nu1, nu2).
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      v[i] += D[i][j] * c.eps[j] - C[i][j] * c.eps[2 + j];
      v[2 + i] += -B[i][j] * c.eps[j] + A[i][j] * c.eps[2 + j];
    }
  // Diagonal vectors of C*D^t and A*B^t.
  for (int i = 0; i < 2; ++i) {
    long cd = 0, ab = 0;
    for (int k = 0; k < 2; ++k) {
      cd += C[i][k] * D[i][k];
      ab += A[i][k] * B[i][k];
    }
    v[i] += cd;
    v[2 + i] += ab;
  }
  Characteristic out;
  for (int i = 0; i < 4; ++i) out.eps[i] = ((v[i] % 2) + 2) % 2;
  return out;
}

std::array<int, 6> s6_image_of_matrix(const Sp4Matrix& M) {
  std::array<int, 6> perm{};
  for (int i = 1; i <= 6; ++i) {
    int j = odd_index(sp4_char_action(M, odd_char(i)));
    if (j == 0) throw std::logic_error("action does not preserve odd characteristics");
    perm[i - 1] = j;
  }
  return perm;
}

bool level2_descent_check(const std::vector<Characteristic>& columns) {
  for (int a = 0; a < 4; ++a) {
    long s = 0;
    for (const auto& c : columns) s += c.eps[a];
    if (s % 4 != 0) return false;
  }
  // Cross products of distinct coordinate rows, excluding the two symplectic
  // pairing rows (mu_t, nu_t): those sums are odd for Sym^6(G_1,...,G_6) and
  // for Sym^6(G_1^3,G_2^3) theta_7..theta_10, both of which are forms on
  // Gamma[2], so they are not obstructions.
  static const int pairs[4][2] = {{0, 1}, {0, 3}, {1, 2}, {2, 3}};
  for (const auto& p : pairs) {
    long s = 0;
    for (const auto& c : columns) s += c.eps[p[0]] * c.eps[p[1]];
    if (s % 2 != 0) return false;
  }
  return true;
}

std::array<std::array<int, 2>, 3> quadratic_relation_pairs(int i, int j) {
  std::set<int> quad = odd_pair_to_quadruple(i, j);
  std::vector<int> comp;
  for (int k = 1; k <= 10; ++k)
    if (!quad.count(k)) comp.push_back(k);
  Characteristic v = odd_char(i) + odd_char(j);
  std::array<std::array<int, 2>, 3> pairs{};
  int filled = 0;
  std::set<int> used;
  for (int a : comp) {
    if (used.count(a)) continue;
    for (int b : comp) {
      if (b <= a || used.count(b)) continue;
      if (even_char(a) + even_char(b) == v) {
        pairs[filled++] = {a, b};
        used.insert(a);
        used.insert(b);
        break;
      }
    }
  }
  if (filled != 3) throw std::logic_error("quadratic relation pairing failed");
  return pairs;
}

}  // namespace theta2
