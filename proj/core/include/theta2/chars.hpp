#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <vector>

#include "theta2/cyc8.hpp"

namespace theta2 {

/// A theta characteristic: four bits (mu1, mu2, nu1, nu2).
struct Characteristic {
  std::array<int, 4> eps{};  // values in {0,1}

  bool operator==(const Characteristic& o) const { return eps == o.eps; }
  bool operator<(const Characteristic& o) const { return eps < o.eps; }

  bool is_even() const { return (eps[0] * eps[2] + eps[1] * eps[3]) % 2 == 0; }
  bool is_odd() const { return !is_even(); }

  Characteristic operator+(const Characteristic& o) const {
    Characteristic r;
    for (int i = 0; i < 4; ++i) r.eps[i] = (eps[i] + o.eps[i]) % 2;
    return r;
  }
};

/// The six odd characteristics in lexicographic order (1-based index).
const Characteristic& odd_char(int i);
/// The ten even characteristics in lexicographic order (1-based index).
const Characteristic& even_char(int i);
/// 1-based index of an even characteristic; 0 if odd.
int even_index(const Characteristic& c);
/// 1-based index of an odd characteristic; 0 if even.
int odd_index(const Characteristic& c);

/// The two complementary triples of odd indices summing to even_char(i).
struct TripleCorrespondence {
  int even_index;
  std::array<int, 3> first;
  std::array<int, 3> second;
};
const TripleCorrespondence& triples_for_even(int i);

/// The four even indices n = m_i + m_j + (one other odd), for i != j.
std::set<int> odd_pair_to_quadruple(int i, int j);

/// The four even indices n = a + b + c with one odd from each pair of the
/// partition {p1} ∪ {p2} ∪ {p3} of {1..6}.
std::set<int> partition_to_quadruple(const std::array<std::array<int, 2>, 3>& p);

/// 4x4 integer symplectic matrix acting on characteristics.
struct Sp4Matrix {
  std::array<std::array<long, 4>, 4> m{};

  static Sp4Matrix identity();
  static const Sp4Matrix& generator_x();  // maps to transposition (12)
  static const Sp4Matrix& generator_y();  // maps to the 6-cycle (123456)
  /// The scaled Gamma_0[2] generators with A = [[1,1],[0,1]] resp [[0,1],[1,1]].
  static const Sp4Matrix& generator_xprime();
  static const Sp4Matrix& generator_yprime();

  bool is_symplectic() const;
  Sp4Matrix operator*(const Sp4Matrix& o) const;
};

/// The affine action of M on a characteristic, reduced mod 2.
Characteristic sp4_char_action(const Sp4Matrix& M, const Characteristic& c);

/// Permutation of {1..6} induced on the odd characteristics; throws if the
/// action does not permute them (non-symplectic input).
std::array<int, 6> s6_image_of_matrix(const Sp4Matrix& M);

/// Level-2 descent test for a theta monomial Sym^j(G...)·theta...: columns
/// are the characteristics with multiplicity (gradient columns first).
/// True iff (i) each coordinate sums to 0 mod 4 and (ii) each pair of
/// coordinate rows has inner product 0 mod 2.
bool level2_descent_check(const std::vector<Characteristic>& columns);

/// The three unordered pairs of even indices complementary to
/// odd_pair_to_quadruple(i,j), grouped so that each pair's theta-square
/// product appears in the quadratic relation attached to (i,j).
std::array<std::array<int, 2>, 3> quadratic_relation_pairs(int i, int j);

}  // namespace theta2
