#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "theta2/cyc8.hpp"

namespace theta2 {

enum class Gen : uint8_t { X = 0, Y = 1 };
using Word = std::vector<Gen>;

std::string word_str(const Word& w);

/// Composite slash action of a {X,Y}-word on the theta and gradient atoms.
/// Each atom maps to zeta^{phase} times another atom; the tables are the
/// monomial matrices of the two generators, composed along the word.
struct WordAction {
  // theta_{i} |-> zeta^{theta_phase[i-1]} * theta_{theta_perm[i-1]}
  std::array<int, 10> theta_perm{};
  std::array<int, 10> theta_phase{};
  // grad_{i} |-> zeta^{grad_phase[i-1]} * grad_{grad_perm[i-1]}
  std::array<int, 6> grad_perm{};
  std::array<int, 6> grad_phase{};

  static WordAction identity();
  static const WordAction& generator(Gen g);
  static WordAction from_word(const Word& w);

  /// this followed by o (slash composition F|this|o).
  WordAction then(const WordAction& o) const;

  /// Permutation of {1..6} realized on the gradient atoms.
  std::array<int, 6> odd_perm() const { return grad_perm; }

  bool operator==(const WordAction& o) const;
  uint64_t key() const;
};

/// The classical 10x10 (theta) or 6x6 (gradient) slash matrix of a generator,
/// as rows of (column index, zeta exponent) for the single nonzero entry.
struct SlashMatrix {
  int dim = 0;
  std::array<int, 10> col{};
  std::array<int, 10> zexp{};
  Cyc8 entry(int r, int c) const;
};
SlashMatrix slash_matrix_theta(Gen g);
SlashMatrix slash_matrix_grad(Gen g);

}  // namespace theta2
