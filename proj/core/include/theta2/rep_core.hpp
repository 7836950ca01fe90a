#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "theta2/cyc8.hpp"
#include "theta2/word_action.hpp"

namespace theta2 {

using Perm6 = std::array<int, 6>;  // images of 1..6, 1-based

Perm6 perm_identity();
Perm6 perm_compose(const Perm6& first, const Perm6& then);
Perm6 perm_inverse(const Perm6& p);
/// Canonical representative of a cycle type: cycles filled left to right.
Perm6 perm_from_cycle_type(const std::vector<int>& type);
std::vector<int> cycle_type(const Perm6& p);

/// Exact character table of a symmetric group (n = 3 or 6 here), with
/// irreducibles and classes both indexed by partitions of n in reverse
/// lexicographic order. Values come from the Murnaghan-Nakayama recursion.
class CharacterTable {
public:
  explicit CharacterTable(int n);

  int n() const { return n_; }
  int num_classes() const { return int(partitions_.size()); }
  const std::vector<std::vector<int>>& partitions() const { return partitions_; }
  int index_of(const std::vector<int>& partition) const;
  std::string label(int i) const;  // e.g. "s[3,2,1]"
  long class_size(int c) const { return class_sizes_[size_t(c)]; }
  long value(int irrep, int cls) const { return chi_[size_t(irrep)][size_t(cls)]; }
  long dimension(int irrep) const;
  long group_order() const { return order_; }

  int class_of_type(const std::vector<int>& type) const { return index_of(type); }
  long character_of_perm(int irrep, const Perm6& p) const;

  /// Sum over classes of size*chi_i*chi_j, for orthogonality tests.
  long inner_product(int i, int j) const;

private:
  int n_;
  long order_;
  std::vector<std::vector<int>> partitions_;
  std::vector<long> class_sizes_;
  std::vector<std::vector<long>> chi_;
};

const CharacterTable& character_table_s6();
const CharacterTable& character_table_s3();

/// BFS-shortest word over {X, Y} whose slash action realizes each of the 720
/// permutations of the gradient atoms; deterministic (X explored first).
const std::vector<std::pair<Perm6, Word>>& all_s6_words();

/// Word for one permutation.
const Word& class_word(const Perm6& p);

/// Cached word actions for the canonical class representatives of S6.
const std::vector<std::pair<Perm6, Word>>& class_representative_words();

}  // namespace theta2
