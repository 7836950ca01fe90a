#pragma once

#include "theta2/expr.hpp"
#include "theta2/rep_core.hpp"

namespace theta2 {

/// Isotypic decomposition of a finite-dimensional space of forms, indexed by
/// the partitions of the character table.
struct IrrepMultiplicity {
  const CharacterTable* table = nullptr;
  std::vector<long> counts;

  long total_dim() const;
  long count_of(const std::vector<int>& partition) const;
  std::string str() const;
  bool operator==(const IrrepMultiplicity& o) const { return counts == o.counts; }
};

/// Builds a multiplicity vector from (partition, count) pairs.
IrrepMultiplicity make_mult(const CharacterTable& table,
                            const std::vector<std::pair<std::vector<int>, long>>& v);

/// Decomposes the span of a linearly independent basis under the S6 action:
/// for each conjugacy class a representative word acts on the basis, the
/// action matrix is solved exactly, and traces pair with the characters.
/// Throws if the basis is dependent at this order or the span is not stable.
IrrepMultiplicity rep_multiplicities(const std::vector<FormExpr>& basis, int N);

/// The virtual-representation branching from S6 to S3 = Gamma_0[2]/Gamma_1[2].
IrrepMultiplicity branch_s6_to_s3(const IrrepMultiplicity& m);

/// Exact action matrix of a word on a span (columns give the images of the
/// basis elements in basis coordinates).
std::vector<std::vector<Cyc8>> action_matrix(const std::vector<FormExpr>& basis,
                                             const Word& w, int N);

}  // namespace theta2
