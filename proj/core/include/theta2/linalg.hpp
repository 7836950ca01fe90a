#pragma once

#include <optional>

#include "theta2/expr.hpp"

namespace theta2 {

/// Exact coefficient matrix of a list of expansions of equal weight: one row
/// per (component, exponent) functional over the union of supports, one
/// column per form. Row order is (component, then exponent order).
struct CoeffMatrix {
  std::vector<std::pair<int, Expo>> rows;
  std::vector<std::vector<Cyc8>> cols;  // column-major
  int order = 0;

  size_t nrows() const { return rows.size(); }
  size_t ncols() const { return cols.size(); }
};

CoeffMatrix coefficient_matrix(const std::vector<FormExpansion>& forms);

/// Exact rank and kernel over Q(zeta8). The elimination is fraction-free
/// (Bareiss) over the zeta8-integers on a candidate pivot-row set selected
/// by a mod-p pre-pass; every reported kernel vector is re-verified by exact
/// contraction against all rows, and violated rows are fed back until the
/// kernel stabilizes. Kernel vectors come in reduced echelon form.
struct RankKernel {
  int rank = 0;
  std::vector<std::vector<Cyc8>> kernel;
};
RankKernel rank_kernel(const CoeffMatrix& m);

/// Solves  sum_i c_i basis_i = target  exactly; empty if target is outside
/// the span or the basis is dependent.
class ExactSolver {
 public:
  explicit ExactSolver(const std::vector<FormExpansion>& basis);
  bool basis_independent() const { return independent_; }
  std::optional<std::vector<Cyc8>> solve(const FormExpansion& target) const;

 private:
  std::vector<FormExpansion> basis_;
  bool independent_ = false;
};

/// One-sided rank certificate through the ring homomorphism
/// Z[zeta8] -> F_p with p = 1 mod 8 and zeta |-> w, w^4 = -1: a full-rank
/// submatrix mod p certifies rank >= r over Q(zeta8). Columns are the
/// componentwise products scalar * generator, assembled mod p. Stops as soon
/// as the target rank is reached.
long modp_product_rank(const std::vector<FormExpansion>& scalars,
                       const std::vector<FormExpansion>& generators,
                       long stop_at);

/// Same certificate for plain columns.
long modp_rank(const std::vector<FormExpansion>& forms, long stop_at);

/// Paired variant: column i is the product scalars[i] * generators[i].
long modp_paired_rank(const std::vector<FormExpansion>& scalars,
                      const std::vector<FormExpansion>& generators, long stop_at);

}  // namespace theta2
