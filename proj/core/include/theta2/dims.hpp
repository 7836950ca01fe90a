#pragma once

#include <map>

#include "theta2/expr.hpp"
#include "theta2/rep.hpp"

namespace theta2 {

/// Closed dimension formulas for forms and cusp forms of weight (j,k) on
/// Gamma[2]. Guards follow the theorem hypotheses exactly: out-of-range
/// queries throw std::domain_error("formula not applicable").
long dim_m_gamma2(int j, int k);
long dim_s_gamma2(int j, int k);

/// Eisenstein dimensions (k is the full determinant weight, even). The
/// tabulated closed form for j >= 2 is corrected by the shift that makes it
/// agree with both the representation-level formula and the M-S defect; see
/// the verification suite.
long dim_eisenstein(int j, int k, Group g);

/// Gamma_1[2] dimensions through the registered generating functions.
long dim_m_gamma1(int j, int k);
long dim_s_gamma1(int j, int k);

/// S3 representation of Sym^r(s[2,1]), the building block of the Eisenstein
/// representation formulas.
IrrepMultiplicity sym_s21_decomp(int r);

/// Induction from the boundary-component stabilizer to S6 applied to an S3
/// multiplicity vector (the three displayed induction identities as data).
IrrepMultiplicity induct_boundary_to_s6(const IrrepMultiplicity& s3rep);

/// Representation of S6 on the Eisenstein subspace of M_{j,k}(Gamma[2]).
IrrepMultiplicity eisenstein_rep_gamma2(int j, int k);

// -- embedded representation tables (results used as test fixtures) --

/// Multiplicities of M_{0,k}(Gamma[2]) for even k = 2..12, in partition order.
const std::map<int, std::vector<long>>& table_m0_gamma2();
/// S3 multiplicities of M_{0,k}(Gamma_1[2]) for even k = 2..12.
const std::map<int, std::vector<long>>& table_m0_gamma1();
/// Conditional tables for vector-valued spaces (rest on eigenvalue data):
const std::map<int, std::vector<long>>& table_s2_gamma2();
const std::map<int, std::vector<long>>& table_m2_gamma2();
const std::map<int, std::vector<long>>& table_m4_gamma2();
const std::map<int, std::vector<long>>& table_s4_gamma2_even();
const std::map<int, std::vector<long>>& table_s4_gamma2_odd();

}  // namespace theta2
