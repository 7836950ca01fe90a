#include "doctest.h"
#include "theta2/linalg.hpp"
#include "theta2/registry.hpp"

using namespace theta2;

TEST_CASE("rank of a single nonzero form is one") {
  std::vector<FormExpansion> forms = {eval(named_form("x1"), 3)};
  auto m = coefficient_matrix(forms);
  auto rk = rank_kernel(m);
  CHECK(rk.rank == 1);
  CHECK(rk.kernel.empty());
}

TEST_CASE("the ten x forms have rank five with the classical kernel relation") {
  std::vector<FormExpansion> forms;
  for (int i = 1; i <= 10; ++i)
    forms.push_back(eval(named_form("x" + std::to_string(i)), 3));
  auto m = coefficient_matrix(forms);
  auto rk = rank_kernel(m);
  CHECK(rk.rank == 5);
  CHECK(rk.kernel.size() == 5);
  // x6 - (x1 - x2 + x3 - x4 - x5) = 0 must be in the kernel: contract.
  std::vector<Cyc8> v(10);
  v[0] = Cyc8(1); v[1] = Cyc8(-1); v[2] = Cyc8(1); v[3] = Cyc8(-1);
  v[4] = Cyc8(-1); v[5] = Cyc8(-1);
  for (size_t r = 0; r < m.nrows(); ++r) {
    Cyc8 acc;
    for (size_t c = 0; c < 10; ++c) acc += v[c] * m.cols[c][r];
    CHECK(acc.is_zero());
  }
  CHECK(modp_rank(forms, 10) == 5);
}

TEST_CASE("kernel of the ten Phi forms is spanned by the all-ones vector") {
  std::vector<FormExpansion> forms;
  for (int i = 1; i <= 10; ++i)
    forms.push_back(eval(named_form("Phi" + std::to_string(i)), 4));
  auto rk = rank_kernel(coefficient_matrix(forms));
  CHECK(rk.rank == 9);
  REQUIRE(rk.kernel.size() == 1);
  // normalize: all coordinates equal
  const auto& v = rk.kernel[0];
  for (size_t c = 1; c < 10; ++c) CHECK(v[c] == v[0]);
  CHECK(!v[0].is_zero());
}

TEST_CASE("exact solver reproduces linear relations") {
  std::vector<FormExpansion> basis;
  for (int i = 1; i <= 5; ++i)
    basis.push_back(eval(named_form("x" + std::to_string(i)), 3));
  ExactSolver solver(basis);
  CHECK(solver.basis_independent());
  auto sol = solver.solve(eval(named_form("x7"), 3));
  REQUIRE(sol.has_value());
  // x7 = x2 - x3 + x5
  CHECK((*sol)[0] == Cyc8(0));
  CHECK((*sol)[1] == Cyc8(1));
  CHECK((*sol)[2] == Cyc8(-1));
  CHECK((*sol)[3] == Cyc8(0));
  CHECK((*sol)[4] == Cyc8(1));
  // theta1^2 theta2^2 has the same weight data but lies outside the span
  FormExpr probe = theta_monomial({{1, 2}, {2, 2}});
  auto none = solver.solve(eval(probe, 3));
  CHECK(!none.has_value());
}

TEST_CASE("mod-p product rank certifies M_{0,4}") {
  // dim M_{0,4}(Gamma[2]) = 15, generated by the x_i x_j.
  std::vector<FormExpansion> xs, one;
  for (int i = 1; i <= 5; ++i)
    xs.push_back(eval(named_form("x" + std::to_string(i)), 4));
  std::vector<FormExpansion> gens;
  for (int i = 1; i <= 10; ++i)
    gens.push_back(eval(named_form("x" + std::to_string(i)), 4));
  long rank = modp_product_rank(xs, gens, 15);
  CHECK(rank == 15);
}

TEST_CASE("mixed weights are rejected") {
  std::vector<FormExpansion> forms = {eval(named_form("x1"), 3),
                                      eval(named_form("s2"), 3)};
  CHECK_THROWS_AS(coefficient_matrix(forms), std::invalid_argument);
}

TEST_CASE("rank monotonicity in the truncation order") {
  int prev = 0;
  for (int N : {2, 3, 4}) {
    std::vector<FormExpansion> forms;
    for (int i = 1; i <= 10; ++i)
      forms.push_back(eval(named_form("Phi" + std::to_string(i)), N));
    auto rk = rank_kernel(coefficient_matrix(forms));
    CHECK(rk.rank >= prev);
    CHECK(rk.rank <= 9);
    prev = rk.rank;
  }
  CHECK(prev == 9);
}
