#include <algorithm>
#include <map>

#include "doctest.h"
#include "theta2/linalg.hpp"
#include "theta2/registry.hpp"
#include "theta2/theta_qexp.hpp"

using namespace theta2;

namespace {

// One row of a Fourier table: component entries are Laurent polynomials in r,
// as lists of (power of r, integer coefficient).
struct Row {
  int a, c;
  long gamma;
  std::vector<std::vector<std::pair<int, long>>> P;
};

// Check gamma * P against the evaluated expansion at q1^a q2^c.
void check_row(const FormExpansion& f, const Row& row) {
  for (int comp = 0; comp < int(f.comps.size()); ++comp) {
    const auto& poly = row.P[size_t(comp)];
    std::map<int, long> expect;
    for (auto [rpow, coef] : poly)
      if (coef != 0) expect[rpow] = coef * row.gamma;
    for (const auto& [e, cf] : f.comps[size_t(comp)].terms()) {
      if (e.A != 4 * row.a || e.C != 4 * row.c) continue;
      auto it = expect.find(e.B / 2);
      long want = (it == expect.end()) ? 0 : it->second;
      CHECK(cf == Cyc8(want));
      if (it != expect.end()) expect.erase(it);
    }
    for (auto [rpow, coef] : expect) {
      (void)rpow;
      CHECK(coef == 0);  // a tabulated entry was missing from the expansion
    }
  }
}

std::vector<std::pair<int, long>> L(std::initializer_list<std::pair<int, long>> l) {
  return l;
}

}  // namespace

TEST_CASE("basic registry lookups") {
  CHECK(eval(named_form("x1"), 2).comp(0).constant_term() == Cyc8(1));
  CHECK(is_registered("chi5"));
  CHECK(is_registered_cusp_form("chi5"));
  CHECK(!is_registered_cusp_form("x1"));
  CHECK_THROWS_AS((void)named_form("nosuchform"), UnknownFormError);
  try {
    (void)named_form("Ph1");
  } catch (const UnknownFormError& e) {
    CHECK(!e.suggestions.empty());
  }
}

TEST_CASE("chi5 and chi10") {
  const int N = 4;
  auto c5 = eval(named_form("chi5"), N);
  CHECK(!c5.is_zero());
  CHECK(c5.comp(0).support_strictly_interior());  // cusp support
  auto c10 = eval(named_form("chi10"), N);
  QSeries sq = c5.comp(0) * c5.comp(0);
  CHECK(sq.equals(c10.comp(0).scaled(Cyc8(-16384))));
  CHECK(!c10.is_zero());
  CHECK(c10.comp(0).terms().front().second.is_rational());
}

TEST_CASE("eta and X-form identities from the registry") {
  const int N = 4;
  FormExpr s1 = named_form("s1"), s2 = named_form("s2"), xi = named_form("xi");
  FormExpr rhs = ex_scale(Cyc8(2), s1 * s1 - ex_scale(Cyc8(4), s2) - xi * xi);
  CHECK(eval(named_form("eta"), N).comp(0).equals(eval(rhs, N).comp(0)));
  FormExpr x5rhs = ex_scale(Cyc8(4), named_form("x7") * named_form("x8"));
  CHECK(eval(named_form("X5"), N).comp(0).equals(eval(x5rhs, N).comp(0)));
}

TEST_CASE("y-coordinates recombine to the x-forms") {
  const int N = 3;
  static const int tbl[10][3] = {{1, 2, 5}, {2, 4, 5}, {2, 5, 6}, {2, 3, 5},
                                 {1, 5, 6}, {1, 2, 6}, {1, 4, 5}, {1, 2, 4},
                                 {1, 3, 5}, {1, 2, 3}};
  for (int i = 1; i <= 10; ++i) {
    FormExpr y = ex_add({named_form("y" + std::to_string(tbl[i - 1][0])),
                         named_form("y" + std::to_string(tbl[i - 1][1])),
                         named_form("y" + std::to_string(tbl[i - 1][2]))});
    CHECK(eval(named_form("x" + std::to_string(i)), N)
              .comp(0)
              .equals(eval(y, N).comp(0)));
  }
}

TEST_CASE("sum of the Phi forms vanishes") {
  auto f = eval(named_form("Phi_sum"), 3);
  CHECK(f.is_zero());
}

TEST_CASE("index tables have the expected sizes") {
  CHECK(canonical_f_tuples().size() == 60);  // ten triples per gradient index
  CHECK(d_form_quadruples().size() == 15);
  CHECK(k_form_tuples().size() == 45);
  CHECK(bracket_sym_quadruples().size() == 30);
  auto has = [](std::array<int, 4> t) {
    const auto& all = canonical_f_tuples();
    return std::find(all.begin(), all.end(), t) != all.end();
  };
  CHECK(has({1, 1, 2, 5}));
  CHECK(has({3, 2, 3, 8}));
  CHECK(has({2, 3, 4, 6}));
  CHECK(has({6, 3, 4, 10}));
}

TEST_CASE("H12 is the classical bracket and matches G12") {
  const int N = 4;
  FormExpr h12 = named_form("H12");
  FormExpr reference = ex_bracket(theta_monomial({{1, 2}, {3, 2}}),
                                theta_monomial({{2, 2}, {4, 2}}));
  auto b = eval(h12, N);
  auto bp = eval(reference, N);
  for (int t = 0; t < 3; ++t) CHECK(b.comp(t).equals(bp.comp(t)));
  auto a = eval(named_form("G12"), N);
  CHECK(a.pi_power == 2);
  CHECK(b.pi_power == 0);
  for (int t = 0; t < 3; ++t) CHECK(a.comp(t).equals(b.comp(t)));
}

TEST_CASE("Phi1 Fourier table rows up to a+c = 5") {
  const int N = 5;
  auto f = eval(named_form("Phi1"), N);
  REQUIRE(f.j == 2);
  std::vector<Row> rows = {
      {1, 1, 64,
       {L({{1, -1}, {-1, 1}}), L({{1, -1}, {-1, -1}}), L({{1, -1}, {-1, 1}})}},
      {2, 1, 1280, {L({{1, 1}, {-1, -1}}), L({}), L({})}},
      {2, 2, 1280,
       {L({{3, 1}, {1, -3}, {-1, 3}, {-3, -1}}),
        L({{3, 2}, {1, -2}, {-1, -2}, {-3, 2}}),
        L({{3, 1}, {1, -3}, {-1, 3}, {-3, -1}})}},
      {3, 1, 64,
       {L({{3, 3}, {1, -13}, {-1, 13}, {-3, -3}}),
        L({{3, 3}, {1, 9}, {-1, 9}, {-3, 3}}),
        L({{3, 1}, {1, 9}, {-1, -9}, {-3, -1}})}},
      {3, 2, 1280,
       {L({{3, -4}, {1, 12}, {-1, -12}, {-3, 4}}),
        L({{3, -4}, {1, 4}, {-1, 4}, {-3, -4}}),
        L({{3, -3}, {1, -3}, {-1, 3}, {-3, 3}})}},
      {4, 1, 1280, {L({{3, -1}, {1, -5}, {-1, 5}, {-3, 1}}), L({}), L({})}},
  };
  for (const auto& row : rows) check_row(f, row);
}

TEST_CASE("division route for the bracket quotient forms") {
  const int N = 4;
  FormExpr div_route = ex_div(ex_bracket(named_form("x1"), named_form("chi5")),
                              named_form("x1"));
  auto a = eval(div_route, N);
  auto b = eval(named_form("Phi1"), N);
  for (int t = 0; t < 3; ++t) CHECK(a.comp(t).equals(b.comp(t)));
}

TEST_CASE("the thirty weight (4,5) bracket forms span the cusp space") {
  const int N = 5;
  std::vector<FormExpansion> forms;
  for (const auto& q : bracket_sym_quadruples()) {
    std::string nm = "F_" + std::to_string(q[0]) + "_" + std::to_string(q[1]) + "_" +
                     std::to_string(q[2]) + "_" + std::to_string(q[3]);
    forms.push_back(eval(named_form(nm), N));
  }
  REQUIRE(forms.size() == 30);
  for (const auto& f : forms) {
    CHECK(f.j == 4);
    CHECK(f.k2 == 10);
    CHECK(!f.is_zero());
    for (const auto& c : f.comps) CHECK(c.support_strictly_interior());
  }
  // rank 30 = the cusp dimension at (4,5): the thirty forms span the space
  CHECK(modp_rank(forms, 30) == 30);
}
