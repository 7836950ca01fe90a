#pragma once

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

#include "theta2/qseries.hpp"
#include "theta2/word_action.hpp"

namespace theta2 {

/// Congruence-group tags ordered from coarsest to finest.
enum class Group : uint8_t {
  Sp4Z = 0,     // full modular group
  Gamma0 = 1,   // Gamma_0[2]
  Gamma1 = 2,   // Gamma_1[2]
  Gamma2 = 3,   // Gamma[2]
  Gamma24 = 4,  // Gamma[2,4]
  Gamma48 = 5,  // Gamma[4,8]
  None = 6,     // not a modular object (e.g. specializations)
};
const char* group_name(Group g);
inline Group group_meet(Group a, Group b) { return a > b ? a : b; }

enum class SpecializeKind : uint8_t { r_to_one, siegel_slice };

using NodeId = int32_t;

/// Handle to an interned immutable expression node. Expressions form a DAG
/// over theta/gradient atoms closed under ring operations, Rankin-Cohen
/// bracket, symmetrized (polynomial) products, wedge, tau-doubling,
/// specializations, component selection and isotypic projection.
struct FormExpr {
  NodeId id = -1;
  bool valid() const { return id >= 0; }

  int j() const;
  int weight_k2() const;  // twice the determinant weight k
  Rat weight_k() const { return Rat(weight_k2(), 2); }
  int pi_power() const;
  Group group() const;

  bool operator==(const FormExpr& o) const { return id == o.id; }
  bool operator!=(const FormExpr& o) const { return id != o.id; }
  bool operator<(const FormExpr& o) const { return id < o.id; }
};

/// Evaluated form: weight (j,k), pi-power normalization, and j+1 series
/// components ordered along the basis e1^{j-i} e2^i.
struct FormExpansion {
  int j = 0;
  int k2 = 0;
  int pi_power = 0;
  Group group = Group::None;
  std::vector<QSeries> comps;

  const QSeries& comp(int i) const { return comps.at(i); }
  bool is_zero() const;
  FormExpansion scaled(const Cyc8& c) const;
  FormExpansion operator+(const FormExpansion& o) const;
  FormExpansion operator-(const FormExpansion& o) const;
};

// ---- builders (all results are interned and canonicalized) ----

FormExpr ex_scalar(const Cyc8& c);
FormExpr ex_zero(int j, int k2, int p);
FormExpr ex_theta(int i);               // even theta constant, i in 1..10
FormExpr ex_grad(int i);                // normalized odd gradient, i in 1..6
FormExpr ex_theta_second(int mu1, int mu2);
FormExpr ex_genus1(int which);          // Genus1Theta enum value
/// Symbol of the Fricke substitution calculus: x_1..x_4 for 1..4, xi for 5.
/// Evaluates through the theta realization; carries no word action.
FormExpr ex_xvar(int which);
FormExpr ex_add(const std::vector<FormExpr>& xs);
FormExpr ex_sub(FormExpr a, FormExpr b);
FormExpr ex_neg(FormExpr a);
FormExpr ex_scale(const Cyc8& c, FormExpr a);
FormExpr ex_linear(const std::vector<std::pair<Cyc8, FormExpr>>& terms);
FormExpr ex_mul(const std::vector<FormExpr>& xs);
FormExpr ex_pow(FormExpr a, int n);
FormExpr ex_bracket(FormExpr a, FormExpr b);  // Rankin-Cohen, scalar args
FormExpr ex_div(FormExpr a, FormExpr b);
FormExpr ex_wedge(const std::vector<FormExpr>& xs);
FormExpr ex_double_tau(FormExpr a);
FormExpr ex_specialize(FormExpr a, SpecializeKind k);
FormExpr ex_component(FormExpr a, int idx);
/// Isotypic projection onto the S6-irreducible labeled by a partition of 6
/// (index into the character-table partition list).
FormExpr ex_project(FormExpr a, int partition_index);

inline FormExpr operator+(FormExpr a, FormExpr b) { return ex_add({a, b}); }
inline FormExpr operator-(FormExpr a, FormExpr b) { return ex_sub(a, b); }
inline FormExpr operator*(FormExpr a, FormExpr b) { return ex_mul({a, b}); }

/// Override the advisory group tag (used by the registry after a descent
/// check or a recorded modularity claim).
FormExpr ex_with_group(FormExpr a, Group g);

/// Deterministic bottom-up evaluation with memoization on (node, order).
const FormExpansion& eval(FormExpr e, int order);

/// Substitute every atom by its slash image under the word (monomial matrix
/// composition), leaving the DAG shape intact. Requires integral weight.
FormExpr s6_act(FormExpr e, const WordAction& w);
FormExpr s6_act(FormExpr e, const Word& w);

/// Structural description, for diagnostics.
std::string ex_describe(FormExpr e);

/// Node introspection (read-only structural view of the DAG).
enum class ExKind : uint8_t {
  Zero,
  Scalar,
  Theta,
  Grad,
  Theta2nd,
  Genus1,
  XVar,
  LinComb,
  Mul,
  Bracket,
  Div,
  Wedge,
  DoubleTau,
  Specialize,
  Component,
  Project,
};
ExKind ex_kind(FormExpr e);
int ex_param(FormExpr e);
Cyc8 ex_scalar_value(FormExpr e);
std::vector<FormExpr> ex_children(FormExpr e);
std::vector<Cyc8> ex_coeffs(FormExpr e);  // LinComb coefficients

/// Number of interned nodes (diagnostics).
size_t expr_pool_size();

}  // namespace theta2
