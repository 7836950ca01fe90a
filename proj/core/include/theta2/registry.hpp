#pragma once

#include <optional>
#include <string>
#include <vector>

#include "theta2/expr.hpp"

namespace theta2 {

/// Looks up a named form; throws UnknownFormError (with nearby names) if the
/// name is not registered.
FormExpr named_form(const std::string& name);

struct UnknownFormError : std::runtime_error {
  explicit UnknownFormError(const std::string& msg, std::vector<std::string> near)
      : std::runtime_error(msg), suggestions(std::move(near)) {}
  std::vector<std::string> suggestions;
};

/// All registered names, sorted.
const std::vector<std::string>& registry_names();

bool is_registered(const std::string& name);

/// Registered cusp forms (vanishing Siegel slice is a tested invariant).
bool is_registered_cusp_form(const std::string& name);

// -- convenience builders used across the test and verification suites --

/// theta_{n_i}^{power}.
FormExpr theta_pow(int i, int power);
/// Product of theta powers: {(even index, power), ...}.
FormExpr theta_monomial(const std::vector<std::pair<int, int>>& powers);
/// x_i = theta_{n_i}^4.
FormExpr x_form(int i);
/// Symmetrized gradient monomial Sym^j(G...)*theta-monomial. When
/// require_gamma2 is set the level-2 descent condition is checked and a
/// failure throws with the violated row condition named.
FormExpr grad_monomial(const std::vector<int>& grads,
                       const std::vector<std::pair<int, int>>& theta_powers,
                       bool require_gamma2);

/// The quadratic relation between theta squares attached to an odd pair:
/// three products of two theta squares with signs summing to zero. The
/// distinguished index carries the minority sign.
struct QuadRelation {
  std::array<std::array<int, 2>, 3> pairs;  // even-index pairs, lex order
  std::array<int, 3> signs;                 // +1/-1, first is +1
  int distinguished;                        // 0..2
};
const QuadRelation& theta_square_relation(int i, int j);

/// The 60 valid Sym^2(G_i)-type index tuples (i; a,b,c): ten triples per
/// gradient index, spanning a 15-dimensional space with four independent
/// representatives per index.
const std::vector<std::array<int, 4>>& canonical_f_tuples();

/// The 15 quadruples {a<b<c<d} of odd indices together with their even
/// theta quadruple, defining the forms D_{abcd}.
struct DQuad {
  std::array<int, 4> odds;
  std::array<int, 4> evens;
};
const std::vector<DQuad>& d_form_quadruples();

/// The 45 valid K_{i,j,k,l} index tuples (odd pair i<j, valid even pair k<l).
const std::vector<std::array<int, 4>>& k_form_tuples();

/// The 30 quadruples used for the weight-(4,5) cusp forms built from
/// Sym^2 of two theta brackets.
const std::vector<std::array<int, 4>>& bracket_sym_quadruples();

}  // namespace theta2
