#pragma once

#include <string>

#include "theta2/expr.hpp"

namespace theta2 {

/// Expressions of the Fricke substitution calculus: polynomials in the
/// symbols x1..x4 and xi = x5 - x6. Known names: x1..x4, xi, alpha, s1..s4,
/// D1, D2, eta, X1..X10, and the involution images W2_s2, W2_alpha, W2_s3.
FormExpr fricke_sym(const std::string& name);

/// Substitutes x_i by its quarter-square theta expression and xi by
/// 4*theta1*theta2*theta3*theta4; the result evaluates as an ordinary theta
/// expression. Atoms outside the calculus raise "Fricke image unknown".
FormExpr fricke_substitute(FormExpr e);

}  // namespace theta2
