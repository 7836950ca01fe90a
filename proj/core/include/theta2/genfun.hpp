#pragma once

#include <string>
#include <vector>

#include "theta2/cyc8.hpp"

namespace theta2 {

/// Rational generating function with integer polynomial numerator and
/// denominator (constant term 1 after normalization); expansion is exact.
class GenFunction {
 public:
  GenFunction() : num_{0}, den_{1} {}
  GenFunction(std::vector<Int> num, std::vector<Int> den);

  /// den given as factors (1 - t^{e})^{m}: list of (e, m).
  static GenFunction with_denominator(std::vector<Int> num,
                                      const std::vector<std::pair<int, int>>& factors);

  std::vector<Int> coeffs(int upto) const;
  Int coeff(int n) const { return coeffs(n)[size_t(n)]; }

  GenFunction operator+(const GenFunction& o) const;
  GenFunction operator-(const GenFunction& o) const;
  GenFunction scaled(const Int& c) const;

  const std::vector<Int>& numerator() const { return num_; }
  const std::vector<Int>& denominator() const { return den_; }

 private:
  std::vector<Int> num_, den_;
};

/// Registered generating functions (dimension and multiplicity series).
GenFunction registered_genfun(const std::string& name);
std::vector<std::string> genfun_names();

/// Coefficient extraction for a registered series.
std::vector<Int> genfun_coeffs(const std::string& name, int upto);

/// Dimension generating function for M_{j,*}(Gamma[2]) at fixed even j >= 2:
/// numerator coefficients a_3..a_12 over (1-t^2)^5.
GenFunction genfun_m_gamma2(int j);
/// The numerator coefficients a_3..a_12 as exact rationals (integrality is a
/// tested invariant).
std::vector<Rat> gamma2_numerator_coeffs(int j);

/// Gamma_1[2] series of cusp forms in odd weight resp. forms in even weight,
/// fixed even j >= 2; denominator (1-t^2)(1-t^4)^4(1-t^6).
GenFunction genfun_s_odd_gamma1(int j);
GenFunction genfun_m_even_gamma1(int j);

}  // namespace theta2
