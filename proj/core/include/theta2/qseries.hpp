#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "theta2/cyc8.hpp"

namespace theta2 {

/// Scaled exponent of one Fourier term: the term is
///   e^{pi*i*(A/4 * tau11 + B/2 * tau12 + C/4 * tau22)}.
/// A and C are quarter-units, B half-units; all integers.
struct Expo {
  int32_t A = 0;
  int32_t B = 0;
  int32_t C = 0;

  int32_t grade() const { return A + C; }
  bool operator==(const Expo& o) const { return A == o.A && B == o.B && C == o.C; }
  /// Ordering by (A+C, A, B): grade-major, the division/serialization order.
  bool operator<(const Expo& o) const {
    if (grade() != o.grade()) return grade() < o.grade();
    if (A != o.A) return A < o.A;
    return B < o.B;
  }
  uint64_t pack() const {
    return (uint64_t(uint32_t(A)) << 42) | (uint64_t(uint32_t(C)) << 21) |
           uint64_t(uint32_t(B + (1 << 20)));
  }
};

/// Sparse exact Fourier expansion truncated at grade (A+C)/4 <= order.
/// Terms are sorted by (A+C, A, B) and never store a zero coefficient.
class QSeries {
public:
  using Term = std::pair<Expo, Cyc8>;

  explicit QSeries(int order = 0) : order_(order) {}

  static QSeries zero(int order) { return QSeries(order); }
  static QSeries constant(const Cyc8& c, int order);
  static QSeries one(int order) { return constant(Cyc8::one(), order); }
  /// Build from arbitrary (expo, coeff) pairs; collects, sorts, truncates.
  static QSeries from_terms(std::vector<Term> terms, int order);

  int order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  Cyc8 coeff(const Expo& e) const;
  /// Constant term (0,0,0).
  Cyc8 constant_term() const { return coeff(Expo{0, 0, 0}); }

  QSeries operator+(const QSeries& o) const;
  QSeries operator-(const QSeries& o) const;
  QSeries operator-() const;
  QSeries operator*(const QSeries& o) const;
  QSeries scaled(const Cyc8& c) const;

  /// Exact quotient by a series with a nonzero constant term, computed by
  /// graded long division; throws std::domain_error otherwise.
  QSeries divided_by(const QSeries& b) const;

  /// Term-wise scaling by (exponent of e^{pi*i*tau_*})/2, i.e. A/8, B/4, C/8.
  /// This is the (2*pi*i)^{-1} tau-derivative entry used by the bracket.
  enum class Deriv { d11, d12, d22 };
  QSeries tau_derivative(Deriv which) const;

  /// Substitution tau -> 2*tau: (A,B,C) -> (2A,2B,2C). The result is complete
  /// through grade 2*order, which the output order reflects.
  QSeries doubled() const;

  /// Sum all terms with the same (A,C) over B (restriction to tau12 = 0).
  QSeries specialize_r_to_one() const;
  /// Keep only terms with C = 0 (Siegel operator slice toward the standard
  /// one-dimensional boundary component).
  QSeries specialize_siegel_slice() const;

  /// Drop terms beyond grade 4*new_order and lower the order bound.
  QSeries truncated(int new_order) const;

  /// Equality at the common truncation order.
  bool equals(const QSeries& o) const;
  /// First differing exponent at the common order, if any.
  std::optional<Expo> first_discrepancy(const QSeries& o) const;

  /// True if every stored term satisfies B^2 <= A*C.
  bool support_positive_semidefinite() const;
  /// True if every stored term has A > 0 and C > 0 (or the series is zero).
  bool support_strictly_interior() const;

  bool operator==(const QSeries& o) const {
    return order_ == o.order_ && terms_ == o.terms_;
  }

private:
  int order_;
  std::vector<Term> terms_;
};

}  // namespace theta2
