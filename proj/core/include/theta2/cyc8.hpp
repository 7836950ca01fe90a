#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace theta2 {

using Rat = mpq_class;
using Int = mpz_class;

/// Exact element of Q(zeta) with zeta = exp(pi*i/4), so zeta^4 = -1.
/// Stored as c0 + c1*zeta + c2*zeta^2 + c3*zeta^3 with rational c_i.
/// zeta^2 = i and zeta - zeta^3 = sqrt(2).
class Cyc8 {
public:
  Cyc8() = default;
  Cyc8(const Rat& r) { c_[0] = r; }
  Cyc8(long n) { c_[0] = n; }
  Cyc8(const Rat& a0, const Rat& a1, const Rat& a2, const Rat& a3)
      : c_{a0, a1, a2, a3} {}

  static Cyc8 zero() { return Cyc8(); }
  static Cyc8 one() { return Cyc8(1); }
  static Cyc8 imag_unit() { return zeta_pow(2); }

  /// zeta^e for any integer e (period 8).
  static Cyc8 zeta_pow(long e);

  const Rat& coeff(int i) const { return c_[i]; }

  bool is_zero() const;
  bool is_rational() const;
  /// The coefficient of zeta^0; throws unless is_rational().
  const Rat& rational_part() const;

  Cyc8 operator-() const;
  Cyc8 operator+(const Cyc8& o) const;
  Cyc8 operator-(const Cyc8& o) const;
  Cyc8 operator*(const Cyc8& o) const;
  Cyc8& operator+=(const Cyc8& o);
  Cyc8& operator-=(const Cyc8& o);
  Cyc8& operator*=(const Cyc8& o) { *this = *this * o; return *this; }

  bool operator==(const Cyc8& o) const { return c_ == o.c_; }
  bool operator!=(const Cyc8& o) const { return c_ != o.c_; }

  /// Galois conjugate zeta -> zeta^k, k odd.
  Cyc8 galois(int k) const;

  /// Field inverse; throws std::domain_error on zero.
  Cyc8 inv() const;
  Cyc8 operator/(const Cyc8& o) const { return *this * o.inv(); }

  Cyc8 scaled(const Rat& r) const;

  /// lcm of the four coefficient denominators.
  Int denominator_lcm() const;

  std::string str() const;

private:
  std::array<Rat, 4> c_{};  // value-initialized to 0
};

inline Cyc8 operator*(const Rat& r, const Cyc8& a) { return a.scaled(r); }

}  // namespace theta2
