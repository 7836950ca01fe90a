#include "theta2/cyc8.hpp"

#include <sstream>

namespace theta2 {

Cyc8 Cyc8::zeta_pow(long e) {
  e %= 8;
  if (e < 0) e += 8;
  Cyc8 r;
  Rat v(e < 4 ? 1 : -1);
  r.c_[e % 4] = v;
  return r;
}

bool Cyc8::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyc8::is_rational() const {
  return c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

const Rat& Cyc8::rational_part() const {
  if (!is_rational()) throw std::domain_error("Cyc8: value is not rational");
  return c_[0];
}

Cyc8 Cyc8::operator-() const {
  Cyc8 r;
  for (int i = 0; i < 4; ++i) r.c_[i] = -c_[i];
  return r;
}

Cyc8 Cyc8::operator+(const Cyc8& o) const {
  Cyc8 r;
  for (int i = 0; i < 4; ++i) r.c_[i] = c_[i] + o.c_[i];
  return r;
}

Cyc8 Cyc8::operator-(const Cyc8& o) const {
  Cyc8 r;
  for (int i = 0; i < 4; ++i) r.c_[i] = c_[i] - o.c_[i];
  return r;
}

Cyc8& Cyc8::operator+=(const Cyc8& o) {
  for (int i = 0; i < 4; ++i) c_[i] += o.c_[i];
  return *this;
}

Cyc8& Cyc8::operator-=(const Cyc8& o) {
  for (int i = 0; i < 4; ++i) c_[i] -= o.c_[i];
  return *this;
}

Cyc8 Cyc8::operator*(const Cyc8& o) const {
  Cyc8 r;
  for (int i = 0; i < 4; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < 4; ++j) {
      if (o.c_[j] == 0) continue;
      Rat prod = c_[i] * o.c_[j];
      int e = i + j;
      if (e >= 4) {
        r.c_[e - 4] -= prod;  // zeta^4 = -1
      } else {
        r.c_[e] += prod;
      }
    }
  }
  return r;
}

Cyc8 Cyc8::galois(int k) const {
  Cyc8 r;
  for (int i = 0; i < 4; ++i) {
    if (c_[i] == 0) continue;
    int e = (i * k) % 8;
    if (e < 0) e += 8;
    if (e >= 4) {
      r.c_[e - 4] -= c_[i];
    } else {
      r.c_[e] += c_[i];
    }
  }
  return r;
}

Cyc8 Cyc8::inv() const {
  if (is_zero()) throw std::domain_error("division by zero in coefficient field");
  // Product of the nontrivial Galois conjugates; a * b = Norm(a) in Q.
  Cyc8 b = galois(3) * galois(5) * galois(7);
  Cyc8 n = *this * b;
  if (!n.is_rational() || n.c_[0] == 0)
    throw std::logic_error("Cyc8: norm computation failed");
  return b.scaled(1 / n.c_[0]);
}

Cyc8 Cyc8::scaled(const Rat& r) const {
  Cyc8 out;
  for (int i = 0; i < 4; ++i) out.c_[i] = c_[i] * r;
  return out;
}

Int Cyc8::denominator_lcm() const {
  Int l = 1;
  for (const auto& x : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  return l;
}

std::string Cyc8::str() const {
  if (is_rational()) return c_[0].get_str();
  std::ostringstream os;
  bool first = true;
  static const char* pw[4] = {"", "*z", "*z^2", "*z^3"};
  for (int i = 0; i < 4; ++i) {
    if (c_[i] == 0) continue;
    if (!first && c_[i] > 0) os << "+";
    os << c_[i].get_str() << pw[i];
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace theta2
