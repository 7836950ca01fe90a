#include "theta2/theta_qexp.hpp"

#include <cmath>

namespace theta2 {

namespace {

// Enumerate lattice points with (n + mu/2)^2 <= order + 1 per variable and
// collect terms; completeness of every retained triple follows since both
// squares are nonnegative.
template <typename Emit>
void lattice_sum(const Characteristic& ch, int order, Emit&& emit) {
  // Work with doubled entries: 2(n_t + mu_t/2) = 2 n_t + mu_t.
  const int bound2 = 4 * (order + 1);  // (2n+mu)^2 <= 4(order+1)
  const int lim = int(std::sqrt(double(bound2))) + 2;
  for (int n1 = -lim; n1 <= lim; ++n1) {
    int u = 2 * n1 + ch.eps[0];
    if (u * u > bound2) continue;
    for (int n2 = -lim; n2 <= lim; ++n2) {
      int v = 2 * n2 + ch.eps[1];
      if (v * v > bound2) continue;
      // A = u^2, B = u*v, C = v^2 in scaled units; phase zeta^{2(u nu1 + v nu2)}.
      Expo e{u * u, u * v, v * v};
      if (e.grade() > 4 * order) continue;
      long phase = 2L * (u * ch.eps[2] + v * ch.eps[3]);
      emit(e, phase, u, v);
    }
  }
}

}  // namespace

QSeries theta_constant_qexp(int i, int order) {
  const Characteristic& ch = even_char(i);
  std::vector<QSeries::Term> terms;
  lattice_sum(ch, order, [&](Expo e, long phase, int, int) {
    terms.emplace_back(e, Cyc8::zeta_pow(phase));
  });
  return QSeries::from_terms(std::move(terms), order);
}

QSeries theta_second_order_qexp(int mu1, int mu2, int order) {
  Characteristic ch{{mu1, mu2, 0, 0}};
  std::vector<QSeries::Term> terms;
  // theta[mu;0](2 tau): exponents double.
  lattice_sum(ch, 2 * order + 1, [&](Expo e, long, int, int) {
    Expo d{2 * e.A, 2 * e.B, 2 * e.C};
    if (d.grade() <= 4 * order) terms.emplace_back(d, Cyc8::one());
  });
  return QSeries::from_terms(std::move(terms), order);
}

std::array<QSeries, 2> theta_gradient_qexp(int i, int order) {
  const Characteristic& ch = odd_char(i);
  std::vector<QSeries::Term> t1, t2;
  lattice_sum(ch, order, [&](Expo e, long phase, int u, int v) {
    Cyc8 z = Cyc8::zeta_pow(phase);
    if (u != 0) t1.emplace_back(e, z.scaled(Rat(u)));
    if (v != 0) t2.emplace_back(e, z.scaled(Rat(v)));
  });
  return {QSeries::from_terms(std::move(t1), order),
          QSeries::from_terms(std::move(t2), order)};
}

QSeries theta_genus1_qexp(Genus1Theta which, int order) {
  int mu = 0, nu = 0;
  bool grad = false;
  switch (which) {
    case Genus1Theta::t00: break;
    case Genus1Theta::t01: nu = 1; break;
    case Genus1Theta::t10: mu = 1; break;
    case Genus1Theta::t11_gradient: mu = 1, nu = 1, grad = true; break;
  }
  std::vector<QSeries::Term> terms;
  const int bound2 = 4 * (order + 1);
  const int lim = int(std::sqrt(double(bound2))) + 2;
  for (int n = -lim; n <= lim; ++n) {
    int u = 2 * n + mu;
    if (u * u > 4 * order) continue;
    Cyc8 c = Cyc8::zeta_pow(2L * u * nu);
    if (grad) c = c.scaled(Rat(u));
    terms.emplace_back(Expo{u * u, 0, 0}, c);
  }
  return QSeries::from_terms(std::move(terms), order);
}

QSeries theta_genus1_qexp_q2(Genus1Theta which, int order) {
  QSeries s = theta_genus1_qexp(which, order);
  std::vector<QSeries::Term> swapped;
  for (const auto& [e, c] : s.terms()) swapped.emplace_back(Expo{0, 0, e.A}, c);
  return QSeries::from_terms(std::move(swapped), order);
}

}  // namespace theta2
