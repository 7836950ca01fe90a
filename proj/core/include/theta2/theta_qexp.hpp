#pragma once

#include "theta2/chars.hpp"
#include "theta2/qseries.hpp"

namespace theta2 {

/// q-expansion of the even theta constant theta_{n_i}(tau), i in 1..10.
/// Lattice sum over n in Z^2 of zeta^{4((n+mu/2)·nu)} at scaled exponents
/// A = 4(n1+mu1/2)^2, B = 4(n1+mu1/2)(n2+mu2/2), C = 4(n2+mu2/2)^2.
QSeries theta_constant_qexp(int i, int order);

/// Second-order theta constant Theta[mu](tau) = theta[mu;0](2 tau, 0),
/// mu = (mu1, mu2) with entries in {0,1}.
QSeries theta_second_order_qexp(int mu1, int mu2, int order);

/// Gradient of the odd theta function theta_{m_i} at z = 0, normalized by
/// 1/(pi*i): component t is the lattice sum of 2(n+mu/2)_t times the same
/// phase and exponents as the theta constant. pi_power bookkeeping is +1.
std::array<QSeries, 2> theta_gradient_qexp(int i, int order);

enum class Genus1Theta { t00, t01, t10, t11_gradient };

/// Genus-1 theta constants (and the z-gradient of theta_11 over pi*i) as
/// one-variable series on the A-axis (B = C = 0).
QSeries theta_genus1_qexp(Genus1Theta which, int order);

/// The same genus-1 series placed on the C-axis (q2 variable).
QSeries theta_genus1_qexp_q2(Genus1Theta which, int order);

}  // namespace theta2
