#pragma once

// Building blocks for the trace products and the closed formulas:
//
//   eta_block(k)        : eta(k tau) = q^{k/24} prod (1 - q^{kn})
//   theta1_block(k,a,c) : theta_1(k tau, a z + c), odd Jacobi theta, product form
//   theta2_block(k,a,c) : theta_2(k tau, a z + c) = theta_1(k tau, a z + c + 1/2)
//   theta_mr(m,r)       : sum_{l = r mod 2m} y^l q^{l^2/4m}
//   mu_zero(m)          : sum_{l} y^{2ml} q^{m l^2} (y q^l + 1)/(y q^l - 1)
//   mu_parity(m,k)      : the y-parity projections of mu_zero
//
// Everything is expanded in the region 1 < |y| < 1/|q|; the arguments c are
// measured in full turns, i.e. the phase attached to c is e^{2 pi i c}.

#include "umbral/euler_product.hpp"
#include "umbral/series.hpp"

#include <cmath>

namespace umbral {

// e^{2 pi i turns} as an exact root of unity.
inline Cyc unit_phase(const Rational& turns, unsigned order = default_cyclotomic_order()) {
  const Int num = boost::multiprecision::numerator(turns);
  const Int den = boost::multiprecision::denominator(turns);
  const unsigned root = static_cast<unsigned>(to_long(den));
  const unsigned field = static_cast<unsigned>(std::lcm<unsigned long>(order, root));
  return Cyc::root_term(root, to_long(num), Rational(1), field);
}

inline QYSeries eta_block(long k, const Rational& q_max, unsigned order = default_cyclotomic_order()) {
  if (k <= 0) throw std::invalid_argument("eta block needs a positive scale");
  return euler_product({Cyc(1, order), Rational(k, 24), 0},
                       {{Cyc(1, order), 0, Rational(k), Rational(k), +1}}, q_max);
}

// theta_1(k tau, a z + c) in product form:
//   -i e^{pi i c} q^{k/8} y^{a/2}
//   * prod_{n>=1} (1 - e^{-2 pi i c} y^{-a} q^{k(n-1)}) (1 - e^{2 pi i c} y^{a} q^{kn}) (1 - q^{kn}).
// Oddness in the second argument normalizes a < 0; a = 0 is allowed only for
// nonintegral c (otherwise the block vanishes identically).
inline QYSeries theta1_block(long k, long a, const Rational& c, const Rational& q_max,
                             unsigned order = default_cyclotomic_order()) {
  if (k <= 0) throw std::invalid_argument("theta block needs a positive scale");
  if (a < 0) return -theta1_block(k, -a, -c, q_max, order);
  if (a == 0 && is_integer(c))
    throw std::invalid_argument("theta_1 block with trivial elliptic argument vanishes identically");
  const Cyc lead_coeff = Cyc(-1, order) * Cyc::i(order) * unit_phase(c / 2, order);
  const std::vector<FactorFamily> families = {
      {unit_phase(-c, order), -a, Rational(0), Rational(k), +1},
      {unit_phase(c, order), a, Rational(k), Rational(k), +1},
      {Cyc(1, order), 0, Rational(k), Rational(k), +1},
  };
  return euler_product({lead_coeff, Rational(k, 8), Rational(a, 2)}, families, q_max);
}

inline QYSeries theta2_block(long k, long a, const Rational& c, const Rational& q_max,
                             unsigned order = default_cyclotomic_order()) {
  return theta1_block(k, a, c + Rational(1, 2), q_max, order);
}

// Pure theta component: sum over l = r (mod 2m) of y^l q^{l^2 / 4m}.
inline QYSeries theta_mr(long m, long r, const Rational& q_max,
                         unsigned order = default_cyclotomic_order()) {
  if (m <= 0) throw std::invalid_argument("theta component needs a positive index");
  // Representative of r with the smallest square, to anchor the q-grid.
  long r0 = ((r % (2 * m)) + 2 * m) % (2 * m);
  if (r0 > m) r0 -= 2 * m;
  QYSeries s(order, Rational(r0 * r0, 4 * m), r, 1);
  s.set_window(q_max, std::nullopt);
  for (long l = r0;; l += 2 * m) {
    if (Rational(l * l, 4 * m) > q_max) break;
    s.add_term(to_long(integer_value(Rational(l * l - r0 * r0, 4 * m))), l - r, Cyc(1, order));
  }
  for (long l = r0 - 2 * m;; l -= 2 * m) {
    if (Rational(l * l, 4 * m) > q_max) break;
    s.add_term(to_long(integer_value(Rational(l * l - r0 * r0, 4 * m))), l - r, Cyc(1, order));
  }
  s.set_window(q_max, std::nullopt);
  return s;
}

// mu_{m,0}(tau, z), expanded termwise per lattice summand:
//   l = 0:  (y+1)/(y-1)            = (1 + 1/y) sum_{j>=0} y^{-j}
//   l > 0:  -y^{2ml} q^{m l^2} (1 + y q^l) sum_{j>=0} (y q^l)^j
//   l < 0:  +y^{-2mp} q^{m p^2} (1 + y^{-1} q^p) sum_{j>=0} (y^{-1} q^p)^j   (p = -l)
// The l = 0 summand descends infinitely in y, so a floor is mandatory.
inline QYSeries mu_zero(long m, const Rational& q_max, const Rational& y_floor,
                        unsigned order = default_cyclotomic_order()) {
  if (m <= 0) throw std::invalid_argument("mu block needs a positive index");
  if (q_max < 0) throw window_error("mu block window is empty");
  QYSeries s(order, 0, 0, 1);
  const Cyc one(1, order);
  // l = 0.
  s.add_term(0, 0, one);
  for (long j = 1; Rational(-j) >= y_floor; ++j) s.add_term(0, -j, Cyc(2, order));
  // l != 0.
  for (long l = 1; Rational(m) * l * l <= q_max; ++l) {
    const long base_q = m * l * l;
    for (long j = 0; Rational(base_q + j * l) <= q_max; ++j) {
      s.add_term(base_q + j * l, 2 * m * l + j, Cyc(-1, order));
      if (Rational(base_q + (j + 1) * l) <= q_max) s.add_term(base_q + (j + 1) * l, 2 * m * l + j + 1, Cyc(-1, order));
    }
    for (long j = 0; Rational(base_q + j * l) <= q_max; ++j) {
      s.add_term(base_q + j * l, -2 * m * l - j, one);
      if (Rational(base_q + (j + 1) * l) <= q_max) s.add_term(base_q + (j + 1) * l, -2 * m * l - j - 1, one);
    }
  }
  s.set_window(q_max, y_floor);
  return s;
}

// Parity projection: k = 0 keeps even y-exponents, k = 1 keeps odd ones,
// via mu^k = (mu + (-1)^k mu(y -> -y)) / 2.
inline QYSeries mu_parity(long m, int parity, const Rational& q_max, const Rational& y_floor,
                          unsigned order = default_cyclotomic_order()) {
  if (parity != 0 && parity != 1) throw std::invalid_argument("parity must be 0 or 1");
  const QYSeries mu = mu_zero(m, q_max, y_floor, order);
  const QYSeries mir = mu.mirrored_y();
  const Cyc half(Rational(1, 2), order);
  return (parity == 0 ? mu + mir : mu - mir).scaled(half);
}

}  // namespace umbral
