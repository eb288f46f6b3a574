#pragma once

// Truncated products of Jacobi-triple-product shape:
//
//   lead * prod_{families} prod_{n >= 1} (1 - c y^a q^{start + step (n-1)})^{sign}
//
// evaluated in the region 1 < |y| < 1/|q|.  Factors whose q-exponent is
// positive expand exactly (finitely many contribute below any q bound, and
// each inverse factor is a geometric series whose columns are finite in y).
// A factor with q-exponent zero and sign -1 descends infinitely in y and is
// only admissible for a < 0, i.e. (1 - c y^a)^{-1} = sum_m c^m y^{am}; those
// tails are multiplied in last, at a working floor lowered by the y-reach of
// the exact part, so the requested window of the result carries only true
// coefficients.

#include "umbral/series.hpp"

#include <optional>
#include <vector>

namespace umbral {

// One factor family prod_{n>=1} (1 - coeff * y^y_exp * q^{start + step*(n-1)})^sign.
struct FactorFamily {
  Cyc coeff;
  long y_exp = 0;
  Rational start = 0;
  Rational step = 1;
  int sign = +1;
};

// Leading monomial coeff * q^q_exp * y^y_exp.
struct Monomial {
  Cyc coeff;
  Rational q_exp = 0;
  Rational y_exp = 0;
};

inline QYSeries euler_product(const Monomial& lead, const std::vector<FactorFamily>& families,
                              const Rational& q_max, std::optional<Rational> y_floor = std::nullopt) {
  const unsigned order = lead.coeff.order();
  const Rational rel = q_max - lead.q_exp;
  if (rel < 0)
    throw window_error("euler product window is empty: q_max lies below the leading exponent");

  // Common q-grid for all factor exponents.
  Int den_acc = 1;
  for (const FactorFamily& f : families) {
    den_acc = boost::multiprecision::lcm(den_acc, boost::multiprecision::denominator(f.start));
    den_acc = boost::multiprecision::lcm(den_acc, boost::multiprecision::denominator(f.step));
  }
  const long den = to_long(den_acc);

  struct Tail {  // (1 - c y^a)^{-1} with a < 0
    Cyc coeff;
    long y_exp;
  };
  std::vector<Tail> tails;

  // Exact part: every factor here is a finite y-polynomial per q-column.
  QYSeries exact = QYSeries::monomial(Cyc(1, order), 0, 0, den).truncated(rel, std::nullopt);
  for (const FactorFamily& f : families) {
    if (f.sign != 1 && f.sign != -1) throw std::invalid_argument("factor family sign must be +1 or -1");
    if (f.step <= 0) throw std::invalid_argument("factor family step must be positive");
    if (f.start < 0) throw std::invalid_argument("factor family start must be nonnegative");
    if (f.coeff.is_zero()) continue;
    const Cyc c = f.coeff.order() == order ? f.coeff : f.coeff.embedded(std::lcm(f.coeff.order(), order));
    long n_first = 1;
    if (f.start == 0) {
      if (f.sign == -1) {
        if (f.y_exp >= 0)
          throw std::invalid_argument(
              "an inverted factor at q^0 must have a negative y-exponent to converge for |y| > 1");
        tails.push_back({c, f.y_exp});
        n_first = 2;  // the rest of the family has positive q-exponents
      }
    }
    for (long n = n_first;; ++n) {
      const Rational e = f.start + f.step * (n - 1);
      if (e > rel) break;
      const long j = to_long(integer_value(e * den));
      if (f.sign == +1) {
        // Multiply by the binomial (1 - c y^a q^e).
        QYSeries binom(order, 0, 0, den);
        binom.add_term(0, 0, Cyc(1, order));
        binom.add_term(j, f.y_exp, -c);
        exact *= binom;
      } else if (e > 0) {
        // Multiply by (1 - c y^a q^e)^{-1} = sum_m c^m y^{am} q^{em}.
        QYSeries geom(order, 0, 0, den);
        Cyc cm(1, order);
        for (long m = 0; Rational(m) * e <= rel; ++m) {
          geom.add_term(m * j, m * f.y_exp, cm);
          cm *= c;
        }
        geom.set_window(rel, std::nullopt);
        exact *= geom;
      }
    }
  }

  QYSeries result = exact;
  if (!tails.empty()) {
    if (!y_floor)
      throw std::invalid_argument("a product with infinite y-descent requires an explicit y_floor");
    // Working floor for the descending tails: the requested floor, lowered by
    // how far up the exact part reaches (its unknown-y region must stay below
    // the final window).
    Rational top(0);
    if (auto t = exact.max_y_exponent(); t && *t > 0) top = *t;
    const Rational target_rel_floor = *y_floor - lead.y_exp;
    const Rational wf = target_rel_floor - top;
    for (const Tail& tail : tails) {
      QYSeries geom(order, 0, 0, den);
      Cyc cm(1, order);
      for (long m = 0; Rational(m) * tail.y_exp >= wf; ++m) {
        geom.add_term(0, m * tail.y_exp, cm);
        cm *= tail.coeff;
      }
      geom.set_window(std::nullopt, wf);
      result *= geom;
    }
  }

  result = result.times_monomial(lead.coeff, lead.q_exp, lead.y_exp);
  return result.truncated(q_max, y_floor);
}

}  // namespace umbral
