#pragma once

// The computational core tying the layers together:
//
//   * trace_product      — the symmetrized trace function of a class, built as
//                          a quotient of Euler products from its eigenvalue
//                          data (Clifford sectors in the numerator, Weyl
//                          sectors in the denominator),
//   * closed_form_series — the same function computed from the closed-form
//                          eta/theta quotient in the formula catalog,
//   * finite_part        — the theta-expandable part left after removing the
//                          polar Appell contributions,
//   * mock_coefficients / check_mock_structure — residue-indexed coefficient
//                          extraction with the structural identities it must
//                          satisfy (odd symmetry, vanishing boundary residues,
//                          universal polar part, strip-shift consistency),
//   * decompose_mock     — multiplicities of the coefficient class-functions
//                          in the irreducible characters of the trace group.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "umbral/blocks.hpp"
#include "umbral/euler_product.hpp"
#include "umbral/formulas.hpp"
#include "umbral/groups.hpp"
#include "umbral/series.hpp"

namespace umbral {

// One summand of the symmetrized trace:
//   -y prod_{n>0} (1-q^n)^2 prod_{Clifford} (1 - conj(l) y^{-w} q^{n-1})(1 - l y^{w} q^n)
//                           / prod_{Weyl}   (1 - conj(l) y^{-w} q^{n-1})(1 - l y^{w} q^n),
// with every eigenvalue conjugated when `conjugate` is set.
inline QYSeries trace_summand(const EigenData& data, const EigenRow& row, bool conjugate,
                              const Rational& q_max, const Rational& y_floor,
                              unsigned order = default_cyclotomic_order()) {
  std::vector<FactorFamily> families;
  const Cyc one(1, order);
  families.push_back({one, 0, Rational(1), Rational(1), +1});
  families.push_back({one, 0, Rational(1), Rational(1), +1});
  for (std::size_t s = 0; s < data.sectors.size(); ++s) {
    const Sector& sec = data.sectors[s];
    const int sign = sec.kind == SectorKind::clifford ? +1 : -1;
    for (const Cyc& tabulated : row.eigenvalues.at(s)) {
      const Cyc ev = conjugate ? tabulated.conj() : tabulated;
      families.push_back({ev.conj(), -sec.charge, Rational(0), Rational(1), sign});
      families.push_back({ev, sec.charge, Rational(1), Rational(1), sign});
    }
  }
  return euler_product({Cyc(-1, order), Rational(0), Rational(1)}, families, q_max, y_floor);
}

// The full symmetrized trace of the class: the summand of its eigenvalue data
// plus the summand of the conjugated data.
inline QYSeries trace_product(int lambency, const std::string& cls, const Rational& q_max,
                              const Rational& y_floor,
                              unsigned order = default_cyclotomic_order()) {
  const EigenData& data = eigen_data(lambency);
  const EigenRow& row = data.row(cls);
  return trace_summand(data, row, false, q_max, y_floor, order) +
         trace_summand(data, row, true, q_max, y_floor, order);
}

inline QYSeries block_series(const BlockSpec& b, const Rational& q_max,
                             unsigned order = default_cyclotomic_order()) {
  switch (b.kind) {
    case BlockSpec::Kind::eta: return eta_block(b.k, q_max, order);
    case BlockSpec::Kind::theta1: return theta1_block(b.k, b.a, b.c, q_max, order);
    case BlockSpec::Kind::theta2: return theta2_block(b.k, b.a, b.c, q_max, order);
  }
  throw std::invalid_argument("unknown block kind");
}

// The closed-form eta/theta quotient of the class, expanded in the region
// 1 < |y| < 1/|q| and truncated to exactly the requested window.
inline QYSeries closed_form_series(int lambency, const std::string& cls, const Rational& q_max,
                                   const Rational& y_floor,
                                   unsigned order = default_cyclotomic_order()) {
  const ClosedFormula& f = closed_formula(lambency, cls);
  // Blocks carry three extra q-orders: inverting the denominator costs twice
  // its leading q-offset (at most 25/24 across the catalog), and the final
  // product must still cover q_max.
  const Rational qb = q_max + 3;
  auto product_of = [&](const std::vector<BlockSpec>& blocks) -> std::optional<QYSeries> {
    std::optional<QYSeries> acc;
    for (const BlockSpec& b : blocks) {
      QYSeries s = block_series(b, qb, order);
      acc = acc ? *acc * s : std::move(s);
    }
    return acc;
  };
  std::optional<QYSeries> numerator;
  for (const FormulaBranch& br : f.branches) {
    std::optional<QYSeries> term = product_of(br.blocks);
    if (!term) throw format_error("closed formula branch for " + cls + " has no blocks");
    if (br.sign < 0) *term = -*term;
    numerator = numerator ? *numerator + *term : std::move(*term);
  }
  if (auto common = product_of(f.common)) *numerator = *numerator * *common;
  std::optional<QYSeries> den = product_of(f.denominator);
  if (!den) throw format_error("closed formula for " + cls + " has an empty denominator");

  const Rational num_top = numerator->max_y_exponent().value();
  const Rational num_qmin = numerator->sound_q_support_min().value();
  const QYSeries den_inv = QYSeries::invert_unit(*den, y_floor - num_top, q_max - num_qmin);
  QYSeries out = *numerator * den_inv;
  if (!out.q_max() || *out.q_max() < q_max || !out.y_floor() || *out.y_floor() > y_floor)
    throw window_error("closed-form expansion fell short of the requested window");
  return out.truncated(q_max, y_floor).scaled(f.i_scale * Cyc::i(order));
}

// F = psi + chi mu^0_{m,0} + chibar mu^1_{m,0}: adding back the polar Appell
// parts weighted by the Euler characters leaves the part of the decomposition
// spanned by the pure theta components, computed on psi's own window.
inline QYSeries finite_part(int lambency, const std::string& cls, const QYSeries& psi) {
  if (!psi.q_max() || !psi.y_floor())
    throw window_error("finite part needs a series with a bounded window");
  const unsigned order = psi.cyc_order();
  const EulerCharacters& euler = euler_characters(lambency);
  const CharacterTable& tg = trace_group(lambency);
  // Euler columns at lambencies 4 and 5 are indexed by classes of the ambient
  // group; route subgroup classes through the fusion map.
  const std::string& label = tg.has_fusion() ? tg.fused_label(cls) : cls;
  const Cyc& chi = euler.chi_of(label);
  const Cyc& chibar = euler.chibar_of(label);
  const Rational& qm = *psi.q_max();
  const Rational& yf = *psi.y_floor();
  QYSeries out = psi;
  if (!chi.is_zero()) out = out + mu_parity(lambency, 0, qm, yf, order).scaled(chi);
  if (!chibar.is_zero()) out = out + mu_parity(lambency, 1, qm, yf, order).scaled(chibar);
  return out;
}

// c_r(n) = [q^n y^r] F: the coefficient of q^{n - r^2/4m} in the residue-r
// component.  Rows r = 0..m, columns n = 0..n_count-1.
inline std::vector<std::vector<Cyc>> mock_coefficients(int lambency, const QYSeries& finite,
                                                       long n_count = 5) {
  std::vector<std::vector<Cyc>> rows;
  rows.reserve(static_cast<std::size_t>(lambency) + 1);
  for (long r = 0; r <= lambency; ++r) {
    std::vector<Cyc> row;
    row.reserve(static_cast<std::size_t>(n_count));
    for (long n = 0; n < n_count; ++n) row.push_back(finite.coeff(n, r));
    rows.push_back(std::move(row));
  }
  return rows;
}

struct MockReport {
  bool polar_ok = true;     // q^0 column is exactly -2y + 2y^{-1}
  bool boundary_ok = true;  // residues 0 and +-m carry no coefficients
  bool odd_ok = true;       // negating the residue negates the coefficients
  bool window_ok = true;    // [q^n y^rho] F = [q^{n+m-rho} y^{rho-2m}] F
  std::vector<std::string> failures;
  bool ok() const { return polar_ok && boundary_ok && odd_ok && window_ok; }
};

// Structural identities the finite part must satisfy if it really is a sum of
// residue components against the pure theta functions, checked on the first
// n_count coefficients of every residue.  Requires the window of `finite` to
// reach q_max >= m + n_count - 2 and y_floor <= 1 - 2m.
inline MockReport check_mock_structure(int lambency, const QYSeries& finite, long n_count = 5) {
  const long m = lambency;
  MockReport rep;
  auto note = [&rep](bool& flag, std::string msg) {
    flag = false;
    rep.failures.push_back(std::move(msg));
  };
  const unsigned order = finite.cyc_order();
  for (long e = 1 - 2 * m; e <= 2 * m; ++e) {
    Cyc expect(0, order);
    if (e == 1) expect = Cyc(-2, order);
    if (e == -1) expect = Cyc(2, order);
    if (finite.coeff(0, e) != expect)
      note(rep.polar_ok, "polar part differs at y^" + std::to_string(e));
  }
  for (long n = 0; n < n_count; ++n) {
    for (long r : {long(0), m, -m})
      if (!finite.coeff(n, r).is_zero())
        note(rep.boundary_ok, "residue " + std::to_string(r) + " has a coefficient at q^" +
                                  std::to_string(n));
  }
  for (long r = 1; r < m; ++r)
    for (long n = 0; n < n_count; ++n)
      if (finite.coeff(n, -r) != -finite.coeff(n, r))
        note(rep.odd_ok, "odd symmetry fails at residue " + std::to_string(r) + ", q^" +
                             std::to_string(n));
  for (long rho = 1; rho <= m; ++rho)
    for (long n = 0; n < n_count; ++n)
      if (finite.coeff(n, rho) != finite.coeff(n + m - rho, rho - 2 * m))
        note(rep.window_ok, "strip-shift consistency fails at residue " + std::to_string(rho) +
                                ", q^" + std::to_string(n));
  return rep;
}

// The label of the eigenvalue-tabulated class whose trace functions class cls
// shares: either cls itself, or the unique tabulated class fusing to the same
// ambient class (such pairs have elementwise equal eigenvalue data).
inline const std::string& eigen_label(int lambency, const std::string& cls) {
  const EigenData& data = eigen_data(lambency);
  for (const EigenRow& r : data.rows)
    if (r.label == cls) return r.label;
  const CharacterTable& tg = trace_group(lambency);
  if (tg.has_fusion()) {
    const std::string& target = tg.fused_label(cls);
    const std::string* found = nullptr;
    for (const EigenRow& r : data.rows) {
      if (tg.fused_label(r.label) == target) {
        if (found) throw format_error("eigenvalue data for class " + cls + " is ambiguous");
        found = &r.label;
      }
    }
    if (found) return *found;
  }
  throw format_error("no eigenvalue data covers class " + cls + " at lambency " +
                     std::to_string(lambency));
}

struct MultiplicityEntry {
  long r = 0;                       // residue, 1..m-1
  long n = 0;                       // q-order index, 0..n_count-1
  std::vector<Cyc> multiplicities;  // one per irreducible character
  bool integral = false;            // all multiplicities are rational integers
};

// Decompose the class functions g -> [q^n y^r] F_g over the trace group, for
// every residue r = 1..m-1 and order n = 0..n_count-1.  `finite_by_label`
// holds the finite part per eigenvalue-tabulated class label.
inline std::vector<MultiplicityEntry> decompose_mock(
    int lambency, const std::map<std::string, QYSeries>& finite_by_label, long n_count = 5) {
  const CharacterTable& tg = trace_group(lambency);
  std::vector<MultiplicityEntry> out;
  for (long r = 1; r < lambency; ++r) {
    for (long n = 0; n < n_count; ++n) {
      std::vector<Cyc> values;
      values.reserve(tg.class_count());
      for (const std::string& cls : tg.classes)
        values.push_back(finite_by_label.at(eigen_label(lambency, cls)).coeff(n, r));
      MultiplicityEntry entry;
      entry.r = r;
      entry.n = n;
      entry.multiplicities = decompose_class_function(tg, values);
      entry.integral = true;
      for (const Cyc& mult : entry.multiplicities)
        if (!is_rational_integer(mult)) {
          entry.integral = false;
          break;
        }
      out.push_back(std::move(entry));
    }
  }
  return out;
}

}  // namespace umbral
