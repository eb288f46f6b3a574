#pragma once

// Closed-form expressions for the meromorphic Jacobi forms attached to the
// conjugacy classes of the umbral groups at lambencies 4, 5, 7 and 13.  Each
// form is a quotient of eta and theta blocks,
//
//     i_scale * i * prod(common) * sum_b sign_b prod(branch_b) / prod(den),
//
// where every block is eta(k tau), theta_1(k tau, a z + c) or
// theta_2(k tau, a z + c) with the shift c measured in full turns.  Formulas
// carrying a merged key such as "4AB" serve every class the key expands to;
// classes listed in conjugate_alias share a formula with their inverse class
// (the symmetrized trace is invariant under elementwise conjugation of the
// eigenvalue data); remaining classes resolve through the subgroup fusion map.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "umbral/groups.hpp"
#include "umbral/rational.hpp"
#include "umbral/table_format.hpp"

namespace umbral {

struct BlockSpec {
  enum class Kind { eta, theta1, theta2 };
  Kind kind = Kind::eta;
  long k = 1;      // tau multiplier
  long a = 0;      // z multiplier (theta blocks only)
  Rational c = 0;  // shift in full turns (theta blocks only)
};

inline BlockSpec eta_spec(long k) { return {BlockSpec::Kind::eta, k, 0, Rational(0)}; }
inline BlockSpec th1_spec(long k, long a, Rational c = Rational(0)) {
  return {BlockSpec::Kind::theta1, k, a, std::move(c)};
}
inline BlockSpec th2_spec(long k, long a, Rational c = Rational(0)) {
  return {BlockSpec::Kind::theta2, k, a, std::move(c)};
}

// One signed product of blocks contributing to the numerator sum.
struct FormulaBranch {
  int sign = +1;
  std::vector<BlockSpec> blocks;
};

struct ClosedFormula {
  std::string key;    // class label (possibly merged) the formula is filed under
  Rational i_scale;   // the full prefactor is i_scale * i
  std::vector<BlockSpec> common;        // numerator factors shared by all branches
  std::vector<FormulaBranch> branches;  // at least one
  std::vector<BlockSpec> denominator;
};

inline const std::vector<ClosedFormula>& closed_formulas(int lambency) {
  static const std::vector<ClosedFormula> l7 = [] {
    const Rational third(1, 3);
    std::vector<ClosedFormula> v;
    v.push_back({"1A",
                 2,
                 {},
                 {{+1, {eta_spec(1), eta_spec(1), eta_spec(1), th1_spec(1, 4)}}},
                 {th1_spec(1, 1), th1_spec(1, 1)}});
    v.push_back({"2A",
                 -2,
                 {},
                 {{+1, {eta_spec(1), eta_spec(1), eta_spec(1), th1_spec(1, 4)}}},
                 {th2_spec(1, 1), th2_spec(1, 1)}});
    v.push_back({"4A",
                 -2,
                 {},
                 {{+1, {eta_spec(1), eta_spec(2), th1_spec(1, 4)}}},
                 {th2_spec(2, 2)}});
    v.push_back({"3A",
                 -1,
                 {eta_spec(3)},
                 {{+1, {th1_spec(1, 4, third), th1_spec(1, 1, -third)}},
                  {+1, {th1_spec(1, 4, -third), th1_spec(1, 1, third)}}},
                 {th1_spec(3, 3)}});
    v.push_back({"6A",
                 -1,
                 {eta_spec(3)},
                 {{+1, {th1_spec(1, 4, third), th2_spec(1, 1, -third)}},
                  {+1, {th1_spec(1, 4, -third), th2_spec(1, 1, third)}}},
                 {th2_spec(3, 3)}});
    return v;
  }();

  static const std::vector<ClosedFormula> l13 = [] {
    const Rational quarter(1, 4);
    std::vector<ClosedFormula> v;
    v.push_back({"1A",
                 2,
                 {},
                 {{+1, {eta_spec(1), eta_spec(1), eta_spec(1), th1_spec(1, 6)}}},
                 {th1_spec(1, 1), th1_spec(1, 3)}});
    v.push_back({"2A",
                 -2,
                 {},
                 {{+1, {eta_spec(1), eta_spec(1), eta_spec(1), th1_spec(1, 6)}}},
                 {th2_spec(1, 1), th2_spec(1, 3)}});
    v.push_back({"4AB",
                 -1,
                 {eta_spec(2), eta_spec(2), th2_spec(1, 6)},
                 {{+1, {th1_spec(1, 1, quarter), th1_spec(1, 3, quarter)}},
                  {-1, {th1_spec(1, 1, -quarter), th1_spec(1, 3, -quarter)}}},
                 {eta_spec(1), th2_spec(2, 2), th2_spec(2, 6)}});
    return v;
  }();

  static const std::vector<ClosedFormula> l4 = [] {
    std::vector<ClosedFormula> v;
    v.push_back({"1A",
                 2,
                 {},
                 {{+1,
                   {eta_spec(1), eta_spec(1), eta_spec(1), th1_spec(1, 2), th1_spec(1, 2),
                    th1_spec(1, 2)}}},
                 {th1_spec(1, 1), th1_spec(1, 1), th1_spec(1, 1), th1_spec(1, 1)}});
    v.push_back({"2A",
                 2,
                 {},
                 {{+1,
                   {eta_spec(1), eta_spec(1), eta_spec(1), th1_spec(1, 2), th1_spec(1, 2),
                    th1_spec(1, 2)}}},
                 {th2_spec(1, 1), th2_spec(1, 1), th2_spec(1, 1), th2_spec(1, 1)}});
    v.push_back({"4A",
                 -2,
                 {},
                 {{+1, {eta_spec(2), eta_spec(2), th1_spec(1, 2), th2_spec(1, 2), th2_spec(1, 2)}}},
                 {eta_spec(1), th2_spec(2, 2), th2_spec(2, 2)}});
    v.push_back({"3A",
                 2,
                 {},
                 {{+1, {eta_spec(1), eta_spec(1), eta_spec(1), th1_spec(3, 6)}}},
                 {th1_spec(1, 1), th1_spec(3, 3)}});
    v.push_back({"6A",
                 -2,
                 {},
                 {{+1, {eta_spec(1), eta_spec(1), eta_spec(1), th1_spec(3, 6)}}},
                 {th2_spec(1, 1), th2_spec(3, 3)}});
    v.push_back({"8A",
                 -2,
                 {},
                 {{+1, {eta_spec(1), eta_spec(4), th1_spec(1, 2), th2_spec(2, 4)}}},
                 {eta_spec(2), th2_spec(4, 4)}});
    const Rational c1(1, 7), c2(2, 7), c4(4, 7);
    v.push_back({"7AB",
                 -1,
                 {eta_spec(7)},
                 {{+1,
                   {th1_spec(1, 2, c1), th1_spec(1, 2, c2), th1_spec(1, 2, c4),
                    th1_spec(1, 1, -c1), th1_spec(1, 1, -c2), th1_spec(1, 1, -c4)}},
                  {+1,
                   {th1_spec(1, 2, -c1), th1_spec(1, 2, -c2), th1_spec(1, 2, -c4),
                    th1_spec(1, 1, c1), th1_spec(1, 1, c2), th1_spec(1, 1, c4)}}},
                 {eta_spec(1), eta_spec(1), eta_spec(1), eta_spec(1), th1_spec(7, 7)}});
    v.push_back({"14AB",
                 1,
                 {eta_spec(7)},
                 {{+1,
                   {th1_spec(1, 2, c1), th1_spec(1, 2, c2), th1_spec(1, 2, c4),
                    th2_spec(1, 1, -c1), th2_spec(1, 1, -c2), th2_spec(1, 1, -c4)}},
                  {+1,
                   {th1_spec(1, 2, -c1), th1_spec(1, 2, -c2), th1_spec(1, 2, -c4),
                    th2_spec(1, 1, c1), th2_spec(1, 1, c2), th2_spec(1, 1, c4)}}},
                 {eta_spec(1), eta_spec(1), eta_spec(1), eta_spec(1), th2_spec(7, 7)}});
    return v;
  }();

  static const std::vector<ClosedFormula> l5 = [] {
    const Rational quarter(1, 4), twelfth(1, 12), five_twelfths(5, 12);
    std::vector<ClosedFormula> v;
    v.push_back({"1A",
                 2,
                 {},
                 {{+1, {eta_spec(1), eta_spec(1), eta_spec(1), th1_spec(1, 2), th1_spec(1, 3)}}},
                 {th1_spec(1, 1), th1_spec(1, 1), th1_spec(1, 1)}});
    v.push_back({"2A",
                 -2,
                 {},
                 {{+1, {eta_spec(1), eta_spec(1), eta_spec(1), th1_spec(1, 2), th2_spec(1, 3)}}},
                 {th2_spec(1, 1), th2_spec(1, 1), th2_spec(1, 1)}});
    v.push_back({"2B",
                 -2,
                 {},
                 {{+1, {eta_spec(1), eta_spec(1), eta_spec(1), th1_spec(1, 2), th1_spec(1, 3)}}},
                 {th1_spec(1, 1), th2_spec(1, 1), th2_spec(1, 1)}});
    v.push_back({"2C",
                 2,
                 {},
                 {{+1, {eta_spec(1), eta_spec(1), eta_spec(1), th1_spec(1, 2), th2_spec(1, 3)}}},
                 {th1_spec(1, 1), th1_spec(1, 1), th2_spec(1, 1)}});
    v.push_back({"3A",
                 -2,
                 {},
                 {{+1, {eta_spec(3), th1_spec(1, 2), th1_spec(1, 3)}}},
                 {th1_spec(3, 3)}});
    v.push_back({"6A",
                 -2,
                 {},
                 {{+1, {eta_spec(3), th1_spec(1, 2), th2_spec(1, 3)}}},
                 {th2_spec(3, 3)}});
    v.push_back({"4AB",
                 -1,
                 {eta_spec(2), eta_spec(2), th2_spec(1, 2)},
                 {{+1, {th1_spec(1, 1, quarter), th1_spec(1, 3, quarter)}},
                  {-1, {th1_spec(1, 1, -quarter), th1_spec(1, 3, -quarter)}}},
                 {eta_spec(1), th2_spec(2, 2), th2_spec(2, 2)}});
    v.push_back({"12AB",
                 1,
                 {eta_spec(6), th2_spec(1, 2)},
                 {{+1,
                   {th1_spec(1, 1, twelfth), th1_spec(1, 1, quarter), th1_spec(1, 1, five_twelfths),
                    th1_spec(1, 3, -quarter)}},
                  {-1,
                   {th1_spec(1, 1, -twelfth), th1_spec(1, 1, -quarter),
                    th1_spec(1, 1, -five_twelfths), th1_spec(1, 3, quarter)}}},
                 {eta_spec(1), eta_spec(1), eta_spec(1), th2_spec(6, 6)}});
    return v;
  }();

  switch (lambency) {
    case 4: return l4;
    case 5: return l5;
    case 7: return l7;
    case 13: return l13;
    default: throw format_error("no closed formulas for lambency " + std::to_string(lambency));
  }
}

// Classes whose eigenvalue data is the elementwise conjugate of the keyed
// class.  The symmetrized trace adds the contribution of the conjugated data
// to that of the data itself, so both classes share one closed form.
inline const std::map<std::string, std::string>& conjugate_aliases(int lambency) {
  static const std::map<std::string, std::string> l7{{"3B", "3A"}, {"6B", "6A"}};
  static const std::map<std::string, std::string> none{};
  return lambency == 7 ? l7 : none;
}

// The key of the closed formula covering class cls at the given lambency.
inline const std::string& formula_key(int lambency, const std::string& cls) {
  const auto& formulas = closed_formulas(lambency);
  for (const auto& f : formulas) {
    if (f.key == cls) return f.key;
    if (f.key.size() > cls.size()) {
      for (const auto& expanded : expand_class_label(f.key))
        if (expanded == cls) return f.key;
    }
  }
  const auto& aliases = conjugate_aliases(lambency);
  if (auto it = aliases.find(cls); it != aliases.end()) return formula_key(lambency, it->second);
  const CharacterTable& tg = trace_group(lambency);
  if (tg.has_fusion()) {
    const std::string& fused = tg.fused_label(cls);
    if (fused != cls) return formula_key(lambency, fused);
  }
  throw format_error("no closed formula covers class " + cls + " at lambency " +
                     std::to_string(lambency));
}

inline const ClosedFormula& closed_formula(int lambency, const std::string& cls) {
  const std::string& key = formula_key(lambency, cls);
  for (const auto& f : closed_formulas(lambency))
    if (f.key == key) return f;
  throw format_error("formula lookup failed for class " + cls);  // unreachable
}

}  // namespace umbral
