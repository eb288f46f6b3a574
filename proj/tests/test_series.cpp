// Bigraded truncated series: ring operations, window soundness, anchored-unit
// inversion, and Euler products.  Expected values are classical identities
// (pentagonal-number theorem, geometric series) or are cross-checked against
// an independent brute-force polynomial multiplier defined in this file.

#include <catch2/catch_amalgamated.hpp>

#include "umbral/euler_product.hpp"
#include "umbral/series.hpp"

#include <map>
#include <random>
#include <tuple>
#include <vector>

using umbral::Cyc;
using umbral::FactorFamily;
using umbral::Monomial;
using umbral::QYSeries;
using umbral::Rational;
using umbral::Int;
using umbral::euler_product;

namespace {

// Brute-force product: multiply every stored term pair.  Valid as a full
// ground truth only when both operands are exact (finite) objects.
QYSeries naive_product(const QYSeries& a, const QYSeries& b) {
  const long den = std::lcm(a.q_den(), b.q_den());
  QYSeries out(std::max(a.cyc_order(), b.cyc_order()), a.q_offset() + b.q_offset(),
               a.y_offset() + b.y_offset(), den);
  for (const auto& [ja, cola] : a.columns())
    for (const auto& [ka, va] : cola)
      for (const auto& [jb, colb] : b.columns())
        for (const auto& [kb, vb] : colb)
          out.add_term(ja * (den / a.q_den()) + jb * (den / b.q_den()), ka + kb, va * vb);
  return out;
}

struct Rng {
  std::mt19937 gen;
  explicit Rng(unsigned seed) : gen(seed) {}
  long pick(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); }
  Cyc coeff() {
    switch (pick(0, 6)) {
      case 0: return Cyc(1);
      case 1: return Cyc(-1);
      case 2: return Cyc(2);
      case 3: return Cyc(Rational(1, 2));
      case 4: return Cyc::i();
      case 5: return Cyc::root_term(3, 1);
      default: return Cyc(-1) * Cyc::root_term(8, 1);
    }
  }
  // A random exact object: finitely many terms, no truncation windows.
  QYSeries exact_poly(bool integer_y_offset) {
    const long den = pick(0, 1) ? 2 : 1;
    Rational q_off = Rational(pick(-2, 2), 2);
    if (den == 1) q_off = Rational(pick(-1, 1));
    const Rational y_off = integer_y_offset ? Rational(pick(-1, 1)) : Rational(pick(-2, 3), 2);
    QYSeries s(168, q_off, y_off, den);
    const long nterms = pick(1, 6);
    for (long t = 0; t < nterms; ++t) s.add_term(pick(0, 4), pick(-4, 4), coeff());
    return s;
  }
};

}  // namespace

TEST_CASE("pentagonal-number sparsity of the Euler function", "[series][euler]") {
  // prod (1 - q^n) = sum_k (-1)^k q^{k(3k-1)/2}; nonzero exponents up to 30
  // are 0,1,2,5,7,12,15,22,26 with signs +,-,-,+,+,-,-,+,+.
  QYSeries e = euler_product({Cyc(1), 0, 0}, {{Cyc(1), 0, 1, 1, +1}}, 30);
  CHECK_FALSE(e.y_floor().has_value());
  REQUIRE(e.q_max().has_value());
  CHECK(*e.q_max() == 30);
  const std::map<long, int> expected = {{0, 1},  {1, -1},  {2, -1}, {5, 1},  {7, 1},
                                        {12, -1}, {15, -1}, {22, 1}, {26, 1}};
  for (long n = 0; n <= 30; ++n) {
    auto it = expected.find(n);
    Cyc want(it == expected.end() ? 0 : it->second);
    INFO("q-exponent " << n);
    CHECK(e.coeff(n, 0) == want);
  }
}

TEST_CASE("half-integer exponent grids multiply consistently", "[series][euler]") {
  // prod (1 - q^{n-1/2}) starts 1 - q^{1/2} - q^{3/2} + q^2 - q^{5/2} + q^3.
  QYSeries h = euler_product({Cyc(1), 0, 0}, {{Cyc(1), 0, Rational(1, 2), 1, +1}}, 6);
  CHECK(h.coeff(0, 0) == Cyc(1));
  CHECK(h.coeff(Rational(1, 2), 0) == Cyc(-1));
  CHECK(h.coeff(1, 0) == Cyc(0));
  CHECK(h.coeff(Rational(3, 2), 0) == Cyc(-1));
  CHECK(h.coeff(2, 0) == Cyc(1));
  CHECK(h.coeff(Rational(5, 2), 0) == Cyc(-1));
  CHECK(h.coeff(3, 0) == Cyc(1));

  // prod(1 - q^{n-1/2}) * prod(1 - q^n) = prod(1 - q^{n/2}).
  QYSeries p = euler_product({Cyc(1), 0, 0}, {{Cyc(1), 0, 1, 1, +1}}, 6);
  QYSeries both = euler_product({Cyc(1), 0, 0}, {{Cyc(1), 0, Rational(1, 2), Rational(1, 2), +1}}, 6);
  CHECK_FALSE(first_mismatch(h * p, both).has_value());
}

TEST_CASE("downward geometric inversion matches the closed form", "[series][invert]") {
  // (2 - 1/y)^{-1} = 1/2 + y^{-1}/4 + y^{-2}/8 + ...
  QYSeries f(168, 0, 0, 1);
  f.add_term(0, 0, Cyc(2));
  f.add_term(0, -1, Cyc(-1));
  QYSeries inv = QYSeries::invert_unit(f, Rational(-10), Rational(4));
  for (long k = 0; k >= -10; --k) {
    INFO("y-exponent " << k);
    CHECK(inv.coeff(0, k) == Cyc(Rational(1, Int(1) << static_cast<unsigned>(1 - k))));
  }
  // Exact in q: columns above q^0 vanish.
  CHECK(inv.coeff(3, 0) == Cyc(0));
  REQUIRE(inv.y_floor().has_value());
  CHECK(*inv.y_floor() == -10);
}

TEST_CASE("units must be anchored at the declared y-grid origin", "[series][invert]") {
  // 1 - 3 y^2 would need ascending powers of y: not a unit for this region.
  QYSeries bad(168, 0, 0, 1);
  bad.add_term(0, 0, Cyc(1));
  bad.add_term(0, 2, Cyc(-3));
  CHECK_THROWS_AS(QYSeries::invert_unit(bad, Rational(-5), Rational(3)), umbral::window_error);

  // The same Laurent polynomial anchored one step higher is a unit:
  // y - 1 = y(1 - 1/y) inverts to y^{-1} + y^{-2} + ...
  QYSeries good(168, 0, 1, 1);
  good.add_term(0, 0, Cyc(1));    // y^1
  good.add_term(0, -1, Cyc(-1));  // -y^0
  QYSeries inv = QYSeries::invert_unit(good, Rational(-6), Rational(2));
  for (long e = -1; e >= -6; --e) CHECK(inv.coeff(0, e) == Cyc(1));

  // Inverting a series with a vanishing anchor coefficient is also refused.
  QYSeries hollow(168, 0, 0, 1);
  hollow.add_term(0, -1, Cyc(1));
  hollow.add_term(1, 0, Cyc(1));
  CHECK_THROWS_AS(QYSeries::invert_unit(hollow, Rational(-5), Rational(3)), umbral::window_error);
}

TEST_CASE("inverses of y-exact units stay y-exact", "[series][invert]") {
  // (1 - q)^{-1} = 1 + q + q^2 + ... with no y-content at all.
  QYSeries f(168, 0, 0, 1);
  f.add_term(0, 0, Cyc(1));
  f.add_term(1, 0, Cyc(-1));
  QYSeries inv = QYSeries::invert_unit(f, std::nullopt, Rational(12));
  CHECK_FALSE(inv.y_floor().has_value());
  for (long n = 0; n <= 12; ++n) CHECK(inv.coeff(n, 0) == Cyc(1));

  // A q-exact series must be given a target q_max.
  CHECK_THROWS_AS(QYSeries::invert_unit(f), std::invalid_argument);
}

TEST_CASE("empty windows are rejected rather than reported as agreement", "[series]") {
  QYSeries a = QYSeries::monomial(Cyc(1), 5, 0);
  QYSeries b = QYSeries::monomial(Cyc(2), 5, 0);
  QYSeries at = a.truncated(Rational(1), std::nullopt);
  QYSeries bt = b.truncated(Rational(1), std::nullopt);
  // Both truncations store nothing and their windows end below the first
  // possible exponent: comparing them proves nothing.
  CHECK_THROWS_AS(first_mismatch(at, bt), umbral::window_error);

  CHECK_THROWS_AS(euler_product({Cyc(1), 3, 0}, {}, Rational(2)), umbral::window_error);
}

TEST_CASE("product windows only contain true coefficients", "[series][property]") {
  Rng rng(11u);
  for (int trial = 0; trial < 400; ++trial) {
    INFO("trial " << trial);
    QYSeries a = rng.exact_poly(false);
    QYSeries b = rng.exact_poly(false);
    QYSeries full = a * b;  // exact operands: exact ground truth
    REQUIRE_FALSE(full.q_max().has_value());
    REQUIRE_FALSE(full.y_floor().has_value());
    CHECK_FALSE(first_mismatch(full, naive_product(a, b)).has_value());

    QYSeries at = a.truncated(a.q_offset() + Rational(rng.pick(0, 8), 2), Rational(rng.pick(-5, 0)));
    QYSeries bt = b.truncated(b.q_offset() + Rational(rng.pick(0, 8), 2), Rational(rng.pick(-5, 0)));
    QYSeries prod = at * bt;
    // Every coefficient inside the claimed window must match the full product.
    CHECK_FALSE(first_mismatch(prod, full).has_value());
  }
}

TEST_CASE("sum windows only contain true coefficients", "[series][property]") {
  Rng rng(22u);
  for (int trial = 0; trial < 200; ++trial) {
    INFO("trial " << trial);
    QYSeries a = rng.exact_poly(true);
    QYSeries b = rng.exact_poly(true);
    QYSeries full = a + b;
    QYSeries at = a.truncated(a.q_offset() + Rational(rng.pick(0, 8), 2), Rational(rng.pick(-5, 0)));
    QYSeries bt = b.truncated(b.q_offset() + Rational(rng.pick(0, 8), 2), Rational(rng.pick(-5, 0)));
    CHECK_FALSE(first_mismatch(at + bt, full).has_value());
    // Ring sanity on the exact objects.
    CHECK_FALSE(first_mismatch(a + b, b + a).has_value());
    CHECK_FALSE(first_mismatch((a - b) + b, a).has_value());
  }
}

TEST_CASE("random anchored units invert to two-sided inverses", "[series][invert][property]") {
  Rng rng(33u);
  for (int trial = 0; trial < 200; ++trial) {
    INFO("trial " << trial);
    QYSeries u(168, Rational(rng.pick(-1, 1)), Rational(rng.pick(-1, 1)), 1);
    Cyc c0 = rng.coeff();
    u.add_term(0, 0, c0);
    const long extras = rng.pick(0, 4);
    for (long t = 0; t < extras; ++t) {
      if (rng.pick(0, 2) == 0)
        u.add_term(0, rng.pick(-3, -1), rng.coeff());  // anchor-column tail
      else
        u.add_term(rng.pick(1, 3), rng.pick(-3, 3), rng.coeff());
    }
    QYSeries inv = QYSeries::invert_unit(u, Rational(-9), u.q_offset() + 3);
    QYSeries prod = u * inv;
    CHECK_FALSE(first_mismatch(prod, QYSeries::one()).has_value());
    // The anchor of the inverse is the inverse of the anchor.
    CHECK(inv.coeff(-u.q_offset(), -u.y_offset()) == c0.inverse());
  }
}

TEST_CASE("euler products respect factor-set splitting", "[series][euler][property]") {
  Rng rng(44u);
  for (int trial = 0; trial < 200; ++trial) {
    INFO("trial " << trial);
    std::vector<FactorFamily> all, half1, half2;
    const long nfam = rng.pick(2, 4);
    for (long t = 0; t < nfam; ++t) {
      FactorFamily f;
      f.coeff = rng.coeff();
      f.sign = rng.pick(0, 1) ? +1 : -1;
      switch (rng.pick(0, 2)) {
        case 0: f.start = 0; f.step = 1; break;
        case 1: f.start = Rational(1, 2); f.step = 1; break;
        default: f.start = 1; f.step = 2; break;
      }
      f.y_exp = (f.sign == -1 && f.start == 0) ? rng.pick(-3, -1) : rng.pick(-3, 3);
      all.push_back(f);
      (rng.pick(0, 1) ? half1 : half2).push_back(f);
    }
    const Monomial lead{Cyc(1), 0, 0};
    QYSeries whole = euler_product(lead, all, 4, Rational(-12));
    QYSeries parts = euler_product(lead, half1, 4, Rational(-12)) *
                     euler_product(lead, half2, 4, Rational(-12));
    CHECK_FALSE(first_mismatch(whole, parts).has_value());
  }
}
