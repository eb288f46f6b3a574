// Engine-level checks: trace products against an independent constant-term
// expansion, agreement of the two computation pipelines on small windows, the
// universal polar part of the finite parts, the structural identities of the
// residue extraction, and integrality of the character decomposition.

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <string>
#include <vector>

#include "umbral/engine.hpp"

using namespace umbral;

namespace {

// A single q-column as a Laurent polynomial in y, truncated below.
using YCol = std::map<long, Cyc>;

YCol ycol_mul(const YCol& a, const YCol& b, long floor) {
  YCol out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      const long e = ea + eb;
      if (e < floor) continue;
      Cyc prod = ca * cb;
      if (prod.is_zero()) continue;
      auto [it, fresh] = out.try_emplace(e, prod);
      if (!fresh) it->second += prod;
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

YCol binomial_col(const Cyc& c, long w) {  // 1 - c y^{-w}
  YCol out;
  out[0] = Cyc(1);
  out[-w] = -c;
  return out;
}

YCol geometric_col(const Cyc& c, long w, long floor) {  // 1 / (1 - c y^{-w})
  YCol out;
  Cyc power(1);
  for (long e = 0; e >= floor; e -= w) {
    out[e] = power;
    power = power * c;
  }
  return out;
}

// The q^0 column of one trace summand, derived directly from the factors that
// survive at q^0: -y prod_cliff (1 - conj(l) y^{-w}) / prod_weyl (...).
YCol summand_constant_column(const EigenData& data, const EigenRow& row, bool conjugate,
                             long floor) {
  const long wf = floor - 1;  // the leading -y raises every exponent by one
  YCol acc;
  acc[0] = Cyc(1);
  for (std::size_t s = 0; s < data.sectors.size(); ++s) {
    const Sector& sec = data.sectors[s];
    for (const Cyc& tabulated : row.eigenvalues.at(s)) {
      const Cyc ev = conjugate ? tabulated.conj() : tabulated;
      if (sec.kind == SectorKind::clifford)
        acc = ycol_mul(acc, binomial_col(ev.conj(), sec.charge), wf);
      else
        acc = ycol_mul(acc, geometric_col(ev.conj(), sec.charge, wf), wf);
    }
  }
  YCol out;
  for (const auto& [e, c] : acc)
    if (e + 1 >= floor) out[e + 1] = -c;
  return out;
}

YCol expected_constant_column(int lambency, const std::string& cls, long floor) {
  const EigenData& data = eigen_data(lambency);
  const EigenRow& row = data.row(cls);
  YCol a = summand_constant_column(data, row, false, floor);
  const YCol b = summand_constant_column(data, row, true, floor);
  for (const auto& [e, c] : b) {
    auto [it, fresh] = a.try_emplace(e, c);
    if (!fresh) it->second += c;
  }
  return a;
}

void require_constant_column_matches(int lambency, const std::string& cls, long floor) {
  INFO("lambency " << lambency << ", class " << cls);
  const QYSeries trace = trace_product(lambency, cls, 2, floor);
  const YCol expected = expected_constant_column(lambency, cls, floor);
  for (long e = floor; e <= 1; ++e) {
    INFO("y exponent " << e);
    auto it = expected.find(e);
    const Cyc want = it == expected.end() ? Cyc(0) : it->second;
    REQUIRE(trace.coeff(0, e) == want);
  }
}

}  // namespace

TEST_CASE("classes resolve to formulas and eigenvalue rows") {
  CHECK(formula_key(7, "1A") == "1A");
  CHECK(formula_key(7, "3B") == "3A");
  CHECK(formula_key(7, "6B") == "6A");
  CHECK(formula_key(13, "4A") == "4AB");
  CHECK(formula_key(13, "4B") == "4AB");
  CHECK(formula_key(4, "7B") == "7AB");
  CHECK(formula_key(4, "14A") == "14AB");
  CHECK(formula_key(4, "8B") == "8A");
  CHECK(formula_key(5, "4C") == "4AB");
  CHECK(formula_key(5, "4D") == "4AB");
  CHECK(formula_key(5, "12B") == "12AB");
  CHECK_THROWS_AS(formula_key(7, "5A"), format_error);
  CHECK_THROWS_AS(formula_key(6, "1A"), format_error);

  CHECK(eigen_label(7, "3B") == "3B");  // has its own tabulated row
  CHECK(eigen_label(4, "8B") == "8A");
  CHECK(eigen_label(5, "4C") == "4A");
  CHECK(eigen_label(5, "4D") == "4B");
  CHECK(eigen_label(4, "14B") == "14B");
  CHECK_THROWS_AS(eigen_label(7, "9Z"), format_error);

  // Every class of every trace group is covered by both resolutions.
  for (int lambency : {4, 5, 7, 13})
    for (const std::string& cls : trace_group(lambency).classes) {
      CHECK_NOTHROW(formula_key(lambency, cls));
      CHECK_NOTHROW(eigen_label(lambency, cls));
    }
}

TEST_CASE("trace products match an independent constant-term expansion") {
  for (const std::string& cls : {"1A", "2A", "4A", "3A", "6A", "3B", "6B"})
    require_constant_column_matches(7, cls, -12);
  for (const std::string& cls : {"1A", "2A", "4A", "4B"})
    require_constant_column_matches(13, cls, -12);
  for (const std::string& cls : {"1A", "4A", "8A", "7A", "14B"})
    require_constant_column_matches(4, cls, -12);
  for (const std::string& cls : {"1A", "2C", "4B", "12A"})
    require_constant_column_matches(5, cls, -12);
}

TEST_CASE("lambency seven constant terms match hand expansions") {
  const QYSeries t1 = trace_product(7, "1A", 2, -10);
  CHECK(t1.coeff(0, 1) == Cyc(-2));
  CHECK(t1.coeff(0, 0) == Cyc(-4));
  CHECK(t1.coeff(0, -1) == Cyc(-6));
  for (long e = -2; e >= -10; --e) CHECK(t1.coeff(0, e) == Cyc(-8));

  const QYSeries t2 = trace_product(7, "2A", 2, -10);
  CHECK(t2.coeff(0, 1) == Cyc(-2));
  CHECK(t2.coeff(0, 0) == Cyc(4));
  CHECK(t2.coeff(0, -1) == Cyc(-6));
  for (long e = -2; e >= -10; --e) CHECK(t2.coeff(0, e) == Cyc(e % 2 == 0 ? 8 : -8));
}

TEST_CASE("product and closed sides agree on small windows") {
  const std::vector<std::tuple<int, std::string, Rational, Rational>> cases = {
      {7, "1A", 4, -10}, {7, "3B", 3, -8},  {7, "6A", 3, -10}, {7, "6B", 3, -8},
      {13, "4A", 3, -8}, {4, "7A", 3, -8},  {4, "4A", 3, -8},  {5, "12B", 3, -8},
      {5, "2C", 3, -8},
  };
  for (const auto& [lambency, cls, qm, yf] : cases) {
    INFO("lambency " << lambency << ", class " << cls);
    const QYSeries prod = trace_product(lambency, cls, qm, yf);
    const QYSeries closed = closed_form_series(lambency, cls, qm, yf);
    REQUIRE(closed.q_max().has_value());
    CHECK(*closed.q_max() == qm);
    REQUIRE(closed.y_floor().has_value());
    CHECK(*closed.y_floor() == yf);
    const auto mismatch = first_mismatch(prod, closed);
    INFO((mismatch ? "first mismatch at q^" + to_string(mismatch->q_exp) + " y^" +
                         to_string(mismatch->y_exp) + ": " + mismatch->lhs.str() + " vs " +
                         mismatch->rhs.str()
                   : std::string("no mismatch")));
    CHECK_FALSE(mismatch.has_value());
  }
}

TEST_CASE("different classes give different closed forms") {
  const QYSeries a = closed_form_series(7, "1A", 3, -8);
  const QYSeries b = closed_form_series(7, "2A", 3, -8);
  CHECK(first_mismatch(a, b).has_value());
}

TEST_CASE("finite parts collapse to the universal polar part") {
  for (int lambency : {4, 5, 7, 13}) {
    const long m = lambency;
    for (const EigenRow& row : eigen_data(lambency).rows) {
      INFO("lambency " << lambency << ", class " << row.label);
      const QYSeries trace = trace_product(lambency, row.label, 2, 1 - 2 * m);
      const QYSeries finite = finite_part(lambency, row.label, trace);
      for (long e = 1 - 2 * m; e <= 2 * m; ++e) {
        INFO("y exponent " << e);
        Cyc want(0);
        if (e == 1) want = Cyc(-2);
        if (e == -1) want = Cyc(2);
        CHECK(finite.coeff(0, e) == want);
      }
    }
  }
}

TEST_CASE("mock structure checks pass at lambency seven") {
  const QYSeries trace = trace_product(7, "1A", 10, -16);
  const QYSeries finite = finite_part(7, "1A", trace);
  const MockReport rep = check_mock_structure(7, finite);
  INFO((rep.failures.empty() ? std::string("clean") : rep.failures.front()));
  CHECK(rep.ok());
  CHECK(rep.failures.empty());

  const auto rows = mock_coefficients(7, finite);
  REQUIRE(rows.size() == 8);
  for (const Cyc& c : rows[0]) CHECK(c.is_zero());  // residue 0 is empty
  for (const Cyc& c : rows[7]) CHECK(c.is_zero());  // residue m is empty
  CHECK(rows[1][0] == Cyc(-2));                     // the polar coefficient
}

TEST_CASE("structure checks flag corrupted series") {
  const QYSeries trace = trace_product(7, "2A", 10, -16);
  const QYSeries finite = finite_part(7, "2A", trace);
  REQUIRE(check_mock_structure(7, finite).ok());

  const QYSeries off_polar = finite + QYSeries::monomial(Cyc(1), 0, 2);
  const MockReport rep1 = check_mock_structure(7, off_polar);
  CHECK_FALSE(rep1.polar_ok);
  CHECK_FALSE(rep1.ok());

  const QYSeries off_strip = finite + QYSeries::monomial(Cyc(1), 1, 3);
  const MockReport rep2 = check_mock_structure(7, off_strip);
  CHECK_FALSE(rep2.odd_ok);
  CHECK_FALSE(rep2.ok());

  // A corrupted eigenvalue shows up as a coefficient mismatch between sides.
  const QYSeries good = closed_form_series(7, "2A", 3, -8);
  CHECK(first_mismatch(trace_product(7, "4A", 3, -8), good).has_value());
}

TEST_CASE("multiplicity decomposition is integral on small windows") {
  for (int lambency : {7, 13}) {
    std::map<std::string, QYSeries> finite_by_label;
    for (const EigenRow& row : eigen_data(lambency).rows) {
      const QYSeries trace = trace_product(lambency, row.label, 4, -2);
      finite_by_label.emplace(row.label, finite_part(lambency, row.label, trace));
    }
    const auto entries = decompose_mock(lambency, finite_by_label);
    REQUIRE(entries.size() == static_cast<std::size_t>(lambency - 1) * 5);
    for (const auto& entry : entries) {
      INFO("lambency " << lambency << ", residue " << entry.r << ", order " << entry.n);
      CHECK(entry.integral);
    }
    // The polar coefficient is class-independent, so its class function is
    // -2 times the trivial character.
    const auto& polar = entries.front();
    REQUIRE(polar.r == 1);
    REQUIRE(polar.n == 0);
    CHECK(polar.multiplicities.front() == Cyc(-2));
    for (std::size_t i = 1; i < polar.multiplicities.size(); ++i)
      CHECK(polar.multiplicities[i].is_zero());
  }
}
