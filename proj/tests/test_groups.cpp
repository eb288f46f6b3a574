// Group data: character tables, twisted-sector eigenvalues, Euler characters.
// The tables are validated against theorems they must satisfy (orthogonality,
// integral centralizer orders, integral restriction multiplicities) rather
// than against themselves, so a transcription slip in any entry shows up as a
// broken identity.

#include <catch2/catch_amalgamated.hpp>

#include "umbral/groups.hpp"

#include <string>
#include <vector>

using umbral::CharacterTable;
using umbral::Cyc;
using umbral::Rational;
using umbral::SectorKind;
using umbral::character_table;
using umbral::decompose_class_function;
using umbral::eigen_data;
using umbral::euler_characters;
using umbral::expand_class_label;
using umbral::is_rational_integer;
using umbral::parse_cyc_token;

namespace {

const std::vector<std::string> kTableKeys = {"G4", "G4_336", "G5", "G5_24", "G7", "G13"};

Cyc root(unsigned n, long e) { return Cyc::root_term(n, e); }

long as_long(const Rational& r) { return umbral::to_long(umbral::integer_value(r)); }

}  // namespace

TEST_CASE("value tokens parse to exact cyclotomic numbers") {
  CHECK(parse_cyc_token("0") == Cyc(0));
  CHECK(parse_cyc_token("-24") == Cyc(-24));
  CHECK(parse_cyc_token("i") == Cyc::i());
  CHECK(parse_cyc_token("a1") == Cyc::i());
  CHECK(parse_cyc_token("~a1") == -Cyc::i());
  CHECK(parse_cyc_token("-2*~a1") == Cyc(2) * Cyc::i());
  CHECK(parse_cyc_token("w") == root(3, 1));
  CHECK(parse_cyc_token("w^2") == root(3, 2));
  CHECK(parse_cyc_token("-i*w") == -(Cyc::i() * root(3, 1)));
  CHECK(parse_cyc_token("z8^3") == root(8, 3));
  CHECK(parse_cyc_token("z7") == root(7, 1));

  // The named surds square to what their definitions promise.
  const Cyc r2 = parse_cyc_token("r2");
  CHECK(r2 * r2 == Cyc(2));
  const Cyc a3 = parse_cyc_token("a3");
  CHECK(a3 * a3 == Cyc(-3));
  const Cyc b7 = parse_cyc_token("b7");
  CHECK(b7 + b7.conj() == Cyc(-1));
  CHECK(b7 * b7.conj() == Cyc(2));
  CHECK(parse_cyc_token("~b7") == b7.conj());

  CHECK_THROWS_AS(parse_cyc_token("q7"), umbral::format_error);
  CHECK_THROWS_AS(parse_cyc_token("2**3"), umbral::format_error);
  CHECK_THROWS_AS(parse_cyc_token("z0"), umbral::format_error);
  CHECK_THROWS_AS(parse_cyc_token(""), umbral::format_error);
}

TEST_CASE("merged class labels expand by trailing letters") {
  CHECK(expand_class_label("1A") == std::vector<std::string>{"1A"});
  CHECK(expand_class_label("3AB") == std::vector<std::string>{"3A", "3B"});
  CHECK(expand_class_label("14AB") == std::vector<std::string>{"14A", "14B"});
  CHECK(expand_class_label("12A") == std::vector<std::string>{"12A"});
  CHECK_THROWS_AS(expand_class_label("A3"), umbral::format_error);
  CHECK_THROWS_AS(expand_class_label("3"), umbral::format_error);
  CHECK_THROWS_AS(expand_class_label("3aB"), umbral::format_error);
}

TEST_CASE("character tables load with the expected shapes") {
  struct Expected {
    const char* key;
    std::size_t classes;
    long order;
  };
  const Expected expected[] = {
      {"G4", 16, 2688}, {"G4_336", 11, 336}, {"G5", 14, 240},
      {"G5_24", 12, 24}, {"G7", 7, 24},      {"G13", 4, 4},
  };
  for (const auto& e : expected) {
    const CharacterTable& t = character_table(e.key);
    INFO(t.name);
    CHECK(t.class_count() == e.classes);
    CHECK(t.irrep_count() == e.classes);
    CHECK(t.classes.front() == "1A");
    for (const Cyc& v : t.values.front()) CHECK(v == Cyc(1));  // trivial character first
    CHECK(as_long(t.group_order()) == e.order);
  }
  CHECK(character_table("G4_336").has_fusion());
  CHECK(character_table("G5_24").has_fusion());
  CHECK_FALSE(character_table("G7").has_fusion());
  CHECK_THROWS_AS(character_table("G6"), std::invalid_argument);
}

TEST_CASE("column orthogonality and centralizer orders") {
  for (const auto& key : kTableKeys) {
    const CharacterTable& t = character_table(key);
    INFO(t.name);
    Rational size_sum = 0;
    for (std::size_t c = 0; c < t.class_count(); ++c) {
      for (std::size_t d = 0; d < t.class_count(); ++d) {
        Cyc sum;
        for (std::size_t i = 0; i < t.irrep_count(); ++i)
          sum += t.values[i][c] * t.values[i][d].conj();
        if (c == d) {
          REQUIRE(sum.is_rational());
          const Rational cent = sum.rational_value();
          CHECK(cent > 0);
          CHECK(umbral::is_integer(cent));
          CHECK(cent == t.centralizer_order(c));
        } else {
          CHECK(sum.is_zero());
        }
      }
      const Rational size = t.class_size(c);
      CHECK(umbral::is_integer(size));
      size_sum += size;
    }
    CHECK(size_sum == t.group_order());
  }
}

TEST_CASE("row orthogonality") {
  for (const auto& key : kTableKeys) {
    const CharacterTable& t = character_table(key);
    INFO(t.name);
    std::vector<Rational> sizes(t.class_count());
    for (std::size_t c = 0; c < t.class_count(); ++c) sizes[c] = t.class_size(c);
    for (std::size_t i = 0; i < t.irrep_count(); ++i) {
      for (std::size_t j = i; j < t.irrep_count(); ++j) {
        Cyc sum;
        for (std::size_t c = 0; c < t.class_count(); ++c)
          sum += sizes[c] * (t.values[i][c] * t.values[j][c].conj());
        if (i == j)
          CHECK(sum == Cyc(Rational(t.group_order())));
        else
          CHECK(sum.is_zero());
      }
    }
  }
}

TEST_CASE("known centralizer orders") {
  const auto centralizers = [](const char* key) {
    const CharacterTable& t = character_table(key);
    std::vector<long> out;
    for (std::size_t c = 0; c < t.class_count(); ++c) out.push_back(as_long(t.centralizer_order(c)));
    return out;
  };
  CHECK(centralizers("G7") == std::vector<long>{24, 24, 4, 6, 6, 6, 6});
  CHECK(centralizers("G13") == std::vector<long>{4, 4, 4, 4});
  CHECK(centralizers("G5_24") == std::vector<long>{24, 24, 24, 24, 8, 8, 8, 8, 12, 12, 12, 12});
  CHECK(centralizers("G4_336") == std::vector<long>{336, 336, 8, 6, 6, 8, 8, 14, 14, 14, 14});
}

TEST_CASE("fusion lands on ambient classes and restrictions decompose integrally") {
  const struct {
    const char* sub;
    const char* ambient;
  } pairs[] = {{"G4_336", "G4"}, {"G5_24", "G5"}};

  for (const auto& pair : pairs) {
    const CharacterTable& sub = character_table(pair.sub);
    const CharacterTable& amb = character_table(pair.ambient);
    INFO(sub.name << " -> " << amb.name);
    REQUIRE(sub.has_fusion());
    CHECK(sub.fused_label("1A") == "1A");

    for (std::size_t c = 0; c < sub.class_count(); ++c) {
      const std::string& target = sub.fusion[c];
      CHECK_NOTHROW(amb.class_index(target));
    }

    // Each ambient irreducible restricts to a non-negative integral
    // combination of subgroup irreducibles of the same total dimension.
    for (std::size_t i = 0; i < amb.irrep_count(); ++i) {
      std::vector<Cyc> restricted(sub.class_count());
      for (std::size_t c = 0; c < sub.class_count(); ++c)
        restricted[c] = amb.values[i][amb.class_index(sub.fusion[c])];
      const std::vector<Cyc> mult = decompose_class_function(sub, restricted);
      Cyc dim_sum;
      for (std::size_t j = 0; j < mult.size(); ++j) {
        INFO(amb.irreps[i] << " restricted, multiplicity of " << sub.irreps[j]);
        REQUIRE(is_rational_integer(mult[j]));
        CHECK(mult[j].rational_value() >= 0);
        dim_sum += mult[j] * sub.values[j][0];
      }
      CHECK(dim_sum == amb.values[i][0]);
    }
  }
}

TEST_CASE("class-function decomposition recovers known multiplicities") {
  const CharacterTable& g7 = character_table("G7");

  // The regular representation: one |G| at the identity.
  std::vector<Cyc> regular(g7.class_count(), Cyc(0));
  regular[0] = Cyc(Rational(g7.group_order()));
  const auto reg_mult = decompose_class_function(g7, regular);
  for (std::size_t i = 0; i < reg_mult.size(); ++i) CHECK(reg_mult[i] == g7.values[i][0]);

  // A constant class function is a multiple of the trivial character.
  std::vector<Cyc> constant(g7.class_count(), Cyc(-2));
  const auto const_mult = decompose_class_function(g7, constant);
  CHECK(const_mult[0] == Cyc(-2));
  for (std::size_t i = 1; i < const_mult.size(); ++i) CHECK(const_mult[i].is_zero());

  // An irreducible character decomposes as itself.
  const auto self_mult = decompose_class_function(g7, g7.row("chi6"));
  for (std::size_t i = 0; i < self_mult.size(); ++i)
    CHECK(self_mult[i] == (g7.irreps[i] == "chi6" ? Cyc(1) : Cyc(0)));
}

TEST_CASE("eigenvalue tables have the declared sector shapes and unit eigenvalues") {
  const struct {
    int lambency;
    std::vector<std::pair<long, int>> cliffords;  // (charge, dim)
    std::vector<std::pair<long, int>> weyls;
    std::size_t classes;
  } expected[] = {
      {4, {{2, 3}}, {{1, 4}}, 10},
      {5, {{2, 1}, {3, 1}}, {{1, 3}}, 10},
      {7, {{4, 1}}, {{1, 2}}, 7},
      {13, {{6, 1}}, {{1, 1}, {3, 1}}, 4},
  };
  for (const auto& e : expected) {
    const auto& data = eigen_data(e.lambency);
    INFO("lambency " << e.lambency);
    CHECK(data.lambency == e.lambency);
    CHECK(data.rows.size() == e.classes);

    std::vector<std::pair<long, int>> cliffords, weyls;
    for (const auto& sector : data.sectors) {
      (sector.kind == SectorKind::clifford ? cliffords : weyls)
          .emplace_back(sector.charge, sector.dim);
    }
    CHECK(cliffords == e.cliffords);
    CHECK(weyls == e.weyls);

    for (const auto& row : data.rows) {
      REQUIRE(row.eigenvalues.size() == data.sectors.size());
      for (std::size_t s = 0; s < data.sectors.size(); ++s) {
        REQUIRE(row.eigenvalues[s].size() == static_cast<std::size_t>(data.sectors[s].dim));
        for (const Cyc& eig : row.eigenvalues[s]) {
          INFO("class " << row.label << " sector " << s);
          CHECK(eig * eig.conj() == Cyc(1));
        }
      }
    }
  }
}

TEST_CASE("sector eigenvalue sums equal the designated characters") {
  const auto sector_sum = [](const umbral::EigenRow& row, std::size_t s) {
    Cyc sum;
    for (const Cyc& eig : row.eigenvalues[s]) sum += eig;
    return sum;
  };

  SECTION("lambency 7: traces of the charge-4 and charge-1 actions") {
    const auto& data = eigen_data(7);
    const CharacterTable& g = character_table("G7");
    for (const auto& row : data.rows) {
      const std::size_t c = g.class_index(row.label);
      CHECK(sector_sum(row, 0) == g.row("chi2")[c]);
      CHECK(sector_sum(row, 1) == g.row("chi6")[c]);
    }
  }

  SECTION("lambency 13: the three one-dimensional actions") {
    const auto& data = eigen_data(13);
    const CharacterTable& g = character_table("G13");
    for (const auto& row : data.rows) {
      const std::size_t c = g.class_index(row.label);
      CHECK(sector_sum(row, 0) == g.row("chi2")[c]);
      CHECK(sector_sum(row, 1) == g.row("chi3")[c]);
      CHECK(sector_sum(row, 2) == g.row("chi3")[c]);
    }
  }

  SECTION("lambency 4: traces over the subgroup") {
    const auto& data = eigen_data(4);
    const CharacterTable& g = character_table("G4_336");
    for (const auto& row : data.rows) {
      const std::size_t c = g.class_index(row.label);
      CHECK(sector_sum(row, 0) == g.row("chi2")[c]);
      CHECK(sector_sum(row, 1) == g.row("chi8")[c]);
    }
    // 8B shares both acting characters with 8A, so it shares the eigenvalue
    // data of its fusion partner and needs no row of its own.
    CHECK(g.row("chi2")[g.class_index("8B")] == g.row("chi2")[g.class_index("8A")]);
    CHECK(g.row("chi8")[g.class_index("8B")] == g.row("chi8")[g.class_index("8A")]);
  }

  SECTION("lambency 5: traces over the subgroup") {
    const auto& data = eigen_data(5);
    const CharacterTable& g = character_table("G5_24");
    const auto& chi7 = g.row("chi7");
    const auto& chi12 = g.row("chi12");
    for (const auto& row : data.rows) {
      const std::size_t c = g.class_index(row.label);
      CHECK(sector_sum(row, 0) == g.row("chi2")[c]);
      CHECK(sector_sum(row, 1) == g.row("chi3")[c]);
      CHECK(sector_sum(row, 2) == chi7[c] + chi12[c]);
    }
    // 4C/4D share all three acting characters with 4A/4B.
    for (const char* chi : {"chi2", "chi3"}) {
      CHECK(g.row(chi)[g.class_index("4C")] == g.row(chi)[g.class_index("4A")]);
      CHECK(g.row(chi)[g.class_index("4D")] == g.row(chi)[g.class_index("4B")]);
    }
    CHECK(chi7[g.class_index("4C")] + chi12[g.class_index("4C")] ==
          chi7[g.class_index("4A")] + chi12[g.class_index("4A")]);
    CHECK(chi7[g.class_index("4D")] + chi12[g.class_index("4D")] ==
          chi7[g.class_index("4B")] + chi12[g.class_index("4B")]);
  }
}

TEST_CASE("Euler characters resolve classes and satisfy the component count") {
  // At the identity both class functions count the root-system components
  // 24/(l-1).
  const std::pair<int, long> identity_values[] = {{4, 8}, {5, 6}, {7, 4}, {13, 2}};
  for (const auto& [lambency, expected] : identity_values) {
    const auto& eul = euler_characters(lambency);
    CHECK(eul.lambency == lambency);
    CHECK(eul.chibar_of("1A") == Cyc(expected));
    CHECK(eul.chi_of("1A") == Cyc(expected));
  }

  // Merged columns serve every covered class.
  const auto& e7 = euler_characters(7);
  CHECK(e7.chi_of("3B") == e7.chi_of("3A"));
  CHECK(e7.chi_of("3A") == Cyc(1));
  CHECK(e7.chi_of("6B") == Cyc(-1));
  CHECK(e7.chibar_of("6A") == Cyc(1));
  CHECK_THROWS_AS(e7.chi_of("5A"), umbral::format_error);

  // Every class of the ambient group resolves to a column.
  const std::pair<int, const char*> ambient[] = {{4, "G4"}, {5, "G5"}, {7, "G7"}, {13, "G13"}};
  for (const auto& [lambency, key] : ambient) {
    const auto& eul = euler_characters(lambency);
    for (const auto& label : character_table(key).classes) {
      INFO("lambency " << lambency << " class " << label);
      CHECK_NOTHROW(eul.chibar_of(label));
    }
  }

  // Spot values.
  const auto& e4 = euler_characters(4);
  CHECK(e4.chibar_of("2C") == Cyc(4));
  CHECK(e4.chi_of("2C") == Cyc(0));
  CHECK(e4.chibar_of("14B") == Cyc(1));
  CHECK(e4.chi_of("14B") == Cyc(-1));
  const auto& e5 = euler_characters(5);
  CHECK(e5.chibar_of("2B") == Cyc(2));
  CHECK(e5.chi_of("2B") == Cyc(-2));
  CHECK(e5.chibar_of("4C") == Cyc(2));
  CHECK(e5.chi_of("4C") == Cyc(0));
}

TEST_CASE("trace groups") {
  CHECK(umbral::trace_group(4).name == "G4_336");
  CHECK(umbral::trace_group(5).name == "G5_24");
  CHECK(umbral::trace_group(7).name == "G7");
  CHECK(umbral::trace_group(13).name == "G13");
  CHECK_THROWS_AS(umbral::trace_group(6), std::invalid_argument);
}
