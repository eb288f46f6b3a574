#pragma once

// Semantic layer over the embedded tables: character tables with exact
// cyclotomic entries, twisted-sector eigenvalue data, and the Euler
// characters, plus class-function decomposition into irreducible characters.

#include "umbral/cyclotomic.hpp"
#include "umbral/data/tables.hpp"
#include "umbral/rational.hpp"
#include "umbral/table_format.hpp"

#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace umbral {

struct CharacterTable {
  std::string name;
  std::vector<std::string> classes;
  std::vector<std::string> fusion;  // empty unless the table embeds in an ambient group
  std::vector<std::string> irreps;
  std::vector<std::vector<Cyc>> values;  // [irrep][class]

  std::size_t class_count() const { return classes.size(); }
  std::size_t irrep_count() const { return irreps.size(); }

  std::size_t class_index(const std::string& label) const {
    for (std::size_t c = 0; c < classes.size(); ++c)
      if (classes[c] == label) return c;
    throw format_error(name + " has no class " + label);
  }

  std::size_t irrep_index(const std::string& irrep) const {
    for (std::size_t i = 0; i < irreps.size(); ++i)
      if (irreps[i] == irrep) return i;
    throw format_error(name + " has no irreducible character " + irrep);
  }

  const std::vector<Cyc>& row(const std::string& irrep) const { return values[irrep_index(irrep)]; }

  // |C(g)| = sum_i |chi_i(g)|^2, by column orthogonality.
  Rational centralizer_order(std::size_t class_idx) const {
    Cyc sum;
    for (const auto& chi : values) sum += chi[class_idx] * chi[class_idx].conj();
    if (!sum.is_rational())
      throw format_error(name + ": centralizer order of " + classes[class_idx] +
                         " is not rational");
    return sum.rational_value();
  }

  Rational group_order() const { return centralizer_order(class_index("1A")); }

  Rational class_size(std::size_t class_idx) const {
    return group_order() / centralizer_order(class_idx);
  }

  bool has_fusion() const { return !fusion.empty(); }

  const std::string& fused_label(const std::string& subgroup_class) const {
    if (!has_fusion()) throw format_error(name + " carries no fusion data");
    return fusion[class_index(subgroup_class)];
  }
};

enum class SectorKind { clifford, weyl };

struct Sector {
  SectorKind kind;
  long charge = 0;
  int dim = 0;
};

struct EigenRow {
  std::string label;
  std::vector<std::vector<Cyc>> eigenvalues;  // one multiset per sector
};

// The per-class eigenvalue data of the group action on the free-field tensor
// factors.  A Clifford sector of charge w with eigenvalues {l_i} contributes
// prod_i (1 - conj(l_i) y^{-w} q^{n-1})(1 - l_i y^{w} q^{n}) to the trace
// numerator; a Weyl sector contributes the reciprocal to the denominator.
struct EigenData {
  int lambency = 0;
  std::vector<Sector> sectors;
  std::vector<EigenRow> rows;

  const EigenRow& row(const std::string& label) const {
    for (const auto& r : rows)
      if (r.label == label) return r;
    throw format_error("no eigenvalue data for class " + label);
  }
};

// The class functions weighting the polar Appell terms of the theta
// decomposition; columns may carry merged labels covering several classes.
struct EulerCharacters {
  int lambency = 0;
  std::vector<std::string> labels;
  std::vector<Cyc> chibar;
  std::vector<Cyc> chi;

  std::size_t column_for(const std::string& class_label) const {
    for (std::size_t c = 0; c < labels.size(); ++c)
      for (const auto& covered : expand_class_label(labels[c]))
        if (covered == class_label) return c;
    throw format_error("no Euler character column covers class " + class_label);
  }

  const Cyc& chibar_of(const std::string& class_label) const {
    return chibar[column_for(class_label)];
  }
  const Cyc& chi_of(const std::string& class_label) const { return chi[column_for(class_label)]; }
};

inline CharacterTable parse_character_table(std::string name, std::string_view text) {
  const RawTable raw = parse_raw_table(text);
  CharacterTable table;
  table.name = std::move(name);
  table.classes = raw.at("classes");
  if (const auto* fusion = raw.find("fusion")) {
    table.fusion = *fusion;
    if (table.fusion.size() != table.classes.size())
      throw format_error(table.name + ": fusion row length differs from class count");
  }
  for (const auto& line : raw.lines) {
    if (line.key.rfind("chi", 0) != 0) continue;
    if (line.items.size() != table.classes.size())
      throw format_error(table.name + ": row " + line.key + " has " +
                         std::to_string(line.items.size()) + " entries for " +
                         std::to_string(table.classes.size()) + " classes");
    table.irreps.push_back(line.key);
    std::vector<Cyc> row;
    row.reserve(line.items.size());
    for (const auto& item : line.items) row.push_back(parse_cyc_token(item));
    table.values.push_back(std::move(row));
  }
  if (table.values.empty()) throw format_error(table.name + ": no character rows");
  return table;
}

inline EigenData parse_eigen_data(std::string_view text) {
  const RawTable raw = parse_raw_table(text);
  EigenData data;
  data.lambency = static_cast<int>(integer_value(parse_rational(raw.at("lambency").at(0))));

  for (const auto& token : raw.at("sectors")) {
    const std::size_t at = token.find('@');
    const std::size_t star = token.find('*');
    if (at == std::string::npos || star == std::string::npos || star < at)
      throw format_error("malformed sector token: " + token);
    Sector sector;
    const std::string kind = token.substr(0, at);
    if (kind == "clifford")
      sector.kind = SectorKind::clifford;
    else if (kind == "weyl")
      sector.kind = SectorKind::weyl;
    else
      throw format_error("unknown sector kind: " + kind);
    sector.charge = static_cast<long>(integer_value(parse_rational(token.substr(at + 1, star - at - 1))));
    sector.dim = static_cast<int>(integer_value(parse_rational(token.substr(star + 1))));
    if (sector.charge <= 0 || sector.dim <= 0)
      throw format_error("sector needs positive charge and dimension: " + token);
    data.sectors.push_back(sector);
  }
  if (data.sectors.empty()) throw format_error("eigenvalue table without sectors");

  for (const auto& line : raw.lines) {
    if (line.key == "lambency" || line.key == "sectors") continue;
    EigenRow row;
    row.label = line.key;
    const auto groups = split_on_bars(line.items);
    if (groups.size() != data.sectors.size())
      throw format_error("class " + row.label + " lists " + std::to_string(groups.size()) +
                         " sectors, expected " + std::to_string(data.sectors.size()));
    for (std::size_t s = 0; s < groups.size(); ++s) {
      if (groups[s].size() != static_cast<std::size_t>(data.sectors[s].dim))
        throw format_error("class " + row.label + ": sector " + std::to_string(s) + " lists " +
                           std::to_string(groups[s].size()) + " eigenvalues, expected " +
                           std::to_string(data.sectors[s].dim));
      std::vector<Cyc> eigs;
      for (const auto& item : groups[s]) eigs.push_back(parse_cyc_token(item));
      row.eigenvalues.push_back(std::move(eigs));
    }
    data.rows.push_back(std::move(row));
  }
  if (data.rows.empty()) throw format_error("eigenvalue table without class rows");
  return data;
}

inline EulerCharacters parse_euler_characters(std::string_view text) {
  const RawTable raw = parse_raw_table(text);
  EulerCharacters eul;
  eul.lambency = static_cast<int>(integer_value(parse_rational(raw.at("lambency").at(0))));
  eul.labels = raw.at("classes");
  for (const auto& item : raw.at("chibar")) eul.chibar.push_back(parse_cyc_token(item));
  for (const auto& item : raw.at("chi")) eul.chi.push_back(parse_cyc_token(item));
  if (eul.chibar.size() != eul.labels.size() || eul.chi.size() != eul.labels.size())
    throw format_error("Euler character rows do not match the class count");
  return eul;
}

// Registries.  Character tables are keyed "G4", "G4_336", "G5", "G5_24",
// "G7", "G13"; eigenvalue and Euler data are keyed by lambency.

inline const CharacterTable& character_table(const std::string& key) {
  static std::mutex mutex;
  static std::map<std::string, CharacterTable> registry;
  std::lock_guard<std::mutex> lock(mutex);
  auto found = registry.find(key);
  if (found != registry.end()) return found->second;

  const char* text = nullptr;
  if (key == "G7") text = data::kCharsG7;
  else if (key == "G13") text = data::kCharsG13;
  else if (key == "G4") text = data::kCharsG4;
  else if (key == "G4_336") text = data::kCharsG4Sub;
  else if (key == "G5") text = data::kCharsG5;
  else if (key == "G5_24") text = data::kCharsG5Sub;
  else throw std::invalid_argument("unknown character table: " + key);
  return registry.emplace(key, parse_character_table(key, text)).first->second;
}

inline const EigenData& eigen_data(int lambency) {
  static std::mutex mutex;
  static std::map<int, EigenData> registry;
  std::lock_guard<std::mutex> lock(mutex);
  auto found = registry.find(lambency);
  if (found != registry.end()) return found->second;

  const char* text = nullptr;
  if (lambency == 4) text = data::kEigenL4;
  else if (lambency == 5) text = data::kEigenL5;
  else if (lambency == 7) text = data::kEigenL7;
  else if (lambency == 13) text = data::kEigenL13;
  else throw std::invalid_argument("no eigenvalue data for lambency " + std::to_string(lambency));
  return registry.emplace(lambency, parse_eigen_data(text)).first->second;
}

inline const EulerCharacters& euler_characters(int lambency) {
  static std::mutex mutex;
  static std::map<int, EulerCharacters> registry;
  std::lock_guard<std::mutex> lock(mutex);
  auto found = registry.find(lambency);
  if (found != registry.end()) return found->second;

  const char* text = nullptr;
  if (lambency == 4) text = data::kEulerL4;
  else if (lambency == 5) text = data::kEulerL5;
  else if (lambency == 7) text = data::kEulerL7;
  else if (lambency == 13) text = data::kEulerL13;
  else throw std::invalid_argument("no Euler characters for lambency " + std::to_string(lambency));
  return registry.emplace(lambency, parse_euler_characters(text)).first->second;
}

// The group the trace functions of a lambency are indexed by: the full umbral
// group where the whole group acts, else the acting maximal subgroup.
inline const CharacterTable& trace_group(int lambency) {
  switch (lambency) {
    case 4: return character_table("G4_336");
    case 5: return character_table("G5_24");
    case 7: return character_table("G7");
    case 13: return character_table("G13");
    default: throw std::invalid_argument("unsupported lambency " + std::to_string(lambency));
  }
}

inline bool is_rational_integer(const Cyc& value) {
  return value.is_rational() && is_integer(value.rational_value());
}

// Multiplicities <v, chi_i> = sum_c v(c) conj(chi_i(c)) / |C(c)| of a class
// function in the irreducible characters.  Entries come back as cyclotomic
// numbers; callers assert rationality/integrality as their context demands.
inline std::vector<Cyc> decompose_class_function(const CharacterTable& table,
                                                 const std::vector<Cyc>& values) {
  if (values.size() != table.class_count())
    throw std::invalid_argument("class function size does not match " + table.name);
  std::vector<Rational> inverse_centralizer(table.class_count());
  for (std::size_t c = 0; c < table.class_count(); ++c)
    inverse_centralizer[c] = Rational(1) / table.centralizer_order(c);
  std::vector<Cyc> multiplicities;
  multiplicities.reserve(table.irrep_count());
  for (std::size_t i = 0; i < table.irrep_count(); ++i) {
    Cyc sum;
    for (std::size_t c = 0; c < table.class_count(); ++c)
      sum += inverse_centralizer[c] * (values[c] * table.values[i][c].conj());
    multiplicities.push_back(sum);
  }
  return multiplicities;
}

}  // namespace umbral
