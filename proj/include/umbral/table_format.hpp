#pragma once

// Parser for the compact text tables in data/tables.hpp.
//
// A table is a block of lines; '#' starts a comment and blank lines are
// skipped.  Every remaining line has the shape
//
//   key: item item ...
//
// with whitespace-separated items; '|' acts as a standalone separator item.
// Value tokens denote cyclotomic integers:
//
//   token  := sign? factor ('*' factor)*
//   factor := integer | atom
//   atom   := '~'? name ('^' integer)?        ('~' conjugates the named value)
//   name   := 'i' | 'w' | 'b3' | 'b7' | 'a1' | 'a3' | 'r2' | 'z' integer
//
// with values i = a1 = e^{2 pi i/4}, w = b3 = e^{2 pi i/3}, zN = e^{2 pi i/N},
// b7 = z7 + z7^2 + z7^4 (= (-1+sqrt(-7))/2), a3 = z3 - z3^2 (= sqrt(-3)),
// r2 = z8 - z8^3 (= sqrt 2).  Examples: "-2*~a1", "z8^3", "w^2", "-i*w".

#include "umbral/cyclotomic.hpp"
#include "umbral/rational.hpp"

#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace umbral {

namespace detail {

inline bool parse_integer(std::string_view text, std::size_t& pos, long& out) {
  std::size_t start = pos;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::size_t digits = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == digits) {
    pos = start;
    return false;
  }
  out = 0;
  for (std::size_t k = digits; k < pos; ++k) out = out * 10 + (text[k] - '0');
  if (negative) out = -out;
  return true;
}

inline Cyc named_atom_value(std::string_view name, unsigned order) {
  const auto root = [order](unsigned n, long e) { return Cyc::root_term(n, e, Rational(1), order); };
  if (name == "i" || name == "a1") return root(4, 1);
  if (name == "w" || name == "b3") return root(3, 1);
  if (name == "b7") return root(7, 1) + root(7, 2) + root(7, 4);
  if (name == "a3") return root(3, 1) - root(3, 2);
  if (name == "r2") return root(8, 1) - root(8, 3);
  throw format_error("unknown value name: " + std::string(name));
}

}  // namespace detail

// One token -> exact cyclotomic value.
inline Cyc parse_cyc_token(std::string_view token, unsigned order = default_cyclotomic_order()) {
  std::size_t pos = 0;
  const auto fail = [&](const std::string& why) {
    throw format_error("bad value token '" + std::string(token) + "': " + why);
  };
  if (token.empty()) fail("empty");

  bool negative = false;
  if (token[pos] == '+' || token[pos] == '-') {
    negative = token[pos] == '-';
    ++pos;
  }

  Cyc value(Rational(1), order);
  bool expect_factor = true;
  while (expect_factor) {
    if (pos >= token.size()) fail("missing factor");
    if (std::isdigit(static_cast<unsigned char>(token[pos]))) {
      long n = 0;
      detail::parse_integer(token, pos, n);
      value *= Cyc(Rational(n), order);
    } else {
      bool conjugate = false;
      if (token[pos] == '~') {
        conjugate = true;
        ++pos;
      }
      std::size_t name_start = pos;
      while (pos < token.size() && std::isalnum(static_cast<unsigned char>(token[pos])) &&
             token[pos] != '^')
        ++pos;
      std::string_view name = token.substr(name_start, pos - name_start);
      if (name.empty()) fail("missing name");

      Cyc atom;
      long exponent = 1;
      bool have_exponent = false;
      if (pos < token.size() && token[pos] == '^') {
        ++pos;
        if (!detail::parse_integer(token, pos, exponent)) fail("missing exponent");
        have_exponent = true;
      }
      if (name.size() > 1 && name[0] == 'z') {
        long n = 0;
        std::size_t npos = 1;
        if (!detail::parse_integer(name, npos, n) || npos != name.size() || n <= 0)
          fail("malformed root name");
        atom = Cyc::root_term(static_cast<unsigned>(n), exponent, Rational(1), order);
      } else {
        atom = detail::named_atom_value(name, order);
        if (have_exponent) {
          if (exponent < 0) fail("negative power of a composite value");
          Cyc power(Rational(1), order);
          for (long k = 0; k < exponent; ++k) power *= atom;
          atom = power;
        }
      }
      if (conjugate) atom = atom.conj();
      value *= atom;
    }
    expect_factor = pos < token.size() && token[pos] == '*';
    if (expect_factor) ++pos;
  }
  if (pos != token.size()) fail("trailing characters");
  return negative ? -value : value;
}

struct RawTableLine {
  std::string key;
  std::vector<std::string> items;
};

struct RawTable {
  std::vector<RawTableLine> lines;

  const std::vector<std::string>* find(std::string_view key) const {
    for (const auto& line : lines)
      if (line.key == key) return &line.items;
    return nullptr;
  }

  const std::vector<std::string>& at(std::string_view key) const {
    const auto* items = find(key);
    if (!items) throw format_error("table is missing a '" + std::string(key) + "' line");
    return *items;
  }
};

inline RawTable parse_raw_table(std::string_view text) {
  RawTable table;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);

    std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) {
      bool blank = true;
      for (char c : line)
        if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
      if (!blank) throw format_error("table line without a key: " + std::string(line));
      continue;
    }

    RawTableLine parsed;
    for (char c : line.substr(0, colon)) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      parsed.key.push_back(c);
    }
    if (parsed.key.empty()) throw format_error("table line with empty key: " + std::string(line));

    std::string item;
    const auto flush = [&] {
      if (!item.empty()) parsed.items.push_back(std::exchange(item, {}));
    };
    for (char c : line.substr(colon + 1)) {
      if (std::isspace(static_cast<unsigned char>(c))) {
        flush();
      } else if (c == '|') {
        flush();
        parsed.items.emplace_back("|");
      } else {
        item.push_back(c);
      }
    }
    flush();
    table.lines.push_back(std::move(parsed));
  }
  return table;
}

// Splits an item list on '|' separators.
inline std::vector<std::vector<std::string>> split_on_bars(const std::vector<std::string>& items) {
  std::vector<std::vector<std::string>> groups(1);
  for (const auto& item : items) {
    if (item == "|")
      groups.emplace_back();
    else
      groups.back().push_back(item);
  }
  return groups;
}

// Expands a possibly-merged class column label: "3AB" covers 3A and 3B,
// "14AB" covers 14A and 14B, plain labels cover themselves.
inline std::vector<std::string> expand_class_label(const std::string& label) {
  std::size_t pos = 0;
  while (pos < label.size() && std::isdigit(static_cast<unsigned char>(label[pos]))) ++pos;
  if (pos == 0 || pos == label.size())
    throw format_error("malformed class label: " + label);
  const std::string prefix = label.substr(0, pos);
  std::vector<std::string> classes;
  for (std::size_t k = pos; k < label.size(); ++k) {
    if (!std::isupper(static_cast<unsigned char>(label[k])))
      throw format_error("malformed class label: " + label);
    classes.push_back(prefix + label[k]);
  }
  return classes;
}

}  // namespace umbral
