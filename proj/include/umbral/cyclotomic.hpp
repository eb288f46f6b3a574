#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// Elements are kept in the canonical power basis {zeta^0, ..., zeta^(phi(N)-1)}:
// a polynomial in zeta is reduced modulo the N-th cyclotomic polynomial, which
// makes equality a coefficient-wise comparison.  The default order is 168 =
// 8*3*7, whose field contains every root of unity the trace formulas and the
// character tables need (orders 2, 3, 4, 6, 7, 8, 12, 14, 24, 28, 56, 84, ...).
// The order can be overridden through the UMBRAL_CYCLOTOMIC_ORDER environment
// variable (any multiple of 168 behaves identically; other values are for
// stress-testing the reduction machinery).

#include "umbral/rational.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <utility>
#include <vector>

namespace umbral {

namespace detail {

// Dense integer polynomials, lowest degree first.  Only used at field setup.
using IPoly = std::vector<Int>;

inline IPoly ipoly_div_exact(const IPoly& num, const IPoly& den) {
  IPoly rem = num;
  IPoly quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Int(0));
  const Int lead = den.back();
  for (std::size_t i = rem.size(); i-- >= den.size();) {
    Int factor = rem[i] / lead;
    if (factor * lead != rem[i]) throw std::logic_error("inexact polynomial division");
    quot[i - den.size() + 1] = factor;
    for (std::size_t j = 0; j < den.size(); ++j) rem[i - den.size() + 1 + j] -= factor * den[j];
    if (i + 1 == den.size()) break;
  }
  for (const Int& c : rem)
    if (c != 0) throw std::logic_error("inexact polynomial division (remainder)");
  return quot;
}

// x^n - 1.
inline IPoly ipoly_xn_minus_1(unsigned n) {
  IPoly p(n + 1, Int(0));
  p[0] = -1;
  p[n] = 1;
  return p;
}

inline IPoly ipoly_mul(const IPoly& a, const IPoly& b) {
  IPoly r(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// N-th cyclotomic polynomial via Phi_N = (x^N - 1) / prod_{d | N, d < N} Phi_d.
inline IPoly cyclotomic_polynomial(unsigned n, std::map<unsigned, IPoly>& cache) {
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  IPoly den{Int(1)};
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) den = ipoly_mul(den, cyclotomic_polynomial(d, cache));
  IPoly phi = ipoly_div_exact(ipoly_xn_minus_1(n), den);
  cache.emplace(n, phi);
  return phi;
}

inline unsigned euler_phi(unsigned n) {
  unsigned result = n;
  unsigned m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

}  // namespace detail

// Precomputed reduction data for one field Q(zeta_N); immutable once built and
// shared between threads.
class CycField {
 public:
  static std::shared_ptr<const CycField> get(unsigned order) {
    static std::mutex mu;
    static std::map<unsigned, std::shared_ptr<const CycField>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto it = registry.find(order);
    if (it != registry.end()) return it->second;
    auto field = std::shared_ptr<const CycField>(new CycField(order));
    registry.emplace(order, field);
    return field;
  }

  unsigned order() const { return order_; }
  unsigned degree() const { return degree_; }

  // Row k (0-based from exponent degree_+k) expresses zeta^(degree_+k) in the
  // power basis.
  const std::vector<Int>& rewrite_row(unsigned exponent) const {
    return rows_[exponent - degree_];
  }

 private:
  explicit CycField(unsigned order) : order_(order) {
    if (order == 0) throw std::invalid_argument("cyclotomic order must be positive");
    degree_ = detail::euler_phi(order);
    std::map<unsigned, detail::IPoly> cache;
    const detail::IPoly phi = detail::cyclotomic_polynomial(order, cache);
    // zeta^degree = -(phi_0 + phi_1 zeta + ... + phi_{degree-1} zeta^{degree-1})
    // (phi is monic); higher powers follow by multiplying through by zeta.
    rows_.reserve(order_ - degree_);
    std::vector<Int> row(degree_);
    for (unsigned i = 0; i < degree_; ++i) row[i] = -phi[i];
    rows_.push_back(row);
    for (unsigned k = degree_ + 1; k < order_; ++k) {
      std::vector<Int> next(degree_, Int(0));
      const std::vector<Int>& prev = rows_.back();
      // Multiply by zeta: shift up, folding the overflow with the first row.
      for (unsigned i = 0; i + 1 < degree_; ++i) next[i + 1] = prev[i];
      const Int& top = prev[degree_ - 1];
      if (top != 0)
        for (unsigned i = 0; i < degree_; ++i) next[i] += top * rows_.front()[i];
      rows_.push_back(std::move(next));
    }
  }

  unsigned order_;
  unsigned degree_;
  std::vector<std::vector<Int>> rows_;
};

// Default working order; read once per process.
inline unsigned default_cyclotomic_order() {
  static const unsigned value = [] {
    const char* env = std::getenv("UMBRAL_CYCLOTOMIC_ORDER");
    if (env == nullptr || *env == '\0') return 168u;
    char* end = nullptr;
    const unsigned long parsed = std::strtoul(env, &end, 10);
    if (end == nullptr || *end != '\0' || parsed == 0 || parsed > 20000)
      throw format_error("UMBRAL_CYCLOTOMIC_ORDER must be a positive integer <= 20000");
    return static_cast<unsigned>(parsed);
  }();
  return value;
}

// An element of Q(zeta_N) in canonical form: sorted sparse coordinates over
// the power basis, all exponents < phi(N), no zero coefficients.
class Cyc {
 public:
  using Term = std::pair<unsigned, Rational>;

  Cyc() : order_(default_cyclotomic_order()) {}

  explicit Cyc(Rational value, unsigned order = default_cyclotomic_order()) : order_(order) {
    if (value != 0) terms_.emplace_back(0u, std::move(value));
  }

  Cyc(int value, unsigned order = default_cyclotomic_order()) : Cyc(Rational(value), order) {}

  // coeff * zeta_order^exponent, embedded into Q(zeta_field_order).
  static Cyc root_term(unsigned root_order, long exponent, Rational coeff = Rational(1),
                       unsigned field_order = default_cyclotomic_order()) {
    if (root_order == 0 || field_order % root_order != 0)
      throw format_error("root of unity of order " + std::to_string(root_order) +
                         " does not embed into Q(zeta_" + std::to_string(field_order) + ")");
    const long stretch = static_cast<long>(field_order / root_order);
    long e = (exponent % static_cast<long>(root_order)) * stretch;
    if (e < 0) e += field_order;
    Cyc result;
    result.order_ = field_order;
    if (coeff != 0) {
      std::vector<std::pair<long, Rational>> raw{{e, std::move(coeff)}};
      result.assign_reduced(raw);
    }
    return result;
  }

  static Cyc i(unsigned field_order = default_cyclotomic_order()) {
    return root_term(4, 1, Rational(1), field_order);
  }

  unsigned order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
  }

  // Value of a rational element; throws if the element is irrational.
  Rational rational_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_rational()) throw std::domain_error("cyclotomic value is not rational: " + str());
    return terms_[0].second;
  }

  Cyc embedded(unsigned new_order) const {
    if (new_order == order_) return *this;
    if (new_order % order_ != 0)
      throw format_error("cannot embed Q(zeta_" + std::to_string(order_) + ") into Q(zeta_" +
                         std::to_string(new_order) + ")");
    const long stretch = static_cast<long>(new_order / order_);
    Cyc result;
    result.order_ = new_order;
    std::vector<std::pair<long, Rational>> raw;
    raw.reserve(terms_.size());
    for (const Term& t : terms_) raw.emplace_back(static_cast<long>(t.first) * stretch, t.second);
    result.assign_reduced(raw);
    return result;
  }

  friend Cyc operator+(const Cyc& a, const Cyc& b) {
    auto [x, y] = Cyc::aligned(a, b);
    Cyc result;
    result.order_ = x.order_;
    result.terms_.reserve(x.terms_.size() + y.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < x.terms_.size() || j < y.terms_.size()) {
      if (j == y.terms_.size() || (i < x.terms_.size() && x.terms_[i].first < y.terms_[j].first)) {
        result.terms_.push_back(x.terms_[i++]);
      } else if (i == x.terms_.size() || y.terms_[j].first < x.terms_[i].first) {
        result.terms_.push_back(y.terms_[j++]);
      } else {
        Rational sum = x.terms_[i].second + y.terms_[j].second;
        if (sum != 0) result.terms_.emplace_back(x.terms_[i].first, std::move(sum));
        ++i;
        ++j;
      }
    }
    return result;
  }

  friend Cyc operator-(const Cyc& a) {
    Cyc result = a;
    for (Term& t : result.terms_) t.second = -t.second;
    return result;
  }

  friend Cyc operator-(const Cyc& a, const Cyc& b) { return a + (-b); }

  friend Cyc operator*(const Cyc& a, const Cyc& b) {
    auto [x, y] = Cyc::aligned(a, b);
    Cyc result;
    result.order_ = x.order_;
    if (x.terms_.empty() || y.terms_.empty()) return result;
    // Most products in series arithmetic are monomial * monomial; skip the
    // accumulator when the exponent sum already lies in the power basis.
    if (x.terms_.size() == 1 && y.terms_.size() == 1) {
      const unsigned e = x.terms_[0].first + y.terms_[0].first;
      if (e < CycField::get(x.order_)->degree()) {
        result.terms_.emplace_back(e, x.terms_[0].second * y.terms_[0].second);
        return result;
      }
    }
    std::vector<std::pair<long, Rational>> raw;
    raw.reserve(x.terms_.size() * y.terms_.size());
    for (const Term& s : x.terms_)
      for (const Term& t : y.terms_) {
        long e = static_cast<long>(s.first) + static_cast<long>(t.first);
        if (e >= static_cast<long>(x.order_)) e -= x.order_;
        raw.emplace_back(e, s.second * t.second);
      }
    result.assign_reduced(raw);
    return result;
  }

  Cyc& operator+=(const Cyc& other) { return *this = *this + other; }
  Cyc& operator*=(const Cyc& other) { return *this = *this * other; }

  friend Cyc operator*(const Cyc& a, const Rational& s) {
    Cyc result;
    result.order_ = a.order_;
    if (s == 0) return result;
    result.terms_ = a.terms_;
    for (Term& t : result.terms_) t.second *= s;
    return result;
  }

  friend Cyc operator*(const Rational& s, const Cyc& a) { return a * s; }

  bool operator==(const Cyc& other) const {
    if (order_ == other.order_) return terms_ == other.terms_;
    auto [x, y] = aligned(*this, other);
    return x.terms_ == y.terms_;
  }
  bool operator!=(const Cyc& other) const { return !(*this == other); }

  // Complex conjugation zeta -> zeta^(-1); an automorphism of the field.
  Cyc conj() const {
    Cyc result;
    result.order_ = order_;
    std::vector<std::pair<long, Rational>> raw;
    raw.reserve(terms_.size());
    for (const Term& t : terms_)
      raw.emplace_back(t.first == 0 ? 0 : static_cast<long>(order_) - t.first, t.second);
    result.assign_reduced(raw);
    return result;
  }

  // Galois automorphism zeta -> zeta^k, gcd(k, order) = 1.
  Cyc galois(unsigned k) const {
    if (std::gcd(k, order_) != 1) throw std::invalid_argument("galois exponent not coprime to order");
    Cyc result;
    result.order_ = order_;
    std::vector<std::pair<long, Rational>> raw;
    raw.reserve(terms_.size());
    for (const Term& t : terms_)
      raw.emplace_back(static_cast<long>((static_cast<unsigned long>(t.first) * k) % order_), t.second);
    result.assign_reduced(raw);
    return result;
  }

  // Multiplicative inverse.  Single-term elements invert directly; otherwise
  // the inverse is the product of all nontrivial Galois conjugates divided by
  // the (rational) field norm.
  Cyc inverse() const {
    if (terms_.empty()) throw std::domain_error("division by zero cyclotomic");
    if (terms_.size() == 1) {
      const unsigned e = terms_[0].first;
      Cyc zinv = e == 0 ? Cyc(Rational(1), order_) : root_term(order_, -static_cast<long>(e), Rational(1), order_);
      return zinv * (Rational(1) / terms_[0].second);
    }
    Cyc prod(Rational(1), order_);
    for (unsigned k = 2; k < order_; ++k)
      if (std::gcd(k, order_) == 1) prod *= galois(k);
    const Cyc norm = *this * prod;
    if (!norm.is_rational() || norm.is_zero())
      throw std::domain_error("field norm failed to be a nonzero rational");
    return prod * (Rational(1) / norm.rational_value());
  }

  // |a|^2 = a * conj(a).
  Cyc norm_squared() const { return *this * conj(); }

  // Compact display, e.g. "1/2", "-z168^21+z168^63", "2z8^1".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const Term& t : terms_) {
      Rational c = t.second;
      if (c < 0) {
        out << "-";
        c = -c;
      } else if (!first) {
        out << "+";
      }
      first = false;
      if (t.first == 0) {
        out << to_string(c);
      } else {
        if (c != 1) out << to_string(c);
        out << "z" << order_ << "^" << t.first;
      }
    }
    return out.str();
  }

 private:
  // Canonicalize raw (exponent, coeff) pairs with exponents in [0, order).
  void assign_reduced(std::vector<std::pair<long, Rational>>& raw) {
    const auto field = CycField::get(order_);
    const unsigned degree = field->degree();
    std::map<unsigned, Rational> acc;
    for (auto& [e, c] : raw) {
      if (c == 0) continue;
      if (e < static_cast<long>(degree)) {
        Rational& slot = acc[static_cast<unsigned>(e)];
        slot += c;
      } else {
        const std::vector<Int>& row = field->rewrite_row(static_cast<unsigned>(e));
        for (unsigned i = 0; i < degree; ++i) {
          if (row[i] == 0) continue;
          Rational& slot = acc[i];
          slot += c * row[i];
        }
      }
    }
    terms_.clear();
    for (auto& [e, c] : acc)
      if (c != 0) terms_.emplace_back(e, std::move(c));
  }

  // Bring two elements into a common field (the lcm of the orders).
  static std::pair<Cyc, Cyc> aligned(const Cyc& a, const Cyc& b) {
    if (a.order_ == b.order_) return {a, b};
    const unsigned l = std::lcm(a.order_, b.order_);
    return {a.embedded(l), b.embedded(l)};
  }

  unsigned order_;
  std::vector<Term> terms_;
};

}  // namespace umbral
