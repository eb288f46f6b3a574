#pragma once

// Truncated series in the ring C[y][[1/y]][[q]] with rational exponent
// offsets: the natural home of the expansions used throughout this library,
// valid in the region 1 < |y| < 1/|q|.
//
// A series holds, for each q-order, a finite column of y-terms sorted by
// descending y-exponent.  Two truncation boundaries are tracked as part of
// the value:
//
//   * q_max   — coefficients are reliable for q-exponents <= q_max
//               (absent = the object is exact in q);
//   * y_floor — coefficients are reliable for y-exponents >= y_floor
//               (absent = every column is a complete finite Laurent
//               polynomial in y).
//
// All arithmetic propagates these windows soundly: a product's window is
// shrunk by how far the partner's known terms reach, so that every stored
// coefficient inside the claimed window is the true coefficient of the
// mathematical object.  Operations whose result would have an empty window
// throw window_error.
//
// Exponent grids: the q-exponent of column j is q_offset + j / q_den
// (j >= 0); the y-exponent of a term with index k is y_offset + k (k any
// integer).  q_den is 1 except for half-integer-spaced products.

#include "umbral/cyclotomic.hpp"
#include "umbral/rational.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

namespace umbral {

// Location and values of the first coefficient disagreement between two
// series on their common reliability window.
struct Mismatch {
  Rational q_exp;
  Rational y_exp;
  Cyc lhs;
  Cyc rhs;
};

class QYSeries {
 public:
  // Columns iterate from the highest y-exponent downward.
  using Column = std::map<long, Cyc, std::greater<long>>;
  using ColumnMap = std::map<long, Column>;

  explicit QYSeries(unsigned cyc_order = default_cyclotomic_order(), Rational q_offset = 0,
                    Rational y_offset = 0, long q_den = 1)
      : cyc_order_(cyc_order), q_offset_(std::move(q_offset)), y_offset_(std::move(y_offset)), q_den_(q_den) {
    if (q_den_ <= 0) throw std::invalid_argument("q_den must be positive");
  }

  // The exact zero series (every window unlimited).
  static QYSeries zero(unsigned cyc_order = default_cyclotomic_order()) { return QYSeries(cyc_order); }

  static QYSeries one(unsigned cyc_order = default_cyclotomic_order()) {
    return monomial(Cyc(1, cyc_order), 0, 0);
  }

  // c * q^q_exp * y^y_exp, exact.
  static QYSeries monomial(const Cyc& c, Rational q_exp, Rational y_exp, long q_den = 1) {
    QYSeries s(c.order(), std::move(q_exp), std::move(y_exp), q_den);
    if (!c.is_zero()) s.cols_[0][0] = c;
    return s;
  }

  unsigned cyc_order() const { return cyc_order_; }
  const Rational& q_offset() const { return q_offset_; }
  const Rational& y_offset() const { return y_offset_; }
  long q_den() const { return q_den_; }
  const std::optional<Rational>& q_max() const { return q_max_; }
  const std::optional<Rational>& y_floor() const { return y_floor_; }
  const ColumnMap& columns() const { return cols_; }
  bool empty() const { return cols_.empty(); }

  Rational q_exponent(long j) const { return q_offset_ + Rational(j, q_den_); }
  Rational y_exponent(long k) const { return y_offset_ + k; }

  // Absolute q-exponent of the lowest nonempty column (nothing stored =>
  // no value).
  std::optional<Rational> q_min_exponent() const {
    if (cols_.empty()) return std::nullopt;
    return q_exponent(cols_.begin()->first);
  }

  // Largest y-exponent present anywhere (nothing stored => no value).
  std::optional<Rational> max_y_exponent() const {
    std::optional<Rational> best;
    for (const auto& [j, col] : cols_) {
      if (col.empty()) continue;
      Rational top = y_exponent(col.begin()->first);
      if (!best || top > *best) best = top;
    }
    return best;
  }

  // Sound lower bound for the q-support of the underlying mathematical
  // object (absent = the object is exactly zero).  With a finite y_floor,
  // whole columns may be hidden below the floor, so only the grid origin can
  // be trusted; without one the stored columns are complete up to q_max.
  std::optional<Rational> sound_q_support_min() const {
    if (y_floor_) return q_offset_;
    if (auto m = q_min_exponent()) return m;
    if (q_max_) return q_max_;  // nothing at all up to q_max: support starts above it
    return std::nullopt;
  }

  void set_window(std::optional<Rational> q_max, std::optional<Rational> y_floor) {
    q_max_ = std::move(q_max);
    y_floor_ = std::move(y_floor);
    clip_to_window();
  }

  // Accumulate a coefficient at column index j (must be >= 0), y-index k.
  void add_term(long j, long k, const Cyc& c) {
    if (j < 0) throw std::invalid_argument("negative q column index");
    if (c.is_zero()) return;
    auto& slot = cols_[j][k];
    slot += c;
    if (slot.is_zero()) {
      cols_[j].erase(k);
      if (cols_[j].empty()) cols_.erase(j);
    }
  }

  // Coefficient of q^q_exp y^y_exp.  Off-grid positions inside the window are
  // genuinely zero; positions outside the window raise window_error.
  Cyc coeff(const Rational& q_exp, const Rational& y_exp) const {
    if ((q_max_ && q_exp > *q_max_) || (y_floor_ && y_exp < *y_floor_))
      throw window_error("coefficient query at q^" + to_string(q_exp) + " y^" + to_string(y_exp) +
                         " lies outside the reliability window");
    Rational jq = (q_exp - q_offset_) * q_den_;
    Rational ky = y_exp - y_offset_;
    if (!is_integer(jq) || !is_integer(ky)) return Cyc(0, cyc_order_);
    Int j = integer_value(jq);
    if (j < 0) return Cyc(0, cyc_order_);
    auto itc = cols_.find(to_long(j));
    if (itc == cols_.end()) return Cyc(0, cyc_order_);
    auto itt = itc->second.find(to_long(integer_value(ky)));
    if (itt == itc->second.end()) return Cyc(0, cyc_order_);
    return itt->second;
  }

  // Restrict the window (q_max can only shrink, y_floor can only rise) and
  // drop the storage that falls outside it.
  QYSeries truncated(std::optional<Rational> new_q_max, std::optional<Rational> new_y_floor) const {
    QYSeries out = *this;
    if (new_q_max && (!out.q_max_ || *new_q_max < *out.q_max_)) out.q_max_ = new_q_max;
    if (new_y_floor && (!out.y_floor_ || *new_y_floor > *out.y_floor_)) out.y_floor_ = new_y_floor;
    out.clip_to_window();
    return out;
  }

  // Multiply by the monomial c * q^dq * y^dy (exact; shifts windows along).
  QYSeries times_monomial(const Cyc& c, const Rational& dq, const Rational& dy) const {
    QYSeries out(cyc_order_, q_offset_ + dq, y_offset_ + dy, q_den_);
    out.q_max_ = q_max_ ? std::optional<Rational>(*q_max_ + dq) : std::nullopt;
    out.y_floor_ = y_floor_ ? std::optional<Rational>(*y_floor_ + dy) : std::nullopt;
    if (c.is_zero()) return out;
    const Cyc cc = c.order() == cyc_order_ ? c : c.embedded(std::lcm(c.order(), cyc_order_));
    out.cyc_order_ = cc.order();
    for (const auto& [j, col] : cols_)
      for (const auto& [k, v] : col) {
        Cyc prod = v * cc;
        if (!prod.is_zero()) out.cols_[j][k] = std::move(prod);
      }
    return out;
  }

  QYSeries scaled(const Cyc& c) const { return times_monomial(c, 0, 0); }

  // y -> -y.  Requires every y-exponent to be an integer.
  QYSeries mirrored_y() const {
    QYSeries out = *this;
    for (auto& [j, col] : out.cols_) {
      for (auto it = col.begin(); it != col.end();) {
        Rational e = y_exponent(it->first);
        if (!is_integer(e)) throw std::invalid_argument("y -> -y needs integer y-exponents");
        if (integer_value(e) % 2 != 0) it->second = -it->second;
        ++it;
      }
    }
    return out;
  }

  // Coefficient-wise complex conjugation.
  QYSeries conj_coeffs() const {
    QYSeries out = *this;
    for (auto& [j, col] : out.cols_)
      for (auto& [k, v] : col) v = v.conj();
    return out;
  }

  friend QYSeries operator-(const QYSeries& a) { return a.scaled(Cyc(-1, a.cyc_order_)); }

  friend QYSeries operator+(const QYSeries& a, const QYSeries& b) {
    // Windows intersect; no erosion is involved in addition.
    std::optional<Rational> q_max = min_q_max(a.q_max_, b.q_max_);
    std::optional<Rational> y_floor = max_y_floor(a.y_floor_, b.y_floor_);
    // An empty operand imposes only its window.
    if (a.cols_.empty()) {
      QYSeries out = b;
      out.q_max_ = q_max;
      out.y_floor_ = y_floor;
      out.clip_to_window();
      return out;
    }
    if (b.cols_.empty()) {
      QYSeries out = a;
      out.q_max_ = q_max;
      out.y_floor_ = y_floor;
      out.clip_to_window();
      return out;
    }
    const long den = std::lcm(a.q_den_, b.q_den_);
    const Rational q_off = a.q_offset_ < b.q_offset_ ? a.q_offset_ : b.q_offset_;
    Rational dya = a.y_offset_ - b.y_offset_;
    if (!is_integer(dya))
      throw std::invalid_argument("cannot add series whose y-grids differ by a non-integer");
    QYSeries out(std::max(a.cyc_order_, b.cyc_order_), q_off, a.y_offset_, den);
    out.q_max_ = std::move(q_max);
    out.y_floor_ = std::move(y_floor);
    out.accumulate(a, Cyc(1, out.cyc_order_));
    out.accumulate(b, Cyc(1, out.cyc_order_));
    out.clip_to_window();
    return out;
  }

  friend QYSeries operator-(const QYSeries& a, const QYSeries& b) { return a + (-b); }

  friend QYSeries operator*(const QYSeries& a, const QYSeries& b) {
    const long den = std::lcm(a.q_den_, b.q_den_);
    QYSeries out(std::max(a.cyc_order_, b.cyc_order_), a.q_offset_ + b.q_offset_,
                 a.y_offset_ + b.y_offset_, den);

    // Reliable q-range: terms of one factor beyond its q_max meet the other
    // factor's lowest possible order.
    std::optional<Rational> q_max;
    if (a.q_max_) {
      if (auto bmin = b.sound_q_support_min()) q_max = *a.q_max_ + *bmin;
    }
    if (b.q_max_) {
      if (auto amin = a.sound_q_support_min()) {
        Rational cand = *b.q_max_ + *amin;
        if (!q_max || cand < *q_max) q_max = cand;
      }
    }

    // Reliable y-range: unknown terms below one factor's floor meet the
    // partner's highest known terms (or its own unknown region).
    std::optional<Rational> y_floor;
    auto raise = [&y_floor](const Rational& v) {
      if (!y_floor || v > *y_floor) y_floor = v;
    };
    std::optional<Rational> atop = a.max_y_exponent();
    std::optional<Rational> btop = b.max_y_exponent();
    if (a.y_floor_) {
      if (btop) raise(*a.y_floor_ + *btop);
      if (b.y_floor_) raise(*a.y_floor_ + *b.y_floor_);
    }
    if (b.y_floor_ && atop) raise(*b.y_floor_ + *atop);

    out.q_max_ = q_max;
    out.y_floor_ = std::move(y_floor);

    if (a.cols_.empty() || b.cols_.empty()) return out;

    const long sa = den / a.q_den_;
    const long sb = den / b.q_den_;
    // Column cutoff on the result grid.
    std::optional<long> jcap;
    if (out.q_max_) {
      Rational rel = (*out.q_max_ - out.q_offset_) * den;
      if (rel < 0) return out;  // window retains no columns
      jcap = to_long(floor_int(rel));
    }
    std::optional<long> kfloor;
    if (out.y_floor_) kfloor = to_long(ceil_int(*out.y_floor_ - out.y_offset_));

    for (const auto& [ja, cola] : a.cols_) {
      for (const auto& [jb, colb] : b.cols_) {
        const long j = ja * sa + jb * sb;
        if (jcap && j > *jcap) break;  // b columns ascend; later ones only grow
        Column& target = out.cols_[j];
        for (const auto& [ka, va] : cola) {
          for (const auto& [kb, vb] : colb) {
            const long k = ka + kb;
            if (kfloor && k < *kfloor) break;  // colb descends in y
            Cyc prod = va * vb;
            if (prod.is_zero()) continue;
            Cyc& slot = target[k];
            slot += prod;
          }
        }
      }
    }
    out.normalize();
    return out;
  }

  QYSeries& operator+=(const QYSeries& other) { return *this = *this + other; }
  QYSeries& operator*=(const QYSeries& other) { return *this = *this * other; }

  // Inverse of a series that is a unit for the expansion region: writing
  // f = c0 * q^A * y^B * (1 + u), the anchor coefficient c0 sits at the
  // lowest q-order and at y-index 0 of the declared y-grid, and u may only
  // contain terms at higher q-orders or, within the anchor column, strictly
  // below the anchor.  A term above the anchor in the anchor column would
  // require expanding in ascending powers of y, which leaves the region
  // 1 < |y|; such input raises window_error.
  //
  // target_y_floor bounds the computed tail when the inverse descends
  // infinitely in y; target_q_max must be supplied if f is exact in q.
  static QYSeries invert_unit(const QYSeries& f, std::optional<Rational> target_y_floor = std::nullopt,
                              std::optional<Rational> target_q_max = std::nullopt) {
    if (f.cols_.empty()) throw std::domain_error("cannot invert the zero series");
    const long j0 = f.cols_.begin()->first;
    if (f.y_floor_ && j0 != 0)
      throw window_error(
          "cannot invert: columns below the first stored q-order may hide under the y-floor, so "
          "the leading term is ambiguous");
    const Column& head = f.cols_.begin()->second;
    if (head.begin()->first > 0)
      throw window_error(
          "series is not a unit for this expansion region: a term above the y-anchor at the lowest "
          "q-order would need ascending powers of y (outside 1 < |y| < 1/|q|)");
    auto anchor_it = head.find(0);
    if (anchor_it == head.end())
      throw window_error("series is not anchored at y-index 0 of its declared y-grid");
    const Cyc c0 = anchor_it->second;
    const Cyc c0inv = c0.inverse();
    const Rational anchor_q = f.q_exponent(j0);

    // Result q-window: the caller's target intersected with what f's own
    // window supports (f reliable to q_max => 1/f reliable to q_max - 2A).
    std::optional<Rational> q_max = target_q_max;
    if (f.q_max_) {
      Rational derived = *f.q_max_ - anchor_q - anchor_q;
      if (!q_max || derived < *q_max) q_max = derived;
    }
    if (!q_max)
      throw std::invalid_argument("inverting a q-exact series requires an explicit target q_max");

    QYSeries out(f.cyc_order_, -anchor_q, -f.y_offset_, f.q_den_);
    Rational rel = (*q_max - out.q_offset_) * f.q_den_;
    if (rel < 0) throw window_error("inversion target window is empty");
    const long R = to_long(floor_int(rel));

    // u in relative coordinates: column r = j - j0, same y-indices, scaled so
    // the anchor becomes exactly 1.
    ColumnMap u;
    for (const auto& [j, col] : f.cols_) {
      const long r = j - j0;
      if (r > R) break;
      for (const auto& [k, v] : col) {
        if (r == 0 && k == 0) continue;
        Cyc scaledv = v * c0inv;
        if (!scaledv.is_zero()) u[r][k] = std::move(scaledv);
      }
    }

    // Structural y-tops of the inverse per relative column, via the chain
    // recurrence over u's cross-column tops.
    std::vector<std::optional<long>> ceil_top(static_cast<std::size_t>(R) + 1);
    ceil_top[0] = 0;
    for (long r = 1; r <= R; ++r) {
      std::optional<long> best;
      for (const auto& [t, colu] : u) {
        if (t == 0) continue;
        if (t > r) break;
        if (!ceil_top[r - t]) continue;
        long cand = colu.begin()->first + *ceil_top[r - t];
        if (!best || cand > *best) best = cand;
      }
      ceil_top[r] = best;
    }
    long max_top = 0;
    for (long r = 0; r <= R; ++r)
      if (ceil_top[r] && *ceil_top[r] > max_top) max_top = *ceil_top[r];

    // Decide the computational y-cutoff and the honest floor claim (both in
    // absolute y-exponents).  A nonempty anchor-column tail makes the inverse
    // descend infinitely in y; a finite floor on f contaminates the inverse
    // below f.y_floor lifted by the largest structural top.
    const bool descends = u.count(0) != 0;
    std::optional<Rational> claim_floor;
    if (f.y_floor_) claim_floor = *f.y_floor_ - f.y_offset_ - f.y_offset_ + Rational(max_top);
    std::optional<long> kcut;
    if (descends || f.y_floor_) {
      if (!target_y_floor)
        throw std::invalid_argument("inverting this series requires an explicit target y_floor");
      if (!claim_floor || *target_y_floor > *claim_floor) claim_floor = target_y_floor;
      kcut = to_long(ceil_int(*target_y_floor - out.y_offset_));
    }

    // Termwise recursion v = 1 - u v, columns ascending, y strictly
    // descending within a column, so every referenced value (earlier column,
    // or same column at higher y) is already final.
    ColumnMap v;
    v[0][0] = Cyc(1, f.cyc_order_);
    for (long r = 0; r <= R; ++r) {
      if (!ceil_top[r]) continue;
      std::vector<long> positions;
      if (kcut) {
        // Infinite or contaminated descent: walk the full integer range from
        // the structural top down to the requested cutoff.
        for (long k = *ceil_top[r]; k >= *kcut; --k)
          if (r != 0 || k != 0) positions.push_back(k);
      } else {
        // Fully exact input: every nonzero position arises from a cross-column
        // product with an already-finished column.
        for (const auto& [t, colu] : u) {
          if (t == 0) continue;
          if (t > r) break;
          auto vit = v.find(r - t);
          if (vit == v.end()) continue;
          for (const auto& [b, uv] : colu)
            for (const auto& [d, vv] : vit->second)
              if (r != 0 || b + d != 0) positions.push_back(b + d);
        }
        std::sort(positions.begin(), positions.end(), std::greater<long>());
        positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
      }
      for (long k : positions) {
        Cyc acc(0, f.cyc_order_);
        for (const auto& [t, colu] : u) {
          if (t > r) break;
          auto vit = v.find(r - t);
          if (vit == v.end()) continue;
          for (const auto& [b, uv] : colu) {
            if (t == 0 && b >= 0) continue;  // column 0 of u is the strict tail
            auto dit = vit->second.find(k - b);
            if (dit == vit->second.end()) continue;
            acc += uv * dit->second;
          }
        }
        if (!acc.is_zero()) v[r][k] = -acc;
      }
      if (auto vit = v.find(r); vit != v.end() && vit->second.empty()) v.erase(r);
    }

    for (const auto& [r, col] : v)
      for (const auto& [k, val] : col) {
        Cyc c = val * c0inv;
        if (!c.is_zero()) out.cols_[r][k] = std::move(c);
      }
    out.q_max_ = q_max;
    out.y_floor_ = claim_floor;
    out.clip_to_window();
    return out;
  }

  // First coefficient difference on the common reliability window, or absent
  // if the two series agree there.  Throws window_error if the common window
  // contains no representable exponents at all.
  friend std::optional<Mismatch> first_mismatch(const QYSeries& a, const QYSeries& b) {
    std::optional<Rational> q_max = min_q_max(a.q_max_, b.q_max_);
    std::optional<Rational> y_floor = max_y_floor(a.y_floor_, b.y_floor_);
    auto in_window = [&](const Rational& qe, const Rational& ye) {
      return (!q_max || qe <= *q_max) && (!y_floor || ye >= *y_floor);
    };
    // The window must leave room for at least one q-grid point of one of the
    // operands, or a verdict of "equal" would be vacuous.
    if (q_max && *q_max < a.q_offset_ && *q_max < b.q_offset_)
      throw window_error("series comparison window is empty");
    std::map<std::pair<Rational, Rational>, std::pair<Cyc, Cyc>> table;
    for (const auto& [j, col] : a.cols_)
      for (const auto& [k, v] : col) {
        Rational qe = a.q_exponent(j), ye = a.y_exponent(k);
        if (in_window(qe, ye)) table[{qe, ye}].first = v;
      }
    for (const auto& [j, col] : b.cols_)
      for (const auto& [k, v] : col) {
        Rational qe = b.q_exponent(j), ye = b.y_exponent(k);
        if (in_window(qe, ye)) table[{qe, ye}].second = v;
      }
    for (const auto& [pos, vals] : table)
      if (vals.first != vals.second) return Mismatch{pos.first, pos.second, vals.first, vals.second};
    return std::nullopt;
  }

  // Human-readable listing of the lowest q-orders (debugging aid).
  std::string str(std::size_t max_columns = 6, std::size_t max_terms = 10) const {
    std::ostringstream outs;
    outs << "[q_max=" << (q_max_ ? to_string(*q_max_) : "inf")
         << ", y_floor=" << (y_floor_ ? to_string(*y_floor_) : "-inf") << "]";
    std::size_t shown = 0;
    for (const auto& [j, col] : cols_) {
      if (shown++ >= max_columns) {
        outs << " ...";
        break;
      }
      outs << "\n  q^" << to_string(q_exponent(j)) << ":";
      std::size_t t = 0;
      for (const auto& [k, v] : col) {
        if (t++ >= max_terms) {
          outs << " ...";
          break;
        }
        outs << " (" << v.str() << ")y^" << to_string(y_exponent(k));
      }
    }
    return outs.str();
  }

 private:
  static std::optional<Rational> min_q_max(const std::optional<Rational>& x,
                                           const std::optional<Rational>& y) {
    if (!x) return y;
    if (!y) return x;
    return *x < *y ? x : y;
  }
  static std::optional<Rational> max_y_floor(const std::optional<Rational>& x,
                                             const std::optional<Rational>& y) {
    if (!x) return y;
    if (!y) return x;
    return *x > *y ? x : y;
  }

  // Merge other's terms into *this (grids must already be compatible).
  void accumulate(const QYSeries& other, const Cyc& scale) {
    Rational jshift_r = (other.q_offset_ - q_offset_) * q_den_;
    if (!is_integer(jshift_r))
      throw std::invalid_argument("cannot add series whose q-grids are incompatible");
    const long jshift = to_long(integer_value(jshift_r));
    const long stretch = q_den_ / other.q_den_;
    if (stretch * other.q_den_ != q_den_)
      throw std::invalid_argument("cannot add series whose q-grids are incompatible");
    Rational kshift_r = other.y_offset_ - y_offset_;
    if (!is_integer(kshift_r))
      throw std::invalid_argument("cannot add series whose y-grids differ by a non-integer");
    const long kshift = to_long(integer_value(kshift_r));
    for (const auto& [j, col] : other.cols_)
      for (const auto& [k, v] : col) {
        Cyc c = v * scale;
        if (c.is_zero()) continue;
        long jj = j * stretch + jshift;
        if (jj < 0) throw std::invalid_argument("series addition produced a negative q-column");
        Cyc& slot = cols_[jj][k + kshift];
        slot += c;
      }
    normalize();
  }

  void normalize() {
    for (auto itc = cols_.begin(); itc != cols_.end();) {
      for (auto itt = itc->second.begin(); itt != itc->second.end();) {
        if (itt->second.is_zero())
          itt = itc->second.erase(itt);
        else
          ++itt;
      }
      if (itc->second.empty())
        itc = cols_.erase(itc);
      else
        ++itc;
    }
    clip_to_window();
  }

  void clip_to_window() {
    if (q_max_) {
      Rational rel = (*q_max_ - q_offset_) * q_den_;
      const bool none = rel < 0;
      const long cap = none ? -1 : to_long(floor_int(rel));
      for (auto itc = cols_.begin(); itc != cols_.end();) {
        if (none || itc->first > cap)
          itc = cols_.erase(itc);
        else
          ++itc;
      }
    }
    if (y_floor_) {
      for (auto itc = cols_.begin(); itc != cols_.end();) {
        Column& col = itc->second;
        for (auto itt = col.begin(); itt != col.end();) {
          if (y_exponent(itt->first) < *y_floor_)
            itt = col.erase(itt);
          else
            ++itt;
        }
        if (col.empty())
          itc = cols_.erase(itc);
        else
          ++itc;
      }
    }
  }

  unsigned cyc_order_;
  Rational q_offset_;
  Rational y_offset_;
  long q_den_;
  std::optional<Rational> q_max_;    // reliable for q-exponent <= q_max (absent: exact)
  std::optional<Rational> y_floor_;  // reliable for y-exponent >= y_floor (absent: exact)
  ColumnMap cols_;
};

}  // namespace umbral
