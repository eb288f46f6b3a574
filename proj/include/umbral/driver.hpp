#pragma once
// Verification driver: job configuration and validation, per-class
// verification with an optional worker pool, deterministic report assembly
// in plain-text and JSON forms, block-identity oracles, and re-emission of
// the embedded data tables for audit.

#include <json.hpp>

#include <umbral/engine.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace umbral {

// Errors in the requested job configuration (unknown lambency or class,
// windows too small for the requested checks); the command line maps these
// to exit code 2.
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Check { equality, mock, characters, blocks };

inline const char* check_name(Check c) {
  switch (c) {
    case Check::equality: return "equality";
    case Check::mock: return "mock";
    case Check::characters: return "characters";
    case Check::blocks: return "blocks";
  }
  return "?";
}

inline Check check_from_name(const std::string& name) {
  for (Check c : {Check::equality, Check::mock, Check::characters, Check::blocks})
    if (name == check_name(c)) return c;
  throw usage_error("unknown check \"" + name +
                    "\" (known: equality, mock, characters, blocks)");
}

inline const std::vector<int>& known_lambencies() {
  static const std::vector<int> all = {4, 5, 7, 13};
  return all;
}

struct JobConfig {
  std::vector<int> lambencies = known_lambencies();
  // Empty: every eigenvalue-tabulated class.  A label whose class shares a
  // tabulated class's data (for example 8B at lambency four) selects the row
  // it shares.
  std::vector<std::string> classes;
  // Window overrides shared by all selected lambencies; when absent each
  // lambency gets the smallest window the requested checks need.
  std::optional<Rational> q_max;
  std::optional<Rational> y_floor;
  // Equality comparisons read y-exponents up to this cap.
  Rational y_cap = 9;
  std::set<Check> checks = {Check::equality};
  bool json = false;
  int jobs = 1;
  // q-orders examined per residue by the mock and characters checks.
  long coefficient_count = 5;
  // Testing hook: adds 1 to one product coefficient before any checks run,
  // to exercise the failure-reporting path end to end.
  struct Perturbation {
    int lambency = 0;
    std::string cls;
    Rational q_exp;
    Rational y_exp;
  };
  std::optional<Perturbation> perturb;
};

// The smallest window on which the requested checks are sound at lambency m.
// Equality compares on the acceptance window q <= 8, y >= -16.  Mock
// extraction reads strip-shifted coefficients up to q = m + count - 2 and
// the polar column down to y = -2m.  The character decomposition reads
// q < count at small positive y-exponents.
inline std::pair<Rational, Rational> window_for(int m, const JobConfig& cfg) {
  Rational q = 1;
  Rational y = -1;
  bool any = false;
  auto widen = [&](const Rational& qr, const Rational& yr) {
    if (!any || qr > q) q = qr;
    if (!any || yr < y) y = yr;
    any = true;
  };
  if (cfg.checks.count(Check::equality)) widen(8, -16);
  if (cfg.checks.count(Check::mock))
    widen(Rational(m) + cfg.coefficient_count - 2, Rational(-2 * m));
  if (cfg.checks.count(Check::characters))
    widen(Rational(cfg.coefficient_count - 1), Rational(-2));
  if (cfg.q_max) q = *cfg.q_max;
  if (cfg.y_floor) y = *cfg.y_floor;
  return {q, y};
}

inline void validate(const JobConfig& cfg) {
  if (cfg.lambencies.empty()) throw usage_error("at least one lambency must be selected");
  for (int l : cfg.lambencies) {
    const auto& known = known_lambencies();
    if (std::find(known.begin(), known.end(), l) == known.end())
      throw usage_error("unknown lambency " + std::to_string(l) + " (known: 4, 5, 7, 13)");
  }
  if (cfg.checks.empty()) throw usage_error("no checks selected");
  if (cfg.jobs < 1) throw usage_error("worker count must be at least 1");
  if (cfg.coefficient_count < 1) throw usage_error("coefficient count must be at least 1");
  if (cfg.q_max && *cfg.q_max < 1) throw usage_error("q_max must be at least 1");
  for (int m : cfg.lambencies) {
    if (cfg.checks.count(Check::mock)) {
      if (cfg.y_floor && *cfg.y_floor > -2 * m)
        throw usage_error("mock extraction at lambency " + std::to_string(m) +
                          " needs y_floor <= " + std::to_string(-2 * m));
      const Rational need = Rational(m) + cfg.coefficient_count - 2;
      if (cfg.q_max && *cfg.q_max < need)
        throw usage_error("mock extraction at lambency " + std::to_string(m) +
                          " needs q_max >= " + to_string(need));
    }
    if (cfg.checks.count(Check::characters) && cfg.q_max &&
        *cfg.q_max < cfg.coefficient_count - 1)
      throw usage_error("the characters check needs q_max >= " +
                        std::to_string(cfg.coefficient_count - 1));
  }
  for (const std::string& cls : cfg.classes) {
    bool found = false;
    for (int m : cfg.lambencies) {
      const CharacterTable& tg = trace_group(m);
      if (std::find(tg.classes.begin(), tg.classes.end(), cls) != tg.classes.end()) {
        found = true;
        break;
      }
    }
    if (!found)
      throw usage_error("class " + cls + " is not a class of any selected trace group");
  }
}

struct ClassReport {
  int lambency = 0;
  std::string label;
  Rational q_max;
  Rational y_floor;
  bool equality_checked = false;
  std::optional<Mismatch> mismatch;
  bool mock_checked = false;
  MockReport mock;
  std::vector<std::vector<Cyc>> mock_rows;  // residues 0..m by q-order 0..count-1
  std::string error;                        // text of an unexpected exception

  bool passed() const {
    if (!error.empty()) return false;
    if (equality_checked && mismatch) return false;
    if (mock_checked && !mock.ok()) return false;
    return true;
  }
};

struct LambencyReport {
  int lambency = 0;
  std::vector<ClassReport> classes;
  bool characters_checked = false;
  std::vector<MultiplicityEntry> multiplicities;
  std::string characters_error;

  bool characters_ok() const {
    if (!characters_error.empty()) return false;
    for (const MultiplicityEntry& e : multiplicities)
      if (!e.integral) return false;
    return true;
  }
  bool passed() const {
    for (const ClassReport& c : classes)
      if (!c.passed()) return false;
    return !characters_checked || characters_ok();
  }
};

struct BlockCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct RunReport {
  std::vector<LambencyReport> lambencies;
  std::vector<BlockCheck> blocks;
  long long elapsed_ms = 0;

  bool passed() const {
    for (const LambencyReport& l : lambencies)
      if (!l.passed()) return false;
    for (const BlockCheck& b : blocks)
      if (!b.ok) return false;
    return true;
  }
};

// First coefficient disagreement with y-exponent at most y_cap, over the
// operands' common reliability window, in ascending (q, y) order.
inline std::optional<Mismatch> first_mismatch_capped(const QYSeries& a, const QYSeries& b,
                                                     const Rational& y_cap) {
  auto within = [&](const Rational& qe, const Rational& ye) {
    if (a.q_max() && qe > *a.q_max()) return false;
    if (b.q_max() && qe > *b.q_max()) return false;
    if (a.y_floor() && ye < *a.y_floor()) return false;
    if (b.y_floor() && ye < *b.y_floor()) return false;
    return ye <= y_cap;
  };
  std::map<std::pair<Rational, Rational>, std::pair<Cyc, Cyc>> table;
  for (const auto& [j, col] : a.columns())
    for (const auto& [k, v] : col) {
      Rational qe = a.q_exponent(j), ye = a.y_exponent(k);
      if (within(qe, ye)) table[{qe, ye}].first = v;
    }
  for (const auto& [j, col] : b.columns())
    for (const auto& [k, v] : col) {
      Rational qe = b.q_exponent(j), ye = b.y_exponent(k);
      if (within(qe, ye)) table[{qe, ye}].second = v;
    }
  for (const auto& [pos, vals] : table)
    if (vals.first != vals.second)
      return Mismatch{pos.first, pos.second, vals.first, vals.second};
  return std::nullopt;
}

// Classical identities pinning the block expansions, exact over the stated
// orders: the pentagonal-number pattern of the weightless Euler product, the
// odd-square expansion of its cube, and the half-period shift relating the
// two theta kinds.
inline std::vector<BlockCheck> check_blocks(unsigned order = default_cyclotomic_order()) {
  std::vector<BlockCheck> out;

  {
    BlockCheck c{"euler-product pentagonal sparsity", true, ""};
    const QYSeries e = eta_block(1, Rational(31), order);
    std::map<long, int> expect;
    for (long j = -5; j <= 5; ++j) {
      const long p = j * (3 * j - 1) / 2;
      if (p >= 0 && p <= 30) expect[p] = (j % 2 == 0) ? 1 : -1;
    }
    for (long n = 0; n <= 30 && c.ok; ++n) {
      auto it = expect.find(n);
      const Cyc want(it == expect.end() ? 0 : it->second, order);
      if (e.coeff(Rational(1, 24) + n, 0) != want) {
        c.ok = false;
        c.detail = "wrong coefficient at relative order " + std::to_string(n);
      }
    }
    out.push_back(std::move(c));
  }

  {
    BlockCheck c{"eta-cube odd-square expansion", true, ""};
    const QYSeries e = eta_block(1, Rational(11), order);
    const QYSeries cube = e * e * e;
    std::map<long, long> expect;
    for (long k = 0; k * (k + 1) / 2 <= 10; ++k)
      expect[k * (k + 1) / 2] = (k % 2 == 0 ? 1 : -1) * (2 * k + 1);
    for (long n = 0; n <= 10 && c.ok; ++n) {
      auto it = expect.find(n);
      const Cyc want(it == expect.end() ? 0 : it->second, order);
      if (cube.coeff(Rational(1, 8) + n, 0) != want) {
        c.ok = false;
        c.detail = "wrong coefficient at relative order " + std::to_string(n);
      }
    }
    out.push_back(std::move(c));
  }

  {
    BlockCheck c{"theta half-period shift", true, ""};
    const QYSeries shifted = theta1_block(1, 1, Rational(1, 2), Rational(8), order);
    const QYSeries second = theta2_block(1, 1, Rational(0), Rational(8), order);
    if (auto mm = first_mismatch(shifted, second)) {
      c.ok = false;
      c.detail = "mismatch at q^" + to_string(mm->q_exp) + " y^" + to_string(mm->y_exp);
    }
    out.push_back(std::move(c));
  }

  return out;
}

inline RunReport run(const JobConfig& cfg) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();
  const unsigned order = default_cyclotomic_order();

  const bool want_equality = cfg.checks.count(Check::equality) != 0;
  const bool want_mock = cfg.checks.count(Check::mock) != 0;
  const bool want_chars = cfg.checks.count(Check::characters) != 0;

  struct Task {
    int lambency = 0;
    std::string label;  // eigenvalue-tabulated class label
    Rational q_max;
    Rational y_floor;
    bool selected = true;     // named by the class filter (or no filter given)
    bool want_finite = false;
  };

  std::vector<int> ls = cfg.lambencies;
  std::sort(ls.begin(), ls.end());
  ls.erase(std::unique(ls.begin(), ls.end()), ls.end());

  std::vector<Task> tasks;
  for (int m : ls) {
    const auto [qm, yf] = window_for(m, cfg);
    const EigenData& data = eigen_data(m);
    std::set<std::string> selected_rows;
    if (!cfg.classes.empty()) {
      const CharacterTable& tg = trace_group(m);
      for (const std::string& cls : cfg.classes) {
        if (std::find(tg.classes.begin(), tg.classes.end(), cls) == tg.classes.end()) continue;
        selected_rows.insert(eigen_label(m, cls));
      }
    }
    for (const EigenRow& row : data.rows) {
      const bool selected = cfg.classes.empty() || selected_rows.count(row.label) != 0;
      if (!selected && !want_chars) continue;
      Task t;
      t.lambency = m;
      t.label = row.label;
      t.selected = selected;
      t.want_finite = (want_mock && selected) || want_chars;
      if (selected) {
        t.q_max = qm;
        t.y_floor = yf;
      } else {
        // Needed only to supply the lambency-level decomposition.
        t.q_max = Rational(cfg.coefficient_count - 1);
        t.y_floor = Rational(-2);
      }
      tasks.push_back(std::move(t));
    }
  }

  struct TaskResult {
    ClassReport report;
    std::optional<QYSeries> finite;
  };
  std::vector<TaskResult> results(tasks.size());

  auto run_task = [&](std::size_t idx) {
    const Task& t = tasks[idx];
    TaskResult& res = results[idx];
    ClassReport& rep = res.report;
    rep.lambency = t.lambency;
    rep.label = t.label;
    rep.q_max = t.q_max;
    rep.y_floor = t.y_floor;
    try {
      QYSeries product = trace_product(t.lambency, t.label, t.q_max, t.y_floor, order);
      if (cfg.perturb && cfg.perturb->lambency == t.lambency && cfg.perturb->cls == t.label)
        product = product + QYSeries::monomial(Cyc(1, order), cfg.perturb->q_exp,
                                               cfg.perturb->y_exp);
      if (want_equality && t.selected) {
        rep.equality_checked = true;
        const QYSeries closed =
            closed_form_series(t.lambency, t.label, t.q_max, t.y_floor, order);
        rep.mismatch = first_mismatch_capped(product, closed, cfg.y_cap);
      }
      if (t.want_finite) {
        const QYSeries finite = finite_part(t.lambency, t.label, product);
        if (want_mock && t.selected) {
          rep.mock_checked = true;
          rep.mock = check_mock_structure(t.lambency, finite, cfg.coefficient_count);
          rep.mock_rows = mock_coefficients(t.lambency, finite, cfg.coefficient_count);
        }
        res.finite = finite;
      }
    } catch (const std::exception& e) {
      rep.error = e.what();
    }
  };

  const int workers = std::max(1, std::min<int>(cfg.jobs, static_cast<int>(tasks.size())));
  if (workers <= 1) {
    for (std::size_t idx = 0; idx < tasks.size(); ++idx) run_task(idx);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t idx = next.fetch_add(1); idx < tasks.size(); idx = next.fetch_add(1))
          run_task(idx);
      });
    for (std::thread& th : pool) th.join();
  }

  RunReport out;
  for (int m : ls) {
    LambencyReport lr;
    lr.lambency = m;
    std::map<std::string, QYSeries> finite_by_label;
    std::string first_error;
    for (std::size_t idx = 0; idx < tasks.size(); ++idx) {
      if (tasks[idx].lambency != m) continue;
      const TaskResult& res = results[idx];
      if (tasks[idx].selected) lr.classes.push_back(res.report);
      if (res.finite) finite_by_label.emplace(tasks[idx].label, *res.finite);
      if (first_error.empty() && !res.report.error.empty()) first_error = res.report.error;
    }
    if (want_chars) {
      lr.characters_checked = true;
      try {
        if (!first_error.empty()) throw std::runtime_error(first_error);
        lr.multiplicities = decompose_mock(m, finite_by_label, cfg.coefficient_count);
      } catch (const std::exception& e) {
        lr.characters_error = e.what();
      }
    }
    if (!lr.classes.empty() || lr.characters_checked) out.lambencies.push_back(std::move(lr));
  }
  if (cfg.checks.count(Check::blocks)) out.blocks = check_blocks(order);

  out.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return out;
}

// ---------------------------------------------------------------------------
// Rendering.

inline std::string render_cyc(const Cyc& v) {
  const std::string s = v.str();
  return v.terms().size() > 1 ? "(" + s + ")" : s;
}

inline std::string render_table(const RunReport& report, const JobConfig& cfg) {
  std::ostringstream out;
  out << "cyclotomic order " << default_cyclotomic_order() << "; checks:";
  bool first = true;
  for (Check c : cfg.checks) {
    out << (first ? " " : ", ") << check_name(c);
    first = false;
  }
  out << "\n";

  for (const LambencyReport& lr : report.lambencies) {
    out << "\nlambency " << lr.lambency << " (trace group " << trace_group(lr.lambency).name
        << ")\n";
    for (const ClassReport& cr : lr.classes) {
      out << "  " << cr.label << "  [q <= " << to_string(cr.q_max) << ", y >= "
          << to_string(cr.y_floor) << "]";
      if (cr.equality_checked) out << "  equality: " << (cr.mismatch ? "FAIL" : "PASS");
      if (cr.mock_checked) out << "  mock: " << (cr.mock.ok() ? "PASS" : "FAIL");
      out << "\n";
      if (!cr.error.empty()) out << "      ERROR: " << cr.error << "\n";
      if (cr.mismatch)
        out << "      first mismatch at q^" << to_string(cr.mismatch->q_exp) << " y^"
            << to_string(cr.mismatch->y_exp) << ": product " << cr.mismatch->lhs.str()
            << ", closed form " << cr.mismatch->rhs.str() << "\n";
      for (const std::string& f : cr.mock.failures) out << "      " << f << "\n";
      if (cr.mock_checked && !cr.mock_rows.empty()) {
        const long m = lr.lambency;
        for (long r = 1; r < m; ++r) {
          out << "      H[" << r << "]:";
          const auto& row = cr.mock_rows[static_cast<std::size_t>(r)];
          for (std::size_t n = 0; n < row.size(); ++n) {
            const Rational e = Rational(static_cast<long>(n)) - Rational(r * r, 4 * m);
            out << (n == 0 ? " " : " + ") << render_cyc(row[n]) << " q^(" << to_string(e)
                << ")";
          }
          out << "\n";
        }
      }
    }
    if (lr.characters_checked) {
      const CharacterTable& tg = trace_group(lr.lambency);
      out << "  characters over " << tg.name << ": "
          << (lr.characters_ok() ? "PASS" : "FAIL");
      if (!lr.characters_error.empty()) {
        out << " (" << lr.characters_error << ")";
      } else {
        std::size_t bad = 0;
        for (const MultiplicityEntry& e : lr.multiplicities)
          if (!e.integral) ++bad;
        out << " (" << lr.multiplicities.size() << " entries";
        if (bad) out << ", " << bad << " non-integral";
        out << ")";
      }
      out << "\n";
    }
  }

  if (!report.blocks.empty()) {
    out << "\nblock identities\n";
    for (const BlockCheck& b : report.blocks) {
      out << "  " << b.name << ": " << (b.ok ? "PASS" : "FAIL");
      if (!b.detail.empty()) out << " (" << b.detail << ")";
      out << "\n";
    }
  }

  out << "\nresult: " << (report.passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

inline nlohmann::ordered_json json_of_cyc(const Cyc& v) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [e, c] : v.terms()) {
    nlohmann::ordered_json term = nlohmann::ordered_json::array();
    term.push_back(e);
    term.push_back(numerator(c).str());
    term.push_back(denominator(c).str());
    terms.push_back(std::move(term));
  }
  nlohmann::ordered_json j;
  j["order"] = v.order();
  j["terms"] = std::move(terms);
  return j;
}

inline nlohmann::ordered_json render_json(const RunReport& report, const JobConfig& cfg) {
  nlohmann::ordered_json doc;
  doc["cyclotomic_order"] = default_cyclotomic_order();
  {
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (Check c : {Check::equality, Check::mock, Check::characters, Check::blocks})
      if (cfg.checks.count(c)) checks.push_back(check_name(c));
    doc["checks"] = std::move(checks);
  }
  doc["status"] = report.passed() ? "pass" : "fail";
  doc["elapsed_ms"] = report.elapsed_ms;

  nlohmann::ordered_json reports = nlohmann::ordered_json::array();
  for (const LambencyReport& lr : report.lambencies) {
    for (const ClassReport& cr : lr.classes) {
      nlohmann::ordered_json j;
      j["lambency"] = cr.lambency;
      j["class"] = cr.label;
      j["window"] = {{"q_max", to_string(cr.q_max)}, {"y_floor", to_string(cr.y_floor)}};
      j["status"] = cr.passed() ? "pass" : "fail";
      if (cr.mismatch) {
        nlohmann::ordered_json mm;
        mm["q"] = to_string(cr.mismatch->q_exp);
        mm["y"] = to_string(cr.mismatch->y_exp);
        mm["product_coeff"] = json_of_cyc(cr.mismatch->lhs);
        mm["closed_coeff"] = json_of_cyc(cr.mismatch->rhs);
        j["first_mismatch"] = std::move(mm);
      } else {
        j["first_mismatch"] = nullptr;
      }
      if (cr.mock_checked) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        const long m = cr.lambency;
        for (long r = 1; r < m; ++r) {
          nlohmann::ordered_json row;
          row["r"] = r;
          nlohmann::ordered_json exps = nlohmann::ordered_json::array();
          nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
          const auto& vals = cr.mock_rows[static_cast<std::size_t>(r)];
          for (std::size_t n = 0; n < vals.size(); ++n) {
            exps.push_back(to_string(Rational(static_cast<long>(n)) - Rational(r * r, 4 * m)));
            coeffs.push_back(json_of_cyc(vals[n]));
          }
          row["exponents"] = std::move(exps);
          row["coefficients"] = std::move(coeffs);
          rows.push_back(std::move(row));
        }
        j["mock"] = std::move(rows);
        nlohmann::ordered_json structure;
        structure["polar"] = cr.mock.polar_ok;
        structure["boundary"] = cr.mock.boundary_ok;
        structure["odd"] = cr.mock.odd_ok;
        structure["window"] = cr.mock.window_ok;
        j["mock_structure"] = std::move(structure);
      } else {
        j["mock"] = nullptr;
      }
      j["multiplicities"] = nullptr;
      if (!cr.error.empty()) j["error"] = cr.error;
      reports.push_back(std::move(j));
    }
    if (lr.characters_checked) {
      nlohmann::ordered_json j;
      j["lambency"] = lr.lambency;
      j["class"] = nullptr;
      j["group"] = trace_group(lr.lambency).name;
      j["window"] = nullptr;
      j["status"] = lr.characters_ok() ? "pass" : "fail";
      j["first_mismatch"] = nullptr;
      j["mock"] = nullptr;
      nlohmann::ordered_json entries = nlohmann::ordered_json::array();
      for (const MultiplicityEntry& e : lr.multiplicities) {
        nlohmann::ordered_json entry;
        entry["r"] = e.r;
        entry["n"] = e.n;
        nlohmann::ordered_json values = nlohmann::ordered_json::array();
        for (const Cyc& v : e.multiplicities) values.push_back(json_of_cyc(v));
        entry["values"] = std::move(values);
        entry["integral"] = e.integral;
        entries.push_back(std::move(entry));
      }
      j["multiplicities"] = std::move(entries);
      if (!lr.characters_error.empty()) j["error"] = lr.characters_error;
      reports.push_back(std::move(j));
    }
  }
  if (!report.blocks.empty()) {
    nlohmann::ordered_json j;
    j["lambency"] = nullptr;
    j["class"] = nullptr;
    j["window"] = nullptr;
    bool all = true;
    for (const BlockCheck& b : report.blocks) all = all && b.ok;
    j["status"] = all ? "pass" : "fail";
    j["first_mismatch"] = nullptr;
    j["mock"] = nullptr;
    j["multiplicities"] = nullptr;
    nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
    for (const BlockCheck& b : report.blocks) {
      nlohmann::ordered_json entry;
      entry["name"] = b.name;
      entry["status"] = b.ok ? "pass" : "fail";
      if (!b.detail.empty()) entry["detail"] = b.detail;
      blocks.push_back(std::move(entry));
    }
    j["blocks"] = std::move(blocks);
    reports.push_back(std::move(j));
  }
  doc["reports"] = std::move(reports);
  return doc;
}

// ---------------------------------------------------------------------------
// Verbatim re-emission of the embedded data tables.

inline std::string dump_tables(std::optional<int> lambency = std::nullopt) {
  std::string out;
  auto append = [&out](const std::string& title, const char* body) {
    out += "# " + title + "\n";
    out += body;
  };
  auto one = [&](int m) {
    switch (m) {
      case 4:
        append("character table G4", data::kCharsG4);
        append("character table G4_336", data::kCharsG4Sub);
        append("eigenvalue data, lambency 4", data::kEigenL4);
        append("euler characters, lambency 4", data::kEulerL4);
        break;
      case 5:
        append("character table G5", data::kCharsG5);
        append("character table G5_24", data::kCharsG5Sub);
        append("eigenvalue data, lambency 5", data::kEigenL5);
        append("euler characters, lambency 5", data::kEulerL5);
        break;
      case 7:
        append("character table G7", data::kCharsG7);
        append("eigenvalue data, lambency 7", data::kEigenL7);
        append("euler characters, lambency 7", data::kEulerL7);
        break;
      case 13:
        append("character table G13", data::kCharsG13);
        append("eigenvalue data, lambency 13", data::kEigenL13);
        append("euler characters, lambency 13", data::kEulerL13);
        break;
      default:
        throw usage_error("unknown lambency " + std::to_string(m) + " (known: 4, 5, 7, 13)");
    }
  };
  if (lambency) {
    one(*lambency);
  } else {
    for (int m : known_lambencies()) one(m);
  }
  return out;
}

}  // namespace umbral
