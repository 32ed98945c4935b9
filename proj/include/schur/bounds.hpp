#pragma once

// Schur and Ramsey number tables, the classical inequalities between them,
// and the conjectural recursion S(n) <= n (S(n-1) + 1).
//
// Known quantities are Intervals (possibly open-ended). Conjectural values
// have their own type and never enter Interval arithmetic.

#include <optional>
#include <string>
#include <vector>

#include "schur/algebra.hpp"

namespace schur {

/// [lo, hi] with either end possibly unknown. `sources` names the constants
/// and rules that produced the ends.
struct Interval {
  std::optional<Integer> lo, hi;
  std::vector<std::string> sources;

  static Interval exact(long long v, std::string source) { return {Integer(v), Integer(v), {std::move(source)}}; }
  bool is_exact() const { return lo && hi && *lo == *hi; }

  friend Interval operator+(Interval a, long long k) {
    if (a.lo) *a.lo += k;
    if (a.hi) *a.hi += k;
    return a;
  }
  friend Interval operator-(Interval a, long long k) { return std::move(a) + (-k); }
  /// Scaling by k > 0.
  friend Interval operator*(long long k, Interval a) {
    if (a.lo) *a.lo *= k;
    if (a.hi) *a.hi *= k;
    return a;
  }

  std::string to_string() const {
    if (is_exact()) return lo->str();
    return "[" + (lo ? lo->str() : std::string("?")) + ", " + (hi ? hi->str() : std::string("?")) + "]";
  }
};

/// A value that holds only if the named conjectures hold.
struct Conjectural {
  Integer value;
  std::vector<std::string> assumes;
};

enum class Verdict { holds, violated, unknown };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::violated: return "violated";
    case Verdict::unknown: return "unknown";
  }
  return "?";
}

/// lhs <= rhs, decided from interval ends only.
inline Verdict compare_le(const Interval& lhs, const Interval& rhs) {
  if (lhs.hi && rhs.lo && *lhs.hi <= *rhs.lo) return Verdict::holds;
  if (lhs.lo && rhs.hi && *lhs.lo > *rhs.hi) return Verdict::violated;
  return Verdict::unknown;
}

// ---------------------------------------------------------------------------
// Tables

struct SchurTable {
  static constexpr int exact_max = 5;
  static constexpr long long exact[] = {1, 4, 13, 44, 160};
  static constexpr int coverage = 7;

  /// Table entry for S(n): exact for n <= 5, lower bounds for 6 and 7.
  static Interval entry(int n) {
    if (n >= 1 && n <= exact_max) return Interval::exact(exact[n - 1], "S(" + std::to_string(n) + ")");
    if (n == 6) return {Integer(536), std::nullopt, {"S(6) >= 536"}};
    if (n == 7) return {Integer(1680), std::nullopt, {"S(7) >= 1680"}};
    return {};
  }
};

struct RamseyTable {
  static constexpr int exact_max = 3;
  static constexpr long long exact[] = {3, 6, 17};

  /// R_n(3): exact for n <= 3, [51, 62] for n = 4, unknown beyond.
  static Interval entry(int n) {
    if (n >= 1 && n <= exact_max) return Interval::exact(exact[n - 1], "R_" + std::to_string(n) + "(3)");
    if (n == 4) return {Integer(51), Integer(62), {"51 <= R_4(3) <= 62"}};
    return {};
  }
};

/// R_n(3) from the table, with the upper end extended past n = 4 by the
/// recursion R_n(3) <= n (R_{n-1}(3) - 1) + 2.
inline Interval ramsey_bounds(int n) {
  if (n <= 4) return RamseyTable::entry(n);
  Interval prev = ramsey_bounds(n - 1);
  Interval out;
  if (prev.hi) out.hi = Integer(n) * (*prev.hi - 1) + 2;
  out.sources = prev.sources;
  out.sources.push_back("R_n(3) <= n(R_{n-1}(3)-1)+2");
  return out;
}

/// S(n) from the table, with a missing upper end filled by S(n) <= R_n(3) - 2.
inline Interval schur_bounds(int n) {
  Interval s = SchurTable::entry(n);
  if (!s.hi) {
    Interval r = ramsey_bounds(n);
    if (r.hi) {
      s.hi = *r.hi - 2;
      s.sources.insert(s.sources.end(), r.sources.begin(), r.sources.end());
      s.sources.push_back("S(n) <= R_n(3)-2");
    }
  }
  return s;
}

/// floor(n! e) for n >= 1 as sum_{k<=n} n!/k!; the tail sum_{k>n} n!/k! lies
/// in (0, (n+2)/(n+1)^2), which is below 1.
inline Integer floor_factorial_e(int n) {
  if (n < 1) throw DomainError("floor_factorial_e needs n >= 1");
  Integer sum = 0, term = 1;  // term = n!/k! for k = n, n-1, ..., 0
  for (int k = n; k >= 0; --k) {
    sum += term;
    term *= k;
  }
  Rational tail_bound(Integer(n + 2), Integer(n + 1) * (n + 1));
  if (tail_bound >= 1) throw std::logic_error("floor_factorial_e: tail bound not below 1");
  return sum;
}

// ---------------------------------------------------------------------------
// Reports

struct InequalityCheck {
  std::string name;
  std::string statement;
  Interval lhs, rhs;
  Verdict verdict = Verdict::unknown;
  std::vector<std::string> constants;
};

struct ClassicalReport {
  int n = 0;
  Interval schur, ramsey;
  std::vector<InequalityCheck> checks;
};

namespace detail {
inline InequalityCheck make_check(std::string name, std::string statement, Interval lhs, Interval rhs) {
  InequalityCheck c{std::move(name), std::move(statement), std::move(lhs), std::move(rhs), Verdict::unknown, {}};
  c.verdict = compare_le(c.lhs, c.rhs);
  c.constants = c.lhs.sources;
  c.constants.insert(c.constants.end(), c.rhs.sources.begin(), c.rhs.sources.end());
  return c;
}
}  // namespace detail

/// Evaluates, for one n:
///   3 S(n-1) + 1 <= S(n) <= floor(n! e)
///   S(n) <= R_n(3) - 2
///   R_n(3) <= n (R_{n-1}(3) - 1) + 2   (only where R_n(3) has a table entry)
///   R_n(3) <= n! e + 1
/// Anything outside table coverage comes back as unknown.
inline ClassicalReport check_classical_bounds(int n) {
  ClassicalReport rep;
  rep.n = n;
  if (n < 1) return rep;
  rep.schur = schur_bounds(n);
  rep.ramsey = ramsey_bounds(n);
  const std::string N = std::to_string(n);
  Interval fact_e{floor_factorial_e(n), floor_factorial_e(n), {"floor(" + N + "! e)"}};

  if (n >= 2) {
    rep.checks.push_back(detail::make_check("schur-recursive-lower", "3S(n-1)+1 <= S(n)", 3 * schur_bounds(n - 1) + 1, rep.schur));
  }
  rep.checks.push_back(detail::make_check("schur-factorial-upper", "S(n) <= n!e", rep.schur, fact_e));
  rep.checks.push_back(detail::make_check("schur-ramsey", "S(n) <= R_n(3)-2", rep.schur, rep.ramsey - 2));
  if (n >= 2 && n <= 4) {
    Interval prev = RamseyTable::entry(n - 1);
    rep.checks.push_back(detail::make_check("ramsey-recursive-upper", "R_n(3) <= n(R_{n-1}(3)-1)+2", RamseyTable::entry(n),
                                            n * (prev - 1) + 2));
  }
  rep.checks.push_back(detail::make_check("ramsey-factorial-upper", "R_n(3) <= n!e+1", RamseyTable::entry(n), fact_e + 1));
  return rep;
}

struct ConjectureRow {
  int n = 0;
  /// n (S(n-1) + 1), computed from a known S(n-1) or from the chained conjectural value.
  Conjectural bound;
  Interval known;
  Verdict verdict = Verdict::unknown;
};

/// n (S(n-1) + 1) against what is known about S(n). From n = 7 on the
/// previous value is itself conjectural and the chain is recorded in `assumes`.
inline ConjectureRow conjecture_recursion(int n) {
  if (n < 2) throw DomainError("conjecture_recursion needs n >= 2");
  ConjectureRow row;
  row.n = n;
  Interval prev = SchurTable::entry(n - 1);
  if (prev.is_exact()) {
    row.bound.value = Integer(n) * (*prev.lo + 1);
    row.bound.assumes = {"S(n) <= n(S(n-1)+1)"};
  } else {
    ConjectureRow below = conjecture_recursion(n - 1);
    row.bound.value = Integer(n) * (below.bound.value + 1);
    row.bound.assumes = below.bound.assumes;
    row.bound.assumes.push_back("S(" + std::to_string(n - 1) + ") <= " + below.bound.value.str());
  }
  row.known = schur_bounds(n);
  Interval as_interval{row.bound.value, row.bound.value, {}};
  row.verdict = compare_le(row.known, as_interval);
  return row;
}

/// L(n) exactly, when S(n-1) + 1 = R_{n-1}(3) - 1 with both sides known exactly.
inline std::optional<int> equality_gap_rule(int n) {
  if (n < 2) throw DomainError("equality_gap_rule needs n >= 2");
  Interval s = SchurTable::entry(n - 1), r = RamseyTable::entry(n - 1);
  if (!s.is_exact() || !r.is_exact()) return std::nullopt;
  if (*s.lo + 1 != *r.lo - 1) return std::nullopt;
  return static_cast<int>(*s.lo + 1);
}

/// S(n-1) + 1 <= L(n) <= R_{n-1}(3) - 1.
inline Interval length_bracket(int n) {
  if (n < 2) throw DomainError("length_bracket needs n >= 2");
  Interval s = schur_bounds(n - 1), r = ramsey_bounds(n - 1);
  Interval out;
  if (s.lo) out.lo = *s.lo + 1;
  if (r.hi) out.hi = *r.hi - 1;
  out.sources = s.sources;
  out.sources.insert(out.sources.end(), r.sources.begin(), r.sources.end());
  return out;
}

}  // namespace schur
