#pragma once

// Searches over positive-integer sequences:
//  * verify_L_lower / determine_L: exhaustive check that every sequence of a
//    given length and average <= n has sd(A^) >= n;
//  * hunt_exotic: seeded randomized local search for sequences whose block
//    sums have small Schur degree.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "schur/algebra.hpp"
#include "schur/bounds.hpp"
#include "schur/solver.hpp"

namespace schur {

using Composition = std::vector<std::int64_t>;

inline Sequence to_sequence(const Composition& c) {
  std::vector<GroupElement> e;
  e.reserve(c.size());
  for (auto v : c) e.push_back(GroupElement::scalar(Integer(v)));
  return Sequence(std::move(e), 1);
}

/// (1, ..., 1, sum - length + 1): the lexicographically first composition of `sum`.
inline Composition first_composition(std::size_t length, std::int64_t sum) {
  if (length == 0 || sum < static_cast<std::int64_t>(length)) throw DomainError("no composition of that length and sum");
  Composition c(length, 1);
  c.back() = sum - static_cast<std::int64_t>(length) + 1;
  return c;
}

/// Successor in canonical order: sum ascending, then lexicographic. nullopt
/// once the sum would exceed `max_sum`.
inline std::optional<Composition> next_composition(Composition c, std::int64_t max_sum) {
  const std::size_t len = c.size();
  std::int64_t tail = c.back();
  for (std::size_t i = len - 1; i-- > 0;) {
    // c[i] can grow by one if the tail c[i+1..] still covers its len-1-i parts.
    if (tail - 1 >= static_cast<std::int64_t>(len - 1 - i)) {
      ++c[i];
      std::fill(c.begin() + static_cast<std::ptrdiff_t>(i) + 1, c.end(), 1);
      c.back() = tail - 1 - static_cast<std::int64_t>(len - 2 - i);
      return c;
    }
    tail += c[i];
  }
  std::int64_t sum = tail;
  if (sum + 1 > max_sum) return std::nullopt;
  return first_composition(len, sum + 1);
}

/// A <= reverse(A) lexicographically.
inline bool is_reversal_canonical(const Composition& c) {
  return !std::lexicographical_compare(c.rbegin(), c.rend(), c.begin(), c.end());
}

/// C(n, k) with n, k small.
inline Integer binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  Integer r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Positive compositions of length l with sum <= s: C(s, l).
inline Integer composition_count(std::size_t length, std::int64_t max_sum) {
  return binomial(max_sum, static_cast<std::int64_t>(length));
}

struct LnSearchSpec {
  int n = 2;
  std::size_t length = 1;
  /// Per-sequence solver budget.
  Budget instance_budget;

  std::int64_t max_sum() const { return static_cast<std::int64_t>(n) * static_cast<std::int64_t>(length); }
  void validate() const {
    if (n < 2) throw DomainError("L(n) search needs n >= 2");
    if (length < 1) throw DomainError("L(n) search needs length >= 1");
  }
};

struct Finding {
  Sequence sequence;
  Coloring coloring;
};

enum class RunStatus { running, holds, fails, inconclusive, budget_exceeded };

inline const char* to_string(RunStatus s) {
  switch (s) {
    case RunStatus::running: return "running";
    case RunStatus::holds: return "holds";
    case RunStatus::fails: return "fails";
    case RunStatus::inconclusive: return "inconclusive";
    case RunStatus::budget_exceeded: return "budget_exceeded";
  }
  return "?";
}

struct RunCounts {
  std::uint64_t enumerated = 0;          // every composition passed, before reversal pruning
  std::uint64_t tested = 0;              // canonical ones handed to the solver
  std::uint64_t pruned_by_reversal = 0;
  std::uint64_t unsat = 0;
  std::uint64_t budget_exceeded = 0;
  std::uint64_t solver_nodes = 0;
};

/// Persistent state of an L(n) verification. The cursor is the last
/// composition whose outcome is recorded; a resumed run starts right after it.
struct SearchRun {
  LnSearchSpec spec;
  std::optional<Composition> cursor;
  std::vector<Finding> counterexamples;
  /// Canonical sequences whose instance ran out of budget (never counted as UNSAT).
  std::vector<Composition> undecided;
  RunCounts counts;
  RunStatus status = RunStatus::running;
};

struct LSearchOptions {
  /// Wall-clock / sequence-count budget for this invocation (nodes = sequences).
  Budget run_budget;
  unsigned workers = 1;
  bool stop_on_counterexample = true;
  std::size_t batch = 256;
  /// Called after each merged batch, e.g. to checkpoint the run.
  std::function<void(const SearchRun&)> checkpoint;
};

namespace detail {

struct InstanceResult {
  SolveStatus status;
  std::optional<Coloring> coloring;
  std::uint64_t nodes;
};

inline InstanceResult test_instance(const Composition& c, int colors, const Budget& budget) {
  auto r = decide_cover(block_sums(to_sequence(c)), colors, SolveOptions{budget, 1});
  return {r.status, std::move(r.coloring), r.stats.nodes};
}

template <class Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) fn(i);
    });
  for (auto& t : pool) t.join();
}

}  // namespace detail

/// Continues `run` until the enumeration ends, a counterexample is found
/// (if requested) or the run budget trips. Every composition of length l with
/// sum <= n*l is visited in canonical order; only reversal-canonical ones are
/// tested, each by asking whether A^ admits an (n-1)-cover.
inline SearchRun& verify_L_lower(SearchRun& run, const LSearchOptions& opts = {}) {
  run.spec.validate();
  const auto max_sum = run.spec.max_sum();
  const int colors = run.spec.n - 1;
  detail::BudgetMeter meter(opts.run_budget);

  std::optional<Composition> next;
  if (!run.cursor) {
    if (max_sum >= static_cast<std::int64_t>(run.spec.length)) next = first_composition(run.spec.length, static_cast<std::int64_t>(run.spec.length));
  } else {
    next = next_composition(*run.cursor, max_sum);
  }
  run.status = RunStatus::running;

  while (next) {
    // Gather a batch of canonical compositions; remember every enumerated one.
    std::vector<Composition> batch;
    std::vector<std::uint64_t> pruned_before;  // reversal prunes preceding each batch item
    std::uint64_t pruned = 0;
    Composition last;
    while (next && batch.size() < opts.batch * std::max(1u, opts.workers)) {
      last = *next;
      if (is_reversal_canonical(*next)) {
        batch.push_back(*next);
        pruned_before.push_back(pruned);
        pruned = 0;
      } else {
        ++pruned;
      }
      next = next_composition(std::move(*next), max_sum);
    }

    std::vector<detail::InstanceResult> results(batch.size());
    detail::parallel_for(batch.size(), opts.workers,
                         [&](std::size_t i) { results[i] = detail::test_instance(batch[i], colors, run.spec.instance_budget); });

    std::optional<std::size_t> stop_at;
    for (std::size_t i = 0; i < batch.size(); ++i) {
      run.counts.pruned_by_reversal += pruned_before[i];
      run.counts.enumerated += pruned_before[i] + 1;
      ++run.counts.tested;
      run.counts.solver_nodes += results[i].nodes;
      switch (results[i].status) {
        case SolveStatus::unsat: ++run.counts.unsat; break;
        case SolveStatus::budget_exceeded:
          ++run.counts.budget_exceeded;
          run.undecided.push_back(batch[i]);
          break;
        case SolveStatus::sat: {
          Sequence seq = to_sequence(batch[i]);
          const Coloring& col = *results[i].coloring;
          if (!verify_coloring(col.ground(), col).valid) throw std::logic_error("solver certificate failed verification");
          run.counterexamples.push_back({std::move(seq), col});
          if (opts.stop_on_counterexample) stop_at = i;
          break;
        }
        case SolveStatus::infinite: throw std::logic_error("positive sequence produced 0 as a block sum");
      }
      if (stop_at) break;
    }
    if (stop_at) {
      run.cursor = batch[*stop_at];
      run.status = RunStatus::fails;
      if (opts.checkpoint) opts.checkpoint(run);
      return run;
    }
    run.counts.pruned_by_reversal += pruned;
    run.counts.enumerated += pruned;
    run.cursor = last;
    if (opts.checkpoint) opts.checkpoint(run);
    if (next && !meter.charge(batch.size())) {
      run.status = RunStatus::budget_exceeded;
      return run;
    }
  }

  if (!run.counterexamples.empty())
    run.status = RunStatus::fails;
  else if (!run.undecided.empty())
    run.status = RunStatus::inconclusive;
  else
    run.status = RunStatus::holds;
  return run;
}

inline SearchRun verify_L_lower(int n, std::size_t length, const LSearchOptions& opts = {}, Budget instance_budget = {}) {
  SearchRun run;
  run.spec = {n, length, instance_budget};
  verify_L_lower(run, opts);
  return run;
}

struct LEvidence {
  std::size_t length;
  RunStatus status;
  std::optional<Finding> counterexample;
  RunCounts counts;
  /// Set when the level was skipped without enumeration.
  std::string note;
};

struct LResult {
  /// L(n) lies in [lo, hi]; exact when lo == hi.
  std::int64_t lo = 0, hi = 0;
  bool exact() const { return lo == hi; }
  std::vector<LEvidence> evidence;
};

struct DetermineLOptions {
  /// Skip lengths whose composition count C(n*l, l) exceeds this.
  std::uint64_t max_enumeration = 10'000'000;
  LSearchOptions search;
  Budget instance_budget;
};

/// Scans l = S(n-1) + 1, S(n-1) + 2, ... inside S(n-1)+1 <= L(n) <= R_{n-1}(3)-1.
/// Lengths below the bracket are never tested, and nothing above its upper end is claimed.
inline LResult determine_L(int n, const DetermineLOptions& opts = {}) {
  if (n < 2) throw DomainError("determine_L needs n >= 2");
  Interval bracket = length_bracket(n);
  if (!bracket.lo || !bracket.hi) throw DomainError("no known bracket for L(" + std::to_string(n) + ")");
  LResult res;
  res.lo = static_cast<std::int64_t>(*bracket.lo);
  res.hi = static_cast<std::int64_t>(*bracket.hi);

  for (std::int64_t len = res.lo; len <= res.hi; ++len) {
    const auto ulen = static_cast<std::size_t>(len);
    if (composition_count(ulen, static_cast<std::int64_t>(n) * len) > opts.max_enumeration) {
      res.evidence.push_back({ulen, RunStatus::budget_exceeded, std::nullopt, {},
                              "C(" + std::to_string(n * len) + "," + std::to_string(len) + ") compositions exceed the enumeration budget"});
      return res;
    }
    SearchRun run = verify_L_lower(n, ulen, opts.search, opts.instance_budget);
    LEvidence ev{ulen, run.status, std::nullopt, run.counts, {}};
    if (!run.counterexamples.empty()) ev.counterexample = run.counterexamples.front();
    res.evidence.push_back(ev);
    if (run.status == RunStatus::holds) {
      res.hi = len;
      return res;
    }
    if (run.status != RunStatus::fails) return res;
    if (len == res.hi) throw std::logic_error("L(n) upper bound contradicted by a verified counterexample");
    res.lo = len + 1;
  }
  return res;
}

// ---------------------------------------------------------------------------
// Randomized hunt

struct HuntOptions {
  std::size_t length = 14;
  int target = 3;
  std::uint64_t seed = 42;
  /// nodes = candidate evaluations across all workers.
  Budget budget = Budget::nodes(2000);
  unsigned workers = 1;
  std::int64_t max_entry = 400;
  /// Sequences evaluated first (worker 0), e.g. known findings.
  std::vector<Sequence> seeds;
  /// Exact solver budget for seeded sequences and for near-misses of the local search.
  Budget seed_budget = Budget::nodes(100'000'000);
  Budget confirm_budget = Budget::nodes(20'000);
  std::size_t stall_limit = 200;
};

struct HuntFinding {
  Sequence sequence;
  Coloring coloring;
  std::size_t block_sum_count = 0;
  Rational mean;
  /// Some block of length S(target)+1 has average <= target+1: that block
  /// would have length L(target+1) conjecturally and still sd <= target.
  bool critical = false;
  unsigned worker = 0;
  std::uint64_t evaluation = 0;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Uniform integer in [lo, hi] by rejection; std::uniform_int_distribution
/// is not specified bit-for-bit across standard libraries.
inline std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t r;
  do r = rng();
  while (r >= limit);
  return lo + static_cast<std::int64_t>(r % span);
}

/// Min-conflicts local search for an n-coloring; returns the fewest
/// monochromatic edges seen and the coloring achieving it.
inline std::pair<std::size_t, std::vector<int>> min_conflicts(const ConstraintHypergraph& h, int n, std::mt19937_64& rng,
                                                              std::size_t steps) {
  const std::size_t m = h.vertex_count();
  std::vector<int> col(m);
  for (auto& c : col) c = static_cast<int>(uniform(rng, 0, n - 1));
  auto mono = [&](const Edge& e) {
    for (std::uint8_t t = 1; t < e.arity; ++t)
      if (col[e.members[t]] != col[e.members[0]]) return false;
    return true;
  };
  std::vector<std::uint32_t> bad;
  auto refresh = [&] {
    bad.clear();
    for (std::uint32_t id = 0; id < h.edge_count(); ++id)
      if (mono(h.edges()[id])) bad.push_back(id);
  };
  refresh();
  std::size_t best = bad.size();
  std::vector<int> best_col = col;
  for (std::size_t step = 0; step < steps && !bad.empty(); ++step) {
    const Edge& e = h.edges()[bad[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(bad.size()) - 1))]];
    std::uint32_t v = e.members[uniform(rng, 0, e.arity - 1)];
    int choice;
    if (uniform(rng, 0, 9) == 0) {
      choice = static_cast<int>(uniform(rng, 0, n - 1));
    } else {
      std::vector<std::size_t> cost(static_cast<std::size_t>(n), 0);
      const int old = col[v];
      for (int c = 0; c < n; ++c) {
        col[v] = c;
        for (auto id : h.incident(v)) cost[static_cast<std::size_t>(c)] += mono(h.edges()[id]);
      }
      col[v] = old;
      std::size_t lowest = *std::min_element(cost.begin(), cost.end());
      std::vector<int> ties;
      for (int c = 0; c < n; ++c)
        if (cost[static_cast<std::size_t>(c)] == lowest) ties.push_back(c);
      choice = ties[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(ties.size()) - 1))];
    }
    col[v] = choice;
    refresh();
    if (bad.size() < best) {
      best = bad.size();
      best_col = col;
    }
  }
  return {best, best_col};
}

inline bool is_critical(const Sequence& a, int target) {
  if (target < 1 || target > SchurTable::exact_max) return false;
  const std::size_t l = static_cast<std::size_t>(SchurTable::exact[target - 1]) + 1;
  if (a.size() < l || a.dim() != 1) return false;
  for (std::size_t i = 0; i + l <= a.size(); ++i) {
    Integer s = 0;
    for (std::size_t k = i; k < i + l; ++k) s += a[k][0];
    if (s <= Integer(target + 1) * Integer(l)) return true;
  }
  return false;
}

}  // namespace detail

/// Seeded local search over positive sequences of a fixed length for A with
/// sd(A^) <= target. Each candidate is scored by a min-conflicts coloring of
/// A^; a zero score, or an exact solver hit on a near-miss, is a finding.
/// Mutations: resample one entry, swap two entries, scale a block by 2 or 3.
/// Findings go to `sink` and are also returned, each with a verified coloring.
/// With a node-only budget the output depends only on the options.
inline std::vector<HuntFinding> hunt_exotic(const HuntOptions& opts,
                                            const std::function<void(const HuntFinding&)>& sink = {}) {
  if (opts.length < 1) throw DomainError("hunt needs length >= 1");
  if (opts.target < 1) throw DomainError("hunt needs target >= 1");
  if (opts.max_entry < 1) throw DomainError("hunt needs max_entry >= 1");
  detail::BudgetMeter meter(opts.budget);
  std::mutex mu;
  std::vector<HuntFinding> findings;
  std::vector<Composition> seen;  // reversal-canonical forms already reported

  auto report = [&](const Composition& c, Coloring col, unsigned worker, std::uint64_t eval) {
    Composition canon = is_reversal_canonical(c) ? c : Composition(c.rbegin(), c.rend());
    Sequence seq = to_sequence(c);
    if (!verify_coloring(col.ground(), col).valid) throw std::logic_error("hunt finding failed verification");
    HuntFinding f{seq, std::move(col), 0, seq.mean(), detail::is_critical(seq, opts.target), worker, eval};
    f.block_sum_count = f.coloring.ground().size();
    std::lock_guard lock(mu);
    if (std::find(seen.begin(), seen.end(), canon) != seen.end()) return;
    seen.push_back(canon);
    findings.push_back(f);
    if (sink) sink(f);
  };

  auto worker_fn = [&](unsigned w) {
    std::mt19937_64 rng(detail::splitmix64(opts.seed ^ detail::splitmix64(w)));
    std::uint64_t evals = 0;
    auto random_seq = [&] {
      Composition c(opts.length);
      for (auto& v : c) v = detail::uniform(rng, 1, opts.max_entry);
      return c;
    };
    auto score = [&](const Composition& c) -> std::size_t {
      ++evals;
      ElementSet x = block_sums(to_sequence(c));
      auto h = schur_triples(x);
      auto [bad, col] = detail::min_conflicts(h, opts.target, rng, 30 * x.size());
      if (bad == 0) {
        report(c, detail::to_coloring(x, col, opts.target), w, evals);
      } else if (bad <= 2) {
        auto r = decide_cover(h, opts.target, SolveOptions{opts.confirm_budget, 1});
        if (r.status == SolveStatus::sat) {
          report(c, *r.coloring, w, evals);
          bad = 0;
        }
      }
      return bad;
    };

    if (w == 0) {
      for (const auto& s : opts.seeds) {
        if (!meter.charge(1)) return;
        Composition c;
        for (const auto& e : s) {
          if (e.dim() != 1 || e[0] < 1) throw DomainError("hunt seeds must be positive integer sequences");
          c.push_back(static_cast<std::int64_t>(e[0]));
        }
        ++evals;
        auto r = decide_cover(block_sums(s), opts.target, SolveOptions{opts.seed_budget, 1});
        if (r.status == SolveStatus::sat) report(c, *r.coloring, w, evals);
      }
    }

    Composition cur = random_seq();
    if (!meter.charge(1)) return;
    std::size_t cur_score = score(cur), stall = 0;
    while (meter.charge(1)) {
      Composition cand = cur;
      switch (detail::uniform(rng, 0, 2)) {
        case 0: cand[static_cast<std::size_t>(detail::uniform(rng, 0, static_cast<std::int64_t>(opts.length) - 1))] =
                    detail::uniform(rng, 1, opts.max_entry);
          break;
        case 1: {
          auto i = static_cast<std::size_t>(detail::uniform(rng, 0, static_cast<std::int64_t>(opts.length) - 1));
          auto j = static_cast<std::size_t>(detail::uniform(rng, 0, static_cast<std::int64_t>(opts.length) - 1));
          std::swap(cand[i], cand[j]);
          break;
        }
        default: {
          auto i = static_cast<std::size_t>(detail::uniform(rng, 0, static_cast<std::int64_t>(opts.length) - 1));
          auto j = static_cast<std::size_t>(detail::uniform(rng, static_cast<std::int64_t>(i), static_cast<std::int64_t>(opts.length) - 1));
          auto k = detail::uniform(rng, 2, 3);
          for (auto t = i; t <= j; ++t) cand[t] = std::min(cand[t] * k, opts.max_entry);
        }
      }
      std::size_t s = score(cand);
      if (s <= cur_score) {
        stall = s < cur_score ? 0 : stall + 1;
        cur = std::move(cand);
        cur_score = s;
      } else {
        ++stall;
      }
      if (cur_score == 0 || stall >= opts.stall_limit) {
        cur = random_seq();
        if (!meter.charge(1)) return;
        cur_score = score(cur);
        stall = 0;
      }
    }
  };

  if (opts.workers <= 1) {
    worker_fn(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < opts.workers; ++w) pool.emplace_back(worker_fn, w);
    for (auto& t : pool) t.join();
    std::sort(findings.begin(), findings.end(), [](const auto& a, const auto& b) {
      return std::tie(a.worker, a.evaluation) < std::tie(b.worker, b.evaluation);
    });
  }
  return findings;
}

}  // namespace schur
