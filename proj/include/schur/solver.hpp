#pragma once

// Exact sumfree-cover search: decide whether a finite set splits into n
// sumfree classes, compute its Schur degree, and check certificates.

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "schur/algebra.hpp"
#include "schur/schur_core.hpp"

namespace schur {

/// A total map from a ground set to colors 1..n. Each class of a valid
/// coloring is sumfree, so the coloring certifies sd(ground) <= n.
class Coloring {
public:
  Coloring() = default;
  Coloring(ElementSet ground, std::vector<int> colors, int n)
      : ground_(std::move(ground)), colors_(std::move(colors)), n_(n) {
    if (colors_.size() != ground_.size()) throw DomainError("coloring size does not match its ground set");
    for (int c : colors_)
      if (c < 0 || c > n_) throw DomainError("color index out of range");
  }

  /// Builds a coloring from (possibly overlapping) classes. An element lying
  /// in several classes keeps the least one, which refines a cover to a partition.
  static Coloring from_classes(const ElementSet& ground, const std::vector<ElementSet>& classes, int n) {
    if (static_cast<int>(classes.size()) > n) throw DomainError("more classes than colors");
    std::vector<int> colors(ground.size(), 0);
    for (std::size_t c = 0; c < classes.size(); ++c) {
      for (const auto& x : classes[c]) {
        auto i = ground.index_of(x);
        if (!i) throw DomainError("class element " + x.to_string() + " is not in the ground set");
        if (colors[*i] == 0) colors[*i] = static_cast<int>(c) + 1;
      }
    }
    return Coloring(ground, std::move(colors), n);
  }

  const ElementSet& ground() const noexcept { return ground_; }
  int n() const noexcept { return n_; }
  const std::vector<int>& colors() const noexcept { return colors_; }
  bool is_total() const { return std::find(colors_.begin(), colors_.end(), 0) == colors_.end(); }

  /// 0 when x is outside the ground set or left uncolored.
  int color_of(const GroupElement& x) const {
    auto i = ground_.index_of(x);
    return i ? colors_[*i] : 0;
  }

  std::vector<ElementSet> classes() const {
    std::vector<std::vector<GroupElement>> parts(static_cast<std::size_t>(n_));
    for (std::size_t i = 0; i < colors_.size(); ++i)
      if (colors_[i] > 0) parts[static_cast<std::size_t>(colors_[i] - 1)].push_back(ground_[i]);
    std::vector<ElementSet> out;
    for (auto& p : parts) out.emplace_back(std::move(p), ground_.dim());
    return out;
  }

  /// Renumbers colors by first use in canonical element order.
  Coloring canonical() const {
    std::vector<int> relabel(static_cast<std::size_t>(n_) + 1, 0);
    int next = 0;
    std::vector<int> out(colors_.size());
    for (std::size_t i = 0; i < colors_.size(); ++i) {
      int c = colors_[i];
      if (c == 0) continue;
      if (relabel[static_cast<std::size_t>(c)] == 0) relabel[static_cast<std::size_t>(c)] = ++next;
      out[i] = relabel[static_cast<std::size_t>(c)];
    }
    return Coloring(ground_, std::move(out), n_);
  }

  friend bool operator==(const Coloring& a, const Coloring& b) {
    return a.n_ == b.n_ && a.ground_ == b.ground_ && a.colors_ == b.colors_;
  }
  friend bool operator<(const Coloring& a, const Coloring& b) { return a.colors_ < b.colors_; }

private:
  ElementSet ground_;
  std::vector<int> colors_;
  int n_ = 0;
};

struct VerifyResult {
  bool valid = true;
  std::optional<SchurTriple> violation;
  int color = 0;
};

/// Checks every color class of `c` restricted to `x` for a Schur triple.
/// Works pairwise on the elements and does not reuse the solver's hypergraph.
inline VerifyResult verify_coloring(const ElementSet& x, const Coloring& c) {
  std::vector<int> col(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    col[i] = c.color_of(x[i]);
    if (col[i] == 0) throw DomainError("coloring is not total: " + x[i].to_string() + " has no color");
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i; j < x.size(); ++j) {
      if (col[i] != col[j]) continue;
      auto k = x.index_of(x[i] + x[j]);
      if (k && col[*k] == col[i]) return {false, SchurTriple{x[i], x[j], x[*k]}, col[i]};
    }
  }
  return {};
}

/// Node and wall-clock limits; whichever trips first ends the search.
struct Budget {
  std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
  double max_seconds = std::numeric_limits<double>::infinity();

  static Budget unlimited() { return {}; }
  static Budget nodes(std::uint64_t n) { return {n, std::numeric_limits<double>::infinity()}; }
  static Budget seconds(double s) { return {std::numeric_limits<std::uint64_t>::max(), s}; }
};

struct SolveStats {
  std::uint64_t nodes = 0;
  std::uint64_t backtracks = 0;
  double elapsed_seconds = 0;
  /// Node counts from a parallel run depend on scheduling.
  bool parallel = false;
  unsigned workers = 1;
};

enum class SolveStatus { sat, unsat, infinite, budget_exceeded };

inline const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::sat: return "SAT";
    case SolveStatus::unsat: return "UNSAT";
    case SolveStatus::infinite: return "INFINITE";
    case SolveStatus::budget_exceeded: return "BUDGET_EXCEEDED";
  }
  return "?";
}

struct SolveOutcome {
  SolveStatus status = SolveStatus::budget_exceeded;
  std::optional<Coloring> coloring;
  SolveStats stats;
};

struct SolveOptions {
  Budget budget;
  /// Worker threads; 1 keeps the search sequential and bit-reproducible.
  unsigned parallel = 1;
};

namespace detail {

using Clock = std::chrono::steady_clock;

/// Shared budget accounting. Nodes are added in batches by each worker.
class BudgetMeter {
public:
  explicit BudgetMeter(const Budget& b) : max_nodes_(b.max_nodes), start_(Clock::now()) {
    if (std::isfinite(b.max_seconds))
      deadline_ = start_ + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(b.max_seconds));
  }
  /// Returns false once the budget is spent.
  bool charge(std::uint64_t nodes) {
    auto total = nodes_.fetch_add(nodes, std::memory_order_relaxed) + nodes;
    if (total > max_nodes_) tripped_.store(true, std::memory_order_relaxed);
    if (deadline_ && Clock::now() > *deadline_) tripped_.store(true, std::memory_order_relaxed);
    return !tripped_.load(std::memory_order_relaxed);
  }
  bool tripped() const { return tripped_.load(std::memory_order_relaxed); }
  std::uint64_t nodes() const { return nodes_.load(); }
  double elapsed() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }

private:
  std::uint64_t max_nodes_;
  Clock::time_point start_;
  std::optional<Clock::time_point> deadline_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> tripped_{false};
};

struct Decision {
  std::uint32_t vertex;
  int color;
};

/// Backtracking weak coloring of the Schur hypergraph.
///
/// For each vertex a per-color counter records how many edges would become
/// monochromatic if the vertex took that color; a nonzero counter forbids it.
/// The next vertex is the uncolored one with the most forbidden colors (ties
/// to the smallest canonical index). A color may be opened only after all
/// smaller colors are in use.
class CoverSearch {
public:
  enum class Result { found, exhausted, aborted };

  CoverSearch(const ConstraintHypergraph& h, int n, BudgetMeter& meter)
      : h_(h), n_(n), meter_(meter), color_(h.vertex_count(), -1),
        forbid_(h.vertex_count() * static_cast<std::size_t>(n), 0), mask_(h.vertex_count(), 0),
        full_(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1) {}

  /// Applies decisions without counting nodes. False if they conflict.
  bool replay(const std::vector<Decision>& path) {
    for (const auto& d : path) {
      if (color_[d.vertex] >= 0 || !assign(d.vertex, d.color)) return false;
      path_.push_back(d);
    }
    return true;
  }

  /// Depth-first search from the current state; `on_solution` returns true to stop.
  Result run(const std::function<bool(const std::vector<int>&)>& on_solution,
             const std::function<bool()>& cancelled = {}) {
    on_solution_ = &on_solution;
    cancelled_ = cancelled ? &cancelled : nullptr;
    Result r = dfs();
    flush();
    return r;
  }

  /// Collects the subtree roots at `depth` decisions in DFS order. Complete
  /// assignments reached earlier are returned as paths too.
  void frontier(std::size_t depth, std::vector<std::vector<Decision>>& out) {
    auto v = pick();
    if (!v || path_.size() >= depth) {
      out.push_back(path_);
      return;
    }
    for (int c : domain(*v)) {
      std::size_t mark = trail_.size();
      int used = used_;
      if (assign(*v, c)) {
        path_.push_back({*v, c});
        frontier(depth, out);
        path_.pop_back();
      }
      undo(*v, mark, used);
    }
  }

  std::uint64_t backtracks() const { return backtracks_; }

private:
  std::optional<std::uint32_t> pick() const {
    std::optional<std::uint32_t> best;
    int best_forbidden = -1;
    for (std::uint32_t v = 0; v < color_.size(); ++v) {
      if (color_[v] >= 0) continue;
      int f = std::popcount(mask_[v]);
      if (f > best_forbidden) {
        best_forbidden = f;
        best = v;
      }
    }
    return best;
  }

  std::vector<int> domain(std::uint32_t v) const {
    std::vector<int> out;
    int limit = std::min(used_, n_ - 1);
    for (int c = 0; c <= limit; ++c)
      if (!((mask_[v] >> c) & 1u)) out.push_back(c);
    return out;
  }

  bool assign(std::uint32_t v, int c) {
    color_[v] = c;
    if (c == used_) ++used_;
    bool ok = true;
    for (std::uint32_t id : h_.incident(v)) {
      const Edge& e = h_.edges()[id];
      std::uint32_t open = 0;
      int open_count = 0;
      bool all_c = true;
      for (std::uint8_t t = 0; t < e.arity; ++t) {
        std::uint32_t u = e.members[t];
        if (u == v) continue;
        if (color_[u] < 0) {
          open = u;
          ++open_count;
        } else if (color_[u] != c) {
          all_c = false;
          break;
        }
      }
      if (!all_c) continue;
      if (open_count == 0) {
        ok = false;
        break;
      }
      if (open_count == 1) {
        auto& cnt = forbid_[open * static_cast<std::size_t>(n_) + static_cast<std::size_t>(c)];
        if (cnt++ == 0) mask_[open] |= std::uint64_t{1} << c;
        trail_.push_back(open * static_cast<std::uint32_t>(n_) + static_cast<std::uint32_t>(c));
        if (mask_[open] == full_) {
          ok = false;
          break;
        }
      }
    }
    return ok;
  }

  void undo(std::uint32_t v, std::size_t mark, int used) {
    while (trail_.size() > mark) {
      std::uint32_t slot = trail_.back();
      trail_.pop_back();
      if (--forbid_[slot] == 0) mask_[slot / static_cast<std::uint32_t>(n_)] &= ~(std::uint64_t{1} << (slot % static_cast<std::uint32_t>(n_)));
    }
    color_[v] = -1;
    used_ = used;
  }

  bool tick() {
    if (++pending_ >= 1024) return flush();
    return !meter_.tripped();
  }
  bool flush() {
    bool ok = meter_.charge(pending_);
    pending_ = 0;
    return ok;
  }

  Result dfs() {
    auto v = pick();
    if (!v) return (*on_solution_)(color_) ? Result::found : Result::exhausted;
    for (int c : domain(*v)) {
      if (!tick() || (cancelled_ && (*cancelled_)())) return Result::aborted;
      std::size_t mark = trail_.size();
      int used = used_;
      Result r = Result::exhausted;
      if (assign(*v, c)) r = dfs();
      undo(*v, mark, used);
      if (r != Result::exhausted) return r;
      ++backtracks_;
    }
    return Result::exhausted;
  }

  const ConstraintHypergraph& h_;
  int n_;
  BudgetMeter& meter_;
  std::vector<int> color_;
  std::vector<std::uint16_t> forbid_;
  std::vector<std::uint64_t> mask_;
  std::uint64_t full_;
  int used_ = 0;
  std::vector<std::uint32_t> trail_;
  std::vector<Decision> path_;
  std::uint64_t pending_ = 0;
  std::uint64_t backtracks_ = 0;
  const std::function<bool(const std::vector<int>&)>* on_solution_ = nullptr;
  const std::function<bool()>* cancelled_ = nullptr;
};

inline Coloring to_coloring(const ElementSet& ground, const std::vector<int>& zero_based, int n) {
  std::vector<int> colors(zero_based.size());
  std::transform(zero_based.begin(), zero_based.end(), colors.begin(), [](int c) { return c + 1; });
  return Coloring(ground, std::move(colors), n).canonical();
}

inline void check_color_count(int n) {
  if (n <= 0) throw DomainError("color count must be >= 1, got " + std::to_string(n));
  if (n > 64) throw DomainError("color count above 64 is not supported");
}

inline SolveOutcome decide_sequential(const ConstraintHypergraph& h, int n, BudgetMeter& meter) {
  CoverSearch search(h, n, meter);
  std::optional<Coloring> found;
  auto r = search.run([&](const std::vector<int>& col) {
    found = to_coloring(h.ground(), col, n);
    return true;
  });
  SolveOutcome out;
  out.stats.nodes = meter.nodes();
  out.stats.backtracks = search.backtracks();
  out.stats.elapsed_seconds = meter.elapsed();
  if (r == CoverSearch::Result::found) {
    out.status = SolveStatus::sat;
    out.coloring = std::move(found);
  } else {
    out.status = r == CoverSearch::Result::exhausted ? SolveStatus::unsat : SolveStatus::budget_exceeded;
  }
  return out;
}

/// Splits the root of the search into subtrees handed to a worker pool. The
/// SAT answer comes from the earliest subtree (in sequential DFS order) that
/// has a solution, so the certificate matches the sequential one whenever
/// the budget does not interfere.
inline SolveOutcome decide_parallel(const ConstraintHypergraph& h, int n, BudgetMeter& meter, unsigned workers) {
  std::vector<std::vector<Decision>> roots;
  for (std::size_t depth = 1; depth <= h.vertex_count(); ++depth) {
    roots.clear();
    CoverSearch probe(h, n, meter);
    probe.frontier(depth, roots);
    if (roots.size() >= 4 * workers || roots.empty()) break;
    if (std::all_of(roots.begin(), roots.end(), [&](const auto& p) { return p.size() < depth; })) break;
  }

  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> next{0}, best{none};
  std::atomic<bool> aborted{false};
  std::atomic<std::uint64_t> backtracks{0};
  std::mutex mu;
  std::vector<std::optional<Coloring>> found(roots.size());

  auto work = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= roots.size()) return;
      if (i > best.load()) continue;
      CoverSearch search(h, n, meter);
      if (!search.replay(roots[i])) continue;
      std::optional<Coloring> sol;
      auto r = search.run(
          [&](const std::vector<int>& col) {
            sol = to_coloring(h.ground(), col, n);
            return true;
          },
          [&] { return best.load(std::memory_order_relaxed) < i; });
      backtracks += search.backtracks();
      if (r == CoverSearch::Result::found) {
        std::lock_guard lock(mu);
        found[i] = std::move(sol);
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      } else if (r == CoverSearch::Result::aborted && meter.tripped()) {
        aborted = true;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();

  SolveOutcome out;
  out.stats.nodes = meter.nodes();
  out.stats.backtracks = backtracks.load();
  out.stats.elapsed_seconds = meter.elapsed();
  out.stats.parallel = true;
  out.stats.workers = workers;
  if (best.load() != none) {
    out.status = SolveStatus::sat;
    out.coloring = found[best.load()];
  } else {
    out.status = aborted ? SolveStatus::budget_exceeded : SolveStatus::unsat;
  }
  return out;
}

inline SolveOutcome decide_with(const ConstraintHypergraph& h, int n, BudgetMeter& meter, unsigned parallel) {
  check_color_count(n);
  if (h.contains_zero()) {
    SolveOutcome out;
    out.status = SolveStatus::infinite;
    return out;
  }
  return parallel > 1 ? decide_parallel(h, n, meter, parallel) : decide_sequential(h, n, meter);
}

}  // namespace detail

/// Does X split into n sumfree classes? SAT carries a canonical certificate;
/// UNSAT is reported only after the search space is exhausted.
inline SolveOutcome decide_cover(const ElementSet& x, int n, const SolveOptions& opts = {}) {
  detail::check_color_count(n);
  detail::BudgetMeter meter(opts.budget);
  return detail::decide_with(schur_triples(x), n, meter, opts.parallel);
}

inline SolveOutcome decide_cover(const ConstraintHypergraph& h, int n, const SolveOptions& opts = {}) {
  detail::check_color_count(n);
  detail::BudgetMeter meter(opts.budget);
  return detail::decide_with(h, n, meter, opts.parallel);
}

enum class DegreeStatus { exact, infinite, budget_exceeded };

struct DegreeResult {
  DegreeStatus status = DegreeStatus::budget_exceeded;
  /// Set when status is exact.
  std::optional<int> degree;
  /// Largest n proved impossible so far plus one.
  int lower_bound = 1;
  std::optional<Coloring> certificate;
  /// Exhaustion record for degree - 1 (absent when the degree is 1).
  std::optional<SolveStats> unsat_below;
  std::vector<SolveStats> levels;
  double elapsed_seconds = 0;
};

/// sd(X) by iterative deepening n = 1, 2, ... up to `max_n`. The budget is
/// shared by all levels.
inline DegreeResult schur_degree(const ElementSet& x, const SolveOptions& opts = {}, int max_n = 64) {
  DegreeResult out;
  auto h = schur_triples(x);
  if (h.contains_zero()) {
    out.status = DegreeStatus::infinite;
    return out;
  }
  detail::BudgetMeter meter(opts.budget);
  std::optional<SolveStats> last_unsat;
  for (int n = 1; n <= std::min(max_n, 64); ++n) {
    auto r = detail::decide_with(h, n, meter, opts.parallel);
    out.levels.push_back(r.stats);
    out.elapsed_seconds = meter.elapsed();
    if (r.status == SolveStatus::sat) {
      out.status = DegreeStatus::exact;
      out.degree = n;
      out.lower_bound = n;
      out.certificate = std::move(r.coloring);
      out.unsat_below = last_unsat;
      return out;
    }
    if (r.status != SolveStatus::unsat) return out;
    out.lower_bound = n + 1;
    last_unsat = r.stats;
  }
  return out;
}

/// Calls `sink` once per valid n-coloring up to color permutation (canonical
/// numbering), including colorings that leave some colors unused. `sink`
/// returns false to stop early. Returns the number delivered; throws
/// BudgetExceeded if the budget trips first.
inline std::size_t enumerate_covers(const ElementSet& x, int n, const std::function<bool(const Coloring&)>& sink,
                                    const Budget& budget = {}) {
  detail::check_color_count(n);
  auto h = schur_triples(x);
  if (h.contains_zero()) return 0;
  detail::BudgetMeter meter(budget);
  detail::CoverSearch search(h, n, meter);
  std::size_t count = 0;
  auto r = search.run([&](const std::vector<int>& col) {
    ++count;
    return !sink(detail::to_coloring(x, col, n));
  });
  if (r == detail::CoverSearch::Result::aborted) throw BudgetExceeded("enumerate_covers: budget exceeded");
  return count;
}

inline std::vector<Coloring> enumerate_covers(const ElementSet& x, int n, const Budget& budget = {}) {
  std::vector<Coloring> out;
  enumerate_covers(x, n, [&](const Coloring& c) { out.push_back(c); return true; }, budget);
  return out;
}

}  // namespace schur
