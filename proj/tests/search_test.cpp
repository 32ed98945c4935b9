#include <gtest/gtest.h>

#include "oracles.hpp"
#include "schur/catalog.hpp"
#include "schur/io.hpp"
#include "schur/search.hpp"

using namespace schur;

TEST(Compositions, OrderMatchesOracle) {
  for (std::size_t len = 1; len <= 5; ++len) {
    const std::int64_t max_sum = 3 * static_cast<std::int64_t>(len);
    std::vector<oracle::Vec> want;
    oracle::compositions(len, max_sum, [&](const oracle::Vec& v) { want.push_back(v); });
    std::stable_sort(want.begin(), want.end(), [](const auto& a, const auto& b) {
      return std::accumulate(a.begin(), a.end(), 0LL) < std::accumulate(b.begin(), b.end(), 0LL);
    });
    std::vector<oracle::Vec> got;
    for (std::optional<Composition> c = first_composition(len, static_cast<std::int64_t>(len)); c;
         c = next_composition(*c, max_sum))
      got.emplace_back(c->begin(), c->end());
    EXPECT_EQ(got, want) << "len=" << len;
    EXPECT_EQ(composition_count(len, max_sum), Integer(want.size()));
  }
}

TEST(Compositions, Counts) {
  EXPECT_EQ(composition_count(5, 15), 3003);
  EXPECT_EQ(composition_count(2, 4), 6);
  EXPECT_EQ(binomial(5, 7), 0);
  EXPECT_THROW(first_composition(3, 2), DomainError);
}

TEST(Compositions, ReversalCanonical) {
  EXPECT_TRUE(is_reversal_canonical({1, 2}));
  EXPECT_FALSE(is_reversal_canonical({2, 1}));
  EXPECT_TRUE(is_reversal_canonical({2, 1, 2}));
}

TEST(VerifyL, SmallCases) {
  auto l2 = verify_L_lower(2, 2);
  EXPECT_EQ(l2.status, RunStatus::holds);
  EXPECT_EQ(l2.counts.tested, 4u);
  EXPECT_EQ(l2.counts.enumerated, 6u);
  auto l1 = verify_L_lower(2, 1);
  EXPECT_EQ(l1.status, RunStatus::fails);
  EXPECT_EQ(l1.counterexamples.front().sequence, Sequence::of_integers({1}));
  auto f = verify_L_lower(3, 4);
  ASSERT_EQ(f.status, RunStatus::fails);
  const auto& c = f.counterexamples.front();
  EXPECT_EQ(c.sequence, Sequence::of_integers({1, 1, 1, 1}));
  EXPECT_TRUE(verify_coloring(block_sums(c.sequence), c.coloring).valid);
}

TEST(VerifyL, ThreeFiveAgainstOracle) {
  auto run = verify_L_lower(3, 5);
  EXPECT_EQ(run.status, RunStatus::holds);
  std::size_t all = 0, canonical = 0;
  oracle::compositions(5, 15, [&](const oracle::Vec& v) {
    ++all;
    canonical += !std::lexicographical_compare(v.rbegin(), v.rend(), v.begin(), v.end());
  });
  EXPECT_EQ(run.counts.enumerated, all);
  EXPECT_EQ(all, 3003u);
  EXPECT_EQ(run.counts.tested, canonical);
  EXPECT_EQ(run.counts.unsat, canonical);
  EXPECT_EQ(run.counts.tested + run.counts.pruned_by_reversal, run.counts.enumerated);
}

TEST(VerifyL, ResumeGivesSameResult) {
  LSearchOptions o;
  o.batch = 50;
  o.run_budget = Budget::nodes(100);
  SearchRun run;
  run.spec = {3, 5, {}};
  int rounds = 0;
  do {
    // Round trip through JSON between invocations, as the CLI does.
    run = search_run_from_json(to_json(run));
    verify_L_lower(run, o);
    ++rounds;
  } while (run.status == RunStatus::budget_exceeded);
  EXPECT_GT(rounds, 3);
  EXPECT_EQ(run.status, RunStatus::holds);
  EXPECT_EQ(run.counts.enumerated, 3003u);
  auto once = verify_L_lower(3, 5);
  EXPECT_EQ(run.counts.tested, once.counts.tested);
}

TEST(VerifyL, ParallelAgrees) {
  LSearchOptions o;
  o.workers = 3;
  o.batch = 16;
  auto par = verify_L_lower(3, 5, o);
  EXPECT_EQ(par.status, RunStatus::holds);
  EXPECT_EQ(par.counts.enumerated, 3003u);
  auto f = verify_L_lower(3, 4, o);
  EXPECT_EQ(f.counterexamples.front().sequence, Sequence::of_integers({1, 1, 1, 1}));
}

TEST(VerifyL, InstanceBudgetIsNeverUnsat) {
  Composition powers;
  for (int i = 0; i < 15; ++i) powers.push_back(std::int64_t{1} << i);
  auto r = detail::test_instance(powers, 3, Budget::nodes(1));
  EXPECT_EQ(r.status, SolveStatus::budget_exceeded);
  auto run = verify_L_lower(3, 5, {}, Budget::nodes(1));
  EXPECT_EQ(run.counts.unsat + run.counts.budget_exceeded + run.counterexamples.size(), run.counts.tested);
  EXPECT_EQ(run.undecided.size(), run.counts.budget_exceeded);
  if (run.counts.budget_exceeded) {
    EXPECT_EQ(run.status, RunStatus::inconclusive);
  }
}

TEST(DetermineL, Values) {
  auto l2 = determine_L(2), l3 = determine_L(3);
  EXPECT_TRUE(l2.exact());
  EXPECT_EQ(l2.lo, 2);
  EXPECT_TRUE(l3.exact());
  EXPECT_EQ(l3.lo, 5);
  DetermineLOptions o;
  o.max_enumeration = 1000;
  auto l4 = determine_L(4, o);
  EXPECT_EQ(l4.lo, 14);
  EXPECT_EQ(l4.hi, 16);
  EXPECT_FALSE(l4.exact());
  ASSERT_FALSE(l4.evidence.empty());
  EXPECT_EQ(l4.evidence.front().status, RunStatus::budget_exceeded);
}

TEST(Hunt, NothingBelowRamseyLength) {
  HuntOptions o;
  o.length = 6;
  o.target = 2;
  o.max_entry = 30;
  o.budget = Budget::nodes(150);
  auto a = hunt_exotic(o), b = hunt_exotic(o);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].sequence, b[i].sequence);
    EXPECT_TRUE(verify_coloring(a[i].coloring.ground(), a[i].coloring).valid);
    EXPECT_EQ(a[i].coloring.n(), 2);
  }
  // Length 6 > R_2(3) - 2, so two colors can never suffice.
  EXPECT_TRUE(a.empty());
}

TEST(Hunt, FindsTwoColorableShortSequences) {
  HuntOptions o;
  o.length = 3;
  o.target = 2;
  o.max_entry = 20;
  o.budget = Budget::nodes(300);
  auto found = hunt_exotic(o), again = hunt_exotic(o);
  EXPECT_FALSE(found.empty());
  ASSERT_EQ(found.size(), again.size());
  for (std::size_t i = 0; i < found.size(); ++i) {
    EXPECT_EQ(found[i].sequence, again[i].sequence);
    EXPECT_EQ(found[i].evaluation, again[i].evaluation);
  }
  o.seed = 43;
  auto other = hunt_exotic(o);
  EXPECT_TRUE(other.empty() || other.front().sequence != found.front().sequence || other.front().evaluation != found.front().evaluation);
  for (const auto& f : found) {
    EXPECT_EQ(f.sequence.size(), 3u);
    EXPECT_TRUE(verify_coloring(f.coloring.ground(), f.coloring).valid);
    EXPECT_EQ(f.block_sum_count, block_sums(f.sequence).size());
  }
}

TEST(Hunt, CriticalFlag) {
  // (1,1,1,1,1) has a length-5 block of average 1 <= 3.
  EXPECT_TRUE(detail::is_critical(Sequence::of_integers({1, 1, 1, 1, 1}), 2));
  EXPECT_FALSE(detail::is_critical(catalog::exotic_sequence(), 3));
}
