#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "schur/catalog.hpp"
#include "schur/schur_core.hpp"
#include "schur/solver.hpp"

using namespace schur;

TEST(Sumfree, Basics) {
  EXPECT_FALSE(is_sumfree(ElementSet::of_integers({1, 2})));
  EXPECT_TRUE(is_sumfree(ElementSet::of_integers({1, 4})));
  EXPECT_FALSE(is_sumfree(ElementSet::of_integers({2, 4})));
  EXPECT_FALSE(is_sumfree(ElementSet::of_integers({0})));
  EXPECT_TRUE(is_sumfree(ElementSet{}));
  EXPECT_TRUE(is_sumfree(ElementSet::of_integers({-3, 3})));
  EXPECT_FALSE(is_sumfree(ElementSet::of_integers({-3, 3, 6})));
}

TEST(Sumfree, AgreesWithOracle) {
  for (unsigned mask = 0; mask < (1u << 10); ++mask) {
    std::set<long long> s;
    for (int i = 0; i < 10; ++i)
      if (mask >> i & 1) s.insert(i + 1);
    EXPECT_EQ(is_sumfree(ElementSet::of_integers(std::vector<long long>(s.begin(), s.end()))), oracle::sumfree(s));
  }
}

TEST(Triples, SmallSets) {
  auto t = schur_triples(ElementSet::of_integers({1, 2, 3})).triples();
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t[0].x, GroupElement{1});
  EXPECT_EQ(t[0].y, GroupElement{1});
  EXPECT_EQ(t[0].z, GroupElement{2});
  EXPECT_EQ(t[1].z, GroupElement{3});
  EXPECT_EQ(schur_triples(ElementSet::interval(1, 4)).edge_count(), 4u);
  EXPECT_EQ(schur_triples(ElementSet::interval(1, 5)).edge_count(), 6u);
}

TEST(Triples, ZeroGivesLoop) {
  auto h = schur_triples(ElementSet::of_integers({0, 1}));
  EXPECT_TRUE(h.contains_zero());
  ASSERT_GE(h.edge_count(), 1u);
  EXPECT_EQ(h.edges().front().arity, 1);
}

TEST(Triples, IncidenceConsistent) {
  auto h = schur_triples(ElementSet::of_integers({-4, -1, 1, 2, 3, 5}));
  for (std::uint32_t id = 0; id < h.edge_count(); ++id)
    for (std::uint8_t k = 0; k < h.edges()[id].arity; ++k) {
      const auto& inc = h.incident(h.edges()[id].members[k]);
      EXPECT_NE(std::find(inc.begin(), inc.end(), id), inc.end());
    }
  // is_sumfree(X) exactly when X has no Schur triple.
  EXPECT_EQ(h.edge_count() == 0, is_sumfree(h.ground()));
}

TEST(Coloring, FromClasses) {
  auto x = ElementSet::interval(1, 4);
  auto c = Coloring::from_classes(x, {ElementSet::of_integers({1, 4}), ElementSet::of_integers({2, 3})}, 2);
  EXPECT_TRUE(c.is_total());
  EXPECT_EQ(c.color_of(GroupElement{4}), 1);
  EXPECT_TRUE(verify_coloring(x, c).valid);
  EXPECT_THROW(Coloring::from_classes(x, {ElementSet::of_integers({9})}, 1), DomainError);
  auto bad = Coloring::from_classes(x, {ElementSet::of_integers({1, 2, 3}), ElementSet::of_integers({4})}, 2);
  auto v = verify_coloring(x, bad);
  EXPECT_FALSE(v.valid);
  ASSERT_TRUE(v.violation);
  EXPECT_EQ(v.color, 1);
  auto partial = Coloring::from_classes(x, {ElementSet::of_integers({1, 4})}, 2);
  EXPECT_THROW(verify_coloring(x, partial), DomainError);
}

TEST(Solver, SchurNumbers) {
  const int s[] = {1, 4, 13};
  for (int n = 1; n <= 3; ++n) {
    auto a = schur_degree(ElementSet::interval(1, s[n - 1]));
    ASSERT_EQ(a.status, DegreeStatus::exact);
    EXPECT_EQ(*a.degree, n);
    EXPECT_TRUE(verify_coloring(a.certificate->ground(), *a.certificate).valid);
    EXPECT_EQ(*schur_degree(ElementSet::interval(1, s[n - 1] + 1)).degree, n + 1);
  }
}

TEST(Solver, InfiniteWithZero) {
  EXPECT_EQ(decide_cover(ElementSet::of_integers({0, 1}), 3).status, SolveStatus::infinite);
  EXPECT_EQ(schur_degree(ElementSet::of_integers({-1, 0})).status, DegreeStatus::infinite);
}

TEST(Solver, EmptySetIsOneColorable) {
  auto r = decide_cover(ElementSet{}, 1);
  EXPECT_EQ(r.status, SolveStatus::sat);
}

TEST(Solver, BadColorCount) {
  EXPECT_THROW(decide_cover(ElementSet::interval(1, 3), 0), DomainError);
  EXPECT_THROW(decide_cover(ElementSet::interval(1, 3), 65), DomainError);
}

TEST(Solver, NodeBudgetTrips) {
  auto r = decide_cover(ElementSet::interval(1, 45), 4, SolveOptions{Budget::nodes(1000), 1});
  EXPECT_EQ(r.status, SolveStatus::budget_exceeded);
  auto d = schur_degree(ElementSet::interval(1, 45), SolveOptions{Budget::nodes(1000), 1});
  EXPECT_EQ(d.status, DegreeStatus::budget_exceeded);
  EXPECT_EQ(d.lower_bound, 4);
}

TEST(Solver, AgreesWithBruteForce) {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 150; ++t) {
    std::set<long long> s;
    std::size_t sz = 1 + rng() % 9;
    while (s.size() < sz) s.insert(static_cast<long long>(rng() % 41) - 20);
    s.erase(0);
    if (s.empty()) continue;
    std::vector<long long> xs(s.begin(), s.end());
    auto x = ElementSet::of_integers(xs);
    for (int n = 1; n <= 3; ++n) {
      auto r = decide_cover(x, n);
      bool brute = oracle::brute_color(xs, n).has_value();
      ASSERT_EQ(r.status == SolveStatus::sat, brute) << x.to_string() << " n=" << n;
      if (r.coloring) {
        EXPECT_TRUE(verify_coloring(x, *r.coloring).valid);
      }
    }
  }
}

TEST(Solver, DeterministicSequential) {
  auto x = block_sums(catalog::powers_of(2, 12));
  auto a = decide_cover(x, 3), b = decide_cover(x, 3);
  ASSERT_EQ(a.status, SolveStatus::sat);
  EXPECT_EQ(a.coloring->colors(), b.coloring->colors());
  EXPECT_EQ(a.stats.nodes, b.stats.nodes);
}

TEST(Solver, ParallelMatchesSequential) {
  for (long long m : {3, 8, 13}) {
    auto x = block_sums(catalog::interval_union_sequence(m));
    for (int n = 2; n <= 3; ++n) {
      auto seq = decide_cover(x, n);
      auto par = decide_cover(x, n, SolveOptions{{}, 4});
      ASSERT_EQ(seq.status, par.status);
      EXPECT_TRUE(par.stats.parallel);
      if (seq.coloring) {
        EXPECT_EQ(seq.coloring->colors(), par.coloring->colors());
      }
    }
  }
  auto x = ElementSet::interval(1, 14);
  EXPECT_EQ(decide_cover(x, 3, SolveOptions{{}, 3}).status, SolveStatus::unsat);
  EXPECT_EQ(decide_cover(ElementSet::interval(1, 13), 3, SolveOptions{{}, 3}).status, SolveStatus::sat);
}

TEST(Enumerate, CountsAgreeWithBruteForce) {
  // Each cover up to permutation of the n colors corresponds to
  // n!/(n-k)! raw assignments when it uses k colors.
  for (int top = 1; top <= 8; ++top) {
    auto x = ElementSet::interval(1, top);
    std::vector<long long> xs;
    for (int i = 1; i <= top; ++i) xs.push_back(i);
    for (int n = 1; n <= 3; ++n) {
      std::size_t raw = 0;
      enumerate_covers(x, n, [&](const Coloring& c) {
        EXPECT_TRUE(verify_coloring(x, c).valid);
        int used = *std::max_element(c.colors().begin(), c.colors().end());
        std::size_t f = 1;
        for (int k = 0; k < used; ++k) f *= static_cast<std::size_t>(n - k);
        raw += f;
        return true;
      });
      EXPECT_EQ(raw, oracle::brute_count(xs, n)) << "top=" << top << " n=" << n;
    }
  }
}

TEST(Enumerate, Interval1To4) {
  auto covers = enumerate_covers(ElementSet::interval(1, 4), 2);
  ASSERT_EQ(covers.size(), 1u);
  EXPECT_EQ(oracle::brute_count({1, 2, 3, 4}, 2), 2u);
}

TEST(Enumerate, EarlyStopAndBudget) {
  std::size_t seen = 0;
  auto n = enumerate_covers(ElementSet::interval(1, 8), 3, [&](const Coloring&) { return ++seen < 2; });
  EXPECT_EQ(n, 2u);
  EXPECT_THROW(enumerate_covers(ElementSet::interval(1, 40), 4, Budget::nodes(500)), BudgetExceeded);
}

TEST(Properties, MonotoneUnderSubsets) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 60; ++t) {
    std::vector<long long> ys;
    for (long long v = 1; v <= 14; ++v)
      if (rng() % 2) ys.push_back(v);
    if (ys.empty()) continue;
    std::vector<long long> xs;
    for (auto v : ys)
      if (rng() % 2) xs.push_back(v);
    auto y = ElementSet::of_integers(ys), x = ElementSet::of_integers(xs);
    EXPECT_LE(*schur_degree(x).degree, *schur_degree(y).degree);
  }
}

TEST(Properties, MonotoneUnderMinors) {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 25; ++t) {
    std::vector<long long> a(1 + rng() % 6);
    for (auto& v : a) v = 1 + static_cast<long long>(rng() % 12);
    auto seq = Sequence::of_integers(a);
    const int top = *schur_degree(block_sums(seq)).degree;
    for (std::size_t i = 1; i <= a.size(); ++i)
      for (std::size_t j = i; j <= a.size(); ++j) {
        EXPECT_LE(*schur_degree(block_sums(contract(seq, i, j))).degree, top);
        std::vector<long long> blk(a.begin() + static_cast<std::ptrdiff_t>(i - 1), a.begin() + static_cast<std::ptrdiff_t>(j));
        EXPECT_LE(*schur_degree(block_sums(Sequence::of_integers(blk))).degree, top);
      }
  }
}

TEST(Properties, DegreeMatchesBruteForce2D) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 40; ++t) {
    std::set<oracle::Point> pts;
    std::size_t sz = 1 + rng() % 8;
    while (pts.size() < sz) {
      oracle::Point p{static_cast<long long>(rng() % 7) - 3, static_cast<long long>(rng() % 7) - 3};
      if (p[0] || p[1]) pts.insert(p);
    }
    std::vector<oracle::Point> v(pts.begin(), pts.end());
    std::vector<GroupElement> e;
    for (const auto& p : v) e.push_back(GroupElement{p[0], p[1]});
    ElementSet x(e, 2);
    for (int n = 1; n <= 3; ++n) EXPECT_EQ(decide_cover(x, n).status == SolveStatus::sat, oracle::brute_color(v, n).has_value());
  }
}
