#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "schur/algebra.hpp"
#include "schur/catalog.hpp"

using namespace schur;

namespace {

ElementSet from(const std::set<long long>& s) { return ElementSet::of_integers(std::vector<long long>(s.begin(), s.end())); }

}  // namespace

TEST(GroupElement, ArithmeticAndOrder) {
  GroupElement a{1, 2}, b{3, -1};
  EXPECT_EQ(a + b, (GroupElement{4, 1}));
  EXPECT_EQ(a - b, (GroupElement{-2, 3}));
  EXPECT_EQ(-a, (GroupElement{-1, -2}));
  EXPECT_EQ(a.scaled(3), (GroupElement{3, 6}));
  EXPECT_TRUE(GroupElement::zero(3).is_zero());
  EXPECT_LT(a, b);
  EXPECT_THROW(a + GroupElement{1}, DomainError);
}

TEST(GroupElement, BigCoordinates) {
  Integer big = Integer(1) << 100;
  auto x = GroupElement::scalar(big);
  EXPECT_EQ((x + x)[0], big * 2);
  EXPECT_EQ(x.to_string(), "1267650600228229401496703205376");
}

TEST(GroupElement, Symbolic) {
  EXPECT_EQ(catalog::x_plus(3), (GroupElement{3, 1}));
  EXPECT_EQ(catalog::plain(2), (GroupElement{2, 0}));
}

TEST(ElementSet, SortedUnique) {
  auto s = ElementSet::of_integers({5, 1, 3, 1});
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0], GroupElement{1});
  EXPECT_TRUE(s.contains(GroupElement{3}));
  EXPECT_EQ(s.index_of(GroupElement{5}), 2u);
  EXPECT_FALSE(s.index_of(GroupElement{4}));
  EXPECT_TRUE(ElementSet::of_integers({0, 4}).contains_zero());
  EXPECT_EQ(s.without(GroupElement{3}), ElementSet::of_integers({1, 5}));
  EXPECT_EQ(s.united(ElementSet::of_integers({2})), ElementSet::of_integers({1, 2, 3, 5}));
  EXPECT_THROW(ElementSet({GroupElement{1}, GroupElement{1, 1}}), DomainError);
}

TEST(BlockSums, Examples) {
  EXPECT_EQ(block_sums(Sequence::of_integers({1, 2, 3})), ElementSet::of_integers({1, 2, 3, 5, 6}));
  EXPECT_EQ(block_sums(Sequence::of_integers({1, 1, 1, 1})), ElementSet::interval(1, 4));
  EXPECT_EQ(block_sums(Sequence::of_integers({1, 1, 5, 1, 1})), ElementSet::of_integers({1, 2, 5, 6, 7, 8, 9}));
  EXPECT_TRUE(block_sums(Sequence{}).empty());
}

TEST(BlockSums, MatchesOracleOnRandomSequences) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 300; ++t) {
    oracle::Vec a(1 + rng() % 10);
    for (auto& v : a) v = static_cast<long long>(rng() % 41) - 20;
    EXPECT_EQ(block_sums(Sequence::of_integers(a)), from(oracle::block_sums(a)));
  }
}

TEST(BlockSums, TwoDimensional) {
  auto x = block_sums(catalog::periodic_xy(4));
  // (x,y,x,y): x, y, x+y, 2x+y, x+2y, 2x+2y
  EXPECT_EQ(x.size(), 6u);
  EXPECT_TRUE(x.contains(GroupElement{2, 2}));
}

TEST(Blocks, OrderAndCount) {
  auto bl = blocks(Sequence::of_integers({1, 2, 3}));
  ASSERT_EQ(bl.size(), 6u);
  EXPECT_EQ(bl[0], Sequence::of_integers({1}));
  EXPECT_EQ(bl[3], Sequence::of_integers({1, 2}));
  EXPECT_EQ(bl[5], Sequence::of_integers({1, 2, 3}));
  EXPECT_THROW(blocks(Sequence{}), DomainError);
}

TEST(Contract, Basics) {
  auto a = Sequence::of_integers({1, 2, 3, 4});
  EXPECT_EQ(contract(a, 2, 3), Sequence::of_integers({1, 5, 4}));
  EXPECT_EQ(contract(a, 1, 4), Sequence::of_integers({10}));
  EXPECT_EQ(contract(a, 2, 2), a);
  EXPECT_THROW(contract(a, 3, 2), DomainError);
  EXPECT_THROW(contract(a, 0, 1), DomainError);
  EXPECT_THROW(contract(a, 1, 5), DomainError);
}

TEST(Minor, ContractionsBlocksAndNot) {
  auto a = Sequence::of_integers({1, 2, 3, 4});
  auto w = is_minor_witnessed(Sequence::of_integers({3, 7}), a);
  ASSERT_TRUE(w.is_minor);
  EXPECT_EQ(w.chain.front(), a);
  EXPECT_EQ(w.chain.back(), Sequence::of_integers({3, 7}));
  auto blk = is_minor_witnessed(Sequence::of_integers({2, 3}), a);
  EXPECT_TRUE(blk.is_minor);
  EXPECT_FALSE(is_minor_witnessed(Sequence::of_integers({5}), a).is_minor);
  EXPECT_FALSE(is_minor_witnessed(Sequence::of_integers({4, 3}), a).is_minor);
}

namespace {

// Blocks of a, plus every iterated contraction of a.
std::set<oracle::Vec> all_minors(const oracle::Vec& a) {
  std::set<oracle::Vec> out;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j <= a.size(); ++j) out.insert(oracle::Vec(a.begin() + i, a.begin() + j));
  std::function<void(const oracle::Vec&)> contractions = [&](const oracle::Vec& s) {
    out.insert(s);
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      oracle::Vec t(s.begin(), s.begin() + i);
      t.push_back(s[i] + s[i + 1]);
      t.insert(t.end(), s.begin() + i + 2, s.end());
      contractions(t);
    }
  };
  contractions(a);
  return out;
}

}  // namespace

TEST(Minor, CountFor1234) {
  auto a = Sequence::of_integers({1, 2, 3, 4});
  auto minors = all_minors({1, 2, 3, 4});
  // 10 blocks and 8 contractions (including A), A counted once.
  EXPECT_EQ(minors.size(), 17u);
  for (const auto& m : minors) EXPECT_TRUE(is_minor_witnessed(Sequence::of_integers(m), a).is_minor) << Sequence::of_integers(m).to_string();
  // Anything else of small sum is not a minor.
  for (long long p = 1; p <= 10; ++p)
    for (long long q = 0; q <= 10; ++q) {
      oracle::Vec v = q ? oracle::Vec{p, q} : oracle::Vec{p};
      EXPECT_EQ(is_minor_witnessed(Sequence::of_integers(v), a).is_minor, minors.count(v) == 1) << p << "," << q;
    }
}

TEST(Minor, BlockSumsShrink) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 60; ++t) {
    oracle::Vec a(1 + rng() % 6);
    for (auto& v : a) v = static_cast<long long>(rng() % 21) - 10;
    auto big = block_sums(Sequence::of_integers(a));
    for (const auto& m : all_minors(a)) {
      auto b = Sequence::of_integers(m);
      EXPECT_TRUE(block_sums(b).is_subset_of(big));
      auto w = is_minor_witnessed(b, Sequence::of_integers(a));
      ASSERT_TRUE(w.is_minor);
      if (!w.chain.empty()) {
        EXPECT_EQ(w.chain.back(), b);
      }
      if (w.block) {
        oracle::Vec range(a.begin() + static_cast<std::ptrdiff_t>(w.block->first - 1), a.begin() + static_cast<std::ptrdiff_t>(w.block->second));
        EXPECT_EQ(range, m);
      }
    }
  }
}

TEST(Delta, Gaps) {
  EXPECT_EQ(delta(ElementSet::of_integers({1, 4, 6})), Sequence::of_integers({3, 2}));
  EXPECT_TRUE(delta(ElementSet::of_integers({7})).empty());
  EXPECT_EQ(difference_set_positive(ElementSet::of_integers({1, 4, 6})), ElementSet::of_integers({2, 3, 5}));
}

TEST(Delta, BlockSumsEqualPositiveDifferences) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 1000; ++t) {
    std::set<long long> xs;
    std::size_t sz = 1 + rng() % 12;
    while (xs.size() < sz) xs.insert(static_cast<long long>(rng() % 101) - 50);
    std::set<long long> diff;
    for (long long a : xs)
      for (long long b : xs)
        if (a > b) diff.insert(a - b);
    auto x = from(xs);
    EXPECT_EQ(block_sums(delta(x)), from(diff));
  }
}

TEST(Sequence, MeanAndSigma) {
  auto a = catalog::exotic_sequence();
  EXPECT_EQ(a.sigma(), GroupElement{1596});
  EXPECT_EQ(a.mean(), Rational(114));
  EXPECT_EQ(reverse(Sequence::of_integers({1, 2, 3})), Sequence::of_integers({3, 2, 1}));
}
