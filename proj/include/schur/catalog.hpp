#pragma once

// Named example sets, sequences and hand-written certificates.
// Symbolic sets live in Z^2: k + c x is the element (k, c).

#include <vector>

#include "schur/algebra.hpp"
#include "schur/solver.hpp"

namespace schur::catalog {

inline GroupElement x_plus(long long k) { return GroupElement::symbolic(k, 1); }
inline GroupElement plain(long long k) { return GroupElement::symbolic(k, 0); }

/// (1, 1, m, 1, 1); its block sums are [1,2] u [m, m+4].
inline Sequence interval_union_sequence(long long m) { return Sequence::of_integers({1, 1, m, 1, 1}); }

/// (2^0, 2^1, ..., 2^(length-1)).
inline Sequence powers_of(long long base, std::size_t length) {
  std::vector<GroupElement> e;
  Integer p = 1;
  for (std::size_t i = 0; i < length; ++i, p *= base) e.push_back(GroupElement::scalar(p));
  return Sequence(std::move(e), 1);
}

/// (x, y, x, y, ...) with x = (1,0), y = (0,1).
inline Sequence periodic_xy(std::size_t length) {
  std::vector<GroupElement> e;
  for (std::size_t i = 0; i < length; ++i) e.push_back(i % 2 == 0 ? GroupElement{1, 0} : GroupElement{0, 1});
  return Sequence(std::move(e), 2);
}

/// Block sums of the length-14 (x, y) sequence with 7x + 7y removed.
inline ElementSet periodic_xy_set() { return block_sums(periodic_xy(14)).without(GroupElement{7, 7}); }

/// Three classes covering periodic_xy_set(); entries are (a, b) = a x + b y.
inline std::vector<ElementSet> periodic_xy_classes() {
  auto set = [](std::initializer_list<std::pair<long long, long long>> v) {
    std::vector<GroupElement> e;
    for (auto [a, b] : v) e.push_back(GroupElement{a, b});
    return ElementSet(std::move(e), 2);
  };
  return {set({{1, 0}, {0, 1}, {2, 2}, {5, 5}, {7, 6}, {6, 7}}),
          set({{1, 1}, {2, 1}, {1, 2}, {6, 5}, {5, 6}, {6, 6}}),
          set({{3, 2}, {2, 3}, {3, 3}, {4, 3}, {3, 4}, {4, 4}, {5, 4}, {4, 5}})};
}

/// [1, a] u [x, x + top] in Z^2.
inline ElementSet interval_with_x_interval(long long a, long long top) {
  std::vector<GroupElement> e;
  for (long long k = 1; k <= a; ++k) e.push_back(plain(k));
  for (long long k = 0; k <= top; ++k) e.push_back(x_plus(k));
  return ElementSet(std::move(e), 2);
}

/// {1, 2} u [x, x + top].
inline ElementSet one_two_x_interval(long long top) { return interval_with_x_interval(2, top); }

inline std::vector<ElementSet> one_two_x3_classes() {
  return {ElementSet({plain(1), x_plus(0), x_plus(3)}, 2), ElementSet({plain(2), x_plus(1), x_plus(2)}, 2)};
}

/// The 3-partition of [1,6] u [x, x+13].
inline std::vector<ElementSet> one_to_six_classes() {
  auto set = [](std::initializer_list<long long> ints, std::initializer_list<long long> xs) {
    std::vector<GroupElement> e;
    for (auto k : ints) e.push_back(plain(k));
    for (auto k : xs) e.push_back(x_plus(k));
    return ElementSet(std::move(e), 2);
  };
  return {set({1, 6}, {0, 3, 7, 10}), set({2, 5}, {1, 2, 8, 9}), set({3, 4}, {4, 5, 6, 11, 12, 13})};
}

/// A length-14 sequence of average 114 whose 83 block sums have Schur degree 3.
inline Sequence exotic_sequence() { return Sequence::of_integers({23, 375, 23, 209, 209, 60, 60, 60, 23, 1, 60, 261, 209, 23}); }

/// The first `count` standard basis vectors of Z^count.
inline Sequence basis_vectors(std::size_t count) {
  std::vector<GroupElement> e;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<Integer> c(count);
    c[i] = 1;
    e.emplace_back(std::move(c));
  }
  return Sequence(std::move(e), count);
}

}  // namespace schur::catalog
