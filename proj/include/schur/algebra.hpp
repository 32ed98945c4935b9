#pragma once

// Group elements of Z^d, finite sequences, their block sums, minors and the
// discrete derivative of finite integer sets.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "schur/errors.hpp"

namespace schur {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// An element of the free abelian group Z^d, stored as its coordinate vector.
///
/// Symbolic examples such as {1, 2} u [x, x+3] live in Z^2 with 1 = (1,0) and
/// x = (0,1). Arithmetic between elements of different dimension throws.
class GroupElement {
public:
  GroupElement() = default;
  explicit GroupElement(std::vector<Integer> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw DomainError("group element needs dimension >= 1");
  }
  GroupElement(std::initializer_list<long long> coords) {
    coords_.reserve(coords.size());
    for (long long c : coords) coords_.emplace_back(c);
    if (coords_.empty()) throw DomainError("group element needs dimension >= 1");
  }

  static GroupElement scalar(const Integer& value) { return GroupElement(std::vector<Integer>{value}); }
  static GroupElement zero(std::size_t dim) {
    if (dim == 0) throw DomainError("group element needs dimension >= 1");
    return GroupElement(std::vector<Integer>(dim));
  }
  /// k + c*x in Z^2 with the basis convention 1 = (1,0), x = (0,1).
  static GroupElement symbolic(long long k, long long c = 1) { return GroupElement{k, c}; }

  std::size_t dim() const noexcept { return coords_.size(); }
  std::span<const Integer> coords() const noexcept { return coords_; }
  const Integer& operator[](std::size_t i) const { return coords_.at(i); }

  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Integer& c) { return c == 0; });
  }

  GroupElement& operator+=(const GroupElement& other) {
    check_dim(other);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
    return *this;
  }
  GroupElement& operator-=(const GroupElement& other) {
    check_dim(other);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
    return *this;
  }
  friend GroupElement operator+(GroupElement a, const GroupElement& b) { return a += b; }
  friend GroupElement operator-(GroupElement a, const GroupElement& b) { return a -= b; }
  friend GroupElement operator-(GroupElement a) {
    for (auto& c : a.coords_) c = -c;
    return a;
  }
  GroupElement scaled(const Integer& k) const {
    GroupElement out = *this;
    for (auto& c : out.coords_) c *= k;
    return out;
  }

  friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.coords_ == b.coords_; }
  /// Canonical total order: lexicographic on coordinates (dimension first).
  friend bool operator<(const GroupElement& a, const GroupElement& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(), b.coords_.end());
  }
  friend bool operator>(const GroupElement& a, const GroupElement& b) { return b < a; }
  friend bool operator<=(const GroupElement& a, const GroupElement& b) { return !(b < a); }
  friend bool operator>=(const GroupElement& a, const GroupElement& b) { return !(a < b); }

  /// "7" in Z, "(3,1)" in Z^d.
  std::string to_string() const {
    if (coords_.size() == 1) return coords_[0].str();
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) s += ',';
      s += coords_[i].str();
    }
    return s + ")";
  }

private:
  void check_dim(const GroupElement& other) const {
    if (other.dim() != dim()) throw DomainError("dimension mismatch in group operation");
  }

  std::vector<Integer> coords_;
};

namespace detail {
inline std::size_t common_dim(std::span<const GroupElement> xs, std::size_t dim) {
  for (const auto& x : xs) {
    if (dim == 0) dim = x.dim();
    if (x.dim() != dim) throw DomainError("elements of mixed dimension");
  }
  return dim;
}
}  // namespace detail

/// A finite ordered list (a_1, ..., a_N) of group elements.
class Sequence {
public:
  Sequence() = default;
  explicit Sequence(std::vector<GroupElement> entries, std::size_t dim = 0)
      : entries_(std::move(entries)), dim_(detail::common_dim(entries_, dim)) {}

  static Sequence of_integers(std::span<const long long> values) {
    std::vector<GroupElement> e;
    e.reserve(values.size());
    for (long long v : values) e.push_back(GroupElement::scalar(v));
    return Sequence(std::move(e), 1);
  }
  static Sequence of_integers(std::initializer_list<long long> values) {
    return of_integers(std::span<const long long>(values.begin(), values.size()));
  }

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  /// 0 only for an empty sequence whose dimension was never fixed.
  std::size_t dim() const noexcept { return dim_; }
  const GroupElement& operator[](std::size_t i) const { return entries_.at(i); }
  const std::vector<GroupElement>& entries() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  GroupElement sigma() const {
    if (dim_ == 0) throw DomainError("sum of a dimensionless empty sequence");
    GroupElement s = GroupElement::zero(dim_);
    for (const auto& a : entries_) s += a;
    return s;
  }

  /// mu(A) = sigma(A)/|A| for sequences in Z, kept exact.
  Rational mean() const {
    if (dim_ != 1 || entries_.empty()) throw DomainError("mean needs a nonempty sequence in Z");
    return Rational(sigma()[0], Integer(entries_.size()));
  }

  friend bool operator==(const Sequence& a, const Sequence& b) { return a.entries_ == b.entries_; }
  friend bool operator<(const Sequence& a, const Sequence& b) {
    return std::lexicographical_compare(a.entries_.begin(), a.entries_.end(), b.entries_.begin(), b.entries_.end());
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) s += ',';
      s += entries_[i].to_string();
    }
    return s + ")";
  }

private:
  std::vector<GroupElement> entries_;
  std::size_t dim_ = 0;
};

/// A finite set of group elements, deduplicated and kept in canonical order.
class ElementSet {
public:
  ElementSet() = default;
  explicit ElementSet(std::vector<GroupElement> elements, std::size_t dim = 0)
      : elements_(std::move(elements)), dim_(detail::common_dim(elements_, dim)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  }

  static ElementSet of_integers(std::span<const long long> values) {
    std::vector<GroupElement> e;
    e.reserve(values.size());
    for (long long v : values) e.push_back(GroupElement::scalar(v));
    return ElementSet(std::move(e), 1);
  }
  static ElementSet of_integers(std::initializer_list<long long> values) {
    return of_integers(std::span<const long long>(values.begin(), values.size()));
  }
  /// [lo, hi] in Z.
  static ElementSet interval(long long lo, long long hi) {
    std::vector<GroupElement> e;
    for (long long v = lo; v <= hi; ++v) e.push_back(GroupElement::scalar(v));
    return ElementSet(std::move(e), 1);
  }

  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  std::size_t dim() const noexcept { return dim_; }
  const GroupElement& operator[](std::size_t i) const { return elements_.at(i); }
  const std::vector<GroupElement>& elements() const noexcept { return elements_; }
  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }

  bool contains(const GroupElement& x) const { return std::binary_search(elements_.begin(), elements_.end(), x); }
  /// Position in canonical order (0-based), if present.
  std::optional<std::size_t> index_of(const GroupElement& x) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), x);
    if (it == elements_.end() || !(*it == x)) return std::nullopt;
    return static_cast<std::size_t>(it - elements_.begin());
  }
  bool contains_zero() const {
    return std::any_of(elements_.begin(), elements_.end(), [](const GroupElement& x) { return x.is_zero(); });
  }

  bool is_subset_of(const ElementSet& other) const {
    return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(), elements_.end());
  }
  ElementSet united(const ElementSet& other) const {
    std::vector<GroupElement> out;
    std::set_union(elements_.begin(), elements_.end(), other.begin(), other.end(), std::back_inserter(out));
    return ElementSet(std::move(out), dim_ ? dim_ : other.dim_);
  }
  ElementSet without(const ElementSet& other) const {
    std::vector<GroupElement> out;
    std::set_difference(elements_.begin(), elements_.end(), other.begin(), other.end(), std::back_inserter(out));
    return ElementSet(std::move(out), dim_);
  }
  ElementSet without(const GroupElement& x) const { return without(ElementSet({x}, x.dim())); }

  friend bool operator==(const ElementSet& a, const ElementSet& b) { return a.elements_ == b.elements_; }

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      if (i) s += ',';
      s += elements_[i].to_string();
    }
    return s + "}";
  }

private:
  std::vector<GroupElement> elements_;
  std::size_t dim_ = 0;
};

/// The set of block sums a_i + ... + a_j, 1 <= i <= j <= N.
///
/// An empty sequence yields the empty set so that the derivative of a
/// singleton composes cleanly with this function.
inline ElementSet block_sums(const Sequence& a) {
  std::vector<GroupElement> sums;
  sums.reserve(a.size() * (a.size() + 1) / 2);
  for (std::size_t i = 0; i < a.size(); ++i) {
    GroupElement s = a[i];
    sums.push_back(s);
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      s += a[j];
      sums.push_back(s);
    }
  }
  return ElementSet(std::move(sums), a.dim());
}

/// All N(N+1)/2 blocks, shortest first, then by start position.
inline std::vector<Sequence> blocks(const Sequence& a) {
  if (a.empty()) throw DomainError("blocks of an empty sequence");
  std::vector<Sequence> out;
  const auto& e = a.entries();
  for (std::size_t len = 1; len <= e.size(); ++len) {
    for (std::size_t i = 0; i + len <= e.size(); ++i) {
      out.emplace_back(std::vector<GroupElement>(e.begin() + i, e.begin() + i + len), a.dim());
    }
  }
  return out;
}

/// Replaces the block (a_i, ..., a_j) by its sum. Indices are 1-based and inclusive.
inline Sequence contract(const Sequence& a, std::size_t i, std::size_t j) {
  if (i < 1 || i > j || j > a.size()) {
    throw DomainError("contract: need 1 <= i <= j <= |A|, got i=" + std::to_string(i) + " j=" + std::to_string(j));
  }
  const auto& e = a.entries();
  std::vector<GroupElement> out(e.begin(), e.begin() + (i - 1));
  GroupElement s = e[i - 1];
  for (std::size_t k = i; k < j; ++k) s += e[k];
  out.push_back(std::move(s));
  out.insert(out.end(), e.begin() + j, e.end());
  return Sequence(std::move(out), a.dim());
}

inline Sequence reverse(const Sequence& a) {
  std::vector<GroupElement> out(a.entries().rbegin(), a.entries().rend());
  return Sequence(std::move(out), a.dim());
}

struct MinorWitness {
  bool is_minor = false;
  /// 1-based inclusive range when B is a block of A.
  std::optional<std::pair<std::size_t, std::size_t>> block;
  /// A, then each elementary contraction, ending at B. Empty unless B is a contraction.
  std::vector<Sequence> chain;
};

/// Decides whether B is a minor of A and returns a witness.
///
/// A contraction of A is the same thing as a split of A into |B| consecutive
/// groups whose sums are the entries of B, so the search runs over
/// (position in A, position in B) with memoization. `max_states` bounds that
/// table; larger instances throw BudgetExceeded.
inline MinorWitness is_minor_witnessed(const Sequence& b, const Sequence& a, std::size_t max_states = 1u << 20) {
  MinorWitness w;
  const std::size_t n = a.size(), m = b.size();
  if (m == 0 || n == 0 || m > n || a.dim() != b.dim()) return w;
  if ((n + 1) * (m + 1) > max_states) throw BudgetExceeded("is_minor_witnessed: search table exceeds budget");

  // memo[i][k]: A[i..] splits into groups matching B[k..]; cut[i][k] is the group end.
  std::vector<std::vector<signed char>> memo(n + 1, std::vector<signed char>(m + 1, -1));
  std::vector<std::vector<std::size_t>> cut(n + 1, std::vector<std::size_t>(m + 1, 0));
  auto solve = [&](auto&& self, std::size_t i, std::size_t k) -> bool {
    if (k == m) return i == n;
    if (i == n) return false;
    auto& slot = memo[i][k];
    if (slot >= 0) return slot != 0;
    bool ok = false;
    GroupElement s = a[i];
    for (std::size_t end = i + 1; end + (m - k - 1) <= n; ++end) {
      if (end > i + 1) s += a[end - 1];
      if (s == b[k] && self(self, end, k + 1)) {
        cut[i][k] = end;
        ok = true;
        break;
      }
    }
    slot = ok ? 1 : 0;
    return ok;
  };

  if (solve(solve, 0, 0)) {
    std::vector<std::pair<std::size_t, std::size_t>> groups;
    for (std::size_t i = 0, k = 0; k < m; i = cut[i][k], ++k) groups.emplace_back(i + 1, cut[i][k]);
    w.is_minor = true;
    w.chain.push_back(a);
    // Contract right to left so earlier indices stay valid.
    for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
      if (it->first != it->second) w.chain.push_back(contract(w.chain.back(), it->first, it->second));
    }
    return w;
  }

  for (std::size_t i = 0; i + m <= n; ++i) {
    if (std::equal(b.begin(), b.end(), a.begin() + i)) {
      w.is_minor = true;
      w.block = std::make_pair(i + 1, i + m);
      return w;
    }
  }
  return w;
}

/// Successive gaps (x_1 - x_0, ..., x_r - x_{r-1}) of a finite set in Z.
inline Sequence delta(const ElementSet& x) {
  if (x.dim() != 1 && !x.empty()) throw DomainError("delta needs a set in Z");
  std::vector<GroupElement> gaps;
  for (std::size_t i = 1; i < x.size(); ++i) gaps.push_back(x[i] - x[i - 1]);
  return Sequence(std::move(gaps), 1);
}

/// (X - X) n N_+ = { x_t - x_s : x_s < x_t }.
inline ElementSet difference_set_positive(const ElementSet& x) {
  if (x.dim() != 1 && !x.empty()) throw DomainError("difference_set_positive needs a set in Z");
  std::vector<GroupElement> out;
  for (std::size_t s = 0; s < x.size(); ++s)
    for (std::size_t t = s + 1; t < x.size(); ++t) out.push_back(x[t] - x[s]);
  return ElementSet(std::move(out), 1);
}

}  // namespace schur
