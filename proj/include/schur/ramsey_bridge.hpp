#pragma once

// Length-based lower bounds on sd(A^) from Ramsey numbers, and the converse
// construction: a triangle-free n-coloring of K_{N+1} pulled back along
// b(i,j) = a_i + ... + a_{j-1} to a sumfree n-coloring of A^.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "schur/algebra.hpp"
#include "schur/bounds.hpp"
#include "schur/solver.hpp"

namespace schur {

/// GF(16) as polynomials over GF(2) modulo x^4 + x + 1; elements are 4-bit masks.
class GF16 {
public:
  static constexpr unsigned modulus = 0b10011;

  static constexpr std::uint8_t add(std::uint8_t a, std::uint8_t b) { return a ^ b; }

  static constexpr std::uint8_t mul(std::uint8_t a, std::uint8_t b) {
    unsigned r = 0, x = a;
    for (unsigned bit = 0; bit < 4; ++bit)
      if ((b >> bit) & 1u) r ^= x << bit;
    for (int deg = 7; deg >= 4; --deg)
      if ((r >> deg) & 1u) r ^= modulus << (deg - 4);
    return static_cast<std::uint8_t>(r);
  }

  /// Discrete log to base x (which generates the multiplicative group).
  static int log(std::uint8_t a) {
    if (a == 0) throw DomainError("log of zero in GF(16)");
    std::uint8_t p = 1;
    for (int k = 0; k < 15; ++k, p = mul(p, 2))
      if (p == a) return k;
    throw std::logic_error("GF16: x is not primitive");
  }

  /// Index in {0,1,2} of the coset of the cubes {1, x^3, x^6, x^9, x^12} holding a != 0.
  static int cubic_coset(std::uint8_t a) { return log(a) % 3; }
};

/// An n-coloring of the edges of K_V, vertices 1..V, colors 1..n.
class EdgeColoring {
public:
  EdgeColoring() = default;
  EdgeColoring(int vertices, int colors) : v_(vertices), n_(colors), c_(static_cast<std::size_t>(vertices * vertices), 0) {
    if (vertices < 1 || colors < 1) throw DomainError("edge coloring needs V >= 1 and n >= 1");
  }

  int vertices() const noexcept { return v_; }
  int colors() const noexcept { return n_; }

  int color(int i, int j) const { return c_.at(slot(i, j)); }
  void set(int i, int j, int c) {
    if (c < 1 || c > n_) throw DomainError("edge color out of range");
    c_.at(slot(i, j)) = c;
    c_.at(slot(j, i)) = c;
  }

  bool is_total() const {
    for (int i = 1; i <= v_; ++i)
      for (int j = i + 1; j <= v_; ++j)
        if (color(i, j) == 0) return false;
    return true;
  }

  std::size_t triangle_count() const { return static_cast<std::size_t>(v_) * (v_ - 1) * (v_ - 2) / 6; }

  /// First monochromatic triangle i < j < h, if any. Examines all C(V,3) triangles.
  std::optional<std::array<int, 3>> monochromatic_triangle() const {
    for (int i = 1; i <= v_; ++i)
      for (int j = i + 1; j <= v_; ++j)
        for (int h = j + 1; h <= v_; ++h) {
          int c = color(i, j);
          if (c != 0 && c == color(j, h) && c == color(i, h)) return std::array<int, 3>{i, j, h};
        }
    return std::nullopt;
  }
  bool is_triangle_free() const { return !monochromatic_triangle(); }

  /// Number of edges of color c at vertex i.
  int degree(int i, int c) const {
    int d = 0;
    for (int j = 1; j <= v_; ++j)
      if (j != i && color(i, j) == c) ++d;
    return d;
  }

  /// The induced coloring on vertices 1..V'.
  EdgeColoring restricted(int vertices) const {
    if (vertices < 1 || vertices > v_) throw DomainError("restriction beyond vertex count");
    EdgeColoring out(vertices, n_);
    for (int i = 1; i <= vertices; ++i)
      for (int j = i + 1; j <= vertices; ++j) out.set(i, j, color(i, j));
    return out;
  }

  /// (i, j, color) for i < j.
  std::vector<std::tuple<int, int, int>> edges() const {
    std::vector<std::tuple<int, int, int>> out;
    for (int i = 1; i <= v_; ++i)
      for (int j = i + 1; j <= v_; ++j) out.emplace_back(i, j, color(i, j));
    return out;
  }

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

private:
  std::size_t slot(int i, int j) const {
    if (i < 1 || j < 1 || i > v_ || j > v_ || i == j) throw DomainError("edge endpoints out of range");
    return static_cast<std::size_t>((i - 1) * v_ + (j - 1));
  }

  int v_ = 0, n_ = 0;
  std::vector<int> c_;
};

/// K_5 in two colors: color 1 when j - i = +-1 mod 5 (the pentagon), else 2 (the pentagram).
inline EdgeColoring pentagon_coloring() {
  EdgeColoring ec(5, 2);
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) {
      int d = (j - i) % 5;
      ec.set(i, j, (d == 1 || d == 4) ? 1 : 2);
    }
  return ec;
}

/// K_16 in three colors (Greenwood-Gleason): vertex i is the GF(16) element
/// i - 1, and edge {u, v} takes the cubic-residue coset of u + v.
inline EdgeColoring greenwood_gleason_coloring() {
  EdgeColoring ec(16, 3);
  for (int i = 1; i <= 16; ++i)
    for (int j = i + 1; j <= 16; ++j) {
      auto s = GF16::add(static_cast<std::uint8_t>(i - 1), static_cast<std::uint8_t>(j - 1));
      ec.set(i, j, GF16::cubic_coset(s) + 1);
    }
  return ec;
}

/// A verified triangle-free n-coloring of K_V. Supported: n = 1 with V <= 2,
/// n = 2 with V <= 5, n = 3 with V <= 16.
inline EdgeColoring triangle_free_coloring(int vertices, int colors) {
  if (vertices < 1) throw DomainError("triangle_free_coloring needs V >= 1");
  EdgeColoring full;
  if (colors == 1 && vertices <= 2) {
    full = EdgeColoring(2, 1);
    full.set(1, 2, 1);
  } else if (colors == 2 && vertices <= 5) {
    full = pentagon_coloring();
  } else if (colors == 3 && vertices <= 16) {
    full = greenwood_gleason_coloring();
  } else {
    throw Unsupported("no triangle-free " + std::to_string(colors) + "-coloring of K_" + std::to_string(vertices) +
                      " is available");
  }
  EdgeColoring out = full.restricted(vertices);
  if (!out.is_triangle_free()) throw std::logic_error("constructed edge coloring has a monochromatic triangle");
  return out;
}

/// If |A| >= R_n(3) - 1 then sd(A^) >= n + 1. Returns the largest such n + 1
/// over n = 1..4, using the upper end of the R_4(3) interval; 1 otherwise.
inline int lower_bound_from_length(std::size_t length) {
  int bound = 1;
  for (int n = 1; n <= 4; ++n) {
    Interval r = RamseyTable::entry(n);
    if (r.hi && Integer(length) >= *r.hi - 1) bound = n + 1;
  }
  return bound;
}
inline int lower_bound_from_length(const Sequence& a) { return lower_bound_from_length(a.size()); }

/// b(i, j) = a_i + ... + a_{j-1} for 1 <= i < j <= N + 1, keyed by vertex pair.
struct BlockIndex {
  struct Entry {
    GroupElement sum;
    int i, j;
  };
  std::vector<Entry> entries;  // sorted by sum
};

inline BlockIndex block_index(const Sequence& a) {
  BlockIndex idx;
  const int n = static_cast<int>(a.size());
  for (int i = 1; i <= n; ++i) {
    GroupElement s = a[static_cast<std::size_t>(i - 1)];
    idx.entries.push_back({s, i, i + 1});
    for (int j = i + 2; j <= n + 1; ++j) {
      s += a[static_cast<std::size_t>(j - 2)];
      idx.entries.push_back({s, i, j});
    }
  }
  std::sort(idx.entries.begin(), idx.entries.end(), [](const auto& x, const auto& y) { return x.sum < y.sum; });
  return idx;
}

/// True iff all block sums are distinct and every u + v = w inside A^ has the
/// shape b(i,j) + b(j,h) = b(i,h).
inline bool is_block_faithful(const Sequence& a) {
  if (a.empty()) return true;
  auto idx = block_index(a);
  const auto& e = idx.entries;
  for (std::size_t k = 1; k < e.size(); ++k)
    if (e[k].sum == e[k - 1].sum) return false;
  auto find = [&](const GroupElement& x) -> const BlockIndex::Entry* {
    auto it = std::lower_bound(e.begin(), e.end(), x, [](const auto& en, const GroupElement& v) { return en.sum < v; });
    return (it != e.end() && it->sum == x) ? &*it : nullptr;
  };
  for (std::size_t p = 0; p < e.size(); ++p)
    for (std::size_t q = p; q < e.size(); ++q) {
      const auto* r = find(e[p].sum + e[q].sum);
      if (!r) continue;
      const auto &u = e[p], &v = e[q];
      bool adjacent = (u.j == v.i && r->i == u.i && r->j == v.j) || (v.j == u.i && r->i == v.i && r->j == u.j);
      if (!adjacent) return false;
    }
  return true;
}

/// Colors b(i, j) with ec({i, j}). Needs a block-faithful A and a
/// triangle-free coloring on at least |A| + 1 vertices (extra vertices are dropped).
inline Coloring transport_coloring(const Sequence& a, const EdgeColoring& ec) {
  if (!is_block_faithful(a)) throw PreconditionError("transport_coloring: sequence is not block-faithful");
  const int vertices = static_cast<int>(a.size()) + 1;
  if (ec.vertices() < vertices)
    throw PreconditionError("transport_coloring: edge coloring has " + std::to_string(ec.vertices()) + " vertices, need " +
                            std::to_string(vertices));
  EdgeColoring used = ec.restricted(vertices);
  if (!used.is_total() || !used.is_triangle_free())
    throw PreconditionError("transport_coloring: edge coloring is not a total triangle-free coloring");

  ElementSet ground = block_sums(a);
  std::vector<int> colors(ground.size(), 0);
  for (const auto& en : block_index(a).entries) colors[*ground.index_of(en.sum)] = used.color(en.i, en.j);
  Coloring out(std::move(ground), std::move(colors), ec.colors());
  if (!verify_coloring(out.ground(), out).valid)
    throw std::logic_error("transported coloring has a monochromatic Schur triple");
  return out;
}

}  // namespace schur
