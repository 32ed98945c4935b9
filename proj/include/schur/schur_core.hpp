#pragma once

// Sumfree predicate and the hypergraph of Schur triples x + y = z inside a set.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "schur/algebra.hpp"

namespace schur {

/// x + y = z with x <= y in canonical order; all three are members of the ground set.
struct SchurTriple {
  GroupElement x, y, z;
  friend bool operator==(const SchurTriple&, const SchurTriple&) = default;
};

/// The triple as indices into the ground set. `members` lists the distinct
/// indices (3 normally, 2 when x = y, 1 for 0 + 0 = 0).
struct Edge {
  std::uint32_t x, y, z;
  std::uint8_t arity;
  std::uint32_t members[3];
};

class ConstraintHypergraph {
public:
  ConstraintHypergraph() = default;
  explicit ConstraintHypergraph(ElementSet ground) : ground_(std::move(ground)) { build(); }

  const ElementSet& ground() const noexcept { return ground_; }
  std::size_t vertex_count() const noexcept { return ground_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  /// Edge ids touching element `v` (by canonical index).
  const std::vector<std::uint32_t>& incident(std::size_t v) const { return adjacency_.at(v); }
  bool contains_zero() const noexcept { return contains_zero_; }

  SchurTriple triple(std::size_t edge_id) const {
    const Edge& e = edges_.at(edge_id);
    return {ground_[e.x], ground_[e.y], ground_[e.z]};
  }
  std::vector<SchurTriple> triples() const {
    std::vector<SchurTriple> out;
    out.reserve(edges_.size());
    for (std::size_t i = 0; i < edges_.size(); ++i) out.push_back(triple(i));
    return out;
  }

private:
  void build() {
    const auto& g = ground_.elements();
    const auto n = static_cast<std::uint32_t>(g.size());
    adjacency_.assign(n, {});
    for (std::uint32_t i = 0; i < n; ++i) {
      const bool x_zero = g[i].is_zero();
      contains_zero_ = contains_zero_ || x_zero;
      for (std::uint32_t j = i; j < n; ++j) {
        // 0 + y = y for y != 0 repeats what the lone 0 + 0 = 0 edge already forbids.
        if (x_zero && j != i) continue;
        auto k = ground_.index_of(g[i] + g[j]);
        if (!k) continue;
        Edge e{i, j, static_cast<std::uint32_t>(*k), 0, {0, 0, 0}};
        for (std::uint32_t v : {i, j, e.z}) {
          bool seen = false;
          for (std::uint8_t t = 0; t < e.arity; ++t) seen = seen || e.members[t] == v;
          if (!seen) e.members[e.arity++] = v;
        }
        const auto id = static_cast<std::uint32_t>(edges_.size());
        for (std::uint8_t t = 0; t < e.arity; ++t) adjacency_[e.members[t]].push_back(id);
        edges_.push_back(e);
      }
    }
  }

  ElementSet ground_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::uint32_t>> adjacency_;
  bool contains_zero_ = false;
};

/// No x, y in X (possibly equal) with x + y in X.
inline bool is_sumfree(const ElementSet& x) {
  const auto& g = x.elements();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i; j < g.size(); ++j)
      if (x.contains(g[i] + g[j])) return false;
  return true;
}

inline ConstraintHypergraph schur_triples(const ElementSet& x) { return ConstraintHypergraph(x); }

}  // namespace schur
