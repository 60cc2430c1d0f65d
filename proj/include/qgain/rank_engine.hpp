#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qgain/gain_graph.hpp"

namespace qgg {

enum class CycleType { Type1 = 1, Type2 = 2, Type3 = 3, Type4 = 4 };

std::string to_string(CycleType t);

/// Either an exact rank or a closed interval [lo, hi] with lo < hi.
class RankResult {
 public:
  static RankResult exact(std::size_t value) { return RankResult(value, value); }
  /// Collapses to exact when lo == hi; throws std::invalid_argument if lo > hi.
  static RankResult interval(std::size_t lo, std::size_t hi);

  bool is_exact() const { return lo_ == hi_; }
  std::size_t lo() const { return lo_; }
  std::size_t hi() const { return hi_; }
  /// Throws std::logic_error on an interval.
  std::size_t value() const;
  bool contains(std::size_t r) const { return lo_ <= r && r <= hi_; }

  friend RankResult operator+(const RankResult& a, const RankResult& b) {
    return RankResult(a.lo_ + b.lo_, a.hi_ + b.hi_);
  }
  friend bool operator==(const RankResult&, const RankResult&) = default;

 private:
  RankResult(std::size_t lo, std::size_t hi) : lo_(lo), hi_(hi) {}
  std::size_t lo_;
  std::size_t hi_;
};

std::string to_string(const RankResult& r);

enum class BoundCase { HasPendant, LeafFreeCycleDisjoint, LeafFreeSharedCycles };

std::string to_string(BoundCase c);

struct Bound {
  BoundCase kind;
  std::int64_t value;  // may be negative for sparse pendant-heavy graphs
};

/// Plain elimination rank of the adjacency matrix.
std::size_t elimination_rank(const GainGraph& g);

/// phi(v1 v2) phi(v2 v3) ... phi(vn v1). Throws GraphError unless the
/// sequence lists n >= 3 distinct vertices with consecutive edges.
ExactQuaternion cycle_gain(const GainGraph& g, std::span<const VertexId> cycle);

CycleType classify_cycle(std::size_t n, const ExactQuaternion& gain);

std::size_t rank_path(std::size_t n);
std::size_t rank_cycle(std::size_t n, CycleType t);

struct PendantReduction {
  GainGraph graph;  // G - x - y
  std::size_t increment = 2;
  VertexId leaf = 0;
  VertexId neighbor = 0;
};

/// Removes the smallest-id leaf and its neighbour.
PendantReduction reduce_pendant(const GainGraph& g);
PendantReduction reduce_pendant(const GainGraph& g, VertexId leaf);

/// Outcome of removing a pendant cycle. The rank of the input satisfies
///   lower_offset + r(lower_operand) <= r(G) <= upper_offset + r(upper_operand)
/// and both sides coincide except for Type 3.
struct PendantCycleReduction {
  CycleType type;
  std::size_t length = 0;
  bool whole_component = false;
  VertexId attachment = 0;  // meaningful only when !whole_component
  GainGraph lower_operand;
  std::size_t lower_offset = 0;
  GainGraph upper_operand;
  std::size_t upper_offset = 0;

  bool exact() const { return type != CycleType::Type3; }
};

/// cycle lists the cycle's vertices in order. Throws GraphError when it is
/// not a pendant cycle of g.
PendantCycleReduction reduce_pendant_cycle(const GainGraph& g, std::span<const VertexId> cycle);

/// Every pendant cycle, as a vertex sequence starting at its attachment
/// vertex (or at its smallest vertex for a cycle component).
std::vector<std::vector<VertexId>> pendant_cycles(const GainGraph& g);

struct P6Contraction {
  GainGraph graph;
  std::size_t increment = 4;
};

/// path = v1..v6 with v2..v5 of degree 2 and v1, v6 non-adjacent.
P6Contraction contract_p6(const GainGraph& g, std::span<const VertexId> path);
std::optional<std::vector<VertexId>> find_p6(const GainGraph& g);

/// Rank by reduction lemmas and closed forms. Always contains the true rank.
RankResult structural_rank(const GainGraph& g);

struct Block {
  std::vector<VertexId> vertices;  // sorted
  std::size_t edges = 0;
};

/// Biconnected components (bridges count as two-vertex blocks).
std::vector<Block> blocks(const GainGraph& g);

/// Two distinct cycles share a vertex: some block carries two or more
/// independent cycles, or a cut vertex lies on two cycle blocks.
bool has_shared_cycles(const GainGraph& g);

/// Three-case lower bound on the rank. Throws GraphError when g has an
/// isolated vertex.
Bound lower_bound(const GainGraph& g);

/// All simple cycles as vertex sequences (smallest vertex first, then its
/// smaller neighbour on the cycle). Throws GraphError when the cyclomatic
/// number exceeds max_cyclomatic.
std::vector<std::vector<VertexId>> simple_cycles(const GainGraph& g, std::size_t max_cyclomatic = 12);

struct CompositeCheck {
  GainGraph composite;
  std::size_t rank_composite = 0;
  std::int64_t required = 0;  // right-hand side of the inequality
  bool holds = false;
};

/// Identify v in H with u in K; H and K - u must be vertex-disjoint. Checks
/// r(G) >= r(K) + r(H - v) - 1.
CompositeCheck coalescence_bound_check(const GainGraph& h, const GainGraph& k, VertexId v, VertexId u);

/// Join v1 in H to vt in K by a path with t = gains.size() + 1 vertices; the
/// t - 2 interior vertices get fresh ids. gains[i] is oriented along the
/// path from v1. Checks r(G) >= r(H) + r(K) + t - 3.
CompositeCheck bridge_bound_check(const GainGraph& h, const GainGraph& k, VertexId v1, VertexId vt,
                                  std::span<const ExactQuaternion> gains);

}  // namespace qgg
