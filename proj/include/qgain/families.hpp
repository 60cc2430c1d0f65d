#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qgain/gain_graph.hpp"
#include "qgain/matching.hpp"
#include "qgain/rank_engine.hpp"
#include "qgain/sampling.hpp"

namespace qgg {

/// (-1)^(n/2), the cycle gain that makes an even n-cycle Type 1.
ExactQuaternion type1_target(std::size_t n);

/// A cycle gain that puts an n-cycle in class t. Throws std::invalid_argument
/// when t does not match the parity of n.
ExactQuaternion type_target(std::size_t n, CycleType t, Rng& rng, GainMode mode);

/// Cycle on 0..n-1 (edges t -> t+1, closing n-1 -> 0) with free gains on the
/// first n-1 edges and the closing gain chosen so the cycle gain read from 0
/// equals target.
GainGraph make_cycle(std::span<const ExactQuaternion> free_gains, const ExactQuaternion& target);
GainGraph make_cycle(std::size_t n, CycleType t, Rng& rng, GainMode mode);
GainGraph make_type1_cycle(std::size_t n, Rng& rng, GainMode mode);

/// Path on 0..n-1 with random gains.
GainGraph make_path(std::size_t n, Rng& rng, GainMode mode);

/// Two cycles C_p and C_q joined by a path on l vertices (l = 1 glues them at
/// a point). Tree edges carry gain 1 unless path_gains is given; the cycle
/// gains are read from the cycles' attachment vertices.
struct InfinitySpec {
  std::size_t p = 4;
  std::size_t l = 1;
  std::size_t q = 4;
  ExactQuaternion gain_p = ExactQuaternion::identity();
  ExactQuaternion gain_q = ExactQuaternion::identity();
  std::vector<ExactQuaternion> path_gains;  // empty or l - 1 entries
};

/// Two vertices a = 0, b = 1 joined by three paths with p, l, q interior
/// vertices. gain_pl / gain_pq are the gains of the cycles formed by the
/// p-path with the l-path and with the q-path, read from a along the p-path.
struct ThetaSpec {
  std::size_t p = 1;
  std::size_t l = 1;
  std::size_t q = 1;
  ExactQuaternion gain_pl = ExactQuaternion::identity();
  ExactQuaternion gain_pq = ExactQuaternion::identity();
};

GainGraph make_infinity(const InfinitySpec& spec);
GainGraph make_theta(const ThetaSpec& spec);

/// Both cycles Type 1 (requires p, q even).
InfinitySpec infinity_type1(std::size_t p, std::size_t l, std::size_t q);
/// The two designated cycles Type 1 (requires p + l and p + q even).
ThetaSpec theta_type1(std::size_t p, std::size_t l, std::size_t q);

struct Attachment {
  VertexId leaf = 0;
  std::size_t length = 0;
  ExactQuaternion cycle_gain = ExactQuaternion::identity();
};

struct FlowerSpec {
  GainGraph tree;
  std::vector<Attachment> attachments;
};

/// Glues a cycle at vertex `at`, with fresh ids above g.max_vertex() for the
/// other cycle vertices. gains[0] leaves `at`, the last gain returns to it.
GainGraph attach_cycle(const GainGraph& g, VertexId at, std::span<const ExactQuaternion> gains);
/// Tree gains 1 except the closing edge, which carries cycle_gain.
GainGraph attach_cycle(const GainGraph& g, VertexId at, std::size_t length, const ExactQuaternion& cycle_gain);

/// Tree with cycles glued at distinct leaves.
GainGraph make_flower(const FlowerSpec& spec);

/// Spider: center 0 and one leg per entry, legs numbered outward. Throws on
/// even legs or fewer than 3 legs.
GainGraph make_spider_tree(std::span<const std::size_t> legs, Rng& rng, GainMode mode);
/// Same shape without the oddness requirement (legs >= 1), all gains 1.
GainGraph make_spider(std::span<const std::size_t> legs);

/// Reference shapes: a 9-vertex spider with legs 1, 1, 3, 3 carrying every
/// gain on its tree edges, with cycles 4, 4, 6, 6 on its four leaves.
GainGraph reference_tree();
GainGraph reference_flower();
/// Cycles 4, 4, 6 on three leaves; variant swaps the first 4-cycle for a
/// Type-2 one of cycle gain -i.
GainGraph reference_flower_three(bool type2_variant);

struct Verdict {
  bool lhs = false;  // rank attains the stated value
  bool rhs = false;  // the characterized shape is recognized
  bool agree() const { return lhs == rhs; }
  std::string diagnostic;
};

/// Leaf-free connected: rank = n - 2c exactly for a Type-1 cycle.
Verdict check_cycle_extremal(const GainGraph& g);
/// Leaf-free connected with c = 2: rank = n - 3 exactly for the Type-1
/// infinity graphs with odd l and all-Type-1 theta graphs with odd paths.
Verdict check_two_cycle_extremal(const GainGraph& g);
/// Leaf-free connected with c >= 3: rank = n - 2c + 1 exactly for Type-1
/// flowers over a tree T with r(T) = |T| - p(T) + 1.
Verdict check_leaf_free_flower(const GainGraph& g);
/// Connected, c >= 1, p >= 1: rank = n - 2c - p + 1 exactly for Type-1
/// flowers over such a tree with cycles on c of its leaves.
Verdict check_pendant_flower(const GainGraph& g);

struct TreeVerdict {
  bool lhs = false;
  bool rhs_all = false;     // every leaf-to-major path checked
  bool rhs_exists = false;  // one witnessing path suffices
  bool agree() const { return lhs == rhs_all && lhs == rhs_exists; }
  std::string diagnostic;
};

/// Tree with p >= 3: r(T) = n - p + 1 versus the recursive odd-leg condition.
TreeVerdict check_tree_extremal(const GainGraph& tree);

/// Recursive condition alone. `exists` selects the quantifier over leaves.
bool tree_condition(const GainGraph& tree, bool exists);

/// Isomorphism-invariant string of a tree (AHU encoding rooted at a centre).
std::string tree_canonical_form(const GainGraph& tree);

/// All unlabelled trees on n vertices, ids 0..n-1, gains 1.
std::vector<GainGraph> all_unlabeled_trees(std::size_t n);

}  // namespace qgg
