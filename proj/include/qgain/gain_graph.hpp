#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qgain/qmatrix.hpp"
#include "qgain/quaternion.hpp"

namespace qgg {

using VertexId = std::uint32_t;

/// Thrown when an edit or query names a vertex or edge that is not present,
/// or when a construction would break simplicity or unit gains.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Edge {
  VertexId u;
  VertexId v;
  ExactQuaternion gain;  // oriented u -> v
};

/// Simple graph with a unit quaternion gain on every oriented edge.
///
/// Each unordered edge stores one gain, oriented from the lower vertex id to
/// the higher one; the reverse orientation reads back as its conjugate, so
/// gain(v, u) == conj(gain(u, v)) always holds. Vertices iterate in sorted id
/// order, which is also the row order of adjacency_matrix().
class GainGraph {
 public:
  GainGraph() = default;

  void add_vertex(VertexId v);
  /// Adds u -- v with gain oriented u -> v. Missing endpoints are created.
  void add_edge(VertexId u, VertexId v, const ExactQuaternion& gain);

  bool has_vertex(VertexId v) const { return adjacency_.count(v) != 0; }
  bool has_edge(VertexId u, VertexId v) const;
  ExactQuaternion gain(VertexId u, VertexId v) const;

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return gains_.size(); }
  std::size_t degree(VertexId v) const;
  const std::set<VertexId>& neighbors(VertexId v) const;

  std::vector<VertexId> vertices() const;
  /// Edges in canonical orientation (u < v), sorted.
  std::vector<Edge> edges() const;
  VertexId max_vertex() const;

  friend bool operator==(const GainGraph& a, const GainGraph& b) {
    return a.adjacency_ == b.adjacency_ && a.gains_ == b.gains_;
  }

 private:
  std::map<VertexId, std::set<VertexId>> adjacency_;
  std::map<std::pair<VertexId, VertexId>, ExactQuaternion> gains_;
};

using SwitchingFunction = std::map<VertexId, ExactQuaternion>;

struct GraphStats {
  std::size_t n = 0;      // vertices
  std::size_t m = 0;      // edges
  std::size_t omega = 0;  // components
  std::size_t c = 0;      // cyclomatic number m - n + omega
  std::size_t p = 0;      // pendant vertices
};

ExactMatrix adjacency_matrix(const GainGraph& g);

GraphStats stats(const GainGraph& g);
std::vector<GainGraph> components(const GainGraph& g);
std::vector<std::vector<VertexId>> component_vertex_sets(const GainGraph& g);
bool is_connected(const GainGraph& g);
/// Breadth-first distance; throws GraphError when u and v are disconnected.
std::size_t distance(const GainGraph& g, VertexId u, VertexId v);

bool is_forest(const GainGraph& g);
bool is_tree(const GainGraph& g);
/// Connected, 2-regular, at least 3 vertices.
bool is_cycle(const GainGraph& g);
bool is_path(const GainGraph& g);

GainGraph delete_vertex(const GainGraph& g, VertexId v);
GainGraph delete_vertices(const GainGraph& g, std::span<const VertexId> vs);
GainGraph delete_edge(const GainGraph& g, VertexId u, VertexId v);
GainGraph induced(const GainGraph& g, std::span<const VertexId> vs);

/// phi'(x, y) = theta(x)^-1 phi(x, y) theta(y).
GainGraph apply_switching(const GainGraph& g, const SwitchingFunction& theta);

struct CanonicalForm {
  GainGraph graph;
  SwitchingFunction theta;
};

/// Switches a connected graph so every edge of its BFS spanning tree (rooted
/// at the smallest id) carries gain 1, using theta(v) = phi(tree path v -> root).
CanonicalForm switch_canonical(const GainGraph& g);

/// (leaf, its neighbor) for every vertex of degree 1, sorted by leaf.
std::vector<std::pair<VertexId, VertexId>> pendant_structure(const GainGraph& g);
/// Vertices of degree >= 2.
std::vector<VertexId> major_vertices(const GainGraph& g);

/// True when some cycle of g passes through x.
bool lies_on_cycle(const GainGraph& g, VertexId x);

struct VertexCounts {
  std::size_t d = 0;  // degree of x
  std::size_t r = 0;  // components of (component of x) - x holding a 2-degree neighbor
  std::size_t m = 0;  // 2-degree neighbors of x
  std::size_t s = 0;  // components of (component of x) - x
};

VertexCounts vertex_removal_counts(const GainGraph& g, VertexId x);

/// Disjoint union; throws GraphError when the vertex sets overlap.
GainGraph disjoint_union(const GainGraph& a, const GainGraph& b);

/// Copy of g with every vertex id shifted by offset.
GainGraph relabel_shift(const GainGraph& g, VertexId offset);

/// Copy of g with vertices renumbered 0..n-1 in id order.
GainGraph relabel_compact(const GainGraph& g);

}  // namespace qgg
