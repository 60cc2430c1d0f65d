#include "qgain/gain_graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace qgg {

namespace {

std::pair<VertexId, VertexId> key(VertexId u, VertexId v) { return u < v ? std::pair{u, v} : std::pair{v, u}; }

std::string vname(VertexId v) { return std::to_string(v); }

// Component labels over g with `removed` treated as absent.
std::map<VertexId, std::size_t> label_components(const GainGraph& g,
                                                 const std::set<VertexId>& removed = {}) {
  std::map<VertexId, std::size_t> label;
  std::size_t next = 0;
  for (VertexId s : g.vertices()) {
    if (removed.count(s) || label.count(s)) continue;
    std::deque<VertexId> queue{s};
    label[s] = next;
    while (!queue.empty()) {
      const VertexId x = queue.front();
      queue.pop_front();
      for (VertexId y : g.neighbors(x)) {
        if (removed.count(y) || label.count(y)) continue;
        label[y] = next;
        queue.push_back(y);
      }
    }
    ++next;
  }
  return label;
}

}  // namespace

void GainGraph::add_vertex(VertexId v) { adjacency_.try_emplace(v); }

void GainGraph::add_edge(VertexId u, VertexId v, const ExactQuaternion& gain) {
  if (u == v) throw GraphError("loop at vertex " + vname(u) + " is not allowed");
  if (!is_unit(gain)) {
    throw GraphError("gain " + to_token(gain) + " on edge " + vname(u) + "-" + vname(v) +
                     " is not a unit quaternion");
  }
  if (has_edge(u, v)) throw GraphError("duplicate edge " + vname(u) + "-" + vname(v));
  adjacency_[u].insert(v);
  adjacency_[v].insert(u);
  gains_.emplace(key(u, v), u < v ? gain : conj(gain));
}

bool GainGraph::has_edge(VertexId u, VertexId v) const { return gains_.count(key(u, v)) != 0; }

ExactQuaternion GainGraph::gain(VertexId u, VertexId v) const {
  const auto it = gains_.find(key(u, v));
  if (it == gains_.end()) throw GraphError("no edge " + vname(u) + "-" + vname(v));
  return u < v ? it->second : conj(it->second);
}

std::size_t GainGraph::degree(VertexId v) const { return neighbors(v).size(); }

const std::set<VertexId>& GainGraph::neighbors(VertexId v) const {
  const auto it = adjacency_.find(v);
  if (it == adjacency_.end()) throw GraphError("no vertex " + vname(v));
  return it->second;
}

std::vector<VertexId> GainGraph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(adjacency_.size());
  for (const auto& [v, _] : adjacency_) out.push_back(v);
  return out;
}

std::vector<Edge> GainGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(gains_.size());
  for (const auto& [uv, g] : gains_) out.push_back(Edge{uv.first, uv.second, g});
  return out;
}

VertexId GainGraph::max_vertex() const {
  if (adjacency_.empty()) throw GraphError("empty graph has no vertices");
  return adjacency_.rbegin()->first;
}

ExactMatrix adjacency_matrix(const GainGraph& g) {
  const auto vs = g.vertices();
  std::map<VertexId, Eigen::Index> index;
  for (std::size_t t = 0; t < vs.size(); ++t) index[vs[t]] = static_cast<Eigen::Index>(t);
  const auto n = static_cast<Eigen::Index>(vs.size());
  ExactMatrix a(n, n);
  for (const Edge& e : g.edges()) {
    a(index[e.u], index[e.v]) = e.gain;
    a(index[e.v], index[e.u]) = conj(e.gain);
  }
  return a;
}

GraphStats stats(const GainGraph& g) {
  GraphStats s;
  s.n = g.order();
  s.m = g.size();
  const auto labels = label_components(g);
  for (const auto& [_, l] : labels) s.omega = std::max(s.omega, l + 1);
  s.c = s.m + s.omega - s.n;
  for (VertexId v : g.vertices())
    if (g.degree(v) == 1) ++s.p;
  return s;
}

std::vector<std::vector<VertexId>> component_vertex_sets(const GainGraph& g) {
  const auto labels = label_components(g);
  std::vector<std::vector<VertexId>> sets;
  for (const auto& [v, l] : labels) {
    if (l >= sets.size()) sets.resize(l + 1);
    sets[l].push_back(v);
  }
  return sets;
}

std::vector<GainGraph> components(const GainGraph& g) {
  std::vector<GainGraph> out;
  for (const auto& set : component_vertex_sets(g)) out.push_back(induced(g, set));
  return out;
}

bool is_connected(const GainGraph& g) { return component_vertex_sets(g).size() <= 1; }

std::size_t distance(const GainGraph& g, VertexId u, VertexId v) {
  if (!g.has_vertex(u) || !g.has_vertex(v)) throw GraphError("distance: missing vertex");
  std::map<VertexId, std::size_t> dist{{u, 0}};
  std::deque<VertexId> queue{u};
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop_front();
    if (x == v) return dist[x];
    for (VertexId y : g.neighbors(x)) {
      if (dist.count(y)) continue;
      dist[y] = dist[x] + 1;
      queue.push_back(y);
    }
  }
  throw GraphError("distance: vertices " + vname(u) + " and " + vname(v) + " are disconnected");
}

bool is_forest(const GainGraph& g) { return stats(g).c == 0; }

bool is_tree(const GainGraph& g) { return g.order() > 0 && is_connected(g) && g.size() + 1 == g.order(); }

bool is_cycle(const GainGraph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  for (VertexId v : g.vertices())
    if (g.degree(v) != 2) return false;
  return true;
}

bool is_path(const GainGraph& g) {
  if (!is_tree(g)) return false;
  for (VertexId v : g.vertices())
    if (g.degree(v) > 2) return false;
  return true;
}

GainGraph delete_vertices(const GainGraph& g, std::span<const VertexId> vs) {
  std::set<VertexId> drop;
  for (VertexId v : vs) {
    if (!g.has_vertex(v)) throw GraphError("delete_vertex: no vertex " + vname(v));
    drop.insert(v);
  }
  GainGraph out;
  for (VertexId v : g.vertices())
    if (!drop.count(v)) out.add_vertex(v);
  for (const Edge& e : g.edges())
    if (!drop.count(e.u) && !drop.count(e.v)) out.add_edge(e.u, e.v, e.gain);
  return out;
}

GainGraph delete_vertex(const GainGraph& g, VertexId v) {
  const VertexId vs[] = {v};
  return delete_vertices(g, vs);
}

GainGraph delete_edge(const GainGraph& g, VertexId u, VertexId v) {
  if (!g.has_edge(u, v)) throw GraphError("delete_edge: no edge " + vname(u) + "-" + vname(v));
  GainGraph out;
  for (VertexId x : g.vertices()) out.add_vertex(x);
  for (const Edge& e : g.edges())
    if (key(e.u, e.v) != key(u, v)) out.add_edge(e.u, e.v, e.gain);
  return out;
}

GainGraph induced(const GainGraph& g, std::span<const VertexId> vs) {
  std::set<VertexId> keep;
  for (VertexId v : vs) {
    if (!g.has_vertex(v)) throw GraphError("induced: no vertex " + vname(v));
    keep.insert(v);
  }
  GainGraph out;
  for (VertexId v : keep) out.add_vertex(v);
  for (const Edge& e : g.edges())
    if (keep.count(e.u) && keep.count(e.v)) out.add_edge(e.u, e.v, e.gain);
  return out;
}

GainGraph apply_switching(const GainGraph& g, const SwitchingFunction& theta) {
  for (VertexId v : g.vertices()) {
    const auto it = theta.find(v);
    if (it == theta.end()) throw GraphError("switching function undefined at vertex " + vname(v));
    if (!is_unit(it->second)) {
      throw GraphError("switching value " + to_token(it->second) + " at vertex " + vname(v) +
                       " is not a unit");
    }
  }
  GainGraph out;
  for (VertexId v : g.vertices()) out.add_vertex(v);
  for (const Edge& e : g.edges()) {
    // unit inverse is the conjugate
    out.add_edge(e.u, e.v, conj(theta.at(e.u)) * e.gain * theta.at(e.v));
  }
  return out;
}

CanonicalForm switch_canonical(const GainGraph& g) {
  if (g.order() == 0 || !is_connected(g)) throw GraphError("switch_canonical: graph must be connected");
  const VertexId root = g.vertices().front();
  SwitchingFunction theta{{root, ExactQuaternion::identity()}};
  std::deque<VertexId> queue{root};
  while (!queue.empty()) {
    const VertexId parent = queue.front();
    queue.pop_front();
    for (VertexId child : g.neighbors(parent)) {
      if (theta.count(child)) continue;
      // path child -> parent -> ... -> root
      theta[child] = g.gain(child, parent) * theta[parent];
      queue.push_back(child);
    }
  }
  return CanonicalForm{apply_switching(g, theta), theta};
}

std::vector<std::pair<VertexId, VertexId>> pendant_structure(const GainGraph& g) {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId v : g.vertices())
    if (g.degree(v) == 1) out.emplace_back(v, *g.neighbors(v).begin());
  return out;
}

std::vector<VertexId> major_vertices(const GainGraph& g) {
  std::vector<VertexId> out;
  for (VertexId v : g.vertices())
    if (g.degree(v) >= 2) out.push_back(v);
  return out;
}

bool lies_on_cycle(const GainGraph& g, VertexId x) {
  // x is on a cycle iff two of its neighbours stay connected once x is gone.
  const auto& nbrs = g.neighbors(x);
  if (nbrs.size() < 2) return false;
  const auto labels = label_components(g, {x});
  std::set<std::size_t> seen;
  for (VertexId y : nbrs)
    if (!seen.insert(labels.at(y)).second) return true;
  return false;
}

VertexCounts vertex_removal_counts(const GainGraph& g, VertexId x) {
  VertexCounts out;
  out.d = g.degree(x);
  const auto labels = label_components(g, {x});
  // Components of G - x that came from the component of x are exactly those
  // containing a neighbour of x.
  std::set<std::size_t> touched;
  std::set<std::size_t> with_two_degree;
  for (VertexId y : g.neighbors(x)) {
    touched.insert(labels.at(y));
    if (g.degree(y) == 2) {
      ++out.m;
      with_two_degree.insert(labels.at(y));
    }
  }
  out.s = touched.size();
  out.r = with_two_degree.size();
  return out;
}

GainGraph disjoint_union(const GainGraph& a, const GainGraph& b) {
  GainGraph out = a;
  for (VertexId v : b.vertices()) {
    if (a.has_vertex(v)) throw GraphError("disjoint_union: vertex " + vname(v) + " appears in both graphs");
    out.add_vertex(v);
  }
  for (const Edge& e : b.edges()) out.add_edge(e.u, e.v, e.gain);
  return out;
}

GainGraph relabel_shift(const GainGraph& g, VertexId offset) {
  GainGraph out;
  for (VertexId v : g.vertices()) out.add_vertex(v + offset);
  for (const Edge& e : g.edges()) out.add_edge(e.u + offset, e.v + offset, e.gain);
  return out;
}

GainGraph relabel_compact(const GainGraph& g) {
  std::map<VertexId, VertexId> index;
  GainGraph out;
  for (VertexId v : g.vertices()) {
    const auto id = static_cast<VertexId>(index.size());
    index[v] = id;
    out.add_vertex(id);
  }
  for (const Edge& e : g.edges()) out.add_edge(index[e.u], index[e.v], e.gain);
  return out;
}

}  // namespace qgg
