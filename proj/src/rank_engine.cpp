#include "qgain/rank_engine.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "qgain/matching.hpp"

namespace qgg {

namespace {

std::string vname(VertexId v) { return std::to_string(v); }

std::int64_t as_signed(std::size_t v) { return static_cast<std::int64_t>(v); }

std::size_t clamp_nonneg(std::int64_t v) { return v < 0 ? 0 : static_cast<std::size_t>(v); }

// Orders a cycle vertex set as a sequence from `start`, stepping first to
// its smaller cycle neighbour.
std::vector<VertexId> walk_cycle(const GainGraph& g, const std::set<VertexId>& on_cycle, VertexId start) {
  std::vector<VertexId> seq{start};
  VertexId prev = start;
  VertexId cur = start;
  for (VertexId y : g.neighbors(start)) {
    if (on_cycle.count(y)) {
      cur = y;
      break;
    }
  }
  while (cur != start) {
    seq.push_back(cur);
    VertexId next = start;
    for (VertexId y : g.neighbors(cur)) {
      if (y != prev && on_cycle.count(y)) {
        next = y;
        break;
      }
    }
    prev = cur;
    cur = next;
  }
  return seq;
}

RankResult structural_component(const GainGraph& g);

}  // namespace

std::string to_string(CycleType t) { return "Type" + std::to_string(static_cast<int>(t)); }

RankResult RankResult::interval(std::size_t lo, std::size_t hi) {
  if (lo > hi) throw std::invalid_argument("rank interval with lo > hi");
  return RankResult(lo, hi);
}

std::size_t RankResult::value() const {
  if (!is_exact()) throw std::logic_error("rank is only known as an interval");
  return lo_;
}

std::string to_string(const RankResult& r) {
  if (r.is_exact()) return std::to_string(r.lo());
  return "[" + std::to_string(r.lo()) + ", " + std::to_string(r.hi()) + "]";
}

std::string to_string(BoundCase c) {
  switch (c) {
    case BoundCase::HasPendant: return "HasPendant";
    case BoundCase::LeafFreeCycleDisjoint: return "LeafFreeCycleDisjoint";
    case BoundCase::LeafFreeSharedCycles: return "LeafFreeSharedCycles";
  }
  return "?";
}

std::size_t elimination_rank(const GainGraph& g) { return row_left_rank(adjacency_matrix(g)); }

ExactQuaternion cycle_gain(const GainGraph& g, std::span<const VertexId> cycle) {
  const std::size_t n = cycle.size();
  if (n < 3) throw GraphError("cycle_gain: a cycle needs at least 3 vertices");
  if (std::set<VertexId>(cycle.begin(), cycle.end()).size() != n)
    throw GraphError("cycle_gain: repeated vertex in cycle");
  ExactQuaternion product = ExactQuaternion::identity();
  for (std::size_t t = 0; t < n; ++t) {
    const VertexId a = cycle[t];
    const VertexId b = cycle[(t + 1) % n];
    if (!g.has_vertex(a) || !g.has_edge(a, b))
      throw GraphError("cycle_gain: " + vname(a) + "-" + vname(b) + " is not an edge");
    product = product * g.gain(a, b);
  }
  return product;
}

CycleType classify_cycle(std::size_t n, const ExactQuaternion& gain) {
  if (n % 2 == 0) {
    const ExactQuaternion target((n / 2) % 2 == 0 ? 1 : -1);
    return gain == target ? CycleType::Type1 : CycleType::Type2;
  }
  // the sign (-1)^((n-1)/2) does not affect whether Re vanishes
  return re(gain) != 0 ? CycleType::Type3 : CycleType::Type4;
}

std::size_t rank_path(std::size_t n) {
  if (n == 0) throw std::invalid_argument("rank_path: n must be positive");
  return n % 2 == 1 ? n - 1 : n;
}

std::size_t rank_cycle(std::size_t n, CycleType t) {
  if (n < 3) throw std::invalid_argument("rank_cycle: n must be at least 3");
  switch (t) {
    case CycleType::Type1: return n - 2;
    case CycleType::Type2:
    case CycleType::Type3: return n;
    case CycleType::Type4: return n - 1;
  }
  return n;
}

PendantReduction reduce_pendant(const GainGraph& g, VertexId leaf) {
  if (!g.has_vertex(leaf) || g.degree(leaf) != 1) throw GraphError("reduce_pendant: " + vname(leaf) + " is not a leaf");
  const VertexId y = *g.neighbors(leaf).begin();
  const VertexId drop[] = {leaf, y};
  return PendantReduction{delete_vertices(g, drop), 2, leaf, y};
}

PendantReduction reduce_pendant(const GainGraph& g) {
  for (VertexId v : g.vertices())
    if (g.degree(v) == 1) return reduce_pendant(g, v);
  throw GraphError("reduce_pendant: graph has no pendant vertex");
}

PendantCycleReduction reduce_pendant_cycle(const GainGraph& g, std::span<const VertexId> cycle) {
  const ExactQuaternion phi = cycle_gain(g, cycle);
  std::vector<VertexId> major;
  for (VertexId v : cycle)
    if (g.degree(v) > 2) major.push_back(v);
  if (major.size() > 1) throw GraphError("reduce_pendant_cycle: cycle meets the rest of the graph more than once");

  PendantCycleReduction out;
  out.length = cycle.size();
  out.type = classify_cycle(out.length, phi);
  const GainGraph without_cycle = delete_vertices(g, cycle);
  if (major.empty()) {
    out.whole_component = true;
    out.lower_operand = out.upper_operand = without_cycle;
    out.lower_offset = out.upper_offset = rank_cycle(out.length, out.type);
    return out;
  }
  out.attachment = major.front();
  std::vector<VertexId> rest;
  for (VertexId v : cycle)
    if (v != out.attachment) rest.push_back(v);
  const GainGraph keep_attachment = delete_vertices(g, rest);
  const std::size_t n = out.length;
  switch (out.type) {
    case CycleType::Type1:
      out.lower_operand = out.upper_operand = keep_attachment;
      out.lower_offset = out.upper_offset = n - 2;
      break;
    case CycleType::Type2:
      out.lower_operand = out.upper_operand = without_cycle;
      out.lower_offset = out.upper_offset = n;
      break;
    case CycleType::Type4:
      out.lower_operand = out.upper_operand = keep_attachment;
      out.lower_offset = out.upper_offset = n - 1;
      break;
    case CycleType::Type3:
      out.lower_operand = without_cycle;
      out.lower_offset = n - 1;
      out.upper_operand = keep_attachment;
      out.upper_offset = n;
      break;
  }
  return out;
}

std::vector<std::vector<VertexId>> pendant_cycles(const GainGraph& g) {
  std::vector<std::vector<VertexId>> out;
  std::set<std::set<VertexId>> seen;
  for (const auto& comp : component_vertex_sets(g)) {
    const GainGraph c = induced(g, comp);
    if (is_cycle(c)) {
      out.push_back(walk_cycle(g, std::set<VertexId>(comp.begin(), comp.end()), comp.front()));
      seen.insert(std::set<VertexId>(comp.begin(), comp.end()));
    }
  }
  for (VertexId u : g.vertices()) {
    if (g.degree(u) < 3) continue;
    for (VertexId w : g.neighbors(u)) {
      if (g.degree(w) != 2) continue;
      std::vector<VertexId> seq{u, w};
      VertexId prev = u;
      VertexId cur = w;
      bool closed = false;
      while (true) {
        const auto& nb = g.neighbors(cur);
        const VertexId next = *nb.begin() == prev ? *nb.rbegin() : *nb.begin();
        if (next == u) {
          closed = true;
          break;
        }
        if (g.degree(next) != 2) break;
        prev = cur;
        cur = next;
        seq.push_back(cur);
      }
      if (!closed || seq.size() < 3) continue;
      std::set<VertexId> key(seq.begin(), seq.end());
      if (seen.insert(key).second) out.push_back(std::move(seq));
    }
  }
  return out;
}

P6Contraction contract_p6(const GainGraph& g, std::span<const VertexId> path) {
  if (path.size() != 6) throw GraphError("contract_p6: path must list exactly 6 vertices");
  if (std::set<VertexId>(path.begin(), path.end()).size() != 6) throw GraphError("contract_p6: repeated vertex");
  ExactQuaternion product = ExactQuaternion::identity();
  for (std::size_t t = 0; t + 1 < 6; ++t) {
    if (!g.has_vertex(path[t]) || !g.has_edge(path[t], path[t + 1]))
      throw GraphError("contract_p6: " + vname(path[t]) + "-" + vname(path[t + 1]) + " is not an edge");
    product = product * g.gain(path[t], path[t + 1]);
  }
  for (std::size_t t = 1; t <= 4; ++t)
    if (g.degree(path[t]) != 2) throw GraphError("contract_p6: interior vertex " + vname(path[t]) + " has degree != 2");
  if (g.has_edge(path[0], path[5])) throw GraphError("contract_p6: path ends are already adjacent");
  GainGraph out = delete_vertices(g, path.subspan(1, 4));
  out.add_edge(path[0], path[5], product);
  return P6Contraction{std::move(out), 4};
}

std::optional<std::vector<VertexId>> find_p6(const GainGraph& g) {
  for (VertexId v1 : g.vertices()) {
    for (VertexId v2 : g.neighbors(v1)) {
      std::vector<VertexId> seq{v1, v2};
      while (seq.size() < 6) {
        const VertexId cur = seq.back();
        if (g.degree(cur) != 2) break;
        const VertexId prev = seq[seq.size() - 2];
        const auto& nb = g.neighbors(cur);
        const VertexId next = *nb.begin() == prev ? *nb.rbegin() : *nb.begin();
        if (std::find(seq.begin(), seq.end(), next) != seq.end()) break;
        seq.push_back(next);
      }
      if (seq.size() == 6 && !g.has_edge(seq[0], seq[5])) return seq;
    }
  }
  return std::nullopt;
}

std::vector<Block> blocks(const GainGraph& g) {
  std::map<VertexId, std::size_t> disc;
  std::map<VertexId, std::size_t> low;
  std::vector<std::pair<VertexId, VertexId>> stack;
  std::vector<Block> out;
  std::size_t clock = 0;

  auto pop_block = [&](VertexId u, VertexId v) {
    std::set<VertexId> vs;
    std::size_t edges = 0;
    while (true) {
      const auto e = stack.back();
      stack.pop_back();
      vs.insert(e.first);
      vs.insert(e.second);
      ++edges;
      if (e == std::pair{u, v}) break;
    }
    out.push_back(Block{std::vector<VertexId>(vs.begin(), vs.end()), edges});
  };

  std::function<void(VertexId, std::optional<VertexId>)> dfs = [&](VertexId u, std::optional<VertexId> parent) {
    disc[u] = low[u] = ++clock;
    for (VertexId v : g.neighbors(u)) {
      if (!disc.count(v)) {
        stack.emplace_back(u, v);
        dfs(v, u);
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) pop_block(u, v);
      } else if (v != parent && disc[v] < disc[u]) {
        stack.emplace_back(u, v);
        low[u] = std::min(low[u], disc[v]);
      }
    }
  };
  for (VertexId v : g.vertices())
    if (!disc.count(v)) dfs(v, std::nullopt);
  return out;
}

bool has_shared_cycles(const GainGraph& g) {
  std::set<VertexId> on_cycle_block;
  for (const Block& b : blocks(g)) {
    if (b.edges >= b.vertices.size() + 1) return true;
    if (b.edges < b.vertices.size()) continue;
    for (VertexId v : b.vertices)
      if (!on_cycle_block.insert(v).second) return true;
  }
  return false;
}

Bound lower_bound(const GainGraph& g) {
  for (VertexId v : g.vertices())
    if (g.degree(v) == 0) throw GraphError("lower_bound: vertex " + vname(v) + " is an isolated component");
  const GraphStats s = stats(g);
  const std::int64_t base = as_signed(s.n) - 2 * as_signed(s.c);
  if (s.p >= 1) return Bound{BoundCase::HasPendant, base - as_signed(s.p) + 1};
  if (has_shared_cycles(g)) return Bound{BoundCase::LeafFreeSharedCycles, base + 1};
  return Bound{BoundCase::LeafFreeCycleDisjoint, base};
}

std::vector<std::vector<VertexId>> simple_cycles(const GainGraph& g, std::size_t max_cyclomatic) {
  const GraphStats s = stats(g);
  if (s.c > max_cyclomatic) {
    throw GraphError("simple_cycles: cyclomatic number " + std::to_string(s.c) + " exceeds " +
                     std::to_string(max_cyclomatic));
  }
  const std::vector<Edge> edges = g.edges();
  std::map<std::pair<VertexId, VertexId>, std::size_t> edge_index;
  for (std::size_t t = 0; t < edges.size(); ++t) edge_index[{edges[t].u, edges[t].v}] = t;
  auto index_of = [&](VertexId a, VertexId b) { return edge_index.at(a < b ? std::pair{a, b} : std::pair{b, a}); };

  // BFS forest
  std::map<VertexId, VertexId> parent;
  std::map<VertexId, std::size_t> depth;
  std::vector<char> tree_edge(edges.size(), 0);
  for (VertexId root : g.vertices()) {
    if (depth.count(root)) continue;
    depth[root] = 0;
    std::deque<VertexId> queue{root};
    while (!queue.empty()) {
      const VertexId x = queue.front();
      queue.pop_front();
      for (VertexId y : g.neighbors(x)) {
        if (depth.count(y)) continue;
        depth[y] = depth[x] + 1;
        parent[y] = x;
        tree_edge[index_of(x, y)] = 1;
        queue.push_back(y);
      }
    }
  }

  std::vector<std::vector<char>> fundamental;
  for (std::size_t t = 0; t < edges.size(); ++t) {
    if (tree_edge[t]) continue;
    std::vector<char> set(edges.size(), 0);
    set[t] = 1;
    VertexId a = edges[t].u;
    VertexId b = edges[t].v;
    while (a != b) {
      if (depth[a] < depth[b]) std::swap(a, b);
      set[index_of(a, parent[a])] ^= 1;
      a = parent[a];
    }
    fundamental.push_back(std::move(set));
  }

  std::vector<std::vector<VertexId>> out;
  const std::size_t c = fundamental.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << c); ++mask) {
    std::vector<char> set(edges.size(), 0);
    for (std::size_t b = 0; b < c; ++b)
      if (mask >> b & 1)
        for (std::size_t t = 0; t < edges.size(); ++t) set[t] ^= fundamental[b][t];

    std::map<VertexId, std::size_t> deg;
    std::size_t count = 0;
    for (std::size_t t = 0; t < edges.size(); ++t) {
      if (!set[t]) continue;
      ++count;
      ++deg[edges[t].u];
      ++deg[edges[t].v];
    }
    if (std::any_of(deg.begin(), deg.end(), [](const auto& kv) { return kv.second != 2; })) continue;

    GainGraph sub;
    for (std::size_t t = 0; t < edges.size(); ++t)
      if (set[t]) sub.add_edge(edges[t].u, edges[t].v, edges[t].gain);
    if (!is_connected(sub) || sub.order() != count) continue;
    std::set<VertexId> on_cycle;
    for (const auto& [v, _] : deg) on_cycle.insert(v);
    out.push_back(walk_cycle(sub, on_cycle, *on_cycle.begin()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

RankResult structural_component(const GainGraph& g) {
  const std::size_t n = g.order();
  if (n == 1) return RankResult::exact(0);
  if (is_tree(g)) return RankResult::exact(2 * matching_number(g));
  if (is_cycle(g)) {
    const auto seq = pendant_cycles(g).front();
    return RankResult::exact(rank_cycle(n, classify_cycle(n, cycle_gain(g, seq))));
  }
  for (VertexId v : g.vertices()) {
    if (g.degree(v) == 1) {
      const PendantReduction red = reduce_pendant(g, v);
      return RankResult::exact(red.increment) + structural_rank(red.graph);
    }
  }

  std::vector<PendantCycleReduction> type3;
  for (const auto& cycle : pendant_cycles(g)) {
    PendantCycleReduction red = reduce_pendant_cycle(g, cycle);
    if (red.exact()) return RankResult::exact(red.lower_offset) + structural_rank(red.lower_operand);
    type3.push_back(std::move(red));
  }
  if (const auto path = find_p6(g)) {
    const P6Contraction red = contract_p6(g, *path);
    return RankResult::exact(red.increment) + structural_rank(red.graph);
  }

  std::size_t lo = clamp_nonneg(lower_bound(g).value);
  std::size_t hi = n;
  for (const auto& red : type3) {
    lo = std::max(lo, red.lower_offset + structural_rank(red.lower_operand).lo());
    hi = std::min(hi, red.upper_offset + structural_rank(red.upper_operand).hi());
  }
  return RankResult::interval(lo, hi);
}

}  // namespace

RankResult structural_rank(const GainGraph& g) {
  RankResult total = RankResult::exact(0);
  for (const GainGraph& c : components(g)) total = total + structural_component(c);
  return total;
}

CompositeCheck coalescence_bound_check(const GainGraph& h, const GainGraph& k, VertexId v, VertexId u) {
  if (!h.has_vertex(v)) throw GraphError("coalescence: " + vname(v) + " is not a vertex of H");
  if (!k.has_vertex(u)) throw GraphError("coalescence: " + vname(u) + " is not a vertex of K");
  auto image = [&](VertexId x) { return x == u ? v : x; };
  GainGraph g = h;
  for (VertexId x : k.vertices()) {
    if (x == u) continue;
    if (h.has_vertex(x)) throw GraphError("coalescence: vertex " + vname(x) + " overlaps H");
    g.add_vertex(x);
  }
  for (const Edge& e : k.edges()) g.add_edge(image(e.u), image(e.v), e.gain);

  CompositeCheck out;
  out.rank_composite = elimination_rank(g);
  out.required = as_signed(elimination_rank(k)) + as_signed(elimination_rank(delete_vertex(h, v))) - 1;
  out.holds = as_signed(out.rank_composite) >= out.required;
  out.composite = std::move(g);
  return out;
}

CompositeCheck bridge_bound_check(const GainGraph& h, const GainGraph& k, VertexId v1, VertexId vt,
                                  std::span<const ExactQuaternion> gains) {
  if (!h.has_vertex(v1)) throw GraphError("bridge: " + vname(v1) + " is not a vertex of H");
  if (!k.has_vertex(vt)) throw GraphError("bridge: " + vname(vt) + " is not a vertex of K");
  if (gains.empty()) throw GraphError("bridge: the joining path needs at least one edge");
  GainGraph g = disjoint_union(h, k);
  VertexId fresh = std::max(h.max_vertex(), k.max_vertex()) + 1;
  std::vector<VertexId> path{v1};
  for (std::size_t t = 0; t + 1 < gains.size(); ++t) path.push_back(fresh++);
  path.push_back(vt);
  for (std::size_t t = 0; t < gains.size(); ++t) g.add_edge(path[t], path[t + 1], gains[t]);

  const std::size_t t = path.size();
  CompositeCheck out;
  out.rank_composite = elimination_rank(g);
  out.required = as_signed(elimination_rank(h)) + as_signed(elimination_rank(k)) + as_signed(t) - 3;
  out.holds = as_signed(out.rank_composite) >= out.required;
  out.composite = std::move(g);
  return out;
}

}  // namespace qgg
