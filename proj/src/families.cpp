#include "qgain/families.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qgg {

namespace {

std::string vname(VertexId v) { return std::to_string(v); }

std::int64_t as_signed(std::size_t v) { return static_cast<std::int64_t>(v); }

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

// Path of `length` edges from `from`, fresh ids starting at next. Returns
// the far end.
VertexId grow_path(GainGraph& g, VertexId from, std::size_t length, VertexId& next,
                   const ExactQuaternion& last_gain = ExactQuaternion::identity()) {
  VertexId cur = from;
  for (std::size_t t = 0; t < length; ++t) {
    const VertexId v = next++;
    g.add_edge(cur, v, t + 1 == length ? last_gain : ExactQuaternion::identity());
    cur = v;
  }
  return cur;
}

}  // namespace

ExactQuaternion type1_target(std::size_t n) {
  require(n % 2 == 0 && n >= 4, "type1_target: Type 1 needs an even length >= 4");
  return ExactQuaternion((n / 2) % 2 == 0 ? 1 : -1);
}

ExactQuaternion type_target(std::size_t n, CycleType t, Rng& rng, GainMode mode) {
  require(n >= 3, "type_target: cycle length must be at least 3");
  const bool even = n % 2 == 0;
  switch (t) {
    case CycleType::Type1:
      return type1_target(n);
    case CycleType::Type2: {
      require(even, "type_target: Type 2 needs an even length");
      const ExactQuaternion s = type1_target(n);
      while (true) {
        const ExactQuaternion g = random_unit(rng, mode);
        if (g != s) return g;
      }
    }
    case CycleType::Type3: {
      require(!even, "type_target: Type 3 needs an odd length");
      while (true) {
        const ExactQuaternion g = random_unit(rng, mode);
        if (re(g) != 0) return g;
      }
    }
    case CycleType::Type4:
      require(!even, "type_target: Type 4 needs an odd length");
      return random_pure_unit(rng, mode);
  }
  throw std::invalid_argument("type_target: unknown type");
}

GainGraph make_cycle(std::span<const ExactQuaternion> free_gains, const ExactQuaternion& target) {
  const std::size_t n = free_gains.size() + 1;
  require(n >= 3, "make_cycle: a cycle needs at least 3 vertices");
  require(is_unit(target), "make_cycle: target gain must be a unit");
  GainGraph g;
  ExactQuaternion prefix = ExactQuaternion::identity();
  for (std::size_t t = 0; t + 1 < n; ++t) {
    g.add_edge(static_cast<VertexId>(t), static_cast<VertexId>(t + 1), free_gains[t]);
    prefix = prefix * free_gains[t];
  }
  g.add_edge(static_cast<VertexId>(n - 1), 0, conj(prefix) * target);
  return g;
}

GainGraph make_cycle(std::size_t n, CycleType t, Rng& rng, GainMode mode) {
  require(n >= 3, "make_cycle: a cycle needs at least 3 vertices");
  const ExactQuaternion target = type_target(n, t, rng, mode);
  std::vector<ExactQuaternion> free_gains(n - 1);
  for (auto& g : free_gains) g = random_unit(rng, mode);
  return make_cycle(free_gains, target);
}

GainGraph make_type1_cycle(std::size_t n, Rng& rng, GainMode mode) {
  require(n % 2 == 0 && n >= 4, "make_type1_cycle: n must be even and at least 4");
  return make_cycle(n, CycleType::Type1, rng, mode);
}

GainGraph make_path(std::size_t n, Rng& rng, GainMode mode) {
  require(n >= 1, "make_path: n must be positive");
  GainGraph g;
  g.add_vertex(0);
  for (VertexId t = 1; t < n; ++t) g.add_edge(t - 1, t, random_unit(rng, mode));
  return g;
}

GainGraph make_infinity(const InfinitySpec& spec) {
  require(spec.p >= 3 && spec.q >= 3, "make_infinity: cycle lengths must be at least 3");
  require(spec.l >= 1, "make_infinity: path order must be at least 1");
  require(spec.path_gains.empty() || spec.path_gains.size() == spec.l - 1,
          "make_infinity: path_gains must list l - 1 gains");
  require(is_unit(spec.gain_p) && is_unit(spec.gain_q), "make_infinity: cycle gains must be units");

  GainGraph g;
  VertexId next = 1;
  const VertexId v = 0;
  const VertexId last_p = grow_path(g, v, spec.p - 1, next);
  g.add_edge(last_p, v, spec.gain_p);

  VertexId u = v;
  for (std::size_t t = 0; t + 1 < spec.l; ++t) {
    const VertexId w = next++;
    g.add_edge(u, w, spec.path_gains.empty() ? ExactQuaternion::identity() : spec.path_gains[t]);
    u = w;
  }
  const VertexId last_q = grow_path(g, u, spec.q - 1, next);
  g.add_edge(last_q, u, spec.gain_q);
  return g;
}

GainGraph make_theta(const ThetaSpec& spec) {
  const int zeros = (spec.p == 0) + (spec.l == 0) + (spec.q == 0);
  require(zeros <= 1, "make_theta: at most one of p, l, q may be 0");
  require(is_unit(spec.gain_pl) && is_unit(spec.gain_pq), "make_theta: cycle gains must be units");
  GainGraph g;
  const VertexId a = 0;
  const VertexId b = 1;
  VertexId next = 2;
  g.add_vertex(a);
  g.add_vertex(b);
  // spanning tree: the p-path plus all but the last edge of the other two
  const VertexId end_p = grow_path(g, a, spec.p, next);
  g.add_edge(end_p, b, ExactQuaternion::identity());
  const VertexId end_l = grow_path(g, a, spec.l, next);
  g.add_edge(end_l, b, conj(spec.gain_pl));
  const VertexId end_q = grow_path(g, a, spec.q, next);
  g.add_edge(end_q, b, conj(spec.gain_pq));
  return g;
}

InfinitySpec infinity_type1(std::size_t p, std::size_t l, std::size_t q) {
  InfinitySpec spec;
  spec.p = p;
  spec.l = l;
  spec.q = q;
  spec.gain_p = type1_target(p);
  spec.gain_q = type1_target(q);
  return spec;
}

ThetaSpec theta_type1(std::size_t p, std::size_t l, std::size_t q) {
  ThetaSpec spec;
  spec.p = p;
  spec.l = l;
  spec.q = q;
  spec.gain_pl = type1_target(p + l + 2);
  spec.gain_pq = type1_target(p + q + 2);
  return spec;
}

GainGraph attach_cycle(const GainGraph& g, VertexId at, std::span<const ExactQuaternion> gains) {
  require(g.has_vertex(at), "attach_cycle: no vertex " + vname(at));
  require(gains.size() >= 3, "attach_cycle: a cycle needs at least 3 edges");
  GainGraph out = g;
  VertexId next = g.max_vertex() + 1;
  VertexId cur = at;
  for (std::size_t t = 0; t + 1 < gains.size(); ++t) {
    const VertexId v = next++;
    out.add_edge(cur, v, gains[t]);
    cur = v;
  }
  out.add_edge(cur, at, gains.back());
  return out;
}

GainGraph attach_cycle(const GainGraph& g, VertexId at, std::size_t length, const ExactQuaternion& cycle_gain) {
  require(length >= 3, "attach_cycle: a cycle needs at least 3 edges");
  std::vector<ExactQuaternion> gains(length, ExactQuaternion::identity());
  gains.back() = cycle_gain;
  return attach_cycle(g, at, gains);
}

GainGraph make_flower(const FlowerSpec& spec) {
  require(is_tree(spec.tree), "make_flower: base graph must be a tree");
  std::set<VertexId> used;
  for (const Attachment& a : spec.attachments) {
    require(spec.tree.has_vertex(a.leaf) && spec.tree.degree(a.leaf) == 1,
            "make_flower: vertex " + vname(a.leaf) + " is not a leaf of the tree");
    require(used.insert(a.leaf).second, "make_flower: two cycles at leaf " + vname(a.leaf));
    require(a.length >= 3, "make_flower: cycle length must be at least 3");
  }
  GainGraph g = spec.tree;
  for (const Attachment& a : spec.attachments) g = attach_cycle(g, a.leaf, a.length, a.cycle_gain);
  return g;
}

GainGraph make_spider(std::span<const std::size_t> legs) {
  GainGraph g;
  g.add_vertex(0);
  VertexId next = 1;
  for (std::size_t len : legs) {
    require(len >= 1, "make_spider: legs must have length at least 1");
    grow_path(g, 0, len, next);
  }
  return g;
}

GainGraph make_spider_tree(std::span<const std::size_t> legs, Rng& rng, GainMode mode) {
  require(legs.size() >= 3, "make_spider_tree: at least 3 legs are required");
  for (std::size_t len : legs) require(len % 2 == 1, "make_spider_tree: every leg length must be odd");
  const GainGraph shape = make_spider(legs);
  GainGraph g;
  for (const Edge& e : shape.edges()) g.add_edge(e.u, e.v, random_unit(rng, mode));
  return g;
}

GainGraph reference_tree() {
  const std::size_t legs[] = {1, 1, 3, 3};
  const GainGraph shape = make_spider(legs);
  const ExactQuaternion i = ExactQuaternion::i();
  const ExactQuaternion j = ExactQuaternion::j();
  const ExactQuaternion k = ExactQuaternion::k();
  const ExactQuaternion palette[] = {i, j, k, -i, -j, -k, ExactQuaternion(-1), i, j};
  GainGraph g;
  std::size_t t = 0;
  for (const Edge& e : shape.edges()) g.add_edge(e.u, e.v, palette[t++ % std::size(palette)]);
  return g;
}

namespace {

// leaves of the reference spider: 1, 2 end the short legs, 5, 8 the long ones
GainGraph reference_with(bool fourth, bool type2_variant) {
  const ExactQuaternion one = ExactQuaternion::identity();
  const ExactQuaternion i = ExactQuaternion::i();
  const ExactQuaternion j = ExactQuaternion::j();
  const ExactQuaternion k = ExactQuaternion::k();
  const std::vector<ExactQuaternion> c1 = type2_variant ? std::vector{i, j, -i, k} : std::vector{i, j, -i, j};
  const std::vector<ExactQuaternion> c2 = {-one, i, j, k};
  const std::vector<ExactQuaternion> c3 = {i, j, k, k, j, i};
  const std::vector<ExactQuaternion> c4 = {-i, j, k, i, j, k};
  GainGraph g = reference_tree();
  g = attach_cycle(g, 1, c1);
  g = attach_cycle(g, 2, c2);
  g = attach_cycle(g, 5, c3);
  if (fourth) g = attach_cycle(g, 8, c4);
  return g;
}

}  // namespace

GainGraph reference_flower() { return reference_with(true, false); }

GainGraph reference_flower_three(bool type2_variant) { return reference_with(false, type2_variant); }

namespace {

struct CycleBlock {
  std::vector<VertexId> sequence;  // starts at the attachment vertex
  CycleType type;
};

struct FlowerShape {
  bool ok = false;
  std::string why;
  GainGraph tree;
  std::vector<CycleBlock> cycles;
};

FlowerShape recognize_flower(const GainGraph& g) {
  FlowerShape out;
  std::vector<VertexId> drop;
  for (const Block& b : blocks(g)) {
    if (b.vertices.size() == 2) continue;
    if (b.edges != b.vertices.size()) {
      out.why = "a block carries more than one independent cycle";
      return out;
    }
    std::vector<VertexId> major;
    for (VertexId v : b.vertices)
      if (g.degree(v) > 2) major.push_back(v);
    if (major.size() != 1) {
      out.why = "a cycle meets the rest of the graph at " + std::to_string(major.size()) + " vertices";
      return out;
    }
    const VertexId u = major.front();
    if (g.degree(u) != 3) {
      out.why = "cycle attached at vertex " + vname(u) + " of degree " + std::to_string(g.degree(u)) +
                ", not at a leaf of the underlying tree";
      return out;
    }
    const GainGraph cyc = induced(g, b.vertices);
    std::vector<VertexId> seq = pendant_cycles(cyc).front();
    std::rotate(seq.begin(), std::find(seq.begin(), seq.end(), u), seq.end());
    const CycleType t = classify_cycle(seq.size(), cycle_gain(g, seq));
    for (VertexId v : seq)
      if (v != u) drop.push_back(v);
    out.cycles.push_back(CycleBlock{std::move(seq), t});
  }
  out.tree = delete_vertices(g, drop);
  if (!is_tree(out.tree)) {
    out.why = "shrinking the cycles does not leave a tree";
    return out;
  }
  out.ok = true;
  return out;
}

bool tree_extremal_by_rank(const GainGraph& tree) {
  const GraphStats s = stats(tree);
  return as_signed(2 * matching_number(tree)) == as_signed(s.n) - as_signed(s.p) + 1;
}

// Usual flower test shared by the leaf-free and pendant cases.
bool flower_rhs(const GainGraph& g, std::size_t c, bool leaf_free, std::string& why) {
  const FlowerShape shape = recognize_flower(g);
  if (!shape.ok) {
    why = shape.why;
    return false;
  }
  if (shape.cycles.size() != c) {
    why = "found " + std::to_string(shape.cycles.size()) + " pendant cycles for c = " + std::to_string(c);
    return false;
  }
  for (const CycleBlock& cb : shape.cycles) {
    if (cb.type != CycleType::Type1) {
      why = "cycle at vertex " + vname(cb.sequence.front()) + " is " + to_string(cb.type);
      return false;
    }
  }
  const std::size_t tree_leaves = stats(shape.tree).p;
  if (leaf_free ? tree_leaves != c : tree_leaves <= c) {
    why = "underlying tree has " + std::to_string(tree_leaves) + " leaves for " + std::to_string(c) + " cycles";
    return false;
  }
  if (!tree_extremal_by_rank(shape.tree)) {
    why = "underlying tree does not satisfy r(T) = |T| - p(T) + 1";
    return false;
  }
  why = "Type-1 flower over an extremal tree";
  return true;
}

std::string rank_note(std::size_t rank, std::int64_t target) {
  return "rank " + std::to_string(rank) + (as_signed(rank) == target ? " = " : " != ") + std::to_string(target);
}

void require_connected(const GainGraph& g, const char* who) {
  require(g.order() > 0 && is_connected(g), std::string(who) + ": graph must be connected");
}

}  // namespace

Verdict check_cycle_extremal(const GainGraph& g) {
  require_connected(g, "check_cycle_extremal");
  const GraphStats s = stats(g);
  require(s.n >= 2 && s.p == 0, "check_cycle_extremal: graph must be leaf-free with n >= 2");
  Verdict out;
  const std::size_t r = elimination_rank(g);
  const std::int64_t target = as_signed(s.n) - 2 * as_signed(s.c);
  out.lhs = as_signed(r) == target;
  std::string why;
  if (!is_cycle(g)) {
    why = "not a cycle";
  } else {
    const CycleType t = classify_cycle(s.n, cycle_gain(g, pendant_cycles(g).front()));
    out.rhs = t == CycleType::Type1;
    why = "cycle of " + to_string(t);
  }
  out.diagnostic = rank_note(r, target) + "; " + why;
  return out;
}

Verdict check_two_cycle_extremal(const GainGraph& g) {
  require_connected(g, "check_two_cycle_extremal");
  const GraphStats s = stats(g);
  require(s.p == 0 && s.c == 2, "check_two_cycle_extremal: graph must be leaf-free with c = 2");
  Verdict out;
  const std::size_t r = elimination_rank(g);
  const std::int64_t target = as_signed(s.n) - 3;
  out.lhs = as_signed(r) == target;

  std::vector<VertexId> odd;  // vertices of degree != 2
  for (VertexId v : g.vertices())
    if (g.degree(v) != 2) odd.push_back(v);

  bool all_type1 = true;
  for (const auto& cyc : simple_cycles(g))
    all_type1 = all_type1 && classify_cycle(cyc.size(), cycle_gain(g, cyc)) == CycleType::Type1;

  // walk from `from` through neighbour `first` along degree-2 vertices
  auto walk = [&](VertexId from, VertexId first) {
    std::size_t interior = 0;
    VertexId prev = from;
    VertexId cur = first;
    while (g.degree(cur) == 2) {
      ++interior;
      const auto& nb = g.neighbors(cur);
      const VertexId next = *nb.begin() == prev ? *nb.rbegin() : *nb.begin();
      prev = cur;
      cur = next;
    }
    return std::pair{cur, interior};
  };

  std::string shape;
  if (odd.size() == 1 && g.degree(odd[0]) == 4) {
    shape = "infinity graph with l = 1";
    out.rhs = all_type1;
  } else if (odd.size() == 2 && g.degree(odd[0]) == 3 && g.degree(odd[1]) == 3) {
    const VertexId a = odd[0];
    const VertexId b = odd[1];
    std::vector<std::size_t> to_b;
    for (VertexId y : g.neighbors(a)) {
      const auto [end, interior] = walk(a, y);
      if (end == b) to_b.push_back(interior);
    }
    if (to_b.size() == 3) {
      const bool odd_paths = std::all_of(to_b.begin(), to_b.end(), [](std::size_t x) { return x % 2 == 1; });
      std::sort(to_b.begin(), to_b.end());
      shape = "theta graph (" + std::to_string(to_b[0]) + "," + std::to_string(to_b[1]) + "," +
              std::to_string(to_b[2]) + ")";
      out.rhs = all_type1 && odd_paths;
    } else {
      const std::size_t l = to_b.front() + 2;
      shape = "infinity graph with l = " + std::to_string(l);
      out.rhs = all_type1 && l % 2 == 1;
    }
  } else {
    shape = "unrecognized shape";
  }
  out.diagnostic = rank_note(r, target) + "; " + shape + (all_type1 ? ", all cycles Type1" : ", some cycle not Type1");
  return out;
}

Verdict check_leaf_free_flower(const GainGraph& g) {
  require_connected(g, "check_leaf_free_flower");
  const GraphStats s = stats(g);
  require(s.p == 0 && s.c >= 3, "check_leaf_free_flower: graph must be leaf-free with c >= 3");
  Verdict out;
  const std::size_t r = elimination_rank(g);
  const std::int64_t target = as_signed(s.n) - 2 * as_signed(s.c) + 1;
  out.lhs = as_signed(r) == target;
  std::string why;
  out.rhs = flower_rhs(g, s.c, true, why);
  out.diagnostic = rank_note(r, target) + "; " + why;
  return out;
}

Verdict check_pendant_flower(const GainGraph& g) {
  require_connected(g, "check_pendant_flower");
  const GraphStats s = stats(g);
  require(s.p >= 1 && s.c >= 1, "check_pendant_flower: graph needs c >= 1 and p >= 1");
  Verdict out;
  const std::size_t r = elimination_rank(g);
  const std::int64_t target = as_signed(s.n) - 2 * as_signed(s.c) - as_signed(s.p) + 1;
  out.lhs = as_signed(r) == target;
  std::string why;
  out.rhs = flower_rhs(g, s.c, false, why);
  out.diagnostic = rank_note(r, target) + "; " + why;
  return out;
}

std::string tree_canonical_form(const GainGraph& tree) {
  require(is_tree(tree), "tree_canonical_form: graph is not a tree");
  // centres by repeated leaf stripping
  std::map<VertexId, std::size_t> deg;
  std::vector<VertexId> layer;
  for (VertexId v : tree.vertices()) {
    deg[v] = tree.degree(v);
    if (deg[v] <= 1) layer.push_back(v);
  }
  std::size_t remaining = tree.order();
  while (remaining > 2) {
    std::vector<VertexId> next;
    for (VertexId v : layer) {
      --remaining;
      for (VertexId y : tree.neighbors(v))
        if (--deg[y] == 1) next.push_back(y);
    }
    layer = std::move(next);
  }
  std::function<std::string(VertexId, VertexId, bool)> encode = [&](VertexId v, VertexId parent, bool root) {
    std::vector<std::string> kids;
    for (VertexId y : tree.neighbors(v))
      if (root || y != parent) kids.push_back(encode(y, v, false));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (const auto& k : kids) s += k;
    return s + ")";
  };
  std::string best;
  for (VertexId c : layer) {
    const std::string s = encode(c, c, true);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

namespace {

struct LegInfo {
  std::vector<VertexId> interior;  // leaf and degree-2 vertices, leaf first
  VertexId major;
  std::size_t length;  // edges
};

bool condition_rec(const GainGraph& t, bool exists, std::map<std::string, bool>& memo) {
  const GraphStats s = stats(t);
  if (s.p <= 2) return s.n % 2 == 1;  // a path is extremal iff its order is odd
  const std::string key = tree_canonical_form(t);
  if (const auto it = memo.find(key); it != memo.end()) return it->second;

  std::vector<LegInfo> legs;
  for (const auto& [leaf, nb] : pendant_structure(t)) {
    LegInfo leg{{leaf}, nb, 1};
    VertexId prev = leaf;
    while (t.degree(leg.major) == 2) {
      leg.interior.push_back(leg.major);
      const auto& ns = t.neighbors(leg.major);
      const VertexId next = *ns.begin() == prev ? *ns.rbegin() : *ns.begin();
      prev = leg.major;
      leg.major = next;
      ++leg.length;
    }
    legs.push_back(std::move(leg));
  }

  bool result = std::all_of(legs.begin(), legs.end(), [](const LegInfo& l) { return l.length % 2 == 1; });
  if (result) {
    auto second = [&](const LegInfo& leg) {
      const GainGraph t1 = delete_vertices(t, leg.interior);
      return condition_rec(t1, exists, memo) && is_covered_vertex(t1, leg.major);
    };
    result = exists ? std::any_of(legs.begin(), legs.end(), second) : std::all_of(legs.begin(), legs.end(), second);
  }
  memo.emplace(key, result);
  return result;
}

}  // namespace

bool tree_condition(const GainGraph& tree, bool exists) {
  require(is_tree(tree), "tree_condition: graph is not a tree");
  std::map<std::string, bool> memo;
  return condition_rec(tree, exists, memo);
}

TreeVerdict check_tree_extremal(const GainGraph& tree) {
  require(is_tree(tree), "check_tree_extremal: graph is not a tree");
  const GraphStats s = stats(tree);
  require(s.p >= 3, "check_tree_extremal: tree needs at least 3 leaves");
  TreeVerdict out;
  const std::size_t r = 2 * matching_number(tree);
  const std::int64_t target = as_signed(s.n) - as_signed(s.p) + 1;
  out.lhs = as_signed(r) == target;
  out.rhs_all = tree_condition(tree, false);
  out.rhs_exists = tree_condition(tree, true);
  std::ostringstream d;
  d << rank_note(r, target) << "; condition (all legs) " << (out.rhs_all ? "holds" : "fails")
    << ", condition (some leg) " << (out.rhs_exists ? "holds" : "fails");
  out.diagnostic = d.str();
  return out;
}

std::vector<GainGraph> all_unlabeled_trees(std::size_t n) {
  require(n >= 1, "all_unlabeled_trees: n must be positive");
  std::vector<GainGraph> level(1);
  level[0].add_vertex(0);
  for (std::size_t size = 2; size <= n; ++size) {
    std::map<std::string, GainGraph> next;
    for (const GainGraph& t : level) {
      for (VertexId v : t.vertices()) {
        GainGraph grown = t;
        grown.add_edge(v, static_cast<VertexId>(size - 1), ExactQuaternion::identity());
        next.try_emplace(tree_canonical_form(grown), std::move(grown));
      }
    }
    level.clear();
    for (auto& [_, t] : next) level.push_back(std::move(t));
  }
  return level;
}

}  // namespace qgg
