#include "qgain/sampling.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace qgg {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng Rng::for_sample(std::uint64_t seed, std::uint64_t index) {
  return Rng(splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL)));
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
  // reject the top partial bucket
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % bound;
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("Rng::uniform: empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(below(span));
}

std::string to_string(GainMode mode) { return mode == GainMode::Cayley ? "cayley" : "lipschitz"; }

GainMode parse_gain_mode(const std::string& text) {
  if (text == "cayley") return GainMode::Cayley;
  if (text == "lipschitz") return GainMode::Lipschitz;
  throw std::invalid_argument("unknown gain mode '" + text + "' (expected cayley or lipschitz)");
}

ExactQuaternion random_cayley_unit(Rng& rng, int bound) {
  auto component = [&] {
    Rational r(static_cast<long>(rng.uniform(-bound, bound)), static_cast<long>(rng.uniform(1, bound)));
    r.canonicalize();
    return r;
  };
  const Rational x = component();
  const Rational y = component();
  const Rational z = component();
  return cayley_unit(ExactQuaternion(0, x, y, z));
}

ExactQuaternion random_lipschitz_unit(Rng& rng) {
  const auto& units = lipschitz_units();
  return units[rng.below(units.size())];
}

ExactQuaternion random_unit(Rng& rng, GainMode mode) {
  return mode == GainMode::Cayley ? random_cayley_unit(rng) : random_lipschitz_unit(rng);
}

ExactQuaternion random_pure_unit(Rng& rng, GainMode mode) {
  if (mode == GainMode::Lipschitz) {
    const auto& units = lipschitz_units();
    return units[2 + rng.below(6)];  // +-i, +-j, +-k
  }
  const ExactQuaternion u = random_cayley_unit(rng);
  return u * ExactQuaternion::i() * conj(u);
}

namespace {

void shuffle(std::vector<VertexId>& v, Rng& rng) {
  for (std::size_t t = v.size(); t > 1; --t) std::swap(v[t - 1], v[rng.below(t)]);
}

// Without a mode every edge gets gain 1.
GainGraph decode_pruefer(std::size_t n, const std::vector<VertexId>& code, Rng& rng, std::optional<GainMode> mode) {
  auto gain = [&] { return mode ? random_unit(rng, *mode) : ExactQuaternion::identity(); };
  std::vector<std::size_t> degree(n, 1);
  for (VertexId x : code) ++degree[x];
  GainGraph g;
  for (VertexId v = 0; v < n; ++v) g.add_vertex(v);
  for (VertexId x : code) {
    VertexId leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    g.add_edge(leaf, x, gain());
    --degree[leaf];
    --degree[x];
  }
  std::vector<VertexId> rest;
  for (VertexId v = 0; v < n; ++v)
    if (degree[v] == 1) rest.push_back(v);
  g.add_edge(rest[0], rest[1], gain());
  return g;
}

GainGraph tiny_tree(std::size_t n, Rng& rng, std::optional<GainMode> mode) {
  GainGraph g;
  g.add_vertex(0);
  if (n == 2) g.add_edge(0, 1, mode ? random_unit(rng, *mode) : ExactQuaternion::identity());
  return g;
}

}  // namespace

GainGraph random_tree(std::size_t n, Rng& rng, GainMode mode) {
  if (n == 0) throw std::invalid_argument("random_tree: n must be positive");
  if (n <= 2) return tiny_tree(n, rng, mode);
  std::vector<VertexId> code(n - 2);
  for (VertexId& x : code) x = static_cast<VertexId>(rng.below(n));
  return decode_pruefer(n, code, rng, mode);
}

namespace {

GainGraph tree_with_leaves(std::size_t n, std::size_t leaves, Rng& rng, std::optional<GainMode> mode) {
  if (n == 0) throw std::invalid_argument("random_tree_with_leaves: n must be positive");
  if (n <= 2) {
    if (leaves != (n == 1 ? 0u : 2u)) throw std::invalid_argument("random_tree_with_leaves: impossible leaf count");
    return tiny_tree(n, rng, mode);
  }
  if (leaves < 2 || leaves > n - 1) throw std::invalid_argument("random_tree_with_leaves: impossible leaf count");
  // vertices absent from the code are exactly the leaves
  std::vector<VertexId> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  shuffle(ids, rng);
  const std::size_t inner = n - leaves;
  std::vector<VertexId> code(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(inner));
  while (code.size() < n - 2) code.push_back(ids[rng.below(inner)]);
  shuffle(code, rng);
  return decode_pruefer(n, code, rng, mode);
}

GainGraph with_random_gains(const GainGraph& shape, Rng& rng, GainMode mode) {
  GainGraph g;
  for (VertexId v : shape.vertices()) g.add_vertex(v);
  for (const Edge& e : shape.edges()) g.add_edge(e.u, e.v, random_unit(rng, mode));
  return g;
}

// Connected, n vertices, cyclomatic number c, exactly p leaves.
bool cell_feasible(std::size_t n, std::size_t c, std::size_t p) {
  if (n <= 2) return c == 0 && p == (n == 1 ? 0 : 2);
  if (c == 0) return p >= 2 && p <= n - 1;
  if (p + 3 > n) return false;
  const std::size_t core = n - p;
  return core - 1 + c <= core * (core - 1) / 2;
}

}  // namespace

GainGraph random_tree_with_leaves(std::size_t n, std::size_t leaves, Rng& rng, GainMode mode) {
  return tree_with_leaves(n, leaves, rng, mode);
}

SampledGraph random_graph(std::size_t n, std::size_t c, std::size_t p, Rng& rng, GainMode mode, std::size_t budget) {
  if (n == 0) throw std::invalid_argument("random_graph: n must be positive");
  if (n - 1 + c > n * (n - 1) / 2) {
    throw std::invalid_argument("random_graph: no simple graph on " + std::to_string(n) +
                                " vertices has cyclomatic number " + std::to_string(c));
  }
  if (n <= 2) {
    const GainGraph g = tiny_tree(n, rng, mode);
    return SampledGraph{g, stats(g).p != p};
  }
  if (budget == 0 || !cell_feasible(n, c, p)) budget = 1;

  std::size_t lo = std::max<std::size_t>(2, p);
  std::size_t hi = std::min(n - 1, p + 2 * c);
  if (lo > hi) {
    lo = 2;
    hi = n - 1;
  }

  SampledGraph best;
  std::size_t best_gap = std::numeric_limits<std::size_t>::max();
  for (std::size_t attempt = 0; attempt < budget; ++attempt) {
    const auto leaves = static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi)));
    GainGraph g = tree_with_leaves(n, leaves, rng, std::nullopt);
    std::int64_t reduce = static_cast<std::int64_t>(leaves) - static_cast<std::int64_t>(p);
    bool stuck = false;
    for (std::size_t left = c; left > 0 && !stuck; --left) {
      // each extra edge turns 0, 1 or 2 of its endpoints from leaves into inner vertices
      std::vector<int> options;
      for (int r = 0; r <= 2; ++r)
        if (r <= std::max<std::int64_t>(reduce, 0) && reduce - r <= 2 * static_cast<std::int64_t>(left - 1))
          options.push_back(r);
      int want = options.empty() ? 2 : options[rng.below(options.size())];

      std::vector<std::pair<VertexId, VertexId>> exact_fit;
      std::vector<std::pair<VertexId, VertexId>> any;
      for (VertexId a = 0; a < n; ++a) {
        for (VertexId b = a + 1; b < n; ++b) {
          if (g.has_edge(a, b)) continue;
          any.emplace_back(a, b);
          const int r = (g.degree(a) == 1) + (g.degree(b) == 1);
          if (r == want) exact_fit.emplace_back(a, b);
        }
      }
      if (any.empty()) {
        stuck = true;
        break;
      }
      const auto& pool = exact_fit.empty() ? any : exact_fit;
      const auto [a, b] = pool[rng.below(pool.size())];
      reduce -= (g.degree(a) == 1) + (g.degree(b) == 1);
      g.add_edge(a, b, ExactQuaternion::identity());
    }
    if (stuck) continue;
    const std::size_t got = stats(g).p;
    const std::size_t gap = got > p ? got - p : p - got;
    if (gap == 0) return SampledGraph{with_random_gains(g, rng, mode), false};
    if (gap < best_gap) {
      best_gap = gap;
      best = SampledGraph{std::move(g), true};
    }
  }
  best.graph = with_random_gains(best.graph, rng, mode);
  return best;
}

SwitchingFunction random_switching(const GainGraph& g, Rng& rng, GainMode mode) {
  SwitchingFunction theta;
  for (VertexId v : g.vertices()) theta[v] = random_unit(rng, mode);
  return theta;
}

}  // namespace qgg
