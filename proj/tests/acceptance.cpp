#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "json.hpp"
#include "qgain/families.hpp"
#include "qgain/graph_io.hpp"
#include "qgain/harness.hpp"
#include "qgain/matching.hpp"
#include "qgain/rank_engine.hpp"
#include "qgain/sampling.hpp"

using namespace qgg;
namespace fs = std::filesystem;

namespace {

struct Result {
  bool pass = true;
  std::ostringstream note;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) note << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t).count();
}

std::int64_t as_signed(std::size_t x) { return static_cast<std::int64_t>(x); }

fs::path data(const std::string& name) { return fs::path(QGAIN_DATA_DIR) / name; }

CycleType type_for(std::size_t n, bool first) {
  if (n % 2 == 0) return first ? CycleType::Type1 : CycleType::Type2;
  return first ? CycleType::Type3 : CycleType::Type4;
}

// Connected random graph on 3..max_n vertices with a random feasible cell.
GainGraph random_connected(Rng& rng, std::size_t max_n, std::size_t max_c, GainMode mode = GainMode::Cayley) {
  const auto n = static_cast<std::size_t>(rng.uniform(3, as_signed(max_n)));
  const std::size_t cap = std::min(max_c, n * (n - 1) / 2 - (n - 1));
  const auto c = static_cast<std::size_t>(rng.uniform(0, as_signed(cap)));
  const auto p = static_cast<std::size_t>(rng.uniform(0, 3));
  return random_graph(n, c, p, rng, mode).graph;
}

void criterion1(Result& res) {
  const GainGraph g = load_graph(data("quad_cycle.json"));
  const auto t = Clock::now();
  const ExactMatrix a = adjacency_matrix(g);
  const std::size_t r = row_left_rank(a);
  const std::size_t adj = complex_rank(complex_adjoint(a));
  const double ms = ms_since(t);
  const GraphStats s = stats(g);
  res.require(r == 2, "row left rank " + std::to_string(r));
  res.require(adj == 4, "complex adjoint rank " + std::to_string(adj));
  res.require(as_signed(r) == as_signed(s.n) - 2 * as_signed(s.c), "rank differs from n - 2c");
  res.require(ms < 1.0, "runtime " + std::to_string(ms) + " ms");
  res.note << "rank " << r << ", adjoint " << adj << "/2, " << ms << " ms";
}

void criterion2(Result& res) {
  const FloatGraph g1 = load_float_graph(data("mixed_float.json"));
  const FloatMatrix g2 = to_float(adjacency_matrix(load_graph(data("theta_113.json"))));
  const auto t = Clock::now();
  const std::size_t r1 = row_left_rank_float(g1.adjacency, 1e-9);
  const std::size_t r2 = row_left_rank_float(g2, 1e-9);
  const double ms = ms_since(t);
  res.require(g1.vertices.size() == 9 && g2.rows() == 7, "fixture orders");
  res.require(r1 == 6, "nine-vertex rank " + std::to_string(r1));
  res.require(r2 == 4, "seven-vertex rank " + std::to_string(r2));
  res.require(ms < 10.0, "runtime " + std::to_string(ms) + " ms");
  res.note << "ranks " << r1 << " and " << r2 << ", " << ms << " ms";
}

void criterion3(Result& res) {
  const GainGraph tree = reference_tree();
  const GainGraph four = reference_flower();
  const GainGraph three = reference_flower_three(false);
  const GainGraph variant = reference_flower_three(true);
  const std::size_t rt = elimination_rank(tree);
  res.require(rt == 6, "base tree rank " + std::to_string(rt));

  auto types = [](const GainGraph& g) {
    std::multiset<CycleType> out;
    for (const auto& cyc : simple_cycles(g)) out.insert(classify_cycle(cyc.size(), cycle_gain(g, cyc)));
    return out;
  };
  auto lengths = [](const GainGraph& g) {
    std::multiset<std::size_t> out;
    for (const auto& cyc : simple_cycles(g)) out.insert(cyc.size());
    return out;
  };
  res.require(lengths(four) == std::multiset<std::size_t>{4, 4, 6, 6}, "four-cycle flower lengths");
  res.require(types(four) == std::multiset<CycleType>{CycleType::Type1, CycleType::Type1, CycleType::Type1, CycleType::Type1}, "four-cycle flower types");
  res.require(lengths(three) == std::multiset<std::size_t>{4, 4, 6}, "three-cycle flower lengths");
  res.require(types(three) == std::multiset<CycleType>{CycleType::Type1, CycleType::Type1, CycleType::Type1}, "three-cycle flower types");
  res.require(types(variant) == std::multiset<CycleType>{CycleType::Type1, CycleType::Type1, CycleType::Type2},
              "variant types");

  const std::size_t r4 = elimination_rank(four);
  const std::size_t r3 = elimination_rank(three);
  const std::size_t rv = elimination_rank(variant);
  res.require(r4 == 18, "four-cycle flower rank " + std::to_string(r4));
  res.require(r3 == 14, "three-cycle flower rank " + std::to_string(r3));
  res.require(rv == 16, "variant rank " + std::to_string(rv));
  res.note << "ranks " << r4 << ", " << r3 << ", " << rv << " over a base tree of rank " << rt;
}

void criterion4(Result& res) {
  const auto t = Clock::now();
  std::size_t checks = 0;
  std::map<CycleType, std::size_t> per_type;
  for (std::size_t n = 1; n <= 12; ++n) {
    for (std::size_t s = 0; s < 20; ++s) {
      Rng rng = Rng::for_sample(4, n * 1000 + s);
      const GainMode mode = s % 2 == 0 ? GainMode::Cayley : GainMode::Lipschitz;
      const GainGraph path = make_path(n, rng, mode);
      res.require(rank_path(n) == elimination_rank(path), "path " + std::to_string(n));
      ++checks;
      if (n < 3) continue;
      for (bool first : {true, false}) {
        const CycleType type = type_for(n, first);
        const GainGraph cyc = make_cycle(n, type, rng, mode);
        std::vector<VertexId> seq(n);
        for (std::size_t v = 0; v < n; ++v) seq[v] = static_cast<VertexId>(v);
        res.require(classify_cycle(n, cycle_gain(cyc, seq)) == type, "type forcing at n = " + std::to_string(n));
        res.require(rank_cycle(n, type) == elimination_rank(cyc),
                    "cycle " + std::to_string(n) + " " + to_string(type));
        ++per_type[type];
        ++checks;
      }
    }
  }
  const double ms = ms_since(t);
  for (CycleType type : {CycleType::Type1, CycleType::Type2, CycleType::Type3, CycleType::Type4})
    res.require(per_type[type] >= 20, to_string(type) + " underrepresented");
  res.require(ms < 5000.0, "runtime " + std::to_string(ms) + " ms");
  res.note << checks << " closed-form checks, " << ms << " ms";
}

void criterion5(Result& res) {
  const auto t = Clock::now();
  const std::size_t count = 1000;
  std::size_t big = 0;
  for (std::size_t s = 0; s < count; ++s) {
    Rng rng = Rng::for_sample(5, s);
    const GainGraph g = random_connected(rng, 12, 6);
    const ExactMatrix a = adjacency_matrix(g);
    const std::size_t left = row_left_rank(a);
    const std::size_t right = column_right_rank(a);
    const std::size_t adj = complex_rank(complex_adjoint(a));
    res.require(adj == 2 * left, "adjoint route at sample " + std::to_string(s));
    res.require(right == left, "column route at sample " + std::to_string(s));
    big += g.order() >= 10 ? 1 : 0;
  }
  const double ms = ms_since(t);
  res.require(ms < 60000.0, "runtime " + std::to_string(ms) + " ms");
  res.note << count << " graphs (" << big << " with n >= 10), " << ms << " ms";
}

void criterion6(Result& res) {
  std::map<BoundCase, std::size_t> cases;
  std::size_t vertex_checks = 0, edge_checks = 0, count_checks = 0;
  const std::size_t count = 1200;
  for (std::size_t s = 0; s < count; ++s) {
    Rng rng = Rng::for_sample(6, s);
    const auto n = static_cast<std::size_t>(rng.uniform(3, 10));
    const std::size_t cap = std::min<std::size_t>(4, n * (n - 1) / 2 - (n - 1));
    const auto c = static_cast<std::size_t>(rng.uniform(s % 3 == 0 ? 0 : 1, as_signed(cap)));
    const std::size_t p = s % 3 == 0 ? static_cast<std::size_t>(rng.uniform(1, 3)) : 0;
    const GainGraph g = random_graph(n, c, p, rng, GainMode::Cayley).graph;
    if (stats(g).c == 0 && stats(g).p == 0) continue;
    const std::size_t r = elimination_rank(g);
    const Bound b = lower_bound(g);
    ++cases[b.kind];
    res.require(as_signed(r) >= b.value, "bound at sample " + std::to_string(s));

    const GraphStats st = stats(g);
    for (VertexId v : g.vertices()) {
      const std::size_t rv = elimination_rank(delete_vertex(g, v));
      res.require(rv <= r && r <= rv + 2, "vertex deletion at sample " + std::to_string(s));
      ++vertex_checks;
      const VertexCounts k = vertex_removal_counts(g, v);
      res.require(k.d + k.r >= k.m + k.s, "d + r >= m + s at sample " + std::to_string(s));
      if (lies_on_cycle(g, v))
        res.require(2 * k.d + k.r >= k.m + 2 * k.s + 1, "cycle-vertex count at sample " + std::to_string(s));
      res.require(as_signed(stats(delete_vertex(g, v)).c) == as_signed(st.c) - as_signed(k.d) + as_signed(k.s),
                  "cyclomatic identity at sample " + std::to_string(s));
      ++count_checks;
    }
    for (const Edge& e : g.edges()) {
      res.require(r + 2 >= elimination_rank(delete_edge(g, e.u, e.v)), "edge deletion at sample " + std::to_string(s));
      ++edge_checks;
    }
  }
  std::size_t graphs = 0;
  for (const auto& [kind, k] : cases) {
    graphs += k;
    res.require(k >= 100, to_string(kind) + " has only " + std::to_string(k) + " graphs");
  }
  res.require(cases.size() == 3, "not every bound case sampled");
  res.require(graphs >= 1000, "only " + std::to_string(graphs) + " graphs");
  res.note << graphs << " graphs (";
  const char* sep = "";
  for (const auto& [kind, k] : cases) {
    res.note << sep << to_string(kind) << " " << k;
    sep = ", ";
  }
  res.note << "), " << vertex_checks << " vertex deletions, " << edge_checks << " edge deletions, " << count_checks
           << " counting checks";
}

void criterion7(Result& res) {
  const std::size_t target = 200;
  std::map<std::string, std::size_t> done;

  for (std::size_t s = 0; done["pendant"] < target; ++s) {
    Rng rng = Rng::for_sample(71, s);
    const GainGraph g = random_connected(rng, 10, 3);
    const auto leaves = pendant_structure(g);
    if (leaves.empty()) continue;
    const auto [x, y] = leaves[rng.below(leaves.size())];
    const VertexId both[] = {x, y};
    const std::size_t expected = elimination_rank(delete_vertices(g, both)) + 2;
    const PendantReduction red = reduce_pendant(g, x);
    res.require(elimination_rank(g) == expected, "pendant identity at sample " + std::to_string(s));
    res.require(red.neighbor == y && elimination_rank(red.graph) + red.increment == expected, "pendant reduction");
    ++done["pendant"];
  }

  for (std::size_t s = 0; done["cycle Type1"] < target || done["cycle Type2"] < target ||
                          done["cycle Type4"] < target || done["cycle Type3"] < target;
       ++s) {
    Rng rng = Rng::for_sample(72, s);
    const GainGraph base = random_connected(rng, 7, 2);
    const auto len = static_cast<std::size_t>(rng.uniform(3, 8));
    const CycleType type = type_for(len, rng.coin());
    const VertexId at = base.vertices()[rng.below(base.order())];
    GainGraph g = attach_cycle(base, at, len, type_target(len, type, rng, GainMode::Cayley));
    g = apply_switching(g, random_switching(g, rng, GainMode::Cayley));
    std::vector<VertexId> cyc{at};
    for (VertexId v = base.max_vertex() + 1; v <= g.max_vertex(); ++v) cyc.push_back(v);
    const PendantCycleReduction red = reduce_pendant_cycle(g, cyc);
    res.require(red.type == type, "pendant cycle type");
    const std::size_t r = elimination_rank(g);
    const std::size_t lo = red.lower_offset + elimination_rank(red.lower_operand);
    const std::size_t hi = red.upper_offset + elimination_rank(red.upper_operand);
    if (type == CycleType::Type3) {
      res.require(lo <= r && r <= hi, "Type3 interval at sample " + std::to_string(s));
    } else {
      res.require(red.exact() && lo == r && hi == r, to_string(type) + " pendant cycle at sample " + std::to_string(s));
    }
    ++done["cycle " + to_string(type)];
  }

  for (std::size_t s = 0; done["p6"] < target; ++s) {
    Rng rng = Rng::for_sample(73, s);
    GainGraph g = random_connected(rng, 8, 3);
    const VertexId v1 = g.vertices()[rng.below(g.order())];
    VertexId v6 = g.max_vertex() + 5;
    std::vector<VertexId> far;
    for (VertexId v : g.vertices())
      if (v != v1 && !g.has_edge(v, v1)) far.push_back(v);
    if (!far.empty() && rng.coin()) v6 = far[rng.below(far.size())];
    std::vector<VertexId> path{v1};
    for (VertexId k = 1; k <= 4; ++k) path.push_back(g.max_vertex() + k);
    path.push_back(v6);
    GainGraph h = g;
    for (std::size_t k = 0; k + 1 < path.size(); ++k) h.add_edge(path[k], path[k + 1], random_unit(rng, GainMode::Cayley));
    bool interior_ok = true;
    for (std::size_t k = 1; k <= 4; ++k) interior_ok = interior_ok && h.degree(path[k]) == 2;
    if (!interior_ok) continue;
    const P6Contraction con = contract_p6(h, path);
    res.require(elimination_rank(h) == elimination_rank(con.graph) + 4, "P6 contraction at sample " + std::to_string(s));
    ++done["p6"];
  }

  for (std::size_t s = 0; done["components"] < target; ++s) {
    Rng rng = Rng::for_sample(74, s);
    const std::size_t parts = 2 + rng.below(2);
    GainGraph g;
    std::size_t sum = 0;
    for (std::size_t k = 0; k < parts; ++k) {
      const GainGraph piece = relabel_shift(random_connected(rng, 6, 2), static_cast<VertexId>(100 * k));
      sum += elimination_rank(piece);
      g = disjoint_union(g, piece);
    }
    res.require(elimination_rank(g) == sum, "component sum at sample " + std::to_string(s));
    const RankResult sr = structural_rank(g);
    res.require(sr.contains(sum), "structural rank on a union");
    ++done["components"];
  }

  for (std::size_t s = 0; done["trees"] < target; ++s) {
    Rng rng = Rng::for_sample(75, s);
    const GainGraph tree = random_tree(static_cast<std::size_t>(rng.uniform(1, 12)), rng, GainMode::Cayley);
    GainGraph plain;
    for (VertexId v : tree.vertices()) plain.add_vertex(v);
    for (const Edge& e : tree.edges()) plain.add_edge(e.u, e.v, ExactQuaternion::identity());
    const std::size_t r = elimination_rank(tree);
    res.require(r == elimination_rank(plain), "tree rank depends on gains at sample " + std::to_string(s));
    res.require(r == 2 * matching_number(tree), "tree rank is not twice the matching at sample " + std::to_string(s));
    ++done["trees"];
  }

  for (std::size_t s = 0; done["coalescence"] < target || done["bridge"] < target; ++s) {
    Rng rng = Rng::for_sample(76, s);
    const GainGraph h = random_connected(rng, 6, 2);
    const GainGraph k = relabel_shift(random_connected(rng, 6, 2), 100);
    const VertexId v = h.vertices()[rng.below(h.order())];
    const VertexId u = k.vertices()[rng.below(k.order())];
    const CompositeCheck co = coalescence_bound_check(h, k, v, u);
    const std::int64_t need_co =
        as_signed(elimination_rank(k)) + as_signed(elimination_rank(delete_vertex(h, v))) - 1;
    res.require(co.composite.order() == h.order() + k.order() - 1, "coalescence order");
    res.require(as_signed(elimination_rank(co.composite)) >= need_co, "coalescence bound at sample " + std::to_string(s));
    res.require(co.holds && co.required == need_co, "coalescence bookkeeping");
    ++done["coalescence"];

    const auto t = static_cast<std::size_t>(rng.uniform(2, 6));
    std::vector<ExactQuaternion> gains(t - 1);
    for (auto& q : gains) q = random_unit(rng, GainMode::Cayley);
    const CompositeCheck br = bridge_bound_check(h, k, v, u, gains);
    const std::int64_t need_br = as_signed(elimination_rank(h)) + as_signed(elimination_rank(k)) + as_signed(t) - 3;
    res.require(br.composite.order() == h.order() + k.order() + t - 2, "bridge order");
    res.require(as_signed(elimination_rank(br.composite)) >= need_br, "bridge bound at sample " + std::to_string(s));
    res.require(br.holds && br.required == need_br, "bridge bookkeeping");
    ++done["bridge"];
  }

  const char* sep = "";
  for (const auto& [name, k] : done) {
    res.require(k >= target, name + " short");
    res.note << sep << name << " " << k;
    sep = ", ";
  }
}

void criterion8(Result& res) {
  RunConfig cfg;
  cfg.seed = 8;
  const VerificationReport report = run_verify_extremal(cfg);
  std::map<std::string, std::pair<std::size_t, std::size_t>> tally;  // positives, near-misses
  for (const SampleRecord& rec : report.records) {
    res.require(rec.violations.empty(), rec.label + ": " + (rec.violations.empty() ? "" : rec.violations.front()));
    for (const TheoremOutcome& t : rec.theorems) {
      const bool sides_agree = t.lhs == t.rhs && (!t.rhs_exists || *t.rhs_exists == t.lhs);
      res.require(sides_agree, rec.label + " sides disagree");
      if (rec.expected_positive) {
        res.require(t.lhs == *rec.expected_positive, rec.label + " misjudged");
        auto& slot = tally[t.theorem];
        (*rec.expected_positive ? slot.first : slot.second) += 1;
      }
    }
  }
  for (const char* name : {"cycle", "two-cycle", "leaf-free-flower", "pendant-flower", "tree"}) {
    res.require(tally[name].first > 0 && tally[name].second > 0, std::string(name) + " lacks positives or near-misses");
  }
  std::size_t major_misses = 0;
  for (const SampleRecord& rec : report.records)
    major_misses += rec.label.find("major vertex") != std::string::npos ? 1 : 0;
  res.require(major_misses > 0, "no attachment-at-major-vertex near-misses");

  std::size_t trees = 0, extremal = 0;
  for (std::size_t n = 4; n <= 9; ++n) {
    for (const GainGraph& t : all_unlabeled_trees(n)) {
      const GraphStats s = stats(t);
      if (s.p < 3) continue;
      const bool truth = as_signed(2 * matching_number(t)) == as_signed(s.n) - as_signed(s.p) + 1;
      const TreeVerdict v = check_tree_extremal(t);
      res.require(v.lhs == truth && v.rhs_all == truth && v.rhs_exists == truth,
                  "tree " + tree_canonical_form(t) + ": " + v.diagnostic);
      ++trees;
      extremal += truth ? 1 : 0;
    }
  }
  res.note << report.records.size() << " family instances (";
  const char* sep = "";
  for (const auto& [name, pn] : tally) {
    res.note << sep << name << " +" << pn.first << "/-" << pn.second;
    sep = ", ";
  }
  res.note << "), " << trees << " trees with n <= 9 and p >= 3, " << extremal << " extremal";
}

void criterion9(Result& res) {
  const fs::path dir = fs::temp_directory_path() / "qgain_acceptance";
  fs::create_directories(dir);
  std::vector<nlohmann::json> runs;
  for (int k = 0; k < 2; ++k) {
    const fs::path out = dir / ("run" + std::to_string(k) + ".json");
    std::ostringstream sink, err;
    const int code = cli::run({"verify-bounds", "--seed", "42", "--samples", "300", "--max-n", "10", "-o", out.string()},
                              sink, err);
    res.require(code == cli::kOk, "exit code " + std::to_string(code) + " " + err.str());
    runs.push_back(nlohmann::json::parse(read_text(out)));
  }
  const std::string a = runs[0].at("records").dump();
  const std::string b = runs[1].at("records").dump();
  res.require(runs[0].at("records").size() == 300, "record count");
  res.require(a == b, "record sections differ");
  res.note << "two runs of " << runs[0].at("records").size() << " records, " << a.size() << " bytes each, "
           << (a == b ? "identical" : "different");
}

}  // namespace

int main() {
  const std::vector<std::pair<int, std::function<void(Result&)>>> criteria = {
      {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4}, {5, criterion5},
      {6, criterion6}, {7, criterion7}, {8, criterion8}, {9, criterion9},
  };
  bool all = true;
  for (const auto& [id, run] : criteria) {
    Result res;
    const auto t = Clock::now();
    try {
      run(res);
    } catch (const std::exception& e) {
      res.pass = false;
      res.note << "exception: " << e.what();
    }
    all = all && res.pass;
    std::cout << (res.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << res.note.str() << " [" << ms_since(t)
              << " ms]" << std::endl;
  }
  return all ? 0 : 1;
}
