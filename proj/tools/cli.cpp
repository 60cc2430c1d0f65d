#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "qgain/families.hpp"
#include "qgain/graph_io.hpp"
#include "qgain/harness.hpp"
#include "qgain/rank_engine.hpp"

namespace qgg::cli {

namespace {

std::vector<std::size_t> parse_counts(const std::string& text, const std::string& what) {
  std::vector<std::size_t> out;
  std::stringstream all(text);
  std::string item;
  while (std::getline(all, item, ',')) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != item.size() || item.front() == '-')
      throw std::invalid_argument(what + ": '" + item + "' is not a non-negative integer");
    out.push_back(static_cast<std::size_t>(v));
  }
  if (out.empty()) throw std::invalid_argument(what + ": empty list");
  return out;
}

CycleType parse_type(std::size_t t) {
  if (t < 1 || t > 4) throw std::invalid_argument("cycle type must be 1, 2, 3 or 4");
  return static_cast<CycleType>(t);
}

void print_cycles(const GainGraph& g, std::ostream& out) {
  const GraphStats s = stats(g);
  if (s.c > 12) {
    out << "cycles: not listed (cyclomatic number " << s.c << " > 12)\n";
    return;
  }
  const auto cycles = simple_cycles(g);
  out << "cycles: " << cycles.size() << "\n";
  for (const auto& cyc : cycles) {
    const ExactQuaternion phi = cycle_gain(g, cyc);
    out << "  [";
    for (std::size_t t = 0; t < cyc.size(); ++t) out << (t ? " " : "") << cyc[t];
    out << "] length " << cyc.size() << " gain " << to_token(phi) << " " << to_string(classify_cycle(cyc.size(), phi))
        << "\n";
  }
}

std::string bound_formula(BoundCase c) {
  switch (c) {
    case BoundCase::HasPendant: return "n-2c-p+1";
    case BoundCase::LeafFreeCycleDisjoint: return "n-2c";
    case BoundCase::LeafFreeSharedCycles: return "n-2c+1";
  }
  return "?";
}

void print_bound(const GainGraph& g, std::size_t rank, std::ostream& out) {
  for (VertexId v : g.vertices()) {
    if (g.degree(v) == 0) {
      out << "bound: not applicable (isolated vertex " << v << ")\n";
      return;
    }
  }
  if (g.order() == 0) {
    out << "bound: not applicable (empty graph)\n";
    return;
  }
  const Bound b = lower_bound(g);
  out << "bound: " << to_string(b.kind) << " " << bound_formula(b.kind) << " = " << b.value << " ("
      << (static_cast<std::int64_t>(rank) == b.value ? "tight" : "not tight") << ")\n";
}

void print_stats(const GraphStats& s, std::ostream& out) {
  out << "n: " << s.n << "\nm: " << s.m << "\nc: " << s.c << "\np: " << s.p << "\n";
}

int cmd_rank(const std::string& file, bool float_mode, double tol, std::ostream& out) {
  if (float_mode) {
    const FloatGraph fg = load_float_graph(file);
    std::size_t m = 0;
    for (Eigen::Index r = 0; r < fg.adjacency.rows(); ++r)
      for (Eigen::Index c = r + 1; c < fg.adjacency.cols(); ++c)
        if (!is_zero(fg.adjacency(r, c))) ++m;
    out << "n: " << fg.vertices.size() << "\nm: " << m << "\n";
    out << "elimination rank (float, tol " << tol << "): " << row_left_rank_float(fg.adjacency, tol) << "\n";
    return kOk;
  }
  const GainGraph g = load_graph(file);
  print_stats(stats(g), out);
  print_cycles(g, out);
  const std::size_t r = elimination_rank(g);
  out << "elimination rank: " << r << "\n";
  out << "structural rank: " << to_string(structural_rank(g)) << "\n";
  print_bound(g, r, out);
  return kOk;
}

void print_verdict(const std::string& name, bool lhs, bool rhs, const std::string& diag, std::ostream& out) {
  out << "characterization " << name << ": rank side " << (lhs ? "true" : "false") << ", shape side " << (rhs ? "true" : "false")
      << (lhs == rhs ? " (agree)" : " (DISAGREE)") << " -- " << diag << "\n";
}

int cmd_classify(const std::string& file, std::ostream& out) {
  const GainGraph g = load_graph(file);
  const GraphStats s = stats(g);
  print_stats(s, out);
  print_cycles(g, out);
  const auto pcs = pendant_cycles(g);
  out << "pendant cycles: " << pcs.size() << "\n";
  for (const auto& cyc : pcs) {
    const PendantCycleReduction red = reduce_pendant_cycle(g, cyc);
    out << "  at " << (red.whole_component ? std::string("(whole component)") : std::to_string(red.attachment))
        << " length " << red.length << " " << to_string(red.type) << "\n";
  }
  const std::size_t r = elimination_rank(g);
  out << "elimination rank: " << r << "\n";
  print_bound(g, r, out);
  bool disagree = false;
  if (g.order() > 0 && is_connected(g)) {
    auto show = [&](const std::string& name, const Verdict& v) {
      print_verdict(name, v.lhs, v.rhs, v.diagnostic, out);
      disagree = disagree || !v.agree();
    };
    if (s.p == 0 && s.n >= 2) show("cycle", check_cycle_extremal(g));
    if (s.p == 0 && s.c == 2) show("two-cycle", check_two_cycle_extremal(g));
    if (s.p == 0 && s.c >= 3) show("leaf-free-flower", check_leaf_free_flower(g));
    if (s.p >= 1 && s.c >= 1) show("pendant-flower", check_pendant_flower(g));
    if (s.c == 0 && s.p >= 3) {
      const TreeVerdict v = check_tree_extremal(g);
      print_verdict("tree", v.lhs, v.rhs_all && v.rhs_exists, v.diagnostic, out);
      disagree = disagree || !v.agree();
    }
  }
  return disagree ? kViolations : kOk;
}

struct GenerateOptions {
  std::string family;
  std::string params;
  std::string cycles;
  std::string types;
  std::uint64_t seed = 1;
  std::string gain_mode = "cayley";
  bool scramble = false;
  std::string output;
};

int cmd_generate(const GenerateOptions& o, std::ostream& out) {
  Rng rng(o.seed);
  const GainMode mode = parse_gain_mode(o.gain_mode);
  const auto params = parse_counts(o.params, "--params");
  std::vector<std::size_t> types;
  if (!o.types.empty()) types = parse_counts(o.types, "--types");
  auto type_at = [&](std::size_t t) { return t < types.size() ? parse_type(types[t]) : CycleType::Type1; };
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      throw std::invalid_argument("--params for " + o.family + " takes " + std::to_string(k) + " values");
  };

  GainGraph g;
  if (o.family == "cycle") {
    need(1);
    g = make_cycle(params[0], type_at(0), rng, mode);
  } else if (o.family == "infinity") {
    need(3);
    InfinitySpec spec;
    spec.p = params[0];
    spec.l = params[1];
    spec.q = params[2];
    spec.gain_p = type_target(spec.p, type_at(0), rng, mode);
    spec.gain_q = type_target(spec.q, type_at(1), rng, mode);
    g = make_infinity(spec);
  } else if (o.family == "theta") {
    need(3);
    ThetaSpec spec;
    spec.p = params[0];
    spec.l = params[1];
    spec.q = params[2];
    spec.gain_pl = type_target(spec.p + spec.l + 2, type_at(0), rng, mode);
    spec.gain_pq = type_target(spec.p + spec.q + 2, type_at(1), rng, mode);
    g = make_theta(spec);
  } else if (o.family == "flower") {
    const GainGraph tree = make_spider(params);
    std::vector<VertexId> leaves;
    for (const auto& [leaf, _] : pendant_structure(tree)) leaves.push_back(leaf);
    const auto lengths = o.cycles.empty() ? std::vector<std::size_t>() : parse_counts(o.cycles, "--cycles");
    if (lengths.size() > leaves.size())
      throw std::invalid_argument("--cycles lists more cycles than the spider has leaves");
    FlowerSpec spec{tree, {}};
    for (std::size_t t = 0; t < lengths.size(); ++t)
      spec.attachments.push_back(Attachment{leaves[t], lengths[t], type_target(lengths[t], type_at(t), rng, mode)});
    g = make_flower(spec);
  } else if (o.family == "spider") {
    g = make_spider_tree(params, rng, mode);
  } else {
    throw std::invalid_argument("unknown family '" + o.family + "'");
  }
  if (o.scramble) g = apply_switching(g, random_switching(g, rng, mode));

  save_graph(g, o.output);
  const GraphStats s = stats(g);
  const std::size_t r = elimination_rank(g);
  nlohmann::json meta{{"family", o.family},     {"params", params},     {"seed", o.seed},
                      {"gain_mode", o.gain_mode}, {"scrambled", o.scramble}, {"n", s.n},
                      {"m", s.m},               {"c", s.c},             {"p", s.p},
                      {"expected_rank", r},     {"structural_rank", to_string(structural_rank(g))}};
  if (!o.cycles.empty()) meta["cycles"] = parse_counts(o.cycles, "--cycles");
  if (!types.empty()) meta["types"] = types;
  bool isolated = g.order() == 0;
  for (VertexId v : g.vertices()) isolated = isolated || g.degree(v) == 0;
  if (!isolated) {
    const Bound b = lower_bound(g);
    meta["expected_bound_case"] = to_string(b.kind);
    meta["bound"] = b.value;
  }
  std::filesystem::path meta_path(o.output);
  meta_path.replace_extension(".meta.json");
  std::ofstream(meta_path) << meta.dump(2) << "\n";
  out << "wrote " << o.output << " (n=" << s.n << ", m=" << s.m << ", rank " << r << ") and " << meta_path.string()
      << "\n";
  return kOk;
}

void write_report(const VerificationReport& report, const std::string& format, const std::string& output,
                  std::ostream& out) {
  const std::string body = format == "csv" ? report_csv(report) : report_json(report).dump(2) + "\n";
  if (output.empty() || output == "-") {
    out << body;
    return;
  }
  std::ofstream file(output, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + output);
  file << body;
}

void print_summary(const VerificationReport& report, std::ostream& err) {
  const ReportSummary& s = report.summary;
  err << report.kind << ": " << s.records << " records, " << s.violating_records << " with violations, " << s.relaxed
      << " relaxed, " << s.wall_seconds << " s\n";
  for (const SampleRecord& r : report.records)
    for (const std::string& v : r.violations) err << "  #" << r.index << " " << r.label << ": " << v << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quaternion unit gain graph rank toolkit"};
  app.require_subcommand(1);
  std::function<int()> action;

  std::string file;
  bool float_mode = false;
  double tol = kDefaultPivotTolerance;
  auto* rank = app.add_subcommand("rank", "Rank, cycle inventory and lower bound of a graph file");
  rank->add_option("file", file, "graph JSON file")->required();
  rank->add_flag("--float", float_mode, "floating-point elimination (decimal gains allowed)");
  rank->add_option("--tol", tol, "relative pivot tolerance for --float");
  rank->callback([&] {
    action = [&] {
      if (!(tol > 0)) throw std::invalid_argument("--tol must be positive");
      return cmd_rank(file, float_mode, tol, out);
    };
  });

  auto* classify = app.add_subcommand("classify", "Cycle types, pendant cycles and characterization verdicts");
  classify->add_option("file", file, "graph JSON file")->required();
  classify->callback([&] { action = [&] { return cmd_classify(file, out); }; });

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "Write a family instance and its metadata sidecar");
  generate->add_option("--family", gen.family, "cycle | infinity | theta | flower | spider")
      ->required()
      ->check(CLI::IsMember({"cycle", "infinity", "theta", "flower", "spider"}));
  generate->add_option("--params", gen.params,
                       "cycle: n; infinity/theta: p,l,q; flower/spider: comma-separated leg lengths")
      ->required();
  generate->add_option("--cycles", gen.cycles, "flower: cycle lengths attached to the first leaves");
  generate->add_option("--types", gen.types, "cycle types (1-4) for the designated cycles, default 1");
  generate->add_option("--seed", gen.seed, "random seed for the free gains");
  generate->add_option("--gain-mode", gen.gain_mode, "cayley | lipschitz");
  generate->add_flag("--scramble", gen.scramble, "apply a random switching");
  generate->add_option("-o,--output", gen.output, "output graph file")->required();
  generate->callback([&] { action = [&] { return cmd_generate(gen, out); }; });

  RunConfig cfg;
  std::string cells;
  std::string format = "json";
  std::string output;
  std::string gain_mode = "cayley";
  auto* bounds = app.add_subcommand("verify-bounds", "Random sampling against the bound and reduction lemmas");
  bounds->add_option("--seed", cfg.seed, "run seed")->required();
  bounds->add_option("--samples", cfg.samples, "number of graphs");
  bounds->add_option("--max-n", cfg.max_n, "largest order for random cells");
  bounds->add_option("--cells", cells, "comma-separated n:c:p targets");
  bounds->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  bounds->add_option("--gain-mode", gain_mode, "cayley | lipschitz");
  bounds->add_option("--threads", cfg.threads, "worker threads");
  bounds->add_option("-o,--output", output, "report file (default stdout)");
  bounds->callback([&] {
    action = [&] {
      cfg.gain_mode = parse_gain_mode(gain_mode);
      if (!cells.empty()) cfg.cells = parse_cells(cells);
      const VerificationReport report = run_verify_bounds(cfg);
      write_report(report, format, output, out);
      print_summary(report, err);
      return report.summary.zero_violation ? kOk : kViolations;
    };
  });

  auto* extremal = app.add_subcommand("verify-extremal", "Positive and near-miss family instances");
  extremal->add_option("--seed", cfg.seed, "run seed")->required();
  extremal->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  extremal->add_option("--gain-mode", gain_mode, "cayley | lipschitz");
  extremal->add_option("--threads", cfg.threads, "worker threads");
  extremal->add_option("-o,--output", output, "report file (default stdout)");
  extremal->callback([&] {
    action = [&] {
      cfg.gain_mode = parse_gain_mode(gain_mode);
      const VerificationReport report = run_verify_extremal(cfg);
      write_report(report, format, output, out);
      print_summary(report, err);
      return report.summary.zero_violation ? kOk : kViolations;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }
  try {
    return action();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
}

}  // namespace qgg::cli
