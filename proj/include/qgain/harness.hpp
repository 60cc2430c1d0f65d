#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "qgain/gain_graph.hpp"
#include "qgain/rank_engine.hpp"
#include "qgain/sampling.hpp"

namespace qgg {

struct Cell {
  std::size_t n = 0;
  std::size_t c = 0;
  std::size_t p = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

std::string to_string(const Cell& cell);
/// "n:c:p[,n:c:p...]"
std::vector<Cell> parse_cells(const std::string& text);

struct RunConfig {
  std::uint64_t seed = 1;
  std::size_t samples = 200;
  std::size_t max_n = 10;
  GainMode gain_mode = GainMode::Cayley;
  std::vector<Cell> cells;  // empty: random cells up to max_n
  std::optional<double> float_tol;
  unsigned threads = 1;
  std::size_t retry_budget = 1000;

  /// Throws std::invalid_argument on the first broken constraint.
  void validate() const;
};

struct TheoremOutcome {
  std::string theorem;  // cycle, two-cycle, leaf-free-flower, tree, pendant-flower
  bool lhs = false;
  bool rhs = false;
  std::optional<bool> rhs_exists;  // tree theorem only
  std::string diagnostic;
};

struct SampleRecord {
  std::size_t index = 0;
  std::string label;  // "random" or the family instance name
  std::optional<Cell> target;
  bool relaxed = false;
  std::string digest;
  GraphStats stats;
  std::size_t elimination_rank = 0;
  std::optional<std::size_t> adjoint_rank;  // complex adjoint rank / 2
  std::optional<std::size_t> column_rank;
  std::optional<RankResult> structural;
  std::optional<Bound> bound;
  std::optional<std::array<std::size_t, 4>> cycle_types;  // counts of Type1..Type4
  std::vector<TheoremOutcome> theorems;
  std::optional<bool> expected_positive;
  std::optional<std::size_t> expected_rank;
  std::vector<std::string> violations;
};

struct ReportSummary {
  std::uint64_t seed = 0;
  std::size_t records = 0;
  std::size_t violating_records = 0;
  std::size_t relaxed = 0;
  std::map<std::string, std::size_t> cell_counts;
  bool zero_violation = true;
  double wall_seconds = 0.0;
};

struct VerificationReport {
  std::string kind;
  RunConfig config;
  std::vector<SampleRecord> records;
  ReportSummary summary;
};

/// FNV-1a 64 of the compact canonical JSON serialization, as 16 hex digits.
std::string graph_digest(const GainGraph& g);

/// Elimination, adjoint and column ranks, structural rank, lower bound,
/// perturbation lemmas on one random vertex and edge, vertex counting
/// identities, switching invariance, and every applicable characterization.
SampleRecord examine_graph(const GainGraph& g, Rng& rng, GainMode mode);

VerificationReport run_verify_bounds(const RunConfig& cfg);
VerificationReport run_verify_extremal(const RunConfig& cfg);

nlohmann::json records_json(const VerificationReport& report);
nlohmann::json report_json(const VerificationReport& report);
std::string report_csv(const VerificationReport& report);

}  // namespace qgg
