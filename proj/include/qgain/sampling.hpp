#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>

#include "qgain/gain_graph.hpp"

namespace qgg {

/// mt19937_64 with a bounded-integer draw that is identical on every
/// standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Independent stream for sample `index` of a run seeded with `seed`.
  static Rng for_sample(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin() { return (next() >> 63) != 0; }

  template <typename T>
  const T& pick(std::span<const T> items) {
    return items[below(items.size())];
  }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

enum class GainMode { Cayley, Lipschitz };

std::string to_string(GainMode mode);
GainMode parse_gain_mode(const std::string& text);

/// Cayley image of a random rational pure quaternion whose components have
/// numerators in [-bound, bound] and denominators in [1, bound].
ExactQuaternion random_cayley_unit(Rng& rng, int bound = 8);
ExactQuaternion random_lipschitz_unit(Rng& rng);
ExactQuaternion random_unit(Rng& rng, GainMode mode);
/// Random unit with zero real part.
ExactQuaternion random_pure_unit(Rng& rng, GainMode mode);

/// Uniform labelled tree on 0..n-1 (Pruefer code) with random gains.
GainGraph random_tree(std::size_t n, Rng& rng, GainMode mode);

/// Random tree on 0..n-1 with exactly `leaves` leaves (2 <= leaves <= n-1,
/// or the degenerate n <= 2 cases).
GainGraph random_tree_with_leaves(std::size_t n, std::size_t leaves, Rng& rng, GainMode mode);

struct SampledGraph {
  GainGraph graph;
  bool relaxed = false;  // p target missed within the retry budget
};

/// Connected graph with n vertices, cyclomatic number c and, when
/// attainable within `budget` attempts, exactly p pendant vertices.
/// Throws std::invalid_argument when (n, c) is impossible for a simple graph.
SampledGraph random_graph(std::size_t n, std::size_t c, std::size_t p, Rng& rng, GainMode mode,
                          std::size_t budget = 1000);

SwitchingFunction random_switching(const GainGraph& g, Rng& rng, GainMode mode);

}  // namespace qgg
