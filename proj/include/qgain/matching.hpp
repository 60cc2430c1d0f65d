#pragma once

#include <cstddef>

#include "qgain/gain_graph.hpp"

namespace qgg {

/// Maximum matching size of a forest by leaf stripping: match any leaf to
/// its neighbour, delete both, repeat. Exact on forests; throws GraphError
/// when g has a cycle.
std::size_t matching_number(const GainGraph& forest);

/// v lies in every maximum matching, detected as a drop in the matching
/// number once v is deleted.
bool is_covered_vertex(const GainGraph& forest, VertexId v);

}  // namespace qgg
