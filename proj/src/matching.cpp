#include "qgain/matching.hpp"

#include <map>
#include <set>
#include <vector>

namespace qgg {

std::size_t matching_number(const GainGraph& forest) {
  if (!is_forest(forest)) throw GraphError("matching_number: graph is not a forest");
  std::map<VertexId, std::set<VertexId>> adj;
  for (VertexId v : forest.vertices()) adj[v] = forest.neighbors(v);

  std::vector<VertexId> leaves;
  for (const auto& [v, nb] : adj)
    if (nb.size() == 1) leaves.push_back(v);

  std::size_t matched = 0;
  auto remove = [&](VertexId x) {
    for (VertexId y : adj[x]) {
      adj[y].erase(x);
      if (adj[y].size() == 1) leaves.push_back(y);
    }
    adj.erase(x);
  };
  while (!leaves.empty()) {
    const VertexId leaf = leaves.back();
    leaves.pop_back();
    const auto it = adj.find(leaf);
    if (it == adj.end() || it->second.size() != 1) continue;  // stale entry
    const VertexId partner = *it->second.begin();
    ++matched;
    remove(leaf);
    remove(partner);
  }
  return matched;
}

bool is_covered_vertex(const GainGraph& forest, VertexId v) {
  return matching_number(delete_vertex(forest, v)) < matching_number(forest);
}

}  // namespace qgg
