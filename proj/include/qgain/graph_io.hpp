#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "qgain/gain_graph.hpp"

namespace qgg {

/// Raised for malformed or invalid graph documents. what() carries a
/// "line L, column C" or "edge #k" location.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Document shape:
//   {"vertices":[ids...],"edges":[{"u":id,"v":id,"gain":"a/b,c/d,e/f,g/h"}...]}
// with each gain stated for the orientation u -> v.

GainGraph parse_graph(std::string_view text);
GainGraph load_graph(const std::filesystem::path& path);

nlohmann::json to_json(const GainGraph& g);
std::string serialize_graph(const GainGraph& g);
void save_graph(const GainGraph& g, const std::filesystem::path& path);

/// Float-mode document: same shape, but gain components may be decimals and
/// unit modulus is checked to within unit_tol.
struct FloatGraph {
  std::vector<VertexId> vertices;
  FloatMatrix adjacency;
};

FloatGraph parse_float_graph(std::string_view text, double unit_tol = 1e-9);
FloatGraph load_float_graph(const std::filesystem::path& path, double unit_tol = 1e-9);

std::string read_text(const std::filesystem::path& path);

}  // namespace qgg
