#include "qgain/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace qgg {

namespace {

using nlohmann::json;

std::string location_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t t = 0; t < byte && t < text.size(); ++t) {
    if (text[t] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

json parse_document(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    throw ParseError("malformed JSON at " + location_of(text, byte) + ": " + e.what());
  }
}

VertexId as_vertex(const json& value, const std::string& where) {
  if (!value.is_number_integer() || value.get<long long>() < 0 ||
      value.get<long long>() > static_cast<long long>(UINT32_MAX)) {
    throw ParseError(where + ": vertex id must be a non-negative integer, got " + value.dump());
  }
  return static_cast<VertexId>(value.get<long long>());
}

struct RawEdge {
  VertexId u;
  VertexId v;
  std::string gain;
  std::string where;
};

struct RawGraph {
  std::vector<VertexId> vertices;
  std::vector<RawEdge> edges;
};

RawGraph read_raw(std::string_view text) {
  const json doc = parse_document(text);
  if (!doc.is_object()) throw ParseError("graph document must be a JSON object");
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw ParseError("graph document needs a \"vertices\" array");
  if (!doc.contains("edges") || !doc["edges"].is_array())
    throw ParseError("graph document needs an \"edges\" array");

  RawGraph raw;
  std::set<VertexId> seen;
  std::size_t index = 0;
  for (const json& v : doc["vertices"]) {
    const VertexId id = as_vertex(v, "vertex #" + std::to_string(index++));
    if (!seen.insert(id).second) throw ParseError("duplicate vertex id " + std::to_string(id));
    raw.vertices.push_back(id);
  }
  std::set<std::pair<VertexId, VertexId>> edge_keys;
  index = 0;
  for (const json& e : doc["edges"]) {
    const std::string where = "edge #" + std::to_string(index++);
    if (!e.is_object() || !e.contains("u") || !e.contains("v") || !e.contains("gain"))
      throw ParseError(where + ": needs \"u\", \"v\" and \"gain\"");
    if (!e["gain"].is_string()) throw ParseError(where + ": gain must be a string token");
    RawEdge edge{as_vertex(e["u"], where), as_vertex(e["v"], where), e["gain"].get<std::string>(), where};
    if (!seen.count(edge.u) || !seen.count(edge.v))
      throw ParseError(where + ": endpoint not listed in \"vertices\"");
    if (edge.u == edge.v) throw ParseError(where + ": loop at vertex " + std::to_string(edge.u));
    const auto k = edge.u < edge.v ? std::pair{edge.u, edge.v} : std::pair{edge.v, edge.u};
    if (!edge_keys.insert(k).second) {
      throw ParseError(where + ": duplicate edge " + std::to_string(k.first) + "-" + std::to_string(k.second));
    }
    raw.edges.push_back(std::move(edge));
  }
  return raw;
}

}  // namespace

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

GainGraph parse_graph(std::string_view text) {
  const RawGraph raw = read_raw(text);
  GainGraph g;
  for (VertexId v : raw.vertices) g.add_vertex(v);
  for (const RawEdge& e : raw.edges) {
    ExactQuaternion gain;
    try {
      gain = parse_token(e.gain);
    } catch (const std::invalid_argument& err) {
      throw ParseError(e.where + ": bad gain: " + err.what());
    }
    if (!is_unit(gain)) {
      throw ParseError(e.where + ": gain " + to_token(gain) + " has squared modulus " +
                       norm_sq(gain).get_str() + ", expected 1");
    }
    g.add_edge(e.u, e.v, gain);
  }
  return g;
}

GainGraph load_graph(const std::filesystem::path& path) { return parse_graph(read_text(path)); }

nlohmann::json to_json(const GainGraph& g) {
  json doc;
  doc["vertices"] = json::array();
  for (VertexId v : g.vertices()) doc["vertices"].push_back(v);
  doc["edges"] = json::array();
  for (const Edge& e : g.edges()) doc["edges"].push_back({{"u", e.u}, {"v", e.v}, {"gain", to_token(e.gain)}});
  return doc;
}

std::string serialize_graph(const GainGraph& g) { return to_json(g).dump(2) + "\n"; }

void save_graph(const GainGraph& g, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << serialize_graph(g);
}

FloatGraph parse_float_graph(std::string_view text, double unit_tol) {
  const RawGraph raw = read_raw(text);
  FloatGraph out;
  out.vertices = raw.vertices;
  std::sort(out.vertices.begin(), out.vertices.end());
  std::map<VertexId, Eigen::Index> index;
  for (std::size_t t = 0; t < out.vertices.size(); ++t) index[out.vertices[t]] = static_cast<Eigen::Index>(t);
  const auto n = static_cast<Eigen::Index>(out.vertices.size());
  out.adjacency = FloatMatrix(n, n);
  for (const RawEdge& e : raw.edges) {
    FloatQuaternion gain;
    try {
      gain = parse_float_token(e.gain);
    } catch (const std::invalid_argument& err) {
      throw ParseError(e.where + ": bad gain: " + err.what());
    }
    if (std::abs(norm_sq(gain) - 1.0) > unit_tol) throw ParseError(e.where + ": gain is not a unit quaternion");
    out.adjacency(index[e.u], index[e.v]) = gain;
    out.adjacency(index[e.v], index[e.u]) = conj(gain);
  }
  return out;
}

FloatGraph load_float_graph(const std::filesystem::path& path, double unit_tol) {
  return parse_float_graph(read_text(path), unit_tol);
}

}  // namespace qgg
