// Copyright 2026 The alphaline Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "alphaline/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace alphaline {
namespace {

std::string warn_isolated() {
  return "graph has isolated vertices; the family identities assume none";
}

}  // namespace

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "dimacs") return GraphFormat::Dimacs;
  if (name == "json") return GraphFormat::Json;
  throw FormatError("unknown graph format '" + std::string(name) + "' (expected dimacs or json)");
}

LoadedGraph parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  long long declared_n = -1;
  long long declared_m = -1;
  std::vector<std::pair<int, int>> edges;
  LoadedGraph out;

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag) || tag == "c") continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (tag == "p") {
      std::string kind;
      if (declared_n >= 0) throw FormatError(where + "duplicate 'p' header");
      if (!(fields >> kind >> declared_n >> declared_m) || (kind != "edge" && kind != "col") || declared_n < 1 ||
          declared_m < 0) {
        throw FormatError(where + "malformed header, expected 'p edge N M'");
      }
    } else if (tag == "e") {
      if (declared_n < 0) throw FormatError(where + "edge before 'p edge N M' header");
      long long u = 0;
      long long v = 0;
      if (!(fields >> u >> v)) throw FormatError(where + "malformed edge, expected 'e u v'");
      if (u < 1 || v < 1 || u > declared_n || v > declared_n) {
        throw VertexRangeError(where + "vertex out of range in 'e " + std::to_string(u) + " " + std::to_string(v) +
                               "' (N=" + std::to_string(declared_n) + ")");
      }
      edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
    } else {
      throw FormatError(where + "unknown line type '" + tag + "'");
    }
  }
  if (declared_n < 0) throw FormatError("missing 'p edge N M' header");
  if (static_cast<long long>(edges.size()) != declared_m) {
    out.warnings.push_back("header declares " + std::to_string(declared_m) + " edges but " +
                           std::to_string(edges.size()) + " 'e' lines were read");
  }
  out.graph = Graph::build(static_cast<int>(declared_n), edges);
  if (out.graph.has_isolated_vertices()) out.warnings.push_back(warn_isolated());
  return out;
}

LoadedGraph parse_json_graph(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer() || !doc.contains("edges") ||
      !doc["edges"].is_array()) {
    throw FormatError("expected {\"n\": N, \"edges\": [[u, v], ...]}");
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw FormatError("edge entries must be [u, v] integer pairs, got " + e.dump());
    }
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  LoadedGraph out;
  out.graph = Graph::build(doc["n"].get<int>(), edges);
  if (out.graph.has_isolated_vertices()) out.warnings.push_back(warn_isolated());
  return out;
}

LoadedGraph load_graph(const std::filesystem::path& path, GraphFormat format) {
  std::ifstream file(path);
  if (!file) throw FormatError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << file.rdbuf();
  try {
    return format == GraphFormat::Dimacs ? parse_dimacs(buffer.str()) : parse_json_graph(buffer.str());
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

std::string write_dimacs(const Graph& g) {
  std::string out = "p edge " + std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges()) {
    out += "e " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + "\n";
  }
  return out;
}

std::string write_json_graph(const Graph& g) {
  nlohmann::json doc;
  doc["n"] = g.vertex_count();
  doc["edges"] = nlohmann::json::array();
  for (const Edge& e : g.edges()) doc["edges"].push_back({e.u, e.v});
  return doc.dump() + "\n";
}

}  // namespace alphaline
