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

#ifndef ALPHALINE_GRAPH_IO_HPP
#define ALPHALINE_GRAPH_IO_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "alphaline/graph.hpp"

namespace alphaline {

enum class GraphFormat { Dimacs, Json };

GraphFormat parse_graph_format(std::string_view name);

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LoadedGraph {
  Graph graph;
  std::vector<std::string> warnings;
};

// DIMACS: "c" comments, one "p edge N M" header, then "e u v" lines with
// 1-based vertices. An edge count that disagrees with M is a warning.
LoadedGraph parse_dimacs(std::string_view text);

// JSON: {"n": N, "edges": [[u, v], ...]} with 0-based vertices.
LoadedGraph parse_json_graph(std::string_view text);

LoadedGraph load_graph(const std::filesystem::path& path, GraphFormat format);

std::string write_dimacs(const Graph& g);
std::string write_json_graph(const Graph& g);

}  // namespace alphaline

#endif  // ALPHALINE_GRAPH_IO_HPP
