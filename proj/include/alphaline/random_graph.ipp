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

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

namespace alphaline {

template <typename Rng>
Graph random_graph(Rng& rng, int max_vertices, int max_edges) {
  const int n = std::uniform_int_distribution<int>(1, std::max(1, max_vertices))(rng);
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  const int limit = std::min<int>(std::max(0, max_edges), static_cast<int>(pairs.size()));
  const int m = std::uniform_int_distribution<int>(0, limit)(rng);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  pairs.resize(static_cast<std::size_t>(m));
  return Graph::build(n, pairs);
}

}  // namespace alphaline
