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
#include <chrono>

#include "alphaline/solvers.hpp"
#include "bitset.hpp"

namespace alphaline {
namespace {

using detail::Bitset;

class MisSearch {
 public:
  MisSearch(const Graph& g, std::uint64_t budget) : n_(g.vertex_count()), budget_(budget) {
    adj_.assign(static_cast<std::size_t>(n_), Bitset(n_));
    closed_.assign(static_cast<std::size_t>(n_), Bitset(n_));
    for (int v = 0; v < n_; ++v) {
      for (int w : g.neighbors(v)) adj_[static_cast<std::size_t>(v)].set(w);
      closed_[static_cast<std::size_t>(v)] = adj_[static_cast<std::size_t>(v)];
      closed_[static_cast<std::size_t>(v)].set(v);
    }
  }

  void run() {
    Bitset all(n_);
    for (int v = 0; v < n_; ++v) all.set(v);
    best_ = greedy(all);
    search(all);
  }

  const std::vector<int>& best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }
  bool exhausted() const { return exhausted_; }

 private:
  const Bitset& adj(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  const Bitset& closed(int v) const { return closed_[static_cast<std::size_t>(v)]; }

  // Repeatedly take a minimum-degree vertex.
  std::vector<int> greedy(Bitset live) const {
    std::vector<int> out;
    while (!live.empty()) {
      int pick = -1;
      int pick_deg = n_ + 1;
      live.for_each([&](int v) {
        const int d = adj(v).count_and(live);
        if (d < pick_deg) {
          pick = v;
          pick_deg = d;
        }
      });
      out.push_back(pick);
      live.and_not(closed(pick));
    }
    return out;
  }

  // Greedy partition of `live` into cliques; any independent set takes at
  // most one vertex per clique.
  int clique_cover_bound(Bitset live) const {
    int cliques = 0;
    while (!live.empty()) {
      const int v = live.first();
      live.reset(v);
      Bitset candidates = live;
      candidates &= adj(v);
      while (!candidates.empty()) {
        const int w = candidates.first();
        live.reset(w);
        candidates.reset(w);
        candidates &= adj(w);
      }
      ++cliques;
    }
    return cliques;
  }

  // Every vertex of `live` has degree exactly 2 inside it, so `live` is a
  // union of disjoint cycles; take every other vertex around each.
  void take_cycles(Bitset live) {
    while (!live.empty()) {
      std::vector<int> cycle;
      for (int v = live.first(); v >= 0;) {
        cycle.push_back(v);
        live.reset(v);
        Bitset next = adj(v);
        next &= live;
        v = next.first();
      }
      for (std::size_t i = 0; i + 1 < cycle.size(); i += 2) current_.push_back(cycle[i]);
    }
  }

  void record() {
    if (current_.size() > best_.size()) best_ = current_;
  }

  void search(Bitset live) {
    if (exhausted_) return;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }
    const std::size_t mark = current_.size();

    // Degree 0/1 vertices belong to some maximum independent set.
    int max_deg = 0;
    int max_v = -1;
    int live_count = 0;
    int degree_sum = 0;
    for (bool reduced = true; reduced;) {
      reduced = false;
      max_deg = 0;
      max_v = -1;
      live_count = 0;
      degree_sum = 0;
      int low = -1;
      live.for_each([&](int v) {
        if (low >= 0) return;
        const int d = adj(v).count_and(live);
        if (d <= 1) {
          low = v;
          return;
        }
        ++live_count;
        degree_sum += d;
        if (d > max_deg) {
          max_deg = d;
          max_v = v;
        }
      });
      if (low >= 0) {
        current_.push_back(low);
        live.and_not(closed(low));
        reduced = true;
      }
    }

    if (live_count == 0) {
      record();
    } else if (max_deg == 2) {
      take_cycles(live);
      record();
    } else {
      const int size = static_cast<int>(current_.size());
      const int edges = degree_sum / 2;
      const int degree_bound = live_count - (edges + max_deg - 1) / max_deg;
      const int best = static_cast<int>(best_.size());
      if (size + degree_bound > best && size + clique_cover_bound(live) > best) {
        Bitset with = live;
        with.and_not(closed(max_v));
        current_.push_back(max_v);
        search(with);
        current_.pop_back();

        live.reset(max_v);
        search(live);
      }
    }
    current_.resize(mark);
  }

  int n_;
  std::uint64_t budget_;
  std::vector<Bitset> adj_;
  std::vector<Bitset> closed_;
  std::vector<int> best_;
  std::vector<int> current_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace

SolveResult mis_exact(const Graph& g, const MisOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  MisSearch search(g, options.node_budget);
  search.run();
  SolveResult result;
  result.status = search.exhausted() ? SolveStatus::BudgetExhausted : SolveStatus::Optimal;
  result.witness = search.best();
  std::sort(result.witness.begin(), result.witness.end());
  result.value = static_cast<int>(result.witness.size());
  result.steps = search.nodes();
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

}  // namespace alphaline
