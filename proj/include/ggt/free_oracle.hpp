// Copyright 2026 The ggt Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GGT_FREE_ORACLE_HPP_
#define GGT_FREE_ORACLE_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "error.hpp"
#include "words.hpp"

namespace ggt {

// Core graph of a subgroup of a free group. Edges are stored in both
// directions: an a-edge u -> v also appears as an A-edge v -> u.
struct SubgroupGraph {
  std::size_t base = 0;
  std::vector<std::map<char, std::size_t>> out;

  std::size_t vertex_count() const noexcept { return out.size(); }

  std::size_t edge_count() const {
    std::size_t n = 0;
    for (auto const& m : out) {
      for (auto const& [c, to] : m) {
        n += letter::is_inverse(c) ? 0 : 1;
      }
    }
    return n;
  }

  friend bool operator==(SubgroupGraph const&, SubgroupGraph const&) = default;
};

namespace detail {

struct RawEdge {
  std::size_t from;
  char label;  // always a generator (lowercase)
  std::size_t to;
};

inline std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

// Renumbers vertices in BFS order from the base, following letters in the
// a < A < b < B order. Two folded core graphs of the same subgroup are
// equal after this.
inline SubgroupGraph canonical_relabel(SubgroupGraph const& g) {
  std::vector<std::size_t> label(g.vertex_count(), g.vertex_count());
  std::vector<std::size_t> order{g.base};
  label[g.base] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::vector<std::pair<char, std::size_t>> edges(g.out[order[i]].begin(),
                                                    g.out[order[i]].end());
    std::sort(edges.begin(), edges.end(), [](auto const& x, auto const& y) {
      return letter::key(x.first) < letter::key(y.first);
    });
    for (auto const& [c, to] : edges) {
      if (label[to] == g.vertex_count()) {
        label[to] = order.size();
        order.push_back(to);
      }
    }
  }
  SubgroupGraph r;
  r.base = 0;
  r.out.resize(order.size());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (label[v] == g.vertex_count()) {
      continue;
    }
    for (auto const& [c, to] : g.out[v]) {
      r.out[label[v]][c] = label[to];
    }
  }
  return r;
}

}  // namespace detail

// Stallings folding of the wedge of generator loops, trimmed to the core.
// `seed` shuffles the order in which foldable pairs are merged; the result
// does not depend on it.
inline SubgroupGraph fold(std::vector<Word> const& generators,
                          std::uint64_t seed = 0) {
  std::vector<detail::RawEdge> edges;
  std::size_t vertices = 1;
  for (auto const& g : generators) {
    Word const w = free_reduce(g);
    std::size_t prev = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::size_t const next = i + 1 == w.size() ? 0 : vertices++;
      if (letter::is_inverse(w[i])) {
        edges.push_back({next, letter::generator(w[i]), prev});
      } else {
        edges.push_back({prev, w[i], next});
      }
      prev = next;
    }
  }

  std::vector<std::size_t> parent(vertices);
  std::iota(parent.begin(), parent.end(), 0);
  std::mt19937_64 rng(seed);
  bool merged = true;
  while (merged) {
    merged = false;
    if (seed != 0) {
      std::shuffle(edges.begin(), edges.end(), rng);
    }
    // (vertex, signed label) -> target
    std::map<std::pair<std::size_t, char>, std::size_t> seen;
    for (auto const& e : edges) {
      std::size_t const u = detail::find_root(parent, e.from);
      std::size_t const v = detail::find_root(parent, e.to);
      for (auto const& [key, target] :
           {std::pair{std::pair{u, e.label}, v},
            std::pair{std::pair{v, letter::inverse(e.label)}, u}}) {
        auto [it, fresh] = seen.emplace(key, target);
        if (!fresh) {
          std::size_t const x = detail::find_root(parent, it->second);
          std::size_t const y = detail::find_root(parent, target);
          if (x != y) {
            parent[std::max(x, y)] = std::min(x, y);
            merged = true;
            break;
          }
        }
      }
      if (merged) {
        break;
      }
    }
  }

  // Quotient graph with duplicate edges removed.
  SubgroupGraph g;
  g.out.resize(vertices);
  for (auto const& e : edges) {
    std::size_t const u = detail::find_root(parent, e.from);
    std::size_t const v = detail::find_root(parent, e.to);
    g.out[u][e.label] = v;
    g.out[v][letter::inverse(e.label)] = u;
  }
  g.base = detail::find_root(parent, 0);

  // Trim hanging trees: drop non-base vertices of degree one.
  std::vector<bool> alive(vertices, false);
  for (std::size_t v = 0; v < vertices; ++v) {
    alive[v] = detail::find_root(parent, v) == v;
  }
  bool trimmed = true;
  while (trimmed) {
    trimmed = false;
    for (std::size_t v = 0; v < vertices; ++v) {
      if (alive[v] && v != g.base && g.out[v].size() == 1) {
        auto const [c, to] = *g.out[v].begin();
        g.out[to].erase(letter::inverse(c));
        g.out[v].clear();
        alive[v] = false;
        trimmed = true;
      }
    }
  }
  return detail::canonical_relabel(g);
}

// Folded graphs have at most one edge per label at each vertex.
inline bool is_folded(SubgroupGraph const& g) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    for (auto const& [c, to] : g.out[v]) {
      auto it = g.out[to].find(letter::inverse(c));
      if (it == g.out[to].end() || it->second != v) {
        return false;
      }
    }
  }
  return true;
}

// True iff the freely reduced `g` reads a closed path at the base.
inline bool oracle_member(Word const& g, SubgroupGraph const& graph) {
  std::size_t v = graph.base;
  for (char c : free_reduce(g)) {
    auto it = graph.out[v].find(c);
    if (it == graph.out[v].end()) {
      return false;
    }
    v = it->second;
  }
  return v == graph.base;
}

// Membership oracle for a subgroup of the free group on `p`'s generators.
inline std::function<bool(Word const&)> free_membership_oracle(
    Presentation const& p, std::vector<Word> const& generators) {
  if (!p.is_free()) {
    throw Error(ErrorCode::oracle,
                "the folding oracle only applies to relator-free "
                "presentations");
  }
  for (auto const& g : generators) {
    if (auto bad = p.unknown_letter(g)) {
      throw Error(ErrorCode::input,
                  "unknown letter '" + std::string(1, *bad) + "' in generator");
    }
  }
  auto graph = std::make_shared<SubgroupGraph const>(fold(generators));
  return [graph](Word const& w) { return oracle_member(w, *graph); };
}

}  // namespace ggt

#endif  // GGT_FREE_ORACLE_HPP_
