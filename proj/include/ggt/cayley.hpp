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

#ifndef GGT_CAYLEY_HPP_
#define GGT_CAYLEY_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <deque>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hpp"
#include "word_problem.hpp"
#include "words.hpp"

namespace ggt {

using VertexId = std::size_t;

inline constexpr std::size_t unreachable = std::numeric_limits<std::size_t>::max();

// The radius-R ball of the Cayley graph around the identity, built by BFS
// over right multiplication by signed generators. Vertex 0 is the identity;
// vertices are numbered layer by layer, and inside a layer in lexicographic
// order of their representative words. A representative is a geodesic word.
//
// Deduplication goes through the word problem: a normal form when one
// exists, pairwise equality tests otherwise. A neighbour of a vertex in
// layer k lies in layer k-1, k or k+1, so only those layers are compared.
class Ball {
 public:
  Ball(Presentation presentation, WordProblem word_problem, Limits limits = {})
      : _presentation(std::move(presentation)),
        _wp(std::move(word_problem)),
        _limits(limits),
        _letters(_presentation.letters()) {
    _letter_index.fill(-1);
    for (std::size_t i = 0; i < _letters.size(); ++i) {
      _letter_index[static_cast<unsigned char>(_letters[i])]
          = static_cast<int>(i);
    }
    _layer_start = {0};
    add_vertex(Word{}, 0);
    _layer_start.push_back(1);
    link_within_layer(0);
  }

  Presentation const& presentation() const noexcept { return _presentation; }
  WordProblem const& word_problem() const noexcept { return _wp; }
  Limits const& limits() const noexcept { return _limits; }
  std::vector<char> const& letters() const noexcept { return _letters; }

  std::size_t radius() const noexcept { return _layer_start.size() - 2; }
  std::size_t size() const noexcept { return _words.size(); }

  Word const& word(VertexId v) const { return _words.at(v); }
  std::size_t layer(VertexId v) const { return _layers.at(v); }

  // Vertices of layer k are [layer_begin(k), layer_end(k)).
  VertexId layer_begin(std::size_t k) const { return _layer_start.at(k); }
  VertexId layer_end(std::size_t k) const { return _layer_start.at(k + 1); }

  // Number of vertices with layer <= k.
  std::size_t count_within(std::size_t k) const {
    return _layer_start.at(std::min(k, radius()) + 1);
  }

  std::optional<VertexId> neighbor(VertexId v, char c) const {
    int const i = _letter_index[static_cast<unsigned char>(c)];
    if (i < 0) {
      return std::nullopt;
    }
    VertexId const to = _edges.at(v)[static_cast<std::size_t>(i)];
    if (to == unreachable) {
      return std::nullopt;
    }
    return to;
  }

  void grow_to(std::size_t r) {
    while (radius() < r) {
      grow_one_layer();
    }
  }

  // Finds the vertex equal to `w`, searching layers up to `max_layer`
  // (default: the whole ball).
  std::optional<VertexId> locate(
      Word const& w, std::size_t max_layer = unreachable) const {
    Word const s = _wp.shorten(w);
    if (_wp.normal_form) {
      auto it = _by_key.find(_wp.normal_form(s));
      if (it == _by_key.end()) {
        return std::nullopt;
      }
      for (VertexId v : it->second) {
        if (layer(v) <= max_layer) {
          return v;
        }
      }
      return std::nullopt;
    }
    std::size_t const top = std::min(radius(), max_layer);
    for (std::size_t k = 0; k <= top; ++k) {
      if (auto v = locate_in_layer(s, k)) {
        return v;
      }
    }
    return std::nullopt;
  }

  std::optional<VertexId> locate_in_layer(Word const& w, std::size_t k) const {
    if (k > radius()) {
      return std::nullopt;
    }
    for (VertexId v : bucket(w)) {
      if (layer(v) == k && _wp.equal(w, _words[v])) {
        return v;
      }
    }
    return std::nullopt;
  }

  // BFS distances inside the ball; `unreachable` for none (cannot happen
  // for a connected ball, kept for safety of callers).
  std::vector<std::size_t> distances_from(VertexId source) const {
    std::vector<std::size_t> dist(size(), unreachable);
    std::deque<VertexId> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
      VertexId const v = queue.front();
      queue.pop_front();
      for (VertexId to : _edges[v]) {
        if (to != unreachable && dist[to] == unreachable) {
          dist[to] = dist[v] + 1;
          queue.push_back(to);
        }
      }
    }
    return dist;
  }

  // Multi-source variant: distance to the nearest of `sources`.
  std::vector<std::size_t> distances_from(
      std::vector<VertexId> const& sources) const {
    std::vector<std::size_t> dist(size(), unreachable);
    std::deque<VertexId> queue;
    for (VertexId s : sources) {
      if (dist[s] == unreachable) {
        dist[s] = 0;
        queue.push_back(s);
      }
    }
    while (!queue.empty()) {
      VertexId const v = queue.front();
      queue.pop_front();
      for (VertexId to : _edges[v]) {
        if (to != unreachable && dist[to] == unreachable) {
          dist[to] = dist[v] + 1;
          queue.push_back(to);
        }
      }
    }
    return dist;
  }

 private:
  std::string key_of(Word const& w) const {
    if (_wp.normal_form) {
      return _wp.normal_form(w);
    }
    if (_wp.invariant) {
      return _wp.invariant(w);
    }
    return {};
  }

  std::vector<VertexId> const& bucket(Word const& w) const {
    static std::vector<VertexId> const none;
    auto it = _by_key.find(key_of(w));
    return it == _by_key.end() ? none : it->second;
  }

  VertexId add_vertex(Word w, std::size_t layer) {
    if (_words.size() >= _limits.max_states) {
      resource_exceeded("ball vertex count", _limits.max_states);
    }
    VertexId const id = _words.size();
    _by_key[key_of(w)].push_back(id);
    _words.push_back(std::move(w));
    _layers.push_back(layer);
    _edges.emplace_back(_letters.size(), unreachable);
    return id;
  }

  void link(VertexId from, std::size_t letter_idx, VertexId to) {
    _edges[from][letter_idx] = to;
    int const back
        = _letter_index[static_cast<unsigned char>(
            letter::inverse(_letters[letter_idx]))];
    _edges[to][static_cast<std::size_t>(back)] = from;
  }

  void link_within_layer(std::size_t k) {
    for (VertexId v = layer_begin(k); v < layer_end(k); ++v) {
      for (std::size_t i = 0; i < _letters.size(); ++i) {
        if (_edges[v][i] != unreachable) {
          continue;
        }
        Word const c = free_reduce(_words[v] * Word(std::string(1, _letters[i])));
        if (auto u = locate_in_layer(c, k)) {
          link(v, i, *u);
        }
      }
    }
  }

  void grow_one_layer() {
    std::size_t const k = radius();
    struct Candidate {
      Word word;
      VertexId from;
      std::size_t letter_idx;
    };
    std::vector<Candidate> candidates;
    for (VertexId v = layer_begin(k); v < layer_end(k); ++v) {
      for (std::size_t i = 0; i < _letters.size(); ++i) {
        if (_edges[v][i] == unreachable) {
          candidates.push_back(
              {_words[v] * Word(std::string(1, _letters[i])), v, i});
        }
      }
    }
    std::sort(candidates.begin(), candidates.end(),
              [](Candidate const& x, Candidate const& y) {
                return std::tie(x.word, x.from, x.letter_idx)
                       < std::tie(y.word, y.from, y.letter_idx);
              });
    VertexId const first_new = size();
    for (auto& c : candidates) {
      std::optional<VertexId> match;
      for (VertexId u : bucket(c.word)) {
        if (u >= first_new
            && (c.word == _words[u] || _wp.equal(c.word, _words[u]))) {
          match = u;
          break;
        }
      }
      if (!match) {
        match = add_vertex(c.word, k + 1);
      }
      link(c.from, c.letter_idx, *match);
    }
    _layer_start.push_back(size());
    link_within_layer(k + 1);
  }

  Presentation _presentation;
  WordProblem _wp;
  Limits _limits;
  std::vector<char> _letters;
  std::array<int, 128> _letter_index{};
  std::vector<Word> _words;
  std::vector<std::size_t> _layers;
  std::vector<std::size_t> _layer_start;
  std::vector<std::vector<VertexId>> _edges;
  std::unordered_map<std::string, std::vector<VertexId>> _by_key;
};

inline Ball build_ball(Presentation const& p, std::size_t radius,
                       WordProblem wp, Limits limits = {}) {
  Ball ball(p, std::move(wp), limits);
  ball.grow_to(radius);
  return ball;
}

// Geodesic length by growing the ball until an equal vertex appears. The
// freely reduced word bounds the search radius.
inline std::size_t ball_geodesic_length(Word const& g, Ball& ball) {
  Word const w = ball.word_problem().shorten(free_reduce(g));
  for (std::size_t k = 0; k <= w.size(); ++k) {
    ball.grow_to(k);
    if (ball.locate_in_layer(w, k)) {
      return k;
    }
  }
  throw Error(ErrorCode::inconsistency,
              "no vertex equal to '" + to_string(g)
                  + "' within its own length; the word problem is unsound");
}

// Uses the word problem's exact length when it has one.
inline std::size_t geodesic_length(Word const& g, Ball& ball) {
  if (ball.word_problem().geodesic_length) {
    return ball.word_problem().geodesic_length(g);
  }
  return ball_geodesic_length(g, ball);
}

// Geodesic length if it is at most `bound`; grows the ball no further than
// `bound`. On success the ball covers the returned layer.
inline std::optional<std::size_t> bounded_geodesic_length(Word const& g,
                                                          Ball& ball,
                                                          std::size_t bound) {
  WordProblem const& wp = ball.word_problem();
  if (wp.geodesic_length) {
    std::size_t const n = wp.geodesic_length(g);
    if (n > bound) {
      return std::nullopt;
    }
    ball.grow_to(n);
    return n;
  }
  Word const w = wp.shorten(free_reduce(g));
  std::size_t const top = std::min(bound, w.size());
  for (std::size_t k = 0; k <= top; ++k) {
    ball.grow_to(k);
    if (ball.locate_in_layer(w, k)) {
      return k;
    }
  }
  return std::nullopt;
}

// A geodesic word for `g`.
inline Word geodesic_word(Word const& g, Ball& ball) {
  WordProblem const& wp = ball.word_problem();
  if (wp.geodesic_length) {
    Word s = wp.shorten(free_reduce(g));
    if (s.size() == wp.geodesic_length(g)) {
      return s;
    }
  }
  std::size_t const n = ball_geodesic_length(g, ball);
  return ball.word(*ball.locate_in_layer(wp.shorten(free_reduce(g)), n));
}

// Vertices visited by reading `label` from `start`; throws if the path
// leaves the ball.
inline std::vector<VertexId> trace_path(Ball const& ball, VertexId start,
                                        Word const& label) {
  std::vector<VertexId> path{start};
  for (char c : label) {
    auto next = ball.neighbor(path.back(), c);
    if (!next) {
      throw Error(ErrorCode::precondition,
                  "path '" + to_string(label) + "' leaves the ball");
    }
    path.push_back(*next);
  }
  return path;
}

struct GeodesicSet {
  VertexId from = 0;
  VertexId to = 0;
  std::size_t distance = 0;
  std::vector<Word> words;  // sorted
};

// Every label of a shortest path from `from` to `to` that stays inside the
// ball.
inline GeodesicSet enumerate_geodesics(Ball const& ball, VertexId from,
                                       VertexId to,
                                       std::vector<std::size_t> const& dist_to) {
  GeodesicSet out;
  out.from = from;
  out.to = to;
  out.distance = dist_to.at(from);
  std::size_t const cap = ball.limits().max_geodesics;
  Word label;
  auto rec = [&](auto&& self, VertexId v) -> void {
    if (v == to) {
      if (out.words.size() >= cap) {
        resource_exceeded("geodesic count", cap);
      }
      out.words.push_back(label);
      return;
    }
    for (char c : ball.letters()) {
      auto next = ball.neighbor(v, c);
      if (next && dist_to[*next] + 1 == dist_to[v]) {
        label.push_back(c);
        self(self, *next);
        label.pop_back();
      }
    }
  };
  if (out.distance != unreachable) {
    rec(rec, from);
  }
  return out;
}

inline GeodesicSet enumerate_geodesics(Ball const& ball, VertexId from,
                                       VertexId to) {
  return enumerate_geodesics(ball, from, to, ball.distances_from(to));
}

namespace detail {

// Lazily filled all-pairs distance table.
class DistanceCache {
 public:
  explicit DistanceCache(Ball const& ball) : _ball(ball), _rows(ball.size()) {}

  std::vector<std::size_t> const& from(VertexId v) {
    if (_rows[v].empty()) {
      _rows[v] = _ball.distances_from(v);
    }
    return _rows[v];
  }

  std::size_t operator()(VertexId u, VertexId v) { return from(u)[v]; }

 private:
  Ball const& _ball;
  std::vector<std::vector<std::size_t>> _rows;
};

}  // namespace detail

struct SlimViolation {
  std::array<VertexId, 3> triangle{};
  VertexId side_from = 0;
  VertexId side_to = 0;
  Word side;            // label of the offending side, read from side_from
  VertexId vertex = 0;  // vertex on that side
  std::size_t distance = 0;  // > delta, to the union of the other sides
};

// Checks one triangle against every choice of geodesic sides. A vertex p
// on a side violates slimness when some choice of the two other sides keeps
// both farther than delta from p; those choices are independent, so each
// side is maximized separately.
inline std::optional<SlimViolation> check_triangle(
    Ball const& ball, std::array<VertexId, 3> const& t, std::size_t delta,
    detail::DistanceCache& dist) {
  struct Side {
    VertexId from;
    VertexId to;
    std::vector<Word> words;
    std::vector<std::vector<VertexId>> paths;
  };
  std::array<Side, 3> sides;
  for (std::size_t i = 0; i < 3; ++i) {
    VertexId const a = t[i];
    VertexId const b = t[(i + 1) % 3];
    GeodesicSet g = enumerate_geodesics(ball, a, b, dist.from(b));
    sides[i].from = a;
    sides[i].to = b;
    for (auto& w : g.words) {
      sides[i].paths.push_back(trace_path(ball, a, w));
      sides[i].words.push_back(std::move(w));
    }
  }
  auto farthest_choice = [&](Side const& side, VertexId p) {
    std::size_t worst = 0;
    for (auto const& path : side.paths) {
      std::size_t best = unreachable;
      for (VertexId q : path) {
        best = std::min(best, dist(p, q));
      }
      worst = std::max(worst, best);
    }
    return worst;
  };
  for (std::size_t i = 0; i < 3; ++i) {
    Side const& s = sides[i];
    for (std::size_t j = 0; j < s.paths.size(); ++j) {
      for (VertexId p : s.paths[j]) {
        std::size_t const d = std::min(farthest_choice(sides[(i + 1) % 3], p),
                                       farthest_choice(sides[(i + 2) % 3], p));
        if (d > delta) {
          return SlimViolation{t, s.from, s.to, s.words[j], p, d};
        }
      }
    }
  }
  return std::nullopt;
}

inline std::optional<SlimViolation> check_triangle(
    Ball const& ball, std::array<VertexId, 3> const& t, std::size_t delta) {
  detail::DistanceCache dist(ball);
  return check_triangle(ball, t, delta, dist);
}

struct SlimOptions {
  // Triangle corners are restricted to this radius; default floor(R/2).
  std::optional<std::size_t> inner_radius;
};

// One-sided: a violation proves delta too small for the group, a clean
// result says nothing beyond the ball.
inline std::optional<SlimViolation> check_slim(Ball const& ball,
                                               std::size_t delta,
                                               SlimOptions options = {}) {
  std::size_t const inner = options.inner_radius.value_or(ball.radius() / 2);
  std::size_t const n = ball.count_within(inner);
  detail::DistanceCache dist(ball);
  for (VertexId x = 0; x < n; ++x) {
    for (VertexId y = x; y < n; ++y) {
      for (VertexId z = y; z < n; ++z) {
        if (auto v = check_triangle(ball, {x, y, z}, delta, dist)) {
          return v;
        }
      }
    }
  }
  return std::nullopt;
}

struct QuasiconvexityViolation {
  VertexId from = 0;
  VertexId to = 0;
  Word geodesic;
  VertexId vertex = 0;
  std::size_t distance = 0;  // > K, to the nearest listed subgroup element
};

// Every geodesic between two listed subgroup elements must stay within K of
// the listed elements; distances are measured inside the ball.
inline std::optional<QuasiconvexityViolation> check_quasiconvex(
    Ball const& ball, std::vector<VertexId> const& h_elements, std::size_t k) {
  if (h_elements.empty()) {
    return std::nullopt;
  }
  std::vector<std::size_t> const near_h = ball.distances_from(h_elements);
  for (std::size_t j = 0; j < h_elements.size(); ++j) {
    std::vector<std::size_t> const dist_to = ball.distances_from(h_elements[j]);
    for (std::size_t i = 0; i < j; ++i) {
      GeodesicSet const g
          = enumerate_geodesics(ball, h_elements[i], h_elements[j], dist_to);
      for (auto const& w : g.words) {
        for (VertexId p : trace_path(ball, h_elements[i], w)) {
          if (near_h[p] > k) {
            return QuasiconvexityViolation{h_elements[i], h_elements[j], w, p,
                                           near_h[p]};
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace ggt

#endif  // GGT_CAYLEY_HPP_
