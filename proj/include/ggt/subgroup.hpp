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

#ifndef GGT_SUBGROUP_HPP_
#define GGT_SUBGROUP_HPP_

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cayley.hpp"
#include "error.hpp"
#include "word_problem.hpp"
#include "words.hpp"

namespace ggt {

using MembershipOracle = std::function<bool(Word const&)>;

// A subgroup H given by generators, with an asserted quasiconvexity
// constant K.
struct SubgroupSpec {
  std::vector<Word> generators;
  std::size_t k = 0;
};

enum class NielsenMode { oracle_filter, generator_product };

inline std::string_view to_string(NielsenMode m) {
  return m == NielsenMode::oracle_filter ? "oracle-filter"
                                         : "generator-product";
}

// S = (H intersected with the ball of radius 2K+1) minus the identity, as
// geodesic words. In generator-product mode S is only complete relative to
// the product depth.
struct NielsenSet {
  std::vector<Word> elements;  // shortlex sorted
  NielsenMode mode = NielsenMode::oracle_filter;
  std::size_t depth = 0;
  std::size_t k = 0;

  std::size_t length_bound() const noexcept { return 2 * k + 1; }
};

// s = l n r with n non-empty.
struct Factor {
  Word s;
  Word l;
  Word n;
  Word r;
};

// h = s_1 ... s_m. When `aligned`, the geodesic word for h satisfies
// geodesic == l_1 n_1 n_2 ... n_m r_m letter for letter; otherwise each
// factor is recorded as l = r = 1, n = s.
struct FactorWitness {
  std::vector<Factor> factors;
  Word geodesic;
  bool aligned = true;
};

namespace detail {

// Group elements deduplicated under the word problem: by normal form when
// available, by pairwise equality inside invariant buckets otherwise.
class ElementSet {
 public:
  explicit ElementSet(WordProblem const& wp) : _wp(wp) {}

  // Index of an element equal to w, inserting w if new.
  std::pair<std::size_t, bool> insert(Word const& w) {
    std::string const key = key_of(w);
    auto& bucket = _buckets[key];
    if (!_wp.normal_form) {
      for (std::size_t i : bucket) {
        if (_wp.equal(w, _words[i])) {
          return {i, false};
        }
      }
    } else if (!bucket.empty()) {
      return {bucket.front(), false};
    }
    bucket.push_back(_words.size());
    _words.push_back(w);
    return {_words.size() - 1, true};
  }

  Word const& operator[](std::size_t i) const { return _words[i]; }
  std::size_t size() const noexcept { return _words.size(); }

 private:
  std::string key_of(Word const& w) const {
    if (_wp.normal_form) {
      return _wp.normal_form(w);
    }
    return _wp.invariant ? _wp.invariant(w) : std::string{};
  }

  WordProblem const& _wp;
  std::vector<Word> _words;
  std::unordered_map<std::string, std::vector<std::size_t>> _buckets;
};

inline std::vector<Word> sorted_unique(std::vector<Word> words) {
  std::sort(words.begin(), words.end(), shortlex_less);
  words.erase(std::unique(words.begin(), words.end()), words.end());
  return words;
}

// True only when `x` is known to have geodesic length above `bound`
// without growing the ball; unknown lengths count as short, which keeps
// pruning sound.
inline bool provably_longer(Word const& x, std::size_t bound, Ball& ball) {
  WordProblem const& wp = ball.word_problem();
  if (wp.geodesic_length) {
    return wp.geodesic_length(x) > bound;
  }
  if (wp.shorten(x).size() <= bound || ball.radius() < bound) {
    return false;
  }
  return !ball.locate(x, bound);
}

}  // namespace detail

// Non-trivial elements of H with geodesic length <= length_bound reachable
// as products of at most `depth` generators and inverses, as geodesic
// words. Complete only relative to `depth`.
inline std::vector<Word> enumerate_subgroup_ball(SubgroupSpec const& h,
                                                 std::size_t length_bound,
                                                 std::size_t depth,
                                                 Ball& ball) {
  WordProblem const& wp = ball.word_problem();
  std::vector<Word> steps;
  for (auto const& g : h.generators) {
    steps.push_back(free_reduce(g));
    steps.push_back(invert(free_reduce(g)));
  }
  detail::ElementSet seen(wp);
  seen.insert(Word{});
  std::vector<std::size_t> frontier{0};
  std::vector<Word> out;
  for (std::size_t d = 0; d < depth && !frontier.empty(); ++d) {
    std::vector<std::size_t> next;
    for (std::size_t i : frontier) {
      for (auto const& s : steps) {
        Word const x = wp.shorten(seen[i] * s);
        auto const [idx, fresh] = seen.insert(x);
        if (!fresh) {
          continue;
        }
        if (seen.size() > ball.limits().max_states) {
          resource_exceeded("subgroup product states", ball.limits().max_states);
        }
        next.push_back(idx);
        if (wp.is_trivial(x)) {
          continue;
        }
        if (auto n = bounded_geodesic_length(x, ball, length_bound)) {
          out.push_back(ball.word(*ball.locate_in_layer(wp.shorten(x), *n)));
        }
      }
    }
    frontier = std::move(next);
  }
  return detail::sorted_unique(std::move(out));
}

// Builds S = (H ∩ B(2K+1)) \ {1}. Oracle-filter mode tests every ball
// vertex up to radius 2K+1 against `oracle` and is exact; generator-product
// mode enumerates products of up to `depth` generators.
inline NielsenSet build_nielsen_set(SubgroupSpec const& h, Ball& ball,
                                    NielsenMode mode, std::size_t depth = 0,
                                    MembershipOracle const& oracle = {}) {
  NielsenSet s;
  s.mode = mode;
  s.depth = depth;
  s.k = h.k;
  if (mode == NielsenMode::oracle_filter) {
    if (!oracle) {
      throw Error(ErrorCode::oracle,
                  "oracle-filter mode needs a membership oracle");
    }
    if (!h.generators.empty()) {
      ball.grow_to(s.length_bound());
      for (VertexId v = 1; v < ball.count_within(s.length_bound()); ++v) {
        if (oracle(ball.word(v))) {
          s.elements.push_back(ball.word(v));
        }
      }
    }
  } else {
    s.elements = enumerate_subgroup_ball(h, s.length_bound(), depth, ball);
  }
  s.elements = detail::sorted_unique(std::move(s.elements));
  return s;
}

// Searches for factors s_i in S with decompositions s_i = l_i n_i r_i
// (n_i non-empty) such that w == l_1 n_1 ... n_m r_m and s_1 ... s_m == h.
// Longer n_i are tried first. The first factor's l and the last factor's r
// are absorbed into n. The search keeps the defect prefix(w)^-1 * s_1...s_i
// no longer than the longest element of S, so `nullopt` means no such
// bounded decomposition exists.
inline std::optional<FactorWitness> verify_weak_nielsen(NielsenSet const& s,
                                                        Word const& h,
                                                        Word const& w,
                                                        Ball& ball) {
  WordProblem const& wp = ball.word_problem();
  if (!wp.equal(h, w)) {
    throw Error(ErrorCode::precondition,
                "word '" + to_string(w) + "' does not represent '"
                    + to_string(h) + "'");
  }
  FactorWitness witness;
  witness.geodesic = w;
  if (w.empty()) {
    return witness;
  }
  std::size_t bound = 0;
  for (auto const& x : s.elements) {
    bound = std::max(bound, x.size());
  }
  std::size_t const n = w.size();
  std::unordered_set<std::string> dead;
  std::size_t states = 0;

  auto key_of = [&](std::size_t pos, Word const& defect) {
    return std::to_string(pos) + ":"
           + (wp.normal_form ? wp.normal_form(defect) : defect.str());
  };

  auto rec = [&](auto&& self, std::size_t pos, Word const& product) -> bool {
    for (std::size_t q = n; q > pos; --q) {
      Word const piece = w.subword(pos, q - pos);
      for (auto const& x : s.elements) {
        for (std::size_t off = 0; off + piece.size() <= x.size(); ++off) {
          if (pos == 0 && off != 0) {
            break;
          }
          if (q == n && off + piece.size() != x.size()) {
            continue;
          }
          if (x.str().compare(off, piece.size(), piece.str()) != 0) {
            continue;
          }
          Factor f{x, x.subword(0, off), piece, x.subword(off + piece.size())};
          Word const next = wp.shorten(product * x);
          if (q == n) {
            if (wp.equal(next, h)) {
              witness.factors.push_back(std::move(f));
              return true;
            }
            continue;
          }
          Word const defect = wp.shorten(invert(w.subword(0, q)) * next);
          if (defect.size() > bound) {
            continue;
          }
          std::string const key = key_of(q, defect);
          if (dead.contains(key)) {
            continue;
          }
          if (++states > ball.limits().max_states) {
            resource_exceeded("weak Nielsen search states",
                              ball.limits().max_states);
          }
          witness.factors.push_back(std::move(f));
          if (self(self, q, next)) {
            return true;
          }
          witness.factors.pop_back();
          dead.insert(key);
        }
      }
    }
    return false;
  };
  if (rec(rec, 0, Word{})) {
    return witness;
  }
  return std::nullopt;
}

// Checks the witness against its defining identities: the product of the
// factors equals g, m <= |geodesic|, and (when aligned) each s = l n r with
// n non-empty and the n's spell the geodesic between l_1 and r_m.
inline bool verify_witness(FactorWitness const& f, Word const& g,
                           WordProblem const& wp,
                           NielsenSet const* s = nullptr) {
  Word product;
  for (auto const& x : f.factors) {
    product *= x.s;
    if (s != nullptr
        && std::find(s->elements.begin(), s->elements.end(), x.s)
               == s->elements.end()) {
      return false;
    }
  }
  if (!wp.equal(product, g) || !wp.equal(f.geodesic, g)
      || f.factors.size() > f.geodesic.size()) {
    return false;
  }
  if (!f.aligned) {
    return true;
  }
  if (f.factors.empty()) {
    return f.geodesic.empty();
  }
  Word spelled = f.factors.front().l;
  for (auto const& x : f.factors) {
    if (x.n.empty() || x.l * x.n * x.r != x.s) {
      return false;
    }
    spelled *= x.n;
  }
  spelled *= f.factors.back().r;
  return spelled == f.geodesic;
}

struct MembershipVerdict {
  bool member = false;
  std::size_t geodesic_length = 0;
  Word geodesic;
  std::optional<FactorWitness> witness;
};

// Searches products of at most n = |g| elements of S, deduplicated as group
// elements, discarding partial products longer than n + 2K + 1. A member
// verdict comes with a witness; a non-member verdict is sound only if S is
// weakly Nielsen, i.e. K is a valid quasiconvexity constant.
inline MembershipVerdict decide_membership(Word const& g, NielsenSet const& s,
                                           Ball& ball) {
  WordProblem const& wp = ball.word_problem();
  MembershipVerdict out;
  out.geodesic = geodesic_word(g, ball);
  out.geodesic_length = out.geodesic.size();
  std::size_t const n = out.geodesic_length;
  if (n == 0) {
    out.member = true;
    out.witness = FactorWitness{{}, Word{}, true};
    return out;
  }

  detail::ElementSet seen(wp);
  seen.insert(Word{});
  std::vector<std::pair<std::size_t, std::size_t>> parent{{0, 0}};
  std::vector<std::size_t> frontier{0};
  std::optional<std::size_t> hit;
  for (std::size_t depth = 1; depth <= n && !hit && !frontier.empty();
       ++depth) {
    std::vector<std::size_t> next;
    for (std::size_t i : frontier) {
      for (std::size_t j = 0; j < s.elements.size() && !hit; ++j) {
        Word const x = wp.shorten(seen[i] * s.elements[j]);
        auto const [idx, fresh] = seen.insert(x);
        if (!fresh) {
          continue;
        }
        if (seen.size() > ball.limits().max_states) {
          resource_exceeded("membership search states",
                            ball.limits().max_states);
        }
        parent.emplace_back(i, j);
        if (wp.equal(x, g)) {
          hit = idx;
        } else if (!detail::provably_longer(x, n + s.length_bound(), ball)) {
          next.push_back(idx);
        }
      }
      if (hit) {
        break;
      }
    }
    frontier = std::move(next);
  }
  if (!hit) {
    return out;
  }
  out.member = true;
  if (auto aligned = verify_weak_nielsen(s, g, out.geodesic, ball)) {
    out.witness = std::move(aligned);
    return out;
  }
  FactorWitness w;
  w.geodesic = out.geodesic;
  w.aligned = false;
  for (std::size_t v = *hit; v != 0; v = parent[v].first) {
    Word const& x = s.elements[parent[v].second];
    w.factors.push_back({x, Word{}, x, Word{}});
  }
  std::reverse(w.factors.begin(), w.factors.end());
  out.witness = std::move(w);
  return out;
}

// Membership in H through S, as a callable.
inline MembershipOracle nielsen_membership(NielsenSet const& s, Ball& ball) {
  return [&s, &ball](Word const& w) {
    return decide_membership(w, s, ball).member;
  };
}

}  // namespace ggt

#endif  // GGT_SUBGROUP_HPP_
