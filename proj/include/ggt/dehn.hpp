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

#ifndef GGT_DEHN_HPP_
#define GGT_DEHN_HPP_

#include <algorithm>
#include <cstddef>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "word_problem.hpp"
#include "words.hpp"

namespace ggt {

// Closure of a relator set under inversion and cyclic permutation.
struct SymmetrizedRelators {
  std::vector<Word> words;  // sorted, distinct
  std::size_t min_relator_length = 0;
  std::size_t max_piece_length = 0;

  bool empty() const noexcept { return words.empty(); }
};

inline std::size_t common_prefix_length(Word const& u, Word const& v,
                                        std::size_t v_offset = 0) {
  std::size_t n = 0;
  while (n < u.size() && v_offset + n < v.size() && u[n] == v[v_offset + n]) {
    ++n;
  }
  return n;
}

// An empty result means the group is free on the generators.
inline SymmetrizedRelators symmetrize(Presentation const& p) {
  std::set<Word> all;
  for (auto const& r : p.relators()) {
    for (auto const& base : {r, invert(r)}) {
      for (auto& w : cyclic_permutations(cyclic_reduce(base))) {
        all.insert(std::move(w));
      }
    }
  }
  SymmetrizedRelators s;
  s.words.assign(all.begin(), all.end());
  if (s.words.empty()) {
    return s;
  }
  s.min_relator_length = s.words.front().size();
  for (auto const& w : s.words) {
    s.min_relator_length = std::min(s.min_relator_length, w.size());
  }
  // A piece is a common prefix of two distinct words; over a sorted list the
  // longest one is shared by some adjacent pair.
  for (std::size_t i = 1; i < s.words.size(); ++i) {
    s.max_piece_length = std::max(
        s.max_piece_length, common_prefix_length(s.words[i - 1], s.words[i]));
  }
  return s;
}

// lambda = piece / min_length, kept as an exact fraction.
struct CancellationRatio {
  std::size_t piece = 0;
  std::size_t min_length = 1;

  // Small cancellation C'(1/6): lambda < 1/6.
  bool satisfies_c16() const noexcept { return 6 * piece < min_length; }

  friend bool operator==(CancellationRatio const& x,
                         CancellationRatio const& y) {
    return x.piece * y.min_length == y.piece * x.min_length;
  }
};

inline CancellationRatio cancellation_ratio(SymmetrizedRelators const& s) {
  if (s.empty()) {
    throw Error(ErrorCode::precondition,
                "cancellation ratio of an empty relator set");
  }
  return {s.max_piece_length, s.min_relator_length};
}

// Upgrades `unverified` to `verified-C16` when the symmetrized relators
// satisfy C'(1/6). A trusted presentation is left alone.
inline SymmetrizedRelators certify(Presentation& p) {
  SymmetrizedRelators s = symmetrize(p);
  if (!s.empty() && p.dehn_status() == DehnStatus::unverified
      && cancellation_ratio(s).satisfies_c16()) {
    p.set_dehn_status(DehnStatus::verified_c16);
  }
  return s;
}

struct DehnStep {
  std::size_t position = 0;
  Word relator;
  Word replaced;     // v, a prefix of the relator with 2|v| > |r|
  Word replacement;  // u^-1 where relator = v u
};

struct DehnTrace {
  Word input;
  std::vector<DehnStep> steps;
  Word final_word;
};

namespace detail {

struct DehnMatch {
  std::size_t position;
  std::size_t relator;
  std::size_t length;
};

// Leftmost position first; at that position the longest v, ties broken by
// the smallest relator (s.words is sorted).
inline std::optional<DehnMatch> find_dehn_match(Word const& w,
                                                SymmetrizedRelators const& s) {
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    std::optional<DehnMatch> best;
    for (std::size_t i = 0; i < s.words.size(); ++i) {
      Word const& r = s.words[i];
      std::size_t len = common_prefix_length(r, w, pos);
      if (2 * len > r.size() && (!best || len > best->length)) {
        best = DehnMatch{pos, i, len};
      }
    }
    if (best) {
      return best;
    }
  }
  return std::nullopt;
}

}  // namespace detail

// Dehn's algorithm. The input is freely reduced first; every step strictly
// shortens the word, so there are at most |w| steps.
inline DehnTrace dehn_reduce(Word const& w, SymmetrizedRelators const& s) {
  DehnTrace trace;
  trace.input = w;
  Word current = free_reduce(w);
  while (auto m = detail::find_dehn_match(current, s)) {
    Word const& r = s.words[m->relator];
    DehnStep step;
    step.position = m->position;
    step.relator = r;
    step.replaced = r.subword(0, m->length);
    step.replacement = invert(r.subword(m->length));
    current = free_reduce(current.subword(0, m->position) * step.replacement
                          * current.subword(m->position + m->length));
    trace.steps.push_back(std::move(step));
  }
  trace.final_word = std::move(current);
  return trace;
}

inline bool is_equal(Word const& u, Word const& v,
                     SymmetrizedRelators const& s) {
  return dehn_reduce(free_reduce(u * invert(v)), s).final_word.empty();
}

inline WordProblem dehn_word_problem(SymmetrizedRelators s, bool reliable) {
  auto shared = std::make_shared<SymmetrizedRelators const>(std::move(s));
  WordProblem wp;
  wp.name = "dehn";
  wp.reliable = reliable;
  wp.is_trivial = [shared](Word const& w) {
    return dehn_reduce(w, *shared).final_word.empty();
  };
  wp.shorten = [shared](Word const& w) {
    return dehn_reduce(w, *shared).final_word;
  };
  return wp;
}

// Free reduction for relator-free presentations, Dehn's algorithm
// otherwise. Certifies `p` as a side effect.
inline WordProblem word_problem_for(Presentation& p) {
  if (p.is_free()) {
    return free_word_problem();
  }
  SymmetrizedRelators s = certify(p);
  WordProblem wp = dehn_word_problem(std::move(s),
                                     p.dehn_status() != DehnStatus::unverified);
  wp.invariant = abelianization_invariant(p);
  return wp;
}

}  // namespace ggt

#endif  // GGT_DEHN_HPP_
