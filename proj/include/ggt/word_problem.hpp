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

#ifndef GGT_WORD_PROBLEM_HPP_
#define GGT_WORD_PROBLEM_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "words.hpp"

namespace ggt {

// A pluggable solution of the word problem. Only `is_trivial` is required.
// `normal_form`, when set, must return equal keys exactly for equal
// elements; `geodesic_length`, when set, must return the exact word length
// of the element. Both let searches skip pairwise comparisons and ball
// growth.
struct WordProblem {
  std::string name;
  std::function<bool(Word const&)> is_trivial;
  std::function<Word(Word const&)> shorten = free_reduce;
  std::function<std::string(Word const&)> normal_form;
  std::function<std::size_t(Word const&)> geodesic_length;
  // Optional necessary condition for equality: equal elements have equal
  // invariants. Used to bucket candidates before pairwise comparison.
  std::function<std::string(Word const&)> invariant;
  // False when triviality verdicts rest on an unverified Dehn presentation.
  bool reliable = true;

  bool equal(Word const& u, Word const& v) const {
    return is_trivial(free_reduce(u * invert(v)));
  }
};

// Free groups: a word is trivial iff it freely reduces to the empty word.
inline WordProblem free_word_problem() {
  WordProblem wp;
  wp.name = "free";
  wp.is_trivial = [](Word const& w) { return free_reduce(w).empty(); };
  wp.normal_form = [](Word const& w) { return free_reduce(w).str(); };
  wp.geodesic_length = [](Word const& w) { return free_reduce(w).size(); };
  return wp;
}

// Free abelian groups, via exponent-sum vectors. Intended for
// non-hyperbolic negative controls such as Z^2 = <a, b | abAB>.
inline WordProblem abelian_word_problem() {
  auto exponents = [](Word const& w) {
    std::map<char, long> e;
    for (char c : w) {
      e[letter::generator(c)] += letter::is_inverse(c) ? -1 : 1;
    }
    std::erase_if(e, [](auto const& kv) { return kv.second == 0; });
    return e;
  };
  WordProblem wp;
  wp.name = "abelian";
  wp.is_trivial = [exponents](Word const& w) { return exponents(w).empty(); };
  wp.shorten = [exponents](Word const& w) {
    Word out;
    for (auto const& [g, n] : exponents(w)) {
      char c = n > 0 ? g : letter::inverse(g);
      for (long i = 0; i < std::labs(n); ++i) {
        out.push_back(c);
      }
    }
    return out;
  };
  wp.normal_form = [exponents](Word const& w) {
    std::string key;
    for (auto const& [g, n] : exponents(w)) {
      key += g;
      key += std::to_string(n);
      key += ';';
    }
    return key;
  };
  wp.geodesic_length = [exponents](Word const& w) {
    std::size_t len = 0;
    for (auto const& kv : exponents(w)) {
      len += static_cast<std::size_t>(std::labs(kv.second));
    }
    return len;
  };
  return wp;
}

namespace detail {

// Integer basis of the rational null space of `rows` (each of width n).
inline std::vector<std::vector<long long>> integer_null_space(
    std::vector<std::vector<long long>> rows, std::size_t n) {
  // Fraction-free elimination to reduced echelon form.
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) {
      ++piv;
    }
    if (piv == rows.size()) {
      continue;
    }
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) {
        continue;
      }
      long long const a = rows[rank][col];
      long long const b = rows[r][col];
      long long g = 0;
      for (std::size_t c = 0; c < n; ++c) {
        rows[r][c] = rows[r][c] * a - rows[rank][c] * b;
        g = std::gcd(g, rows[r][c]);
      }
      if (g > 1) {
        for (auto& x : rows[r]) {
          x /= g;
        }
      }
    }
    pivot_cols.push_back(col);
    ++rank;
  }
  std::vector<std::vector<long long>> basis;
  for (std::size_t free_col = 0; free_col < n; ++free_col) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), free_col)
        != pivot_cols.end()) {
      continue;
    }
    // x_free = L, x_pivot(i) = -L * rows[i][free] / rows[i][pivot(i)].
    long long scale = 1;
    for (std::size_t i = 0; i < rank; ++i) {
      long long const d = std::llabs(rows[i][pivot_cols[i]]);
      scale = std::lcm(scale, d / std::gcd(d, std::llabs(rows[i][free_col])));
    }
    std::vector<long long> v(n, 0);
    v[free_col] = scale;
    for (std::size_t i = 0; i < rank; ++i) {
      v[pivot_cols[i]] = -scale * rows[i][free_col] / rows[i][pivot_cols[i]];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace detail

// The image of a word in the rational abelianization of <X | R>: exponent
// sums paired against a basis of the vectors orthogonal to every relator's
// exponent vector.
inline std::function<std::string(Word const&)> abelianization_invariant(
    Presentation const& p) {
  auto const& gens = p.generators();
  std::vector<std::vector<long long>> rows;
  for (auto const& r : p.relators()) {
    std::vector<long long> row(gens.size(), 0);
    for (char c : r) {
      auto const i = static_cast<std::size_t>(
          std::find(gens.begin(), gens.end(), letter::generator(c))
          - gens.begin());
      row[i] += letter::is_inverse(c) ? -1 : 1;
    }
    rows.push_back(std::move(row));
  }
  auto basis = detail::integer_null_space(std::move(rows), gens.size());
  return [gens, basis](Word const& w) {
    std::vector<long long> e(gens.size(), 0);
    for (char c : w) {
      auto const i = static_cast<std::size_t>(
          std::find(gens.begin(), gens.end(), letter::generator(c))
          - gens.begin());
      e[i] += letter::is_inverse(c) ? -1 : 1;
    }
    std::string key;
    for (auto const& v : basis) {
      key += std::to_string(std::inner_product(v.begin(), v.end(), e.begin(),
                                               0LL));
      key += ',';
    }
    return key;
  };
}

}  // namespace ggt

#endif  // GGT_WORD_PROBLEM_HPP_
