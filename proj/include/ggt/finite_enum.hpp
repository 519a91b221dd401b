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

#ifndef GGT_FINITE_ENUM_HPP_
#define GGT_FINITE_ENUM_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace ggt {

// A finite group given by its Cayley table. Elements are 0..order-1.
class MultTable {
 public:
  MultTable() = default;

  MultTable(std::size_t order, std::vector<std::uint32_t> cells,
            std::size_t identity = 0)
      : _order(order), _cells(std::move(cells)), _identity(identity) {
    if (_cells.size() != _order * _order) {
      throw Error(ErrorCode::input, "table size does not match the order");
    }
  }

  std::size_t order() const noexcept { return _order; }
  std::size_t identity() const noexcept { return _identity; }
  std::vector<std::uint32_t> const& cells() const noexcept { return _cells; }

  std::size_t operator()(std::size_t a, std::size_t b) const {
    return _cells[a * _order + b];
  }

  friend bool operator==(MultTable const&, MultTable const&) = default;

 private:
  std::size_t _order = 0;
  std::vector<std::uint32_t> _cells;
  std::size_t _identity = 0;
};

// Latin square, two-sided identity and associativity.
inline bool is_group_table(MultTable const& t) {
  std::size_t const n = t.order();
  if (n == 0 || t.identity() >= n) {
    return false;
  }
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<bool> row(n, false);
    std::vector<bool> col(n, false);
    for (std::size_t b = 0; b < n; ++b) {
      if (t(a, b) >= n || t(b, a) >= n || row[t(a, b)] || col[t(b, a)]) {
        return false;
      }
      row[t(a, b)] = true;
      col[t(b, a)] = true;
    }
    if (t(t.identity(), a) != a || t(a, t.identity()) != a) {
      return false;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (t(t(a, b), c) != t(a, t(b, c))) {
          return false;
        }
      }
    }
  }
  return true;
}

inline bool is_abelian(MultTable const& t) {
  for (std::size_t a = 0; a < t.order(); ++a) {
    for (std::size_t b = a + 1; b < t.order(); ++b) {
      if (t(a, b) != t(b, a)) {
        return false;
      }
    }
  }
  return true;
}

inline std::size_t element_order(MultTable const& t, std::size_t a) {
  std::size_t k = 1;
  for (std::size_t x = a; x != t.identity(); x = t(x, a)) {
    ++k;
  }
  return k;
}

inline std::vector<std::size_t> element_order_profile(MultTable const& t) {
  std::vector<std::size_t> orders;
  for (std::size_t a = 0; a < t.order(); ++a) {
    orders.push_back(element_order(t, a));
  }
  std::sort(orders.begin(), orders.end());
  return orders;
}

// C = (2|X|)^(2 delta + 1) + 1.
struct BradyBound {
  std::uint64_t generator_count = 0;
  std::uint64_t delta = 0;
  std::uint64_t c = 0;
};

inline BradyBound brady_bound(std::uint64_t generator_count,
                              std::uint64_t delta) {
  if (generator_count == 0) {
    throw Error(ErrorCode::usage, "generator count must be positive");
  }
  auto overflow = [] {
    throw Error(ErrorCode::resource,
                "Brady bound does not fit in 64 bits");
  };
  if (delta > (UINT64_MAX - 1) / 2 || generator_count > UINT64_MAX / 2) {
    overflow();
  }
  std::uint64_t const base = 2 * generator_count;
  std::uint64_t const exponent = 2 * delta + 1;
  std::uint64_t value = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (value > UINT64_MAX / base) {
      overflow();
    }
    value *= base;
  }
  if (value == UINT64_MAX) {
    overflow();
  }
  return {generator_count, delta, value + 1};
}

namespace detail {

// A generating sequence chosen greedily in element order.
inline std::vector<std::size_t> greedy_generators(MultTable const& t) {
  std::size_t const n = t.order();
  std::vector<std::size_t> gens;
  std::vector<bool> in(n, false);
  std::size_t members = 1;
  in[t.identity()] = true;
  for (std::size_t g = 0; g < n && members < n; ++g) {
    if (in[g]) {
      continue;
    }
    gens.push_back(g);
    // Right-multiplication closure of the identity under gens.
    std::fill(in.begin(), in.end(), false);
    std::vector<std::size_t> queue{t.identity()};
    in[t.identity()] = true;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (std::size_t s : gens) {
        std::size_t const x = t(queue[i], s);
        if (!in[x]) {
          in[x] = true;
          queue.push_back(x);
        }
      }
    }
    members = queue.size();
  }
  return gens;
}

// Extends a generator assignment to a map of the whole group by
// right-multiplication closure, rejecting inconsistencies.
inline std::optional<std::vector<std::size_t>> extend_map(
    MultTable const& t1, MultTable const& t2,
    std::vector<std::size_t> const& gens, std::vector<std::size_t> const& imgs) {
  std::size_t const n = t1.order();
  std::vector<std::size_t> map(n, n);
  map[t1.identity()] = t2.identity();
  std::vector<std::size_t> queue{t1.identity()};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    std::size_t const x = queue[i];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      std::size_t const y = t1(x, gens[j]);
      std::size_t const fy = t2(map[x], imgs[j]);
      if (map[y] == n) {
        map[y] = fy;
        queue.push_back(y);
      } else if (map[y] != fy) {
        return std::nullopt;
      }
    }
  }
  std::vector<bool> hit(n, false);
  for (std::size_t x = 0; x < n; ++x) {
    if (map[x] == n || hit[map[x]]) {
      return std::nullopt;
    }
    hit[map[x]] = true;
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (map[t1(a, b)] != t2(map[a], map[b])) {
        return std::nullopt;
      }
    }
  }
  return map;
}

}  // namespace detail

// Returns a product-preserving bijection t1 -> t2, or nothing. Order,
// commutativity and the element-order multiset are compared first; then
// images of a generating sequence of t1 are searched among elements of the
// same order.
inline std::optional<std::vector<std::size_t>> is_isomorphic(
    MultTable const& t1, MultTable const& t2) {
  if (t1.order() != t2.order() || is_abelian(t1) != is_abelian(t2)
      || element_order_profile(t1) != element_order_profile(t2)) {
    return std::nullopt;
  }
  std::vector<std::size_t> const gens = detail::greedy_generators(t1);
  std::vector<std::size_t> orders2;
  for (std::size_t b = 0; b < t2.order(); ++b) {
    orders2.push_back(element_order(t2, b));
  }
  std::vector<std::size_t> imgs(gens.size());
  auto rec = [&](auto&& self, std::size_t i)
      -> std::optional<std::vector<std::size_t>> {
    if (i == gens.size()) {
      return detail::extend_map(t1, t2, gens, imgs);
    }
    std::size_t const want = element_order(t1, gens[i]);
    for (std::size_t b = 0; b < t2.order(); ++b) {
      if (orders2[b] == want) {
        imgs[i] = b;
        if (auto m = self(self, i + 1)) {
          return m;
        }
      }
    }
    return std::nullopt;
  };
  return rec(rec, 0);
}

// Row-major cells under the relabeling (identity fixed to 0) that makes them
// lexicographically smallest.
inline std::vector<std::uint32_t> canonical_encoding(MultTable const& t) {
  std::size_t const n = t.order();
  // perm[new] = old; the identity must take label 0 for a minimal first row.
  std::vector<std::size_t> perm;
  perm.push_back(t.identity());
  for (std::size_t x = 0; x < n; ++x) {
    if (x != t.identity()) {
      perm.push_back(x);
    }
  }
  std::vector<std::uint32_t> best;
  std::vector<std::size_t> inv(n);
  std::vector<std::uint32_t> current(n * n);
  do {
    for (std::size_t i = 0; i < n; ++i) {
      inv[perm[i]] = i;
    }
    bool smaller = best.empty();
    bool stop = false;
    for (std::size_t cell = 0; cell < n * n && !stop; ++cell) {
      auto const v = static_cast<std::uint32_t>(
          inv[t(perm[cell / n], perm[cell % n])]);
      current[cell] = v;
      if (!smaller) {
        if (v < best[cell]) {
          smaller = true;
        } else if (v > best[cell]) {
          stop = true;
        }
      }
    }
    if (smaller && !stop) {
      best = current;
    }
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return best;
}

inline constexpr std::size_t default_group_order_cap = 10;

namespace detail {

// Backtracking over Cayley tables with identity 0. Cells are filled in
// square shells: shell m holds the cells with max(a, b) == m. Each
// assignment is checked against the Latin property and every associativity
// constraint whose products are already known. Labels never seen so far are
// interchangeable, so only the smallest of them is tried (least-number
// heuristic).
class TableSearch {
 public:
  explicit TableSearch(std::size_t n)
      : _n(n), _cells(n * n, kUnset), _row_used(n * n, false),
        _col_used(n * n, false) {
    for (std::size_t a = 0; a < n; ++a) {
      set(0, a, a);
      set(a, 0, a);
    }
    for (std::size_t m = 1; m < n; ++m) {
      for (std::size_t a = 1; a < m; ++a) {
        _order.emplace_back(a, m);
      }
      for (std::size_t b = 1; b <= m; ++b) {
        _order.emplace_back(m, b);
      }
    }
  }

  template <typename Visit>
  void run(Visit&& visit) {
    fill(0, 0, visit);
  }

 private:
  static constexpr std::uint32_t kUnset = UINT32_MAX;

  std::uint32_t get(std::size_t a, std::size_t b) const {
    return _cells[a * _n + b];
  }

  void set(std::size_t a, std::size_t b, std::size_t v) {
    _cells[a * _n + b] = static_cast<std::uint32_t>(v);
    _row_used[a * _n + v] = true;
    _col_used[b * _n + v] = true;
  }

  void unset(std::size_t a, std::size_t b) {
    std::size_t const v = get(a, b);
    _cells[a * _n + b] = kUnset;
    _row_used[a * _n + v] = false;
    _col_used[b * _n + v] = false;
  }

  // (x*y)*z == x*(y*z) for every triple touching the cell (a, b).
  bool consistent(std::size_t a, std::size_t b) const {
    std::uint32_t const ab = get(a, b);
    for (std::size_t w = 0; w < _n; ++w) {
      // (w*a)*b vs w*(a*b)
      std::uint32_t const wa = get(w, a);
      if (wa != kUnset) {
        std::uint32_t const lhs = get(wa, b);
        std::uint32_t const rhs = get(w, ab);
        if (lhs != kUnset && rhs != kUnset && lhs != rhs) {
          return false;
        }
      }
      // (a*b)*w vs a*(b*w)
      std::uint32_t const bw = get(b, w);
      if (bw != kUnset) {
        std::uint32_t const lhs = get(ab, w);
        std::uint32_t const rhs = get(a, bw);
        if (lhs != kUnset && rhs != kUnset && lhs != rhs) {
          return false;
        }
      }
    }
    // Triples where (a, b) is the outer product.
    for (std::size_t x = 0; x < _n; ++x) {
      for (std::size_t y = 0; y < _n; ++y) {
        // (x*y)*b with x*y == a, against x*(y*b)
        if (get(x, y) == a) {
          std::uint32_t const yb = get(y, b);
          if (yb != kUnset) {
            std::uint32_t const rhs = get(x, yb);
            if (rhs != kUnset && rhs != ab) {
              return false;
            }
          }
        }
        // a*(x*y) with x*y == b, against (a*x)*y
        if (get(x, y) == b) {
          std::uint32_t const ax = get(a, x);
          if (ax != kUnset) {
            std::uint32_t const lhs = get(ax, y);
            if (lhs != kUnset && lhs != ab) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

  template <typename Visit>
  void fill(std::size_t step, std::size_t max_seen, Visit& visit) {
    if (step == _order.size()) {
      visit(MultTable(_n, _cells, 0));
      return;
    }
    auto const [a, b] = _order[step];
    std::size_t const seen = std::max({max_seen, a, b});
    std::size_t const top = std::min(_n - 1, seen + 1);
    for (std::size_t v = 0; v <= top; ++v) {
      if (_row_used[a * _n + v] || _col_used[b * _n + v]) {
        continue;
      }
      set(a, b, v);
      if (consistent(a, b)) {
        fill(step + 1, std::max(seen, v), visit);
      }
      unset(a, b);
    }
  }

  std::size_t _n;
  std::vector<std::uint32_t> _cells;
  std::vector<bool> _row_used;
  std::vector<bool> _col_used;
  std::vector<std::pair<std::size_t, std::size_t>> _order;
};

}  // namespace detail

// One table per isomorphism class of groups of order n, each in canonical
// labeling, sorted by canonical encoding.
inline std::vector<MultTable> groups_of_order(
    std::size_t n, std::size_t cap = default_group_order_cap) {
  if (n == 0) {
    throw Error(ErrorCode::usage, "group order must be positive");
  }
  if (n > cap) {
    throw Error(ErrorCode::resource,
                "group order " + std::to_string(n)
                    + " is above the enumeration cap of "
                    + std::to_string(cap));
  }
  std::vector<MultTable> classes;
  detail::TableSearch(n).run([&](MultTable const& t) {
    for (auto const& c : classes) {
      if (is_isomorphic(t, c)) {
        return;
      }
    }
    classes.push_back(t);
  });
  std::vector<std::pair<std::vector<std::uint32_t>, MultTable>> keyed;
  for (auto const& c : classes) {
    auto enc = canonical_encoding(c);
    keyed.emplace_back(enc, MultTable(n, enc, 0));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](auto const& x, auto const& y) { return x.first < y.first; });
  std::vector<MultTable> out;
  for (auto& kv : keyed) {
    out.push_back(std::move(kv.second));
  }
  return out;
}

// The list L: every group of order <= max_order, up to isomorphism, ordered
// by order and then canonical encoding.
inline std::vector<MultTable> enumerate_groups(
    std::size_t max_order, std::size_t cap = default_group_order_cap) {
  if (max_order > cap) {
    throw Error(ErrorCode::resource,
                "max order " + std::to_string(max_order)
                    + " is above the enumeration cap of "
                    + std::to_string(cap));
  }
  std::vector<MultTable> out;
  for (std::size_t n = 1; n <= max_order; ++n) {
    for (auto& t : groups_of_order(n, cap)) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

}  // namespace ggt

#endif  // GGT_FINITE_ENUM_HPP_
