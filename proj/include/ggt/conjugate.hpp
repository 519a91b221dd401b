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

#ifndef GGT_CONJUGATE_HPP_
#define GGT_CONJUGATE_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cayley.hpp"
#include "error.hpp"
#include "finite_enum.hpp"
#include "subgroup.hpp"
#include "word_problem.hpp"
#include "words.hpp"

namespace ggt {

// h lies in g^-1 H g iff g h g^-1 lies in H.
inline bool conjugate_member(Word const& h, MembershipOracle const& in_h,
                             Word const& g) {
  return in_h(free_reduce(g * h * invert(g)));
}

// The order of x if some power x^k with k <= c is trivial; nothing
// otherwise, which means infinite order when c is a valid Brady bound.
inline std::optional<std::uint64_t> element_order(Word const& x,
                                                  std::uint64_t c,
                                                  WordProblem const& wp) {
  Word power;
  for (std::uint64_t k = 1; k <= c; ++k) {
    power = wp.shorten(power * x);
    if (wp.is_trivial(power)) {
      return k;
    }
  }
  return std::nullopt;
}

enum class IntersectionVerdict { finite, infinite, inconclusive };

inline std::string_view to_string(IntersectionVerdict v) {
  switch (v) {
    case IntersectionVerdict::finite:
      return "finite";
    case IntersectionVerdict::infinite:
      return "infinite";
    case IntersectionVerdict::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

// Returns the classes of groups of a given order (the list L, consumed one
// order at a time).
using GroupListProvider = std::function<std::vector<MultTable>(std::size_t)>;

inline GroupListProvider default_group_list(
    std::size_t cap = default_group_order_cap) {
  return [cap](std::size_t order) { return groups_of_order(order, cap); };
}

struct IntersectionReport {
  IntersectionVerdict verdict = IntersectionVerdict::inconclusive;
  std::vector<Word> elements;  // H ∩ g^-1 H g inside the ball
  std::optional<MultTable> table;
  // Index into the provider's list for the table's order; empty when the
  // order is above the enumeration cap.
  std::optional<std::size_t> matched_class;
  std::optional<Word> witness;  // infinite verdicts
  std::size_t radius = 0;
  std::uint64_t brady_bound = 0;
};

// Decides whether H ∩ g^-1 H g is finite by enumerating it inside B(R).
// An element of infinite order (no trivial power up to the Brady bound)
// proves it infinite; a set closed under products and inverses inside the
// ball is taken as the whole finite intersection and matched against the
// list of finite groups. Anything else is inconclusive at this radius.
inline IntersectionReport finiteness_verdict(
    MembershipOracle const& in_h, Word const& g, Ball& ball,
    std::size_t radius, std::uint64_t brady_c,
    GroupListProvider const& groups = default_group_list()) {
  if (in_h(g)) {
    throw Error(ErrorCode::precondition,
                "element '" + to_string(g) + "' lies in H");
  }
  WordProblem const& wp = ball.word_problem();
  IntersectionReport report;
  report.radius = radius;
  report.brady_bound = brady_c;
  ball.grow_to(radius);
  std::size_t const n = ball.count_within(radius);

  std::vector<VertexId> found;
  for (VertexId v = 0; v < n; ++v) {
    Word const& x = ball.word(v);
    if (in_h(x) && conjugate_member(x, in_h, g)) {
      found.push_back(v);
      report.elements.push_back(x);
    }
  }

  for (auto const& x : report.elements) {
    auto const order = element_order(x, brady_c, wp);
    if (!order) {
      report.verdict = IntersectionVerdict::infinite;
      report.witness = x;
      return report;
    }
    if (*order >= brady_c) {
      throw Error(ErrorCode::inconsistency,
                  "element '" + to_string(x) + "' has order "
                      + std::to_string(*order)
                      + ", not below the Brady bound; the asserted delta is "
                        "too small");
    }
  }

  std::vector<std::size_t> index(ball.size(), found.size());
  for (std::size_t i = 0; i < found.size(); ++i) {
    index[found[i]] = i;
  }
  std::size_t const m = found.size();
  std::vector<std::uint32_t> cells(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      auto const v = ball.locate(
          report.elements[i] * report.elements[j], radius);
      if (!v || index[*v] == m) {
        report.verdict = IntersectionVerdict::inconclusive;
        return report;
      }
      cells[i * m + j] = static_cast<std::uint32_t>(index[*v]);
    }
  }
  MultTable table(m, std::move(cells), index[0]);
  if (!is_group_table(table)) {
    report.verdict = IntersectionVerdict::inconclusive;
    return report;
  }
  if (m >= brady_c) {
    throw Error(ErrorCode::inconsistency,
                "finite intersection with " + std::to_string(m)
                    + " elements, but finite subgroups have fewer than "
                    + std::to_string(brady_c)
                    + "; the asserted delta is too small");
  }
  report.verdict = IntersectionVerdict::finite;
  try {
    auto const list = groups(m);
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (is_isomorphic(table, list[i])) {
        report.matched_class = i;
        break;
      }
    }
  } catch (Error const& e) {
    if (e.code() != ErrorCode::resource) {
      throw;
    }
  }
  report.table = std::move(table);
  return report;
}

}  // namespace ggt

#endif  // GGT_CONJUGATE_HPP_
