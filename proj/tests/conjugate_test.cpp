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

#include <gtest/gtest.h>

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ggt/cayley.hpp"
#include "ggt/conjugate.hpp"
#include "ggt/dehn.hpp"
#include "ggt/error.hpp"
#include "ggt/finite_enum.hpp"
#include "ggt/free_oracle.hpp"
#include "ggt/subgroup.hpp"
#include "ggt/words.hpp"
#include "support.hpp"

namespace ggt {
namespace {

std::vector<Word> words(std::initializer_list<char const*> ws) {
  std::vector<Word> out;
  for (auto const* w : ws) {
    out.emplace_back(w);
  }
  return out;
}

Ball ball_for(Presentation p) {
  WordProblem wp = word_problem_for(p);
  return Ball(p, std::move(wp));
}

MembershipOracle stallings(std::vector<Word> const& gens) {
  return free_membership_oracle(Presentation::free_group("ab"), gens);
}

// x^k freely reduces to a non-empty word for every 1 <= k <= c.
bool no_trivial_free_power(Word const& x, std::uint64_t c) {
  Word power;
  for (std::uint64_t k = 1; k <= c; ++k) {
    power = free_reduce(power * x);
    if (power.empty()) {
      return false;
    }
  }
  return true;
}

TEST(ConjugateMemberTest, Examples) {
  auto const in_a = stallings(words({"a"}));
  EXPECT_TRUE(conjugate_member(Word("Bab"), in_a, Word("b")));
  EXPECT_FALSE(conjugate_member(Word("a"), in_a, Word("b")));
  EXPECT_TRUE(conjugate_member(Word{}, in_a, Word("b")));
  EXPECT_TRUE(conjugate_member(Word{}, stallings({}), Word("ab")));
}

TEST(ElementOrderTest, Examples) {
  WordProblem const f = free_word_problem();
  EXPECT_EQ(element_order(Word{}, 5, f), 1u);
  Presentation z3 = parse_presentation("generators: a\nrelators: aaa");
  EXPECT_EQ(element_order(Word("a"), 3, word_problem_for(z3)), 3u);
  EXPECT_EQ(element_order(Word("a"), 2, word_problem_for(z3)), std::nullopt);
  EXPECT_EQ(element_order(Word("Bab"), 65, f), std::nullopt);
  EXPECT_TRUE(no_trivial_free_power(Word("Bab"), 65));
}

TEST(FinitenessVerdictTest, MalnormalCyclicSubgroupGivesTrivialGroup) {
  Ball b = ball_for(Presentation::free_group("ab"));
  IntersectionReport const r = finiteness_verdict(
      stallings(words({"a"})), Word("b"), b, 4, brady_bound(2, 0).c);
  EXPECT_EQ(r.verdict, IntersectionVerdict::finite);
  EXPECT_EQ(r.elements, (std::vector<Word>{Word{}}));
  ASSERT_TRUE(r.table.has_value());
  EXPECT_EQ(r.table->order(), 1u);
  EXPECT_TRUE(is_group_table(*r.table));
  ASSERT_TRUE(r.matched_class.has_value());
  EXPECT_EQ(groups_of_order(1).at(*r.matched_class).order(), 1u);
  EXPECT_EQ(r.radius, 4u);
  EXPECT_EQ(r.brady_bound, 5u);
}

TEST(FinitenessVerdictTest, InfiniteWitnessReverifies) {
  Ball b = ball_for(Presentation::free_group("ab"));
  auto const gens = words({"a", "Bab"});
  std::uint64_t const c = brady_bound(2, 0).c;
  IntersectionReport const r
      = finiteness_verdict(stallings(gens), Word("b"), b, 4, c);
  ASSERT_EQ(r.verdict, IntersectionVerdict::infinite);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(*r.witness, Word("Bab"));
  SubgroupGraph const h = fold(gens);
  EXPECT_TRUE(oracle_member(*r.witness, h));
  EXPECT_TRUE(oracle_member(Word("b") * *r.witness * Word("B"), h));
  EXPECT_TRUE(no_trivial_free_power(*r.witness, c));
}

TEST(FinitenessVerdictTest, ElementOfHIsAPreconditionError) {
  Ball b = ball_for(Presentation::free_group("ab"));
  try {
    finiteness_verdict(stallings(words({"a"})), Word("a"), b, 4, 5);
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), ErrorCode::precondition);
  }
}

TEST(FinitenessVerdictTest, TorsionIntersectionIsMatchedToCyclicGroup) {
  // In <a, b | aaa>, H = <a, Bab> meets its conjugate by b in <Bab>.
  Presentation p = parse_presentation("generators: a b\nrelators: aaa");
  Ball b = ball_for(p);
  NielsenSet const s = build_nielsen_set({words({"a", "Bab"}), 1}, b,
                                         NielsenMode::generator_product, 4);
  IntersectionReport const r = finiteness_verdict(
      nielsen_membership(s, b), Word("b"), b, 3, brady_bound(2, 0).c);
  ASSERT_EQ(r.verdict, IntersectionVerdict::finite);
  EXPECT_EQ(r.elements, words({"1", "Bab", "BAb"}));
  ASSERT_TRUE(r.table.has_value());
  EXPECT_TRUE(is_group_table(*r.table));
  ASSERT_TRUE(r.matched_class.has_value());
  auto const list = groups_of_order(3);
  EXPECT_TRUE(is_isomorphic(*r.table, list.at(*r.matched_class)).has_value());
  // Exhaustive closure of the reported elements under the word problem.
  WordProblem const& wp = b.word_problem();
  for (auto const& x : r.elements) {
    for (auto const& y : r.elements) {
      bool inside = false;
      for (auto const& z : r.elements) {
        inside = inside || wp.equal(x * y, z);
      }
      EXPECT_TRUE(inside);
    }
  }
}

TEST(FinitenessVerdictTest, OrderAtTheBradyBoundIsInconsistent) {
  Presentation p = parse_presentation("generators: a b\nrelators: aaa");
  Ball b = ball_for(p);
  NielsenSet const s = build_nielsen_set({words({"a", "Bab"}), 1}, b,
                                         NielsenMode::generator_product, 4);
  try {
    finiteness_verdict(nielsen_membership(s, b), Word("b"), b, 3, 3);
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), ErrorCode::inconsistency);
  }
}

TEST(FinitenessVerdictTest, UnclosedSetIsInconclusive) {
  // A membership test that accepts 1 and a but not a^2 in Z/3: the found
  // set is not closed inside the ball.
  Presentation p = parse_presentation("generators: a\nrelators: aaa");
  Ball b = ball_for(p);
  WordProblem const wp = b.word_problem();
  MembershipOracle const in_h = [wp](Word const& w) {
    return wp.is_trivial(w) || wp.equal(w, Word("a"));
  };
  IntersectionReport const r = finiteness_verdict(in_h, Word("A"), b, 1, 5);
  EXPECT_EQ(r.verdict, IntersectionVerdict::inconclusive);
  EXPECT_EQ(r.elements, words({"1", "a"}));
  EXPECT_FALSE(r.table.has_value());
}

TEST(FinitenessVerdictTest, OrdersAboveTheCapAreReportedUnmatched) {
  Presentation p = parse_presentation("generators: a b\nrelators: aaa");
  Ball b = ball_for(p);
  NielsenSet const s = build_nielsen_set({words({"a", "Bab"}), 1}, b,
                                         NielsenMode::generator_product, 4);
  IntersectionReport const r
      = finiteness_verdict(nielsen_membership(s, b), Word("b"), b, 3, 5,
                           default_group_list(2));
  ASSERT_EQ(r.verdict, IntersectionVerdict::finite);
  EXPECT_FALSE(r.matched_class.has_value());
  EXPECT_EQ(r.table->order(), 3u);
}

TEST(FinitenessVerdictProperty, FreeGroupsAgreeWithFoldingGroundTruth) {
  // In a free group every nontrivial element has infinite order, so the
  // intersection is finite exactly when it is trivial.
  std::mt19937_64 rng(61);
  Ball b = ball_for(Presentation::free_group("ab"));
  std::uint64_t const c = brady_bound(2, 0).c;
  int checked = 0;
  while (checked < 40) {
    std::vector<Word> gens;
    for (std::size_t j = 0; j < 1 + rng() % 2; ++j) {
      gens.push_back(testing::random_reduced_word(rng, testing::signed_letters(2),
                                                  1 + rng() % 3));
    }
    Word const g = testing::random_reduced_word(rng, testing::signed_letters(2),
                                                1 + rng() % 3);
    SubgroupGraph const h = fold(gens);
    if (oracle_member(g, h)) {
      continue;
    }
    ++checked;
    std::size_t const r = 3;
    b.grow_to(r);
    bool nontrivial = false;
    for (VertexId v = 1; v < b.count_within(r); ++v) {
      Word const& x = b.word(v);
      nontrivial = nontrivial
                   || (oracle_member(x, h) && oracle_member(g * x * invert(g), h));
    }
    auto const in_h = stallings(gens);
    IntersectionReport const rep = finiteness_verdict(in_h, g, b, r, c);
    EXPECT_EQ(rep.verdict, nontrivial ? IntersectionVerdict::infinite
                                      : IntersectionVerdict::finite);
    // The same verdict through the weakly Nielsen membership procedure.
    NielsenSet const s = build_nielsen_set({gens, 1}, b,
                                           NielsenMode::oracle_filter, 0, in_h);
    EXPECT_EQ(finiteness_verdict(nielsen_membership(s, b), g, b, r, c).verdict,
              rep.verdict);
  }
}

TEST(FinitenessVerdictProperty, LargerRadiusNeverFlipsTheVerdict) {
  Ball b = ball_for(Presentation::free_group("ab"));
  auto const in_h = stallings(words({"a", "Bab"}));
  for (std::size_t r = 3; r <= 5; ++r) {
    EXPECT_EQ(finiteness_verdict(in_h, Word("b"), b, r, 5).verdict,
              IntersectionVerdict::infinite);
  }
  auto const malnormal = stallings(words({"a"}));
  for (std::size_t r = 1; r <= 5; ++r) {
    EXPECT_EQ(finiteness_verdict(malnormal, Word("b"), b, r, 5).verdict,
              IntersectionVerdict::finite);
  }
}

}  // namespace
}  // namespace ggt
