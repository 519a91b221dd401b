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

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdlib>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ggt/cayley.hpp"
#include "ggt/dehn.hpp"
#include "ggt/error.hpp"
#include "ggt/word_problem.hpp"
#include "ggt/words.hpp"
#include "support.hpp"

namespace ggt {
namespace {

Presentation free2() { return Presentation::free_group("ab"); }

Presentation z2() { return parse_presentation("generators: a b\nrelators: abAB"); }

Presentation genus2() {
  return parse_presentation("generators: a b c d\nrelators: abABcdCD");
}

Ball ball_of(Presentation p, std::size_t r) {
  WordProblem wp = word_problem_for(p);
  return build_ball(p, r, std::move(wp));
}

Ball abelian_ball(std::size_t r) { return build_ball(z2(), r, abelian_word_problem()); }

// Number of freely reduced words of length <= r over `rank` generators.
std::size_t reduced_word_count(std::size_t rank, std::size_t r) {
  std::size_t total = 1;
  std::size_t layer = 2 * rank;
  for (std::size_t k = 1; k <= r; ++k) {
    total += layer;
    layer *= 2 * rank - 1;
  }
  return total;
}

VertexId vertex(Ball const& b, std::string_view w) {
  auto v = b.locate(Word(w));
  EXPECT_TRUE(v.has_value()) << w;
  return v.value_or(0);
}

TEST(BallTest, Examples) {
  EXPECT_EQ(ball_of(free2(), 2).size(), 17u);
  EXPECT_EQ(ball_of(Presentation::free_group("a"), 3).size(), 7u);
  EXPECT_EQ(ball_of(genus2(), 1).size(), 9u);
}

TEST(BallTest, LayersAreIndexedInWordOrder) {
  Ball const b = ball_of(free2(), 1);
  EXPECT_EQ(b.word(0), Word{});
  std::vector<std::string> layer1;
  for (VertexId v = b.layer_begin(1); v < b.layer_end(1); ++v) {
    layer1.push_back(b.word(v).str());
  }
  EXPECT_EQ(layer1, (std::vector<std::string>{"a", "A", "b", "B"}));
}

TEST(BallProperty, FreeGroupsMatchReducedWordCounts) {
  for (std::size_t rank = 1; rank <= 3; ++rank) {
    std::string names;
    for (std::size_t i = 0; i < rank; ++i) {
      names += static_cast<char>('a' + i);
    }
    for (std::size_t r = 0; r <= 4; ++r) {
      EXPECT_EQ(ball_of(Presentation::free_group(names), r).size(),
                reduced_word_count(rank, r));
    }
  }
}

TEST(BallProperty, FreeAbelianBallsAreLatticeDiamonds) {
  for (std::size_t r = 0; r <= 5; ++r) {
    EXPECT_EQ(abelian_ball(r).size(), 2 * r * r + 2 * r + 1);
  }
}

TEST(BallProperty, SurfaceGroupLayersAgreeWithSmallCancellation) {
  // No relation shorter than the relator, so words of length <= 3 are
  // distinct. At radius 4 a relator word r = xy with |x| = |y| = 4
  // identifies x with y^-1; r and r^-1 give the same pair, so the 16
  // relator words remove 8 reduced words.
  Ball const b = ball_of(genus2(), 4);
  EXPECT_EQ(b.layer_end(1) - b.layer_begin(1), 8u);
  EXPECT_EQ(b.layer_end(2) - b.layer_begin(2), 56u);
  EXPECT_EQ(b.layer_end(3) - b.layer_begin(3), 392u);
  std::size_t const reduced4 = 8 * 7 * 7 * 7;
  std::size_t const collapsed = 16 / 2;
  EXPECT_EQ(b.layer_end(4) - b.layer_begin(4), reduced4 - collapsed);
}

TEST(BallProperty, EdgesAreInvolutiveAndLayersAreGeodesic) {
  for (Ball const& b : {ball_of(free2(), 3), ball_of(genus2(), 2), abelian_ball(3),
                        ball_of(parse_presentation("generators: a\nrelators: aaaaa"), 3)}) {
    WordProblem const& wp = b.word_problem();
    for (VertexId v = 0; v < b.size(); ++v) {
      EXPECT_EQ(b.word(v).size(), b.layer(v));
      for (char c : b.letters()) {
        auto u = b.neighbor(v, c);
        if (!u) {
          EXPECT_EQ(b.layer(v), b.radius());
          continue;
        }
        EXPECT_EQ(b.neighbor(*u, letter::inverse(c)), v);
        EXPECT_LE(std::max(b.layer(v), b.layer(*u)) - std::min(b.layer(v), b.layer(*u)), 1u);
        EXPECT_TRUE(wp.equal(b.word(v) * Word(std::string(1, c)), b.word(*u)));
      }
      for (VertexId u = 0; u < v; ++u) {
        EXPECT_FALSE(wp.equal(b.word(u), b.word(v)));
      }
    }
  }
}

TEST(BallTest, ResourceCapIsExplicit) {
  Presentation p = free2();
  Limits limits;
  limits.max_states = 10;
  try {
    build_ball(p, 3, free_word_problem(), limits);
    FAIL() << "no resource error";
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), ErrorCode::resource);
  }
}

TEST(GeodesicLengthTest, Examples) {
  Ball f = ball_of(free2(), 0);
  EXPECT_EQ(geodesic_length(Word{}, f), 0u);
  EXPECT_EQ(geodesic_length(Word("abB"), f), 1u);
  Ball g = ball_of(genus2(), 0);
  EXPECT_EQ(geodesic_length(Word("abABcd"), g), 2u);
  EXPECT_EQ(ball_geodesic_length(Word("abABcd"), g), 2u);
  EXPECT_EQ(geodesic_word(Word("abABcd"), g), Word("dc"));
  EXPECT_EQ(bounded_geodesic_length(Word("abABcd"), g, 1), std::nullopt);
  EXPECT_EQ(bounded_geodesic_length(Word("abABcd"), g, 3), 2u);
}

TEST(GeodesicLengthProperty, FreeGroupLengthIsReducedLength) {
  std::mt19937_64 rng(31);
  Ball b = ball_of(free2(), 0);
  for (int i = 0; i < 300; ++i) {
    Word const w = testing::random_word(rng, testing::signed_letters(2), rng() % 8);
    EXPECT_EQ(ball_geodesic_length(w, b), free_reduce(w).size());
  }
}

TEST(GeodesicLengthProperty, AbelianLengthIsL1Norm) {
  std::mt19937_64 rng(32);
  Ball b(z2(), abelian_word_problem());
  for (int i = 0; i < 200; ++i) {
    Word const w = testing::random_word(rng, testing::signed_letters(2), rng() % 7);
    long x = 0;
    long y = 0;
    for (char c : w) {
      long const s = letter::is_inverse(c) ? -1 : 1;
      (letter::generator(c) == 'a' ? x : y) += s;
    }
    EXPECT_EQ(ball_geodesic_length(w, b), static_cast<std::size_t>(std::labs(x) + std::labs(y)));
  }
}

std::vector<std::string> words_of(GeodesicSet const& g) {
  std::vector<std::string> out;
  for (auto const& w : g.words) {
    out.push_back(w.str());
  }
  return out;
}

TEST(EnumerateGeodesicsTest, Examples) {
  Ball const f = ball_of(free2(), 2);
  EXPECT_EQ(words_of(enumerate_geodesics(f, 0, vertex(f, "ab"))),
            (std::vector<std::string>{"ab"}));
  Ball const z = abelian_ball(2);
  EXPECT_EQ(words_of(enumerate_geodesics(z, 0, vertex(z, "ab"))),
            (std::vector<std::string>{"ab", "ba"}));
  for (VertexId v = 0; v < z.size(); ++v) {
    EXPECT_EQ(words_of(enumerate_geodesics(z, v, v)),
              (std::vector<std::string>{""}));
  }
}

// Lattice paths from (0,0) to (x,y) number C(|x|+|y|, |x|).
std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

TEST(EnumerateGeodesicsProperty, LabelsAreGeodesicPaths) {
  Ball const z = abelian_ball(4);
  for (VertexId v = 0; v < z.count_within(2); ++v) {
    for (VertexId u = 0; u < z.count_within(2); ++u) {
      GeodesicSet const g = enumerate_geodesics(z, v, u);
      for (auto const& w : g.words) {
        EXPECT_EQ(w.size(), g.distance);
        EXPECT_EQ(trace_path(z, v, w).back(), u);
        EXPECT_TRUE(z.word_problem().equal(w, invert(z.word(v)) * z.word(u)));
      }
      if (v == 0) {
        long x = 0;
        long y = 0;
        for (char c : z.word(u)) {
          long const s = letter::is_inverse(c) ? -1 : 1;
          (letter::generator(c) == 'a' ? x : y) += s;
        }
        std::size_t const ax = static_cast<std::size_t>(std::labs(x));
        std::size_t const ay = static_cast<std::size_t>(std::labs(y));
        EXPECT_EQ(g.words.size(), binomial(ax + ay, ax)) << z.word(u);
      }
    }
  }
}

TEST(EnumerateGeodesicsTest, CapIsExplicit) {
  Limits limits;
  limits.max_geodesics = 3;
  Ball const z = build_ball(z2(), 4, abelian_word_problem(), limits);
  EXPECT_THROW(enumerate_geodesics(z, 0, vertex(z, "aabb")), Error);
}

TEST(SlimTest, FreeGroupIsZeroSlim) {
  for (std::size_t r = 0; r <= 4; ++r) {
    EXPECT_FALSE(check_slim(ball_of(free2(), r), 0).has_value()) << r;
  }
}

TEST(SlimTest, FreeAbelianGroupViolatesZeroSlimness) {
  Ball const z = abelian_ball(2);
  auto const v = check_slim(z, 0);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->distance, 1u);

  auto const t = check_triangle(z, {0, vertex(z, "b"), vertex(z, "ab")}, 0);
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(z.word(t->vertex), Word("a"));
  // The side joining 1 and ab, read from either end.
  std::array<VertexId, 2> const ends{t->side_from, t->side_to};
  EXPECT_TRUE(ends == (std::array<VertexId, 2>{0, vertex(z, "ab")})
              || ends == (std::array<VertexId, 2>{vertex(z, "ab"), 0}));
  EXPECT_EQ(t->side, z.word(t->side_from) == Word() ? Word("ab") : Word("BA"));
  EXPECT_EQ(t->distance, 1u);
  EXPECT_FALSE(check_triangle(z, {0, vertex(z, "b"), vertex(z, "ab")}, 1));
}

TEST(SlimTest, DegenerateTrianglesNeverViolate) {
  Ball const z = abelian_ball(2);
  for (VertexId v = 0; v < z.size(); ++v) {
    EXPECT_FALSE(check_triangle(z, {v, v, v}, 0).has_value());
  }
}

TEST(SlimProperty, MonotoneInDelta) {
  Ball const z = abelian_ball(4);
  bool passed = false;
  for (std::size_t d = 0; d <= 3; ++d) {
    bool const ok = !check_slim(z, d).has_value();
    EXPECT_TRUE(!passed || ok) << d;
    passed = passed || ok;
  }
  EXPECT_TRUE(passed);
}

TEST(SlimTest, SurfaceGroupPassesItsDeltaAtSmallRadius) {
  Ball const g = ball_of(genus2(), 2);
  EXPECT_FALSE(check_slim(g, 2).has_value());
}

std::vector<VertexId> powers_in_ball(Ball const& b, Word const& x) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < b.size(); ++v) {
    // In a free group the cyclic subgroup <x> for cyclically reduced x
    // consists of exactly the reduced powers of x.
    Word const w = b.word(v);
    if (w.size() % x.size() != 0) {
      continue;
    }
    std::size_t const n = w.size() / x.size();
    Word p;
    Word q;
    for (std::size_t i = 0; i < n; ++i) {
      p *= x;
      q *= invert(x);
    }
    if (w == p || w == q) {
      out.push_back(v);
    }
  }
  return out;
}

TEST(QuasiconvexTest, Examples) {
  Ball const b = ball_of(free2(), 4);
  EXPECT_FALSE(check_quasiconvex(b, powers_in_ball(b, Word("a")), 0));
  auto const v = check_quasiconvex(b, powers_in_ball(b, Word("ab")), 0);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(b.word(v->vertex), Word("a"));
  EXPECT_EQ(v->geodesic, Word("ab"));
  EXPECT_EQ(v->distance, 1u);
  EXPECT_FALSE(check_quasiconvex(b, powers_in_ball(b, Word("ab")), 1));
  Ball const small = ball_of(free2(), 2);
  EXPECT_TRUE(check_quasiconvex(small, powers_in_ball(small, Word("ab")), 0));
}

TEST(QuasiconvexProperty, MonotoneInK) {
  Ball const b = ball_of(free2(), 4);
  auto const h = powers_in_ball(b, Word("aab"));
  bool passed = false;
  for (std::size_t k = 0; k <= 3; ++k) {
    bool const ok = !check_quasiconvex(b, h, k).has_value();
    EXPECT_TRUE(!passed || ok) << k;
    passed = passed || ok;
  }
  EXPECT_TRUE(passed);
}

}  // namespace
}  // namespace ggt
