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

// Shared helpers for the unit and acceptance tests.

#ifndef GGT_TESTS_SUPPORT_HPP_
#define GGT_TESTS_SUPPORT_HPP_

#include <cstddef>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "ggt/words.hpp"

namespace ggt::testing {

inline std::string presentation_path(std::string_view name) {
  return std::string(GGT_PRESENTATIONS) + "/" + std::string(name);
}

// Signed letters for the first `rank` generators, in key order.
inline std::vector<char> signed_letters(std::size_t rank) {
  std::vector<char> out;
  for (std::size_t i = 0; i < rank; ++i) {
    char const g = static_cast<char>('a' + i);
    out.push_back(g);
    out.push_back(letter::inverse(g));
  }
  return out;
}

// Uniform word of exactly `len` letters, not necessarily reduced.
inline Word random_word(std::mt19937_64& rng, std::vector<char> const& letters,
                        std::size_t len) {
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  Word w;
  for (std::size_t i = 0; i < len; ++i) {
    w.push_back(letters[pick(rng)]);
  }
  return w;
}

// Freely reduced word of exactly `len` letters.
inline Word random_reduced_word(std::mt19937_64& rng,
                                std::vector<char> const& letters,
                                std::size_t len) {
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  Word w;
  while (w.size() < len) {
    char const c = letters[pick(rng)];
    if (!w.empty() && w.back() == letter::inverse(c)) {
      continue;
    }
    w.push_back(c);
  }
  return w;
}

// All words of length exactly `len` over `letters`, reduced or not.
inline std::vector<Word> all_words(std::vector<char> const& letters,
                                   std::size_t len) {
  std::vector<Word> out{Word{}};
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<Word> next;
    for (auto const& w : out) {
      for (char c : letters) {
        Word x = w;
        x.push_back(c);
        next.push_back(std::move(x));
      }
    }
    out = std::move(next);
  }
  return out;
}

// Stack-free reference reduction: delete the first cancelling pair until
// none is left.
inline std::string naive_free_reduce(std::string s) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      if (s[i] != s[i + 1] && letter::generator(s[i]) == letter::generator(s[i + 1])) {
        s.erase(i, 2);
        changed = true;
        break;
      }
    }
  }
  return s;
}

}  // namespace ggt::testing

#endif  // GGT_TESTS_SUPPORT_HPP_
