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

#ifndef GGT_WORDS_HPP_
#define GGT_WORDS_HPP_

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"

namespace ggt {

// Letters are ASCII: a lowercase letter is a generator, the matching
// uppercase letter its inverse.
namespace letter {

inline bool is_letter(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0;
}

inline bool is_inverse(char c) {
  return std::isupper(static_cast<unsigned char>(c)) != 0;
}

inline char generator(char c) {
  return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

inline char inverse(char c) {
  return is_inverse(c)
             ? static_cast<char>(std::tolower(static_cast<unsigned char>(c)))
             : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
}

// Total order a < A < b < B < ... used for every lexicographic comparison.
inline int key(char c) {
  return 2 * (generator(c) - 'a') + (is_inverse(c) ? 1 : 0);
}

}  // namespace letter

class Word {
 public:
  Word() = default;

  // Throws on non-letters. "1" is accepted as the identity.
  explicit Word(std::string_view letters) {
    if (letters == "1") {
      return;
    }
    for (char c : letters) {
      if (!letter::is_letter(c)) {
        throw Error(ErrorCode::input,
                    "invalid character '" + std::string(1, c) + "' in word '"
                        + std::string(letters) + "'");
      }
    }
    _letters.assign(letters);
  }

  std::string const& str() const noexcept { return _letters; }
  std::size_t size() const noexcept { return _letters.size(); }
  bool empty() const noexcept { return _letters.empty(); }
  char operator[](std::size_t i) const { return _letters[i]; }
  char back() const { return _letters.back(); }

  auto begin() const noexcept { return _letters.begin(); }
  auto end() const noexcept { return _letters.end(); }

  Word subword(std::size_t pos, std::size_t len = std::string::npos) const {
    Word w;
    w._letters = _letters.substr(pos, len);
    return w;
  }

  void push_back(char c) { _letters.push_back(c); }
  void pop_back() { _letters.pop_back(); }

  Word& operator*=(Word const& other) {
    _letters += other._letters;
    return *this;
  }

  // Concatenation; no reduction.
  friend Word operator*(Word lhs, Word const& rhs) {
    lhs *= rhs;
    return lhs;
  }

  friend bool operator==(Word const&, Word const&) = default;

  friend std::strong_ordering operator<=>(Word const& u, Word const& v) {
    return std::lexicographical_compare_three_way(
        u.begin(), u.end(), v.begin(), v.end(), [](char x, char y) {
          return letter::key(x) <=> letter::key(y);
        });
  }

 private:
  std::string _letters;
};

// Prints the empty word as "1".
inline std::string to_string(Word const& w) {
  return w.empty() ? std::string("1") : w.str();
}

inline std::ostream& operator<<(std::ostream& os, Word const& w) {
  return os << to_string(w);
}

// Shorter words first, then lexicographic.
inline bool shortlex_less(Word const& u, Word const& v) {
  if (u.size() != v.size()) {
    return u.size() < v.size();
  }
  return u < v;
}

inline bool is_freely_reduced(Word const& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] == letter::inverse(w[i - 1])) {
      return false;
    }
  }
  return true;
}

inline Word free_reduce(Word const& w) {
  std::string out;
  out.reserve(w.size());
  for (char c : w) {
    if (!out.empty() && out.back() == letter::inverse(c)) {
      out.pop_back();
    } else {
      out.push_back(c);
    }
  }
  Word result;
  for (char c : out) {
    result.push_back(c);
  }
  return result;
}

inline Word invert(Word const& w) {
  Word result;
  for (auto it = w.str().rbegin(); it != w.str().rend(); ++it) {
    result.push_back(letter::inverse(*it));
  }
  return result;
}

// Freely reduces, then strips matching inverse letters from both ends.
inline Word cyclic_reduce(Word const& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0;
  std::size_t hi = r.size();
  while (hi - lo >= 2 && r[hi - 1] == letter::inverse(r[lo])) {
    ++lo;
    --hi;
  }
  return r.subword(lo, hi - lo);
}

inline Word rotate(Word const& w, std::size_t k) {
  if (w.empty()) {
    return w;
  }
  k %= w.size();
  return w.subword(k) * w.subword(0, k);
}

// All distinct rotations, sorted.
inline std::vector<Word> cyclic_permutations(Word const& w) {
  std::set<Word> seen;
  if (w.empty()) {
    seen.insert(w);
  }
  for (std::size_t k = 0; k < w.size(); ++k) {
    seen.insert(rotate(w, k));
  }
  return {seen.begin(), seen.end()};
}

enum class DehnStatus { unverified, verified_c16, trusted };

inline std::string_view to_string(DehnStatus s) {
  switch (s) {
    case DehnStatus::unverified:
      return "unverified";
    case DehnStatus::verified_c16:
      return "verified-C16";
    case DehnStatus::trusted:
      return "trusted";
  }
  return "unverified";
}

class Presentation {
 public:
  Presentation() = default;

  // Throws ErrorCode::input on a bad alphabet or relator.
  Presentation(std::vector<char> generators, std::vector<Word> relators = {})
      : _generators(std::move(generators)) {
    check_alphabet();
    for (auto const& r : relators) {
      add_relator(r);
    }
  }

  static Presentation free_group(std::string_view names) {
    return Presentation(std::vector<char>(names.begin(), names.end()));
  }

  std::vector<char> const& generators() const noexcept { return _generators; }
  std::vector<Word> const& relators() const noexcept { return _relators; }
  bool is_free() const noexcept { return _relators.empty(); }

  // Signed letters in the order a, A, b, B, ... of the generator list.
  std::vector<char> letters() const {
    std::vector<char> out;
    for (char g : _generators) {
      out.push_back(g);
      out.push_back(letter::inverse(g));
    }
    std::sort(out.begin(), out.end(),
              [](char x, char y) { return letter::key(x) < letter::key(y); });
    return out;
  }

  bool has_letter(char c) const {
    return std::find(_generators.begin(), _generators.end(),
                     letter::generator(c))
           != _generators.end();
  }

  // Returns the first letter of `w` outside the alphabet.
  std::optional<char> unknown_letter(Word const& w) const {
    for (char c : w) {
      if (!has_letter(c)) {
        return c;
      }
    }
    return std::nullopt;
  }

  Word parse_word(std::string_view text) const {
    Word w(text);
    if (auto bad = unknown_letter(w)) {
      throw Error(ErrorCode::input, "unknown letter '" + std::string(1, *bad)
                                        + "' in word '" + std::string(text)
                                        + "'");
    }
    return w;
  }

  // Stores the cyclic reduction; duplicates are dropped.
  void add_relator(Word const& r) {
    if (auto bad = unknown_letter(r)) {
      throw Error(ErrorCode::input,
                  "unknown letter '" + std::string(1, *bad) + "' in relator");
    }
    Word c = cyclic_reduce(r);
    if (c.empty()) {
      throw Error(ErrorCode::input, "relator '" + to_string(r)
                                        + "' reduces to the empty word");
    }
    if (std::find(_relators.begin(), _relators.end(), c) == _relators.end()) {
      _relators.push_back(std::move(c));
    }
  }

  std::optional<std::size_t> delta() const noexcept { return _delta; }
  void set_delta(std::optional<std::size_t> d) noexcept { _delta = d; }

  DehnStatus dehn_status() const noexcept { return _status; }
  void set_dehn_status(DehnStatus s) noexcept { _status = s; }

  friend bool operator==(Presentation const&, Presentation const&) = default;

 private:
  void check_alphabet() const {
    if (_generators.size() > 26) {
      throw Error(ErrorCode::input, "at most 26 generators are supported");
    }
    std::set<char> seen;
    for (char g : _generators) {
      if (!std::islower(static_cast<unsigned char>(g))) {
        throw Error(ErrorCode::input, "generator '" + std::string(1, g)
                                          + "' is not a lowercase letter");
      }
      if (!seen.insert(g).second) {
        throw Error(ErrorCode::input,
                    "duplicate generator '" + std::string(1, g) + "'");
      }
    }
  }

  std::vector<char> _generators;
  std::vector<Word> _relators;
  std::optional<std::size_t> _delta;
  DehnStatus _status = DehnStatus::unverified;
};

namespace detail {

inline std::string trim(std::string_view s) {
  auto const first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  auto const last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

inline std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) {
    out.push_back(tok);
  }
  return out;
}

[[noreturn]] inline void parse_error(std::size_t line, std::string const& msg) {
  throw Error(ErrorCode::input, "line " + std::to_string(line) + ": " + msg);
}

}  // namespace detail

// Reads the line-oriented presentation format:
//
//   # comment
//   generators: a b
//   relators: abAB
//   delta: 1
//   dehn: trusted
//
// `relators:` may appear more than once; it must follow `generators:`.
inline Presentation parse_presentation(std::istream& in) {
  std::optional<Presentation> p;
  std::optional<std::size_t> delta;
  bool trusted = false;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string text = detail::trim(raw);
    if (text.empty() || text.front() == '#') {
      continue;
    }
    auto const colon = text.find(':');
    if (colon == std::string::npos) {
      detail::parse_error(line, "expected 'key: value', got '" + text + "'");
    }
    std::string const key = detail::trim(text.substr(0, colon));
    auto const values = detail::split_ws(text.substr(colon + 1));
    if (key == "generators") {
      if (p) {
        detail::parse_error(line, "generators given twice");
      }
      std::vector<char> gens;
      for (auto const& v : values) {
        if (v.size() != 1) {
          detail::parse_error(line, "generator '" + v
                                        + "' is not a single letter");
        }
        gens.push_back(v[0]);
      }
      try {
        p.emplace(std::move(gens));
      } catch (Error const& e) {
        detail::parse_error(line, e.what());
      }
    } else if (key == "relators") {
      if (!p) {
        detail::parse_error(line, "relators before generators");
      }
      for (auto const& v : values) {
        try {
          Word w(v);
          if (auto bad = p->unknown_letter(w)) {
            detail::parse_error(line, "unknown letter '" + std::string(1, *bad)
                                          + "' in relator '" + v + "'");
          }
          p->add_relator(w);
        } catch (Error const& e) {
          if (std::string_view(e.what()).starts_with("line ")) {
            throw;
          }
          detail::parse_error(line, e.what());
        }
      }
    } else if (key == "delta") {
      if (values.size() != 1
          || !std::all_of(values[0].begin(), values[0].end(), [](char c) {
               return std::isdigit(static_cast<unsigned char>(c)) != 0;
             })) {
        detail::parse_error(line, "delta must be one non-negative integer");
      }
      delta = std::stoull(values[0]);
    } else if (key == "dehn") {
      if (values.size() != 1 || values[0] != "trusted") {
        detail::parse_error(line, "the only dehn value is 'trusted'");
      }
      trusted = true;
    } else {
      detail::parse_error(line, "unknown key '" + key + "'");
    }
  }
  if (!p) {
    throw Error(ErrorCode::input, "missing 'generators:' line");
  }
  p->set_delta(delta);
  if (trusted) {
    p->set_dehn_status(DehnStatus::trusted);
  }
  return *std::move(p);
}

inline Presentation parse_presentation(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_presentation(in);
}

// Inverse of parse_presentation. The verified-C16 status is derived, not
// stored, so it serializes like `unverified`.
inline std::string serialize(Presentation const& p) {
  std::string out = "generators:";
  for (char g : p.generators()) {
    out += ' ';
    out += g;
  }
  out += "\nrelators:";
  for (auto const& r : p.relators()) {
    out += ' ';
    out += r.str();
  }
  out += '\n';
  if (p.delta()) {
    out += "delta: " + std::to_string(*p.delta()) + "\n";
  }
  if (p.dehn_status() == DehnStatus::trusted) {
    out += "dehn: trusted\n";
  }
  return out;
}

// Parses "w1,w2,..." into words over the alphabet of `p`. Empty items are
// skipped, so "" is the empty list.
inline std::vector<Word> parse_word_list(Presentation const& p,
                                         std::string_view text) {
  std::vector<Word> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto const comma = text.find(',', start);
    auto const end = comma == std::string_view::npos ? text.size() : comma;
    std::string item = detail::trim(text.substr(start, end - start));
    if (!item.empty()) {
      out.push_back(p.parse_word(item));
    }
    if (comma == std::string_view::npos) {
      break;
    }
    start = comma + 1;
  }
  return out;
}

}  // namespace ggt

template <>
struct std::hash<ggt::Word> {
  std::size_t operator()(ggt::Word const& w) const noexcept {
    return std::hash<std::string>{}(w.str());
  }
};

#endif  // GGT_WORDS_HPP_
