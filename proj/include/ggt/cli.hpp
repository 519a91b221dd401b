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

#ifndef GGT_CLI_HPP_
#define GGT_CLI_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cayley.hpp"
#include "conjugate.hpp"
#include "dehn.hpp"
#include "error.hpp"
#include "finite_enum.hpp"
#include "free_oracle.hpp"
#include "subgroup.hpp"
#include "words.hpp"

namespace ggt::cli {

enum ExitCode : int {
  kDefinite = 0,
  kUsage = 1,
  kInconclusive = 2,
  kResource = 3,
};

struct CommandConfig {
  std::string subcommand;
  std::string presentation_path;
  std::string word;
  std::string subgroup;
  std::string element;
  std::optional<std::size_t> radius;
  std::optional<std::size_t> inner_radius;
  std::optional<std::size_t> k;
  std::optional<std::size_t> delta;
  std::optional<std::size_t> depth;
  std::optional<std::size_t> generators;
  std::optional<std::size_t> max_order;
  std::string mode;  // "", "oracle" or "product"
  bool trace = false;
  bool witness = false;
  bool tables = false;
  bool count_only = false;
  bool cyclic = false;
  Limits limits;
};

namespace detail {

inline constexpr std::size_t kDefaultDepth = 4;

[[noreturn]] inline void usage(std::string const& msg) {
  throw Error(ErrorCode::usage, msg);
}

template <typename T>
T require(std::optional<T> const& v, char const* flag) {
  if (!v) {
    usage(std::string("missing required option ") + flag);
  }
  return *v;
}

inline Presentation load_presentation(CommandConfig const& c) {
  if (c.presentation_path.empty()) {
    usage("missing required option --presentation");
  }
  std::ifstream in(c.presentation_path);
  if (!in) {
    throw Error(ErrorCode::input,
                "cannot open presentation file '" + c.presentation_path + "'");
  }
  return parse_presentation(in);
}

inline void print_reliability(Presentation const& p, std::ostream& out) {
  if (!p.is_free() && p.dehn_status() == DehnStatus::unverified) {
    out << "reliability: unverified (not a certified Dehn presentation)\n";
  }
}

struct Setting {
  Presentation presentation;
  std::unique_ptr<Ball> ball;
};

inline Setting make_setting(CommandConfig const& c) {
  Setting s;
  s.presentation = load_presentation(c);
  WordProblem wp = word_problem_for(s.presentation);
  s.ball = std::make_unique<Ball>(s.presentation, std::move(wp), c.limits);
  return s;
}

inline NielsenMode mode_for(CommandConfig const& c, Presentation const& p) {
  if (c.mode.empty()) {
    return p.is_free() ? NielsenMode::oracle_filter
                       : NielsenMode::generator_product;
  }
  if (c.mode == "oracle") {
    return NielsenMode::oracle_filter;
  }
  if (c.mode == "product") {
    return NielsenMode::generator_product;
  }
  usage("--mode must be 'oracle' or 'product', got '" + c.mode + "'");
}

inline NielsenSet nielsen_set_for(CommandConfig const& c, Setting& s,
                                  SubgroupSpec const& h) {
  NielsenMode const mode = mode_for(c, s.presentation);
  MembershipOracle oracle;
  if (mode == NielsenMode::oracle_filter) {
    oracle = free_membership_oracle(s.presentation, h.generators);
  }
  return build_nielsen_set(h, *s.ball, mode, c.depth.value_or(kDefaultDepth),
                           oracle);
}

inline SubgroupSpec subgroup_for(CommandConfig const& c,
                                 Presentation const& p) {
  return {parse_word_list(p, c.subgroup), require(c.k, "--k")};
}

inline void print_nielsen_header(NielsenSet const& s, std::ostream& out) {
  out << "mode: " << to_string(s.mode);
  if (s.mode == NielsenMode::generator_product) {
    out << " (complete relative to depth " << s.depth << ")";
  }
  out << "\n";
}

inline int run_reduce(CommandConfig const& c, std::ostream& out) {
  std::optional<Presentation> p;
  Word w;
  if (!c.presentation_path.empty()) {
    p = load_presentation(c);
    w = p->parse_word(c.word);
  } else {
    w = Word(c.word);
  }
  out << "free: " << free_reduce(w) << "\n";
  if (c.cyclic) {
    out << "cyclic: " << cyclic_reduce(w) << "\n";
  }
  if (p && !p->is_free()) {
    SymmetrizedRelators const s = certify(*p);
    out << "dehn: " << dehn_reduce(w, s).final_word << "\n";
    print_reliability(*p, out);
  }
  return kDefinite;
}

inline int run_wp(CommandConfig const& c, std::ostream& out) {
  Presentation p = load_presentation(c);
  Word const w = p.parse_word(c.word);
  SymmetrizedRelators const s = certify(p);
  DehnTrace const trace = dehn_reduce(w, s);
  out << (trace.final_word.empty() ? "trivial" : "nontrivial") << "\n";
  if (c.trace) {
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
      auto const& st = trace.steps[i];
      out << "step " << i + 1 << ": at " << st.position << " relator "
          << st.relator << " replace " << st.replaced << " -> "
          << st.replacement << "\n";
    }
    out << "final: " << trace.final_word << "\n";
  }
  print_reliability(p, out);
  return kDefinite;
}

inline int run_ball(CommandConfig const& c, std::ostream& out) {
  Setting s = make_setting(c);
  std::size_t const r = require(c.radius, "--radius");
  s.ball->grow_to(r);
  Ball const& b = *s.ball;
  out << "radius: " << r << "\nvertices: " << b.size() << "\n";
  for (std::size_t k = 0; k <= r; ++k) {
    out << "layer " << k << ": " << b.layer_end(k) - b.layer_begin(k) << "\n";
  }
  if (!c.count_only) {
    for (VertexId v = 0; v < b.size(); ++v) {
      out << v << " " << b.layer(v) << " " << b.word(v) << "\n";
    }
  }
  print_reliability(s.presentation, out);
  return kDefinite;
}

inline int run_slim_check(CommandConfig const& c, std::ostream& out) {
  Setting s = make_setting(c);
  std::size_t const r = require(c.radius, "--radius");
  std::size_t const delta = require(c.delta, "--delta");
  s.ball->grow_to(r);
  Ball const& b = *s.ball;
  SlimOptions opts;
  opts.inner_radius = c.inner_radius;
  auto const v = check_slim(b, delta, opts);
  std::size_t const inner = c.inner_radius.value_or(r / 2);
  if (!v) {
    out << "no violation up to radius " << r << " (inner radius " << inner
        << ", delta " << delta << ")\n"
        << "note: evidence only; nothing is certified beyond the ball\n";
  } else {
    out << "violation: delta " << delta << " is too small\n"
        << "triangle: " << b.word(v->triangle[0]) << " "
        << b.word(v->triangle[1]) << " " << b.word(v->triangle[2]) << "\n"
        << "side: " << b.word(v->side_from) << " -> " << b.word(v->side_to)
        << " label " << v->side << "\n"
        << "vertex: " << b.word(v->vertex) << " distance " << v->distance
        << "\n";
  }
  print_reliability(s.presentation, out);
  return kDefinite;
}

// Subgroup elements inside the ball: exact through folding for free
// groups, generator products up to --depth otherwise.
inline std::vector<VertexId> subgroup_vertices(CommandConfig const& c,
                                               Setting& s,
                                               SubgroupSpec const& h,
                                               std::size_t r) {
  std::vector<VertexId> out;
  Ball& b = *s.ball;
  b.grow_to(r);
  if (s.presentation.is_free()) {
    auto oracle = free_membership_oracle(s.presentation, h.generators);
    for (VertexId v = 0; v < b.count_within(r); ++v) {
      if (oracle(b.word(v))) {
        out.push_back(v);
      }
    }
    return out;
  }
  out.push_back(0);
  std::size_t const depth = c.depth.value_or(kDefaultDepth);
  for (auto const& w : enumerate_subgroup_ball(h, r, depth, b)) {
    if (auto v = b.locate(w, r)) {
      out.push_back(*v);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline int run_qc_check(CommandConfig const& c, std::ostream& out) {
  Setting s = make_setting(c);
  std::size_t const r = require(c.radius, "--radius");
  SubgroupSpec const h = subgroup_for(c, s.presentation);
  auto const elements = subgroup_vertices(c, s, h, r);
  Ball const& b = *s.ball;
  auto const v = check_quasiconvex(b, elements, h.k);
  out << "subgroup elements in ball: " << elements.size() << "\n";
  if (!v) {
    out << "no violation up to radius " << r << " (K " << h.k << ")\n"
        << "note: evidence only; nothing is certified beyond the ball\n";
  } else {
    out << "violation: K " << h.k << " is too small\n"
        << "geodesic: " << b.word(v->from) << " -> " << b.word(v->to)
        << " label " << v->geodesic << "\n"
        << "vertex: " << b.word(v->vertex) << " distance " << v->distance
        << "\n";
  }
  print_reliability(s.presentation, out);
  return kDefinite;
}

inline int run_brady(CommandConfig const& c, std::ostream& out) {
  auto const b = brady_bound(require(c.generators, "--generators"),
                             require(c.delta, "--delta"));
  out << "C = " << b.c << "\n";
  return kDefinite;
}

inline int run_enum_groups(CommandConfig const& c, std::ostream& out) {
  std::size_t const max_order = require(c.max_order, "--max-order");
  auto const groups = enumerate_groups(max_order);
  std::size_t total = 0;
  for (std::size_t n = 1; n <= max_order; ++n) {
    std::size_t count = 0;
    for (auto const& t : groups) {
      count += t.order() == n ? 1 : 0;
    }
    out << "order " << n << ": " << count << "\n";
    total += count;
  }
  out << "total: " << total << "\n";
  if (c.tables) {
    std::size_t index = 0;
    std::size_t last_order = 0;
    for (auto const& t : groups) {
      index = t.order() == last_order ? index + 1 : 1;
      last_order = t.order();
      out << "\ngroup order " << t.order() << " class " << index << " "
          << (is_abelian(t) ? "abelian" : "nonabelian") << "\n";
      for (std::size_t a = 0; a < t.order(); ++a) {
        for (std::size_t b = 0; b < t.order(); ++b) {
          out << (b == 0 ? "" : " ") << t(a, b);
        }
        out << "\n";
      }
    }
  }
  return kDefinite;
}

inline int run_nielsen_set(CommandConfig const& c, std::ostream& out) {
  Setting s = make_setting(c);
  SubgroupSpec const h = subgroup_for(c, s.presentation);
  NielsenSet const ns = nielsen_set_for(c, s, h);
  print_nielsen_header(ns, out);
  out << "k: " << ns.k << "\nlength-bound: " << ns.length_bound()
      << "\nsize: " << ns.elements.size() << "\n";
  for (auto const& w : ns.elements) {
    out << w << "\n";
  }
  print_reliability(s.presentation, out);
  return kDefinite;
}

inline int run_member(CommandConfig const& c, std::ostream& out) {
  Setting s = make_setting(c);
  SubgroupSpec const h = subgroup_for(c, s.presentation);
  Word const g = s.presentation.parse_word(c.word);
  NielsenSet const ns = nielsen_set_for(c, s, h);
  MembershipVerdict const v = decide_membership(g, ns, *s.ball);
  out << (v.member ? "member" : "non-member") << "\n";
  if (c.witness && v.witness) {
    out << "geodesic: " << v.geodesic << "\n";
    out << "factors: " << v.witness->factors.size() << "\n";
    if (!v.witness->aligned) {
      out << "alignment: none found; factors listed as products\n";
    }
    for (auto const& f : v.witness->factors) {
      out << f.s << " = " << f.l.str() << "|" << f.n.str() << "|"
          << f.r.str() << "\n";
    }
  }
  if (!v.member && ns.mode == NielsenMode::generator_product) {
    out << "note: S is complete only relative to depth " << ns.depth << "\n";
  }
  print_reliability(s.presentation, out);
  return kDefinite;
}

inline int run_oracle_member(CommandConfig const& c, std::ostream& out) {
  Presentation p;
  if (!c.presentation_path.empty()) {
    p = load_presentation(c);
  } else {
    std::string names;
    for (char ch : c.subgroup + c.word) {
      if (letter::is_letter(ch)
          && names.find(letter::generator(ch)) == std::string::npos) {
        names += letter::generator(ch);
      }
    }
    std::sort(names.begin(), names.end());
    p = Presentation::free_group(names);
  }
  auto const oracle = free_membership_oracle(p, parse_word_list(p, c.subgroup));
  out << (oracle(p.parse_word(c.word)) ? "member" : "non-member") << "\n";
  return kDefinite;
}

inline int run_conj(CommandConfig const& c, std::ostream& out) {
  Setting s = make_setting(c);
  SubgroupSpec const h = subgroup_for(c, s.presentation);
  Word const g = s.presentation.parse_word(c.element);
  std::size_t const r = require(c.radius, "--radius");
  std::optional<std::size_t> const delta
      = c.delta ? c.delta : s.presentation.delta();
  if (!delta) {
    usage("no delta: pass --delta or add 'delta:' to the presentation");
  }
  auto const bound = brady_bound(s.presentation.generators().size(), *delta);
  NielsenSet const ns = nielsen_set_for(c, s, h);
  IntersectionReport const rep = finiteness_verdict(
      nielsen_membership(ns, *s.ball), g, *s.ball, r, bound.c);
  out << "verdict: " << to_string(rep.verdict) << "\n"
      << "radius: " << rep.radius << "\n"
      << "brady-bound: " << rep.brady_bound << "\n"
      << "delta: " << *delta << "\n";
  print_nielsen_header(ns, out);
  out << "elements-found: " << rep.elements.size() << "\n";
  for (auto const& w : rep.elements) {
    out << "  " << w << "\n";
  }
  if (rep.verdict == IntersectionVerdict::infinite) {
    out << "witness: " << *rep.witness << "\n"
        << "witness-check: in H, in g^-1 H g, no trivial power up to "
        << rep.brady_bound << "\n";
  }
  if (rep.verdict == IntersectionVerdict::finite) {
    MultTable const& t = *rep.table;
    out << "order: " << t.order() << " "
        << (is_abelian(t) ? "abelian" : "nonabelian") << "\n";
    if (rep.matched_class) {
      out << "matched: order " << t.order() << " class "
          << *rep.matched_class + 1 << "\n";
    } else {
      out << "matched: none (order above the enumeration cap)\n";
    }
    out << "table:\n";
    for (std::size_t a = 0; a < t.order(); ++a) {
      for (std::size_t b = 0; b < t.order(); ++b) {
        out << (b == 0 ? "" : " ") << t(a, b);
      }
      out << "\n";
    }
  }
  print_reliability(s.presentation, out);
  return rep.verdict == IntersectionVerdict::inconclusive ? kInconclusive
                                                          : kDefinite;
}

}  // namespace detail

// Dispatches one subcommand. Errors are reported as a single first line
// "error: <code>: <message>" on `err`.
inline int run(CommandConfig const& c, std::ostream& out, std::ostream& err) {
  try {
    if (c.subcommand == "reduce") {
      return detail::run_reduce(c, out);
    }
    if (c.subcommand == "wp") {
      return detail::run_wp(c, out);
    }
    if (c.subcommand == "ball") {
      return detail::run_ball(c, out);
    }
    if (c.subcommand == "slim-check") {
      return detail::run_slim_check(c, out);
    }
    if (c.subcommand == "qc-check") {
      return detail::run_qc_check(c, out);
    }
    if (c.subcommand == "brady") {
      return detail::run_brady(c, out);
    }
    if (c.subcommand == "enum-groups") {
      return detail::run_enum_groups(c, out);
    }
    if (c.subcommand == "nielsen-set") {
      return detail::run_nielsen_set(c, out);
    }
    if (c.subcommand == "member") {
      return detail::run_member(c, out);
    }
    if (c.subcommand == "oracle-member") {
      return detail::run_oracle_member(c, out);
    }
    if (c.subcommand == "conj") {
      return detail::run_conj(c, out);
    }
    detail::usage("unknown subcommand '" + c.subcommand + "'");
  } catch (Error const& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return e.code() == ErrorCode::resource ? kResource : kUsage;
  }
}

// Parses argv-style arguments (without the program name) and runs them.
inline int run_command_line(std::vector<std::string> args, std::ostream& out,
                            std::ostream& err) {
  CommandConfig c;
  CLI::App app{"Computational group theory toolkit: word problems, "
               "quasiconvex membership and conjugate intersections",
               "ggt"};
  app.require_subcommand(1);

  auto add_presentation = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--presentation", c.presentation_path,
                                "presentation file");
    if (required) {
      opt->required();
    }
  };
  auto add_subgroup = [&](CLI::App* sub) {
    sub->add_option("--subgroup", c.subgroup,
                    "comma-separated subgroup generators")
        ->required();
    sub->add_option("--k", c.k, "quasiconvexity constant K")->required();
  };
  auto add_mode = [&](CLI::App* sub) {
    sub->add_option("--mode", c.mode, "oracle | product");
    sub->add_option("--depth", c.depth, "generator-product depth");
  };

  auto* reduce = app.add_subcommand("reduce", "free and Dehn reduction");
  reduce->add_option("--word", c.word)->required();
  reduce->add_flag("--cyclic", c.cyclic, "also print the cyclic reduction");
  add_presentation(reduce, false);

  auto* wp = app.add_subcommand("wp", "word problem via Dehn's algorithm");
  add_presentation(wp, true);
  wp->add_option("--word", c.word)->required();
  wp->add_flag("--trace", c.trace);

  auto* ball = app.add_subcommand("ball", "Cayley graph ball");
  add_presentation(ball, true);
  ball->add_option("--radius", c.radius)->required();
  ball->add_flag("--count-only", c.count_only);

  auto* slim = app.add_subcommand("slim-check", "falsify delta-slimness");
  add_presentation(slim, true);
  slim->add_option("--delta", c.delta)->required();
  slim->add_option("--radius", c.radius)->required();
  slim->add_option("--inner-radius", c.inner_radius);

  auto* qc = app.add_subcommand("qc-check", "falsify K-quasiconvexity");
  add_presentation(qc, true);
  add_subgroup(qc);
  qc->add_option("--radius", c.radius)->required();
  qc->add_option("--depth", c.depth, "generator-product depth");

  auto* brady = app.add_subcommand("brady", "Brady bound on finite subgroups");
  brady->add_option("--generators", c.generators)->required();
  brady->add_option("--delta", c.delta)->required();

  auto* groups = app.add_subcommand("enum-groups", "finite groups up to order");
  groups->add_option("--max-order", c.max_order)->required();
  groups->add_flag("--tables", c.tables);

  auto* nielsen = app.add_subcommand("nielsen-set", "weakly Nielsen set S");
  add_presentation(nielsen, true);
  add_subgroup(nielsen);
  add_mode(nielsen);

  auto* member = app.add_subcommand("member", "membership in H");
  add_presentation(member, true);
  add_subgroup(member);
  add_mode(member);
  member->add_option("--word", c.word)->required();
  member->add_flag("--witness", c.witness);

  auto* oracle = app.add_subcommand("oracle-member",
                                    "membership by folding (free groups)");
  add_presentation(oracle, false);
  oracle->add_option("--subgroup", c.subgroup)->required();
  oracle->add_option("--word", c.word)->required();

  auto* conj = app.add_subcommand("conj", "finiteness of H ∩ g^-1 H g");
  add_presentation(conj, true);
  add_subgroup(conj);
  add_mode(conj);
  conj->add_option("--element", c.element)->required();
  conj->add_option("--radius", c.radius)->required();
  conj->add_option("--delta", c.delta);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return kDefinite;
  } catch (CLI::CallForAllHelp const&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kDefinite;
  } catch (CLI::ParseError const& e) {
    err << "error: usage: " << e.what() << "\n";
    return kUsage;
  }
  for (auto* sub : app.get_subcommands()) {
    c.subcommand = sub->get_name();
  }
  try {
    c.limits = limits_from_environment(c.limits);
  } catch (Error const& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return kUsage;
  }
  return run(c, out, err);
}

}  // namespace ggt::cli

#endif  // GGT_CLI_HPP_
