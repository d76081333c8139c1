#include "doctest.h"

#include <algorithm>
#include <set>

#include "common.hpp"
#include "stralg/core.hpp"
#include "stralg/parser.hpp"

using namespace stralg;
using namespace testsupport;

TEST_CASE("parser handles the minimal two-vertex example") {
  Presentation p = parse_presentation("vertices 1 2\narrow a: 1 -> 2\n");
  CHECK(p.quiver.vertices.size() == 2);
  CHECK(p.quiver.arrows.size() == 1);
  CHECK(p.relations.empty());
}

TEST_CASE("parser reads the bound eight-cycle") {
  Presentation p = eight_cycle();
  CHECK(p.quiver.vertices.size() == 10);
  CHECK(p.quiver.arrows.size() == 10);
  CHECK(p.relations.size() == 8);
  for (const auto& r : p.relations) CHECK(r.monomial());
}

TEST_CASE("parser reads the quartic triangle") {
  Presentation p = triangle_quartic();
  CHECK(p.quiver.vertices.size() == 3);
  CHECK(p.quiver.arrows.size() == 3);
  CHECK(p.relations.size() == 3);
  for (const auto& r : p.relations) CHECK(r.terms[0].path.length() == 4);
}

TEST_CASE("parser error positions and causes") {
  CHECK_THROWS_AS(parse_presentation("vertices 1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("vertices 1 2\narrow a: 1 -> 3\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("vertices 1\nnonsense\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("vertices 1 2\narrow a: 1 -> 2\nrel b\n"), ParseError);
  // generator of length < 2
  CHECK_THROWS_AS(parse_presentation("vertices 1 2\narrow a: 1 -> 2\nrel a\n"), ParseError);
  // non-parallel binomial
  CHECK_THROWS_AS(
      parse_presentation("vertices 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\n"
                         "rel a = a.b\n"),
      ParseError);
  // line is reported
  try {
    parse_presentation("vertices 1 2\narrow a: 1 -> 2\narrow a: 1 -> 2\n");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
  }
}

TEST_CASE("non-admissible input is rejected at validation") {
  CHECK_THROWS_AS(parse_presentation("vertices 1\narrow l: 1 -> 1\n"), ParseError);
}

TEST_CASE("round-trip through the DSL is structural identity") {
  for (const char* name : {"eight_cycle_tails", "triangle_quartic", "triangle_radsq",
                           "a2", "kronecker", "line_two_rels", "triangle_kronecker"}) {
    Presentation p = fixture(name);
    Presentation q = parse_presentation(emit_dsl(p));
    CHECK(structurally_equal(p, q));
  }
}

TEST_CASE("classification of the fixtures") {
  StructureReport r1 = classify(eight_cycle());
  CHECK(r1.is_string);
  CHECK_FALSE(r1.is_gentle);

  StructureReport r3 = classify(triangle_radsq());
  CHECK(r3.is_string);
  CHECK(r3.is_gentle);

  for (const char* name : {"a2", "kronecker", "line_two_rels", "triangle_kronecker"}) {
    StructureReport r = classify(fixture(name));
    CHECK(r.is_string);
    CHECK(r.is_gentle);
  }
}

TEST_CASE("string-quiver violations carry witnesses") {
  Presentation p = parse_presentation(
      "vertices 0 1 2 3\narrow a: 0 -> 1\narrow b: 0 -> 2\narrow c: 0 -> 3\n");
  StructureReport r = classify(p);
  CHECK_FALSE(r.is_string);
  bool found = false;
  for (const auto& v : r.violations)
    if (v.find("3 outgoing arrows") != std::string::npos) found = true;
  CHECK(found);
  // two nonzero continuations of one arrow also violate a string axiom
  Presentation q = parse_presentation(
      "vertices 0 1 2 3\narrow a: 0 -> 1\narrow b: 1 -> 2\narrow c: 1 -> 3\n");
  CHECK_FALSE(classify(q).is_string);
}

TEST_CASE("nonzero path enumeration") {
  auto names = [](const Presentation& p) {
    std::vector<std::string> out;
    for (const Path& x : nonzero_paths(p)) out.push_back(fmt(p, x));
    return out;
  };
  CHECK(names(a2()) == std::vector<std::string>{"e_1", "e_2", "a"});
  CHECK(nonzero_paths(triangle_radsq()).size() == 6);

  Presentation f2 = triangle_quartic();
  auto n2 = names(f2);
  CHECK(n2.size() == 12);
  CHECK(std::count(n2.begin(), n2.end(), "x.y.z") == 1);
  CHECK(std::count(n2.begin(), n2.end(), "z.x.y") == 1);

  // ordering: by length, then lexicographic arrow names
  auto paths2 = nonzero_paths(f2);
  for (size_t i = 0; i + 1 < paths2.size(); ++i)
    CHECK_FALSE(path_less(f2.quiver, paths2[i + 1], paths2[i]));

  Presentation bin = parse_presentation(
      "vertices 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 1 -> 2\n"
      "rel a.b = c.b\n");
  CHECK_THROWS_AS(nonzero_paths(bin), Error);
}

TEST_CASE("overlap meet and join") {
  Presentation f1 = eight_cycle();
  auto r = overlap(f1.quiver, path_of(f1, "a.b.c"), path_of(f1, "c.d"));
  CHECK(fmt(f1, r.meet) == "c");
  CHECK(fmt(f1, r.join) == "a.b.c.d");

  // full-overlap case
  auto full = overlap(f1.quiver, path_of(f1, "a.b"), path_of(f1, "a.b"));
  CHECK(fmt(f1, full.meet) == "a.b");
  CHECK(fmt(f1, full.join) == "a.b");

  Presentation f2 = triangle_quartic();
  auto w = overlap_at(f2.quiver, path_of(f2, "x.y.z.x"), path_of(f2, "y.z.x.y"), 1);
  CHECK(fmt(f2, w.meet) == "y.z.x");
  CHECK(fmt(f2, w.join) == "x.y.z.x.y");

  CHECK_THROWS_AS(overlap(f1.quiver, path_of(f1, "a.b"), path_of(f1, "e.f")), Error);

  // ambiguous alignment on a two-cycle
  Presentation two = parse_presentation(
      "vertices 1 2\narrow a: 1 -> 2\narrow b: 2 -> 1\nrel a.b.a.b\n");
  CHECK(overlap_offsets(two.quiver, path_of(two, "a.b.a.b"), path_of(two, "a.b")) ==
        std::vector<int>{2});
  CHECK(overlap_offsets(two.quiver, path_of(two, "a.b.a.b"),
                        path_of(two, "a.b.a.b")) == std::vector<int>{0, 2});
  CHECK_THROWS_AS(
      overlap(two.quiver, path_of(two, "a.b.a.b"), path_of(two, "a.b.a.b")), Error);
}

TEST_CASE("overlap invariants on fixture generator pairs") {
  Presentation f1 = eight_cycle();
  for (const auto& r1 : f1.relations)
    for (const auto& r2 : f1.relations) {
      const Path& p = r1.terms[0].path;
      const Path& q = r2.terms[0].path;
      for (int off : overlap_offsets(f1.quiver, p, q)) {
        auto o = overlap_at(f1.quiver, p, q, off);
        CHECK(is_prefix(p, o.join));
        CHECK(is_suffix(o.meet, p));
        CHECK(is_prefix(o.meet, q));
      }
    }
}

TEST_CASE("relation cycles of the fixtures") {
  Presentation f1 = eight_cycle();
  auto cycles1 = relation_cycles(f1);
  REQUIRE(cycles1.size() == 1);
  CHECK(cycles1[0].cycle.length() == 8);
  CHECK_FALSE(cycles1[0].gentle);
  CHECK(cycles1[0].generators.size() == 6);  // the tail relations are not on it
  for (const auto& g : cycles1[0].generators) {
    const Path& gp = f1.relations[g.relation].terms[0].path;
    CHECK(reads_off_cycle(f1.quiver, cycles1[0].cycle, gp, g.offset));
    CHECK(gp.length() == 4);
  }

  Presentation f3 = triangle_radsq();
  auto cycles3 = relation_cycles(f3);
  REQUIRE(cycles3.size() == 1);
  CHECK(cycles3[0].gentle);
  CHECK(cycles3[0].cycle.length() == 3);
  CHECK(cycles3[0].generators.size() == 3);

  Presentation f2 = triangle_quartic();
  auto cycles2 = relation_cycles(f2);
  REQUIRE(cycles2.size() == 1);
  CHECK(cycles2[0].cycle.length() == 3);
  CHECK_FALSE(cycles2[0].gentle);
  // each length-4 generator wraps past the start of the 3-cycle once
  for (const auto& g : cycles2[0].generators) CHECK(g.wraps == 1);

  CHECK(relation_cycles(a2()).empty());
  CHECK(relation_cycles(kronecker()).empty());
}

TEST_CASE("gentle flag matches maximal positioned-generator length") {
  for (const char* name : {"eight_cycle_tails", "triangle_quartic", "triangle_radsq",
                           "triangle_kronecker"}) {
    Presentation p = fixture(name);
    for (const auto& c : relation_cycles(p)) {
      int maxlen = 0;
      for (const auto& g : c.generators)
        maxlen = std::max(maxlen, p.relations[g.relation].terms[0].path.length());
      CHECK(c.gentle == (maxlen == 2));
    }
  }
}

TEST_CASE("normalization drops non-minimal generators") {
  Presentation p = parse_presentation(
      "vertices 1 2 3 4\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 3 -> 4\n"
      "rel a.b\nrel a.b.c\n");
  CHECK(p.relations.size() == 1);
  CHECK(fmt(p, p.relations[0].terms[0].path) == "a.b");
}
