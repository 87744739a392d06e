#include <map>
#include <set>
#include <string>

#include <catch2/catch_amalgamated.hpp>

#include <sgpd/catalog.hpp>
#include <sgpd/omega_term.hpp>
#include <sgpd/pseudovar.hpp>

using namespace sgpd;

TEST_CASE("term parsing") {
  CHECK(term_to_string(parse_term("a")) == "a");
  // Names are maximal runs, so "ab" is one variable; concatenation
  // needs whitespace or parentheses.
  CHECK(term_variables(parse_term("ab")) == std::set<Id>{"ab"});
  CHECK(term_to_string(parse_term("a b")) == "a b");
  CHECK(term_to_string(parse_term("a^w")) == "a^w");
  CHECK(term_to_string(parse_term("(a b)^w")) == "(a b)^w");
  CHECK(term_to_string(parse_term("a^w^w")) == "(a^w)^w");
  CHECK(term_to_string(parse_term("x^w y x^w")) == "x^w y x^w");
  CHECK(term_to_string(parse_term("  x1 ( y2 ) ")) == "x1 y2");
  CHECK(term_variables(parse_term("x^w y x^w")) == std::set<Id>{"x", "y"});

  for (std::string bad :
       {"", "a^", "^w", "(a", "a)", "a^v", "a$b", "a ^ b"}) {
    INFO(bad);
    CHECK_THROWS_AS(parse_term(bad), Error);
  }

  auto [lhs, rhs] = parse_pseudoidentity("x^w y x^w = x^w");
  CHECK(term_to_string(lhs) == "x^w y x^w");
  CHECK(term_to_string(rhs) == "x^w");
  CHECK_THROWS_AS(parse_pseudoidentity("a b"), Error);
  CHECK_THROWS_AS(parse_pseudoidentity("a = b = c"), Error);
}

TEST_CASE("term evaluation") {
  auto const& b2 = catalog_entry("brandt2");
  auto aw = parse_term("a^w");
  CHECK(eval_term(aw, b2, {{"a", "(1,2)"}}) == "0");
  CHECK(eval_term(aw, b2, {{"a", "(1,1)"}}) == "(1,1)");
  CHECK(eval_term(parse_term("a b"), b2, {{"a", "(1,2)"}, {"b", "(2,1)"}})
        == "(1,1)");
  CHECK_THROWS_AS(eval_term(aw, b2, {}), Error);  // unassigned variable

  auto const& u1 = catalog_entry("semilattice2");
  auto lhs = parse_term("a^w b a^w");
  CHECK(eval_term(lhs, u1, {{"a", "1"}, {"b", "0"}}) == "0");
  CHECK(eval_term(parse_term("a^w"), u1, {{"a", "1"}, {"b", "0"}}) == "1");

  // Omega only applies to loops.
  auto const& arrow = catalog_entry("arrow");
  CHECK_THROWS_AS(eval_term(parse_term("x^w"), arrow, {{"x", "f"}}), Error);
  CHECK_THROWS_AS(
      eval_term(parse_term("x x"), arrow, {{"x", "f"}}), Error);
}

TEST_CASE("pseudoidentity checks on single members") {
  auto [l1, r1] = parse_pseudoidentity("x = x");
  for (auto const& entry : catalog()) {
    INFO(entry.name);
    CHECK(check_pseudoidentity(l1, r1, entry.value).holds);
  }

  auto [l2, r2] = parse_pseudoidentity("x^w y x^w = x^w");
  auto u1 = check_pseudoidentity(l2, r2, catalog_entry("semilattice2"));
  REQUIRE_FALSE(u1.holds);
  CHECK(*u1.witness == std::map<Id, Id>{{"x", "1"}, {"y", "0"}});
  CHECK(check_pseudoidentity(l2, r2, catalog_entry("trunc2_ab")).holds);

  // One side defined, the other undefined, counts as a failure.
  auto const& localsl = catalog_entry("localsl");
  auto [l3, r3] = parse_pseudoidentity("x y = y x");
  auto rep = check_pseudoidentity(l3, r3, localsl);
  REQUIRE_FALSE(rep.holds);

  // Vacuous truth on a loop-free member: omega is never defined.
  auto [l4, r4] = parse_pseudoidentity("x^w = x^w x");
  CHECK(check_pseudoidentity(l4, r4, catalog_entry("arrow")).holds);

  Graph g;
  g.add_vertex("v");
  CHECK(check_pseudoidentity(l2, r2, FiniteSemigroupoid(g, {})).holds);
}

TEST_CASE("pseudoidentity laws match the membership predicates") {
  auto [lli, rli] = parse_pseudoidentity("x^w y x^w = x^w");
  auto [la, ra]   = parse_pseudoidentity("x^w = x^w x");
  for (auto const& entry : catalog()) {
    if (!entry.value.is_one_vertex() || entry.value.empty()) {
      continue;
    }
    INFO(entry.name);
    CHECK(check_pseudoidentity(lli, rli, entry.value).holds
          == is_LI(entry.value));
    CHECK(check_pseudoidentity(la, ra, entry.value).holds
          == is_A(entry.value));
  }
}

TEST_CASE("catalog sweep with a membership filter") {
  auto [lhs, rhs] = parse_pseudoidentity("a^w = a^w b a^w");
  auto results = check_over_catalog(
      lhs, rhs, [](FiniteSemigroupoid const& s) { return is_LI(s); });
  // Members where the filter itself is inapplicable do not pass it.
  CHECK(results.size() == 14);
  for (auto const& r : results) {
    INFO(r.member);
    CHECK(r.report.holds);
  }

  auto all = check_over_catalog(lhs, rhs, {});
  CHECK(all.size() == catalog().size());
  int failures = 0;
  for (auto const& r : all) {
    failures += r.report.holds ? 0 : 1;
  }
  CHECK(failures > 0);
}

TEST_CASE("assignment enumeration cap") {
  auto [lhs, rhs] = parse_pseudoidentity(
      "x1 x2 x3 x4 x5 x6 x7 x8 x9 x10 x11 = x1");
  CHECK_THROWS_AS(check_pseudoidentity(lhs, rhs, catalog_entry("brandt2")),
                  Error);
}
