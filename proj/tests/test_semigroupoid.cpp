#include <catch2/catch_amalgamated.hpp>

#include <sgpd/catalog.hpp>
#include <sgpd/constructions.hpp>
#include <sgpd/path.hpp>
#include <sgpd/semigroupoid.hpp>

using namespace sgpd;

namespace {

  // Vertices 1,2; loop u at 1; f: 1 -> 2 with f u = f.
  FiniteSemigroupoid arrow_with_loop() {
    Graph g;
    g.add_vertex("1");
    g.add_vertex("2");
    g.add_edge("u", "1", "1");
    g.add_edge("f", "1", "2");
    std::map<std::pair<Id, Id>, Id> mul{
        {{"u", "u"}, "u"},
        {{"f", "u"}, "f"},
    };
    return FiniteSemigroupoid(g, mul);
  }

}  // namespace

TEST_CASE("table validation") {
  SECTION("valid three-element example") {
    CHECK(validate_semigroupoid(arrow_with_loop()).ok());
  }
  SECTION("products must respect typing") {
    Graph g;
    g.add_vertex("1");
    g.add_vertex("2");
    g.add_edge("u", "1", "1");
    g.add_edge("f", "1", "2");
    // f u runs 1 -> 2, so u is the wrong value.
    FiniteSemigroupoid s(g, {{{"u", "u"}, "u"}, {{"f", "u"}, "u"}});
    CHECK_FALSE(validate_semigroupoid(s).ok());
  }
  SECTION("composable pairs need a product") {
    Graph g;
    g.add_vertex("1");
    g.add_edge("a", "1", "1");
    FiniteSemigroupoid s(g, {});
    CHECK_FALSE(validate_semigroupoid(s).ok());
  }
  SECTION("associativity is checked exhaustively") {
    Graph g;
    g.add_vertex("1");
    g.add_edge("a", "1", "1");
    g.add_edge("b", "1", "1");
    FiniteSemigroupoid s(g, {{{"a", "a"}, "a"},
                             {{"a", "b"}, "b"},
                             {{"b", "a"}, "a"},
                             {{"b", "b"}, "a"}});
    auto d = validate_semigroupoid(s);
    CHECK_FALSE(d.ok());
  }
  SECTION("flagged identities must satisfy the unit laws") {
    Graph g;
    g.add_vertex("1");
    g.add_edge("e", "1", "1");
    g.add_edge("z", "1", "1");
    FiniteSemigroupoid s(g,
                         {{{"e", "e"}, "e"},
                          {{"e", "z"}, "z"},
                          {{"z", "e"}, "z"},
                          {{"z", "z"}, "z"}},
                         {"z"});  // z is absorbing, not an identity
    CHECK_FALSE(validate_semigroupoid(s).ok());
  }
}

TEST_CASE("identity extension") {
  auto s   = arrow_with_loop();
  auto ext = adjoin_identities(s);
  CHECK(ext.extended.size() == s.size() + 2);
  CHECK(ext.added.size() == 2);
  CHECK(validate_semigroupoid(ext.extended).ok());

  Id one_1 = ext.unit_at.at("1");
  CHECK(ext.extended.mul(one_1, "u") == "u");
  CHECK(ext.extended.mul("u", one_1) == "u");
  CHECK(ext.extended.mul("f", one_1) == "f");
  Id one_2 = ext.unit_at.at("2");
  CHECK(ext.extended.mul(one_2, "f") == "f");

  SECTION("restricting to the old edges recovers the input") {
    auto back = without_edges(ext.extended, ext.added);
    CHECK(back == s);
  }
  SECTION("extending twice keeps adding fresh units") {
    auto twice = adjoin_identities(ext.extended);
    CHECK(twice.extended.size() == s.size() + 4);
    CHECK(validate_semigroupoid(twice.extended).ok());
  }
}

TEST_CASE("homomorphism checking") {
  auto s = arrow_with_loop();

  SECTION("the identity map is a faithful homomorphism") {
    SgpdHomomorphism h;
    h.domain   = s;
    h.codomain = s;
    for (auto const& v : s.underlying().vertices) {
      h.vmap[v] = v;
    }
    for (auto const& e : s.elements()) {
      h.emap[e] = e;
    }
    auto report = check_homomorphism(h);
    CHECK(report.ok());
    CHECK(report.faithful);
    CHECK(report.quotient);
  }
  SECTION("multiplicativity failures are reported") {
    auto z2 = cyclic_group(2);
    SgpdHomomorphism h;
    h.domain   = z2;
    h.codomain = z2;
    Id v = *z2.underlying().vertices.begin();
    h.vmap[v]   = v;
    h.emap["0"] = "1";  // swaps the elements: not multiplicative
    h.emap["1"] = "0";
    CHECK_FALSE(check_homomorphism(h).ok());
  }
}

TEST_CASE("generated subsemigroupoid") {
  auto b2 = brandt(2);
  SECTION("a single generator closes to its cyclic subsemigroup") {
    auto sub = generate_subsemigroupoid(b2, {"(1,2)"});
    // (1,2)(1,2) = 0, and then everything is 0.
    CHECK(sub.size() == 2);
    CHECK(sub.has_element("(1,2)"));
    CHECK(sub.has_element("0"));
  }
  SECTION("the matrix units generate everything") {
    auto sub = generate_subsemigroupoid(b2, {"(1,2)", "(2,1)"});
    CHECK(sub.size() == 5);
  }
  SECTION("empty generator sets are rejected") {
    CHECK_THROWS_AS(generate_subsemigroupoid(b2, {}), Error);
  }
}

TEST_CASE("direct product") {
  auto z2 = cyclic_group(2);
  auto p  = direct_product(z2, z2);
  CHECK(p.size() == 4);
  CHECK(validate_semigroupoid(p).ok());
  CHECK(p.mul("(1|0)", "(1|1)") == "(0|1)");
}

TEST_CASE("quotient by a congruence") {
  auto z4 = cyclic_group(4);
  GraphEquivalence eq;
  eq.base    = z4.underlying();
  eq.classes = {{"0", "2"}, {"1", "3"}};
  auto q = quotient_semigroupoid(z4, eq);
  CHECK(q.quotient.size() == 2);
  CHECK(validate_semigroupoid(q.quotient).ok());
  CHECK(q.quotient.mul("1", "1") == "0");

  SECTION("non-congruences are refused") {
    GraphEquivalence bad;
    bad.base    = z4.underlying();
    bad.classes = {{"0", "1"}};
    CHECK_THROWS_AS(quotient_semigroupoid(z4, bad), Error);
  }
}

TEST_CASE("path evaluation is a left fold over the labeling") {
  auto t = truncation({"a", "b"}, 2);
  Graph base = t.underlying();
  GraphMorphism id_label;
  id_label.domain   = base;
  id_label.codomain = base;
  for (auto const& v : base.vertices) {
    id_label.vmap[v] = v;
  }
  for (auto const& [e, ends] : base.edges) {
    (void) ends;
    id_label.emap[e] = e;
  }
  Path w(base, {"a", "b", "a"});
  CHECK(evaluate_path(t, id_label, w) == "ab");
  CHECK(evaluate_path(t, id_label, Path(base, {"b"})) == "b");
}

TEST_CASE("greedy generators") {
  auto t = truncation({"a", "b"}, 2);
  auto gens = greedy_generators(t);
  // The two letters generate every length-2 word.
  CHECK(gens == std::vector<Id>{"a", "b"});
}

TEST_CASE("divisor search") {
  auto triv = trivial_semigroup();
  auto z2   = cyclic_group(2);
  auto b2   = brandt(2);

  CHECK(is_divisor(triv, z2).verdict == DivisorVerdict::yes);
  CHECK(is_divisor(z2, z2).verdict == DivisorVerdict::yes);
  CHECK(is_divisor(z2, b2).verdict == DivisorVerdict::no);  // B_2 aperiodic
  CHECK(is_divisor(b2, b2).verdict == DivisorVerdict::yes);
  // A left-zero pair divides the 2x2 rectangular band.
  CHECK(is_divisor(left_zero_semigroup(2), rectangular_band(2, 2)).verdict
        == DivisorVerdict::yes);
}
