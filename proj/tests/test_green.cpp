#include <string>

#include <catch2/catch_amalgamated.hpp>

#include <sgpd/catalog.hpp>
#include <sgpd/constructions.hpp>
#include <sgpd/green.hpp>

using namespace sgpd;

TEST_CASE("Green classes of the five-element Brandt semigroup") {
  auto b2 = brandt(2);
  auto g  = green_structure(b2);

  CHECK(g.r_classes
        == std::vector<std::vector<Id>>{
            {"(1,1)", "(1,2)"}, {"(2,1)", "(2,2)"}, {"0"}});
  CHECK(g.l_classes
        == std::vector<std::vector<Id>>{
            {"(1,1)", "(2,1)"}, {"(1,2)", "(2,2)"}, {"0"}});
  CHECK(g.j_classes
        == std::vector<std::vector<Id>>{
            {"(1,1)", "(1,2)", "(2,1)", "(2,2)"}, {"0"}});
  CHECK(g.h_classes.size() == 5);  // all singletons

  // 0 sits below everything in the J order.
  auto ix = [&](Id const& e) {
    return static_cast<std::size_t>(b2.index(e));
  };
  for (auto const& e : b2.elements()) {
    CHECK(g.leq_J[ix("0")][ix(e)]);
  }
  CHECK_FALSE(g.leq_J[ix("(1,1)")][ix("0")]);
}

TEST_CASE("Green classes of a group are single classes") {
  auto z6 = cyclic_group(6);
  auto g  = green_structure(z6);
  CHECK(g.r_classes.size() == 1);
  CHECK(g.l_classes.size() == 1);
  CHECK(g.h_classes.size() == 1);
}

TEST_CASE("idempotents") {
  CHECK(idempotents(brandt(2))
        == std::vector<Id>{"(1,1)", "(2,2)", "0"});
  CHECK(idempotents(cyclic_group(4)) == std::vector<Id>{"0"});
  CHECK(idempotents(null_semigroup(2)) == std::vector<Id>{"0"});
}

TEST_CASE("omega power") {
  auto b2 = brandt(2);
  CHECK(omega_power(b2, "(1,2)") == "0");   // (1,2)^2 = 0
  CHECK(omega_power(b2, "(1,1)") == "(1,1)");
  auto z6 = cyclic_group(6);
  CHECK(omega_power(z6, "2") == "0");  // 2+2+2 = 0 mod 6
  CHECK(omega_power(z6, "1") == "0");

  SECTION("non-loops are rejected") {
    auto arrow = arrow_semigroupoid();
    CHECK_THROWS_AS(omega_power(arrow, "f"), Error);
  }
}

TEST_CASE("kernel of a one-vertex semigroupoid") {
  auto k = kernel(brandt(2));
  REQUIRE(k.has_value());
  CHECK(*k == std::vector<Id>{"0"});

  auto kz = kernel(cyclic_group(3));
  REQUIRE(kz.has_value());
  CHECK(kz->size() == 3);  // a group is its own kernel

  SECTION("multi-vertex input is out of contract") {
    CHECK_THROWS_AS(kernel(arrow_semigroupoid()), Error);
  }
  SECTION("left-zero test on the kernel") {
    CHECK(is_left_zero_semigroup(left_zero_semigroup(3),
                                 {"x1", "x2", "x3"}));
    CHECK_FALSE(is_left_zero_semigroup(cyclic_group(2), {"0", "1"}));
  }
}

TEST_CASE("regularity inside a subset") {
  auto b2 = brandt(2);
  std::set<Id> all(b2.elements().begin(), b2.elements().end());
  CHECK(is_regular_in(b2, all, "(1,2)"));  // (1,2)(2,1)(1,2) = (1,2)
  auto n2 = null_semigroup(2);
  std::set<Id> nall(n2.elements().begin(), n2.elements().end());
  CHECK(is_regular_in(n2, nall, "0"));
  CHECK_FALSE(is_regular_in(n2, nall, "x1"));  // x1 t x1 = 0 always
}

TEST_CASE("eggbox rendering is stable") {
  std::string expected =
      "D-class 1\n"
      "  +--------+--------+\n"
      "  | (1,1)* | (1,2)  |\n"
      "  +--------+--------+\n"
      "  | (2,1)  | (2,2)* |\n"
      "  +--------+--------+\n"
      "D-class 2\n"
      "  +----+\n"
      "  | 0* |\n"
      "  +----+\n";
  CHECK(eggbox(brandt(2)) == expected);
}
