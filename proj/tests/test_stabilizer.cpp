#include <map>
#include <set>
#include <string>

#include <catch2/catch_amalgamated.hpp>

#include <sgpd/catalog.hpp>
#include <sgpd/constructions.hpp>
#include <sgpd/pseudovar.hpp>
#include <sgpd/stabilizer.hpp>

using namespace sgpd;

namespace {

  // Semilattice {e, f, 0} with incomparable top elements and a floor.
  FiniteSemigroupoid diamond_floor() {
    return make_semigroup(
        {"e", "f", "0"},
        [](Id const& a, Id const& b) { return a == b ? a : Id("0"); });
  }

}  // namespace

TEST_CASE("stabilizer of the saturated truncation element") {
  auto s = truncation({"a"}, 2);
  auto t = stabilizer(s, "aa");
  CHECK(t.anchor == "aa");
  CHECK(t.unit == "1_@");
  CHECK(t.elements == std::set<Id>{"1_@", "a", "aa"});
  REQUIRE(validate_semigroupoid(t.monoid).ok());
  CHECK(t.monoid.identity_edges() == std::set<Id>{"1_@"});

  auto chain = is_internal_L_chain(t);
  CHECK(chain.chain);
  CHECK_FALSE(chain.witness.has_value());

  CHECK(internally_regular(t) == std::set<Id>{"1_@", "aa"});

  auto report = stabilizer_kernel_check(s, "aa");
  CHECK(report.kernel == std::set<Id>{"aa"});
  CHECK(report.kernel_left_zero);
  CHECK(report.regulars_idempotent);
}

TEST_CASE("stabilizer in the Brandt semigroup") {
  auto const& b2 = catalog_entry("brandt2");
  auto t = stabilizer(b2, "(1,2)");
  CHECK(t.elements == std::set<Id>{"1_@", "(2,2)"});

  auto report = stabilizer_kernel_check(b2, "(1,2)");
  CHECK(report.chain.chain);
  CHECK(report.kernel == std::set<Id>{"(2,2)"});
  CHECK(report.kernel_left_zero);
  CHECK(report.regulars == std::set<Id>{"1_@", "(2,2)"});
  CHECK(report.regulars_idempotent);

  // The zero is stabilized by everything.
  auto z = stabilizer(b2, "0");
  CHECK(z.elements.size() == b2.size() + 1);
}

TEST_CASE("stabilizer in a group") {
  auto const& z4 = catalog_entry("cyclic4");
  auto t = stabilizer(z4, "1");
  // Cancellation leaves the group identity, plus the adjoined unit.
  CHECK(t.elements == std::set<Id>{"0", "1_@"});
  auto report = stabilizer_kernel_check(z4, "1");
  CHECK(report.chain.chain);
  CHECK(report.kernel == std::set<Id>{"0"});
  CHECK(report.kernel_left_zero);
  CHECK(report.regulars_idempotent);
}

TEST_CASE("incomparable stabilizer elements") {
  auto s = diamond_floor();
  REQUIRE(validate_semigroupoid(s).ok());

  auto t = stabilizer(s, "0");
  CHECK(t.elements == std::set<Id>{"0", "1_@", "e", "f"});

  auto chain = is_internal_L_chain(t);
  REQUIRE_FALSE(chain.chain);
  REQUIRE(chain.witness.has_value());
  CHECK(chain.witness->first == "e");
  CHECK(chain.witness->second == "f");

  // Consistent with the order-theoretic reading: this semigroup is not
  // equidivisible.
  CHECK_FALSE(is_equidivisible(s).equidivisible);
}

TEST_CASE("stabilizer across vertices") {
  auto const& s = catalog_entry("localsl");
  auto t = stabilizer(s, "f");
  CHECK(t.elements == std::set<Id>{"1_1", "e1", "z1"});
  CHECK(t.unit == "1_1");
  auto chain = is_internal_L_chain(t);
  CHECK(chain.chain);

  auto const& arrow = catalog_entry("arrow");
  auto u = stabilizer(arrow, "f");
  CHECK(u.elements == std::set<Id>{"1_1"});
  CHECK(is_internal_L_chain(u).chain);
}

TEST_CASE("stabilizer input checks") {
  auto const& b2 = catalog_entry("brandt2");
  CHECK_THROWS_AS(stabilizer(b2, "nope"), Error);
}

TEST_CASE("stabilizers over the equidivisible catalog entries") {
  for (auto const& entry : catalog()) {
    if (!is_equidivisible(entry.value).equidivisible) {
      continue;
    }
    bool aperiodic = entry.value.is_one_vertex() && !entry.value.empty()
                     && is_A(entry.value);
    for (auto const& x : entry.value.elements()) {
      INFO(entry.name + " / " + x);
      auto report = stabilizer_kernel_check(entry.value, x);
      CHECK(report.chain.chain);
      if (aperiodic) {
        CHECK(report.kernel_left_zero);
        CHECK(report.regulars_idempotent);
      }
    }
  }
}
