#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include <sgpd/catalog.hpp>
#include <sgpd/constructions.hpp>
#include <sgpd/green.hpp>
#include <sgpd/language.hpp>
#include <sgpd/recurrence.hpp>

using namespace sgpd;

namespace {

  using Word = std::vector<Id>;

  // Brute force over a long expansion, far beyond the production
  // window: every prefix of a recurrent word reoccurs somewhere.
  bool recurrent_oracle(PeriodicWord const& w) {
    std::size_t horizon =
        50 * (w.preperiod().size() + w.period().size() + 1);
    Word expanded;
    for (std::size_t i = 0; i < horizon; ++i) {
      expanded.push_back(w.at(i));
    }
    std::size_t upto = w.preperiod().size() + 2 * w.period().size();
    for (std::size_t n = 1; n <= upto; ++n) {
      auto begin = expanded.begin() + 1;
      auto hit   = std::search(begin, expanded.end(), expanded.begin(),
                               expanded.begin()
                                   + static_cast<std::ptrdiff_t>(n));
      if (hit == expanded.end()) {
        return false;
      }
    }
    return true;
  }

}  // namespace

TEST_CASE("recurrence of simple words") {
  Graph base = one_vertex_graph({"a", "b"});

  PeriodicWord pure(base, {}, {"a", "b"});
  auto r = is_recurrent(pure);
  CHECK(r.recurrent);
  CHECK_FALSE(r.failing_prefix.has_value());
  REQUIRE_FALSE(r.reoccurrences.empty());
  // The one-letter prefix "a" first reoccurs two positions in.
  CHECK(r.reoccurrences.front() == std::pair<std::size_t, std::size_t>{1, 2});

  // A rotated preperiod is absorbed, so this is recurrent too.
  PeriodicWord rotated(base, {"b"}, {"a", "b"});
  CHECK(rotated.preperiod().empty());
  CHECK(is_recurrent(rotated).recurrent);

  PeriodicWord stray(base, {"b"}, {"a"});
  auto f = is_recurrent(stray);
  REQUIRE_FALSE(f.recurrent);
  CHECK(*f.failing_prefix == Word{"b"});

  PeriodicWord ahead(base, {"a"}, {"b"});
  CHECK_FALSE(is_recurrent(ahead).recurrent);
  CHECK_FALSE(is_recurrent_uxuy(ahead));
  CHECK(is_recurrent_uxuy(pure));
}

TEST_CASE("recurrence over two vertices") {
  Graph g;
  g.add_vertex("1");
  g.add_vertex("2");
  g.add_edge("e", "1", "2");
  g.add_edge("f", "2", "1");
  PeriodicWord w(g, {}, {"e", "f"});
  CHECK(is_recurrent(w).recurrent);
  CHECK(is_recurrent_uxuy(w));
}

TEST_CASE("recurrence on a seeded corpus") {
  Graph base = one_vertex_graph({"a", "b", "c"});
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<std::size_t> prelen(0, 6);
  std::uniform_int_distribution<std::size_t> perlen(1, 6);
  std::uniform_int_distribution<int>         letter(0, 2);
  std::vector<Id> letters = {"a", "b", "c"};

  int recurrent_seen = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Word pre(prelen(rng));
    Word per(perlen(rng));
    for (auto& x : pre) {
      x = letters[static_cast<std::size_t>(letter(rng))];
    }
    for (auto& x : per) {
      x = letters[static_cast<std::size_t>(letter(rng))];
    }
    PeriodicWord w(base, pre, per);
    bool expected = recurrent_oracle(w);
    INFO("trial " << trial);
    CHECK(is_recurrent(w).recurrent == expected);
    CHECK(is_recurrent_uxuy(w) == expected);
    // Normal form: recurrent means no preperiod survives.
    CHECK(w.preperiod().empty() == expected);
    recurrent_seen += expected ? 1 : 0;
  }
  CHECK(recurrent_seen > 20);
  CHECK(recurrent_seen < 280);
}

TEST_CASE("recurring images in a cyclic group") {
  Graph base = one_vertex_graph({"a"});
  PeriodicWord w(base, {}, {"a"});
  auto const& z2 = catalog_entry("cyclic2");
  GraphMorphism lab{base, z2.underlying(), {{"@", "@"}}, {{"a", "1"}}};

  auto images = recurring_images(w, z2, lab);
  CHECK(images.images == std::set<Id>{"0", "1"});
  CHECK(has_recurring_idempotent(w, z2, lab));
}

TEST_CASE("recurring images in a truncation") {
  auto t = truncation({"a", "b"}, 2);
  Graph base = one_vertex_graph({"a", "b"});
  GraphMorphism lab{base, t.underlying(), {{"@", "@"}},
                    {{"a", "a"}, {"b", "b"}}};

  PeriodicWord ab(base, {}, {"a", "b"});
  auto r = recurring_images(ab, t, lab);
  CHECK(r.images == std::set<Id>{"ab"});
  CHECK(has_recurring_idempotent(ab, t, lab));

  // A non-recurrent word can still land on an idempotent here.
  PeriodicWord ba(base, {"b"}, {"a"});
  auto s = recurring_images(ba, t, lab);
  CHECK(s.images == std::set<Id>{"ba"});
  CHECK(has_recurring_idempotent(ba, t, lab));
}

TEST_CASE("double occurrence certifies non-recurrence") {
  Graph base = one_vertex_graph({"a", "b"});
  Path  b(base, {"b"});
  auto  synt = syntactic_semigroup(clopen_double_occurrence(b, b));

  PeriodicWord w(base, {"b"}, {"a"});
  REQUIRE_FALSE(is_recurrent(w).recurrent);

  // After the first b, the letter a fixes every reachable state, so
  // the stable image is the class of "b" itself; it is not idempotent.
  auto r = recurring_images(w, synt.semigroup, synt.labeling);
  CHECK(r.images == std::set<Id>{"b"});
  CHECK_FALSE(has_recurring_idempotent(w, synt.semigroup, synt.labeling));

  // The same target does not separate a recurrent word.
  PeriodicWord rec(base, {}, {"b", "a"});
  CHECK(has_recurring_idempotent(rec, synt.semigroup, synt.labeling));
}

TEST_CASE("recurring image input checks") {
  Graph base  = one_vertex_graph({"a"});
  Graph other = one_vertex_graph({"x"});
  PeriodicWord w(base, {}, {"a"});
  auto const& z2 = catalog_entry("cyclic2");

  GraphMorphism wrong_base{other, z2.underlying(), {{"@", "@"}},
                           {{"x", "1"}}};
  CHECK_THROWS_AS(recurring_images(w, z2, wrong_base), Error);

  GraphMorphism not_morphism{base, z2.underlying(), {{"@", "bad"}},
                             {{"a", "1"}}};
  CHECK_THROWS_AS(recurring_images(w, z2, not_morphism), Error);
}
