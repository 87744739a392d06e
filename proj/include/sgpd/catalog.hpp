// A fixed catalog of small named semigroupoids used for sweeps and
// cross-checks.

#ifndef SGPD_CATALOG_HPP_
#define SGPD_CATALOG_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "common.hpp"
#include "constructions.hpp"
#include "semigroupoid.hpp"

namespace sgpd {

  struct CatalogEntry {
    Id                 name;
    FiniteSemigroupoid value;
  };

  inline FiniteSemigroupoid left_zero_semigroup(std::size_t n) {
    std::vector<Id> elements;
    for (std::size_t i = 1; i <= n; ++i) {
      elements.push_back("x" + std::to_string(i));
    }
    return make_semigroup(elements,
                          [](Id const& a, Id const&) { return a; });
  }

  inline FiniteSemigroupoid right_zero_semigroup(std::size_t n) {
    std::vector<Id> elements;
    for (std::size_t i = 1; i <= n; ++i) {
      elements.push_back("x" + std::to_string(i));
    }
    return make_semigroup(elements,
                          [](Id const&, Id const& b) { return b; });
  }

  //! n elements, one of them a zero, every product equal to that zero.
  inline FiniteSemigroupoid null_semigroup(std::size_t n) {
    if (n == 0) {
      throw_error(errc::invalid_argument, "need at least the zero element");
    }
    std::vector<Id> elements = {"0"};
    for (std::size_t i = 1; i < n; ++i) {
      elements.push_back("x" + std::to_string(i));
    }
    return make_semigroup(elements,
                          [](Id const&, Id const&) { return Id("0"); });
  }

  inline FiniteSemigroupoid cyclic_group(std::size_t n) {
    if (n == 0) {
      throw_error(errc::invalid_argument, "cyclic group needs n >= 1");
    }
    std::vector<Id> elements;
    for (std::size_t i = 0; i < n; ++i) {
      elements.push_back(std::to_string(i));
    }
    return make_semigroup(elements, [n](Id const& a, Id const& b) {
      auto i = static_cast<std::size_t>(std::stoul(a));
      auto j = static_cast<std::size_t>(std::stoul(b));
      return Id(std::to_string((i + j) % n));
    });
  }

  //! (i|j)(k|l) = (i|l).
  inline FiniteSemigroupoid rectangular_band(std::size_t p, std::size_t q) {
    std::vector<Id> elements;
    for (std::size_t i = 1; i <= p; ++i) {
      for (std::size_t j = 1; j <= q; ++j) {
        elements.push_back("(" + std::to_string(i) + "|" + std::to_string(j)
                           + ")");
      }
    }
    auto row = [](Id const& x) { return x.substr(0, x.find('|')); };
    auto col = [](Id const& x) { return x.substr(x.find('|')); };
    return make_semigroup(elements, [&](Id const& a, Id const& b) {
      return row(a) + col(b);
    });
  }

  //! Two-element semilattice {0, 1} with the meet multiplication.
  inline FiniteSemigroupoid two_element_semilattice() {
    return make_semigroup({"0", "1"}, [](Id const& a, Id const& b) {
      return (a == "1" && b == "1") ? Id("1") : Id("0");
    });
  }

  inline FiniteSemigroupoid trivial_semigroup() {
    return make_semigroup({"e"}, [](Id const&, Id const&) { return Id("e"); });
  }

  //! Two vertices joined by a single edge; no composable pairs at all.
  inline FiniteSemigroupoid arrow_semigroupoid() {
    Graph g;
    g.add_vertex("1");
    g.add_vertex("2");
    g.add_edge("f", "1", "2");
    return FiniteSemigroupoid(std::move(g), {});
  }

  //! Two vertices with a copy of the two-element semilattice at each,
  //! joined by one edge that absorbs the loops on both sides.
  inline FiniteSemigroupoid local_semilattice_semigroupoid() {
    Graph g;
    g.add_vertex("1");
    g.add_vertex("2");
    g.add_edge("e1", "1", "1");
    g.add_edge("z1", "1", "1");
    g.add_edge("e2", "2", "2");
    g.add_edge("z2", "2", "2");
    g.add_edge("f", "1", "2");
    std::map<std::pair<Id, Id>, Id> mul;
    auto local = [&](Id const& e, Id const& z) {
      mul[{e, e}] = e;
      mul[{e, z}] = z;
      mul[{z, e}] = z;
      mul[{z, z}] = z;
    };
    local("e1", "z1");
    local("e2", "z2");
    for (Id const& x : {Id("e1"), Id("z1")}) {
      mul[{Id("f"), x}] = "f";
    }
    for (Id const& x : {Id("e2"), Id("z2")}) {
      mul[{x, Id("f")}] = "f";
    }
    return FiniteSemigroupoid(std::move(g), std::move(mul));
  }

  //! The fixed catalog, in a stable order.
  inline std::vector<CatalogEntry> const& catalog() {
    static std::vector<CatalogEntry> const entries = [] {
      std::vector<CatalogEntry> out;
      out.push_back({"trivial", trivial_semigroup()});
      out.push_back({"leftzero2", left_zero_semigroup(2)});
      out.push_back({"leftzero3", left_zero_semigroup(3)});
      out.push_back({"rightzero2", right_zero_semigroup(2)});
      out.push_back({"rightzero3", right_zero_semigroup(3)});
      out.push_back({"null2", null_semigroup(2)});
      out.push_back({"null3", null_semigroup(3)});
      out.push_back({"cyclic2", cyclic_group(2)});
      out.push_back({"cyclic3", cyclic_group(3)});
      out.push_back({"cyclic4", cyclic_group(4)});
      out.push_back({"cyclic6", cyclic_group(6)});
      out.push_back({"rectband22", rectangular_band(2, 2)});
      out.push_back({"rectband23", rectangular_band(2, 3)});
      out.push_back({"semilattice2", two_element_semilattice()});
      out.push_back({"brandt2", brandt(2)});
      out.push_back({"brandt3", brandt(3)});
      out.push_back({"trunc2_a", truncation({"a"}, 2)});
      out.push_back({"trunc2_ab", truncation({"a", "b"}, 2)});
      out.push_back({"trunc3_ab", truncation({"a", "b"}, 3)});
      out.push_back({"cotrunc2_a", cotruncation({"a"}, 2)});
      out.push_back({"cotrunc2_ab", cotruncation({"a", "b"}, 2)});
      out.push_back({"arrow", arrow_semigroupoid()});
      out.push_back({"localsl", local_semilattice_semigroupoid()});
      return out;
    }();
    return entries;
  }

  inline FiniteSemigroupoid const& catalog_entry(Id const& name) {
    for (auto const& entry : catalog()) {
      if (entry.name == name) {
        return entry.value;
      }
    }
    throw_error(errc::invalid_argument,
                "no catalog entry named " + detail::quote(name));
  }

}  // namespace sgpd

#endif  // SGPD_CATALOG_HPP_
