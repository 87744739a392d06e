// Right stabilizers: for an edge x, the monoid of loops y at src(x)
// in the identity extension with x y = x.  Provides the internal
// L-comparability test, internally regular elements, and the kernel
// structure report.

#ifndef SGPD_STABILIZER_HPP_
#define SGPD_STABILIZER_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "common.hpp"
#include "graph.hpp"
#include "green.hpp"
#include "semigroupoid.hpp"

namespace sgpd {

  struct Stabilizer {
    FiniteSemigroupoid base;      // the ambient semigroupoid
    FiniteSemigroupoid extended;  // base with local identities adjoined
    Id                 anchor;    // x
    Id                 unit;      // adjoined identity at src(x)
    std::set<Id>       elements;  // loops y at src(x) with x y = x
    FiniteSemigroupoid monoid;    // the stabilizer with its own table
  };

  inline Stabilizer stabilizer(FiniteSemigroupoid const& s, Id const& x) {
    if (!s.has_element(x)) {
      throw_error(errc::invalid_argument,
                  "no element " + detail::quote(x));
    }
    Stabilizer t;
    t.base   = s;
    t.anchor = x;
    auto ext = adjoin_identities(s);
    t.extended = ext.extended;
    Id v   = s.underlying().src(x);
    t.unit = ext.unit_at.at(v);
    for (auto const& y : t.extended.underlying().loops_at(v)) {
      auto xy = t.extended.product(x, y);
      if (xy && *xy == x) {
        t.elements.insert(y);
      }
    }
    Graph g;
    g.add_vertex(v);
    for (auto const& y : t.elements) {
      g.add_edge(y, v, v);
    }
    std::map<std::pair<Id, Id>, Id> mul;
    for (auto const& y : t.elements) {
      for (auto const& z : t.elements) {
        mul[{y, z}] = *t.extended.product(y, z);
      }
    }
    t.monoid = FiniteSemigroupoid(std::move(g), std::move(mul), {t.unit});
    return t;
  }

  struct LChainReport {
    bool                             chain = true;
    std::optional<std::pair<Id, Id>> witness;  // incomparable pair
  };

  //! Comparability under the stabilizer's own left preorder: y is below
  //! z when y = m z for a multiplier m inside the stabilizer (the unit
  //! belongs to it, so equality is covered).
  inline LChainReport is_internal_L_chain(Stabilizer const& t) {
    auto below = [&](Id const& y, Id const& z) {
      for (auto const& m : t.elements) {
        if (*t.monoid.product(m, z) == y) {
          return true;
        }
      }
      return false;
    };
    LChainReport report;
    for (auto const& y : t.elements) {
      for (auto const& z : t.elements) {
        if (y < z && !below(y, z) && !below(z, y)) {
          report.chain   = false;
          report.witness = std::make_pair(y, z);
          return report;
        }
      }
    }
    return report;
  }

  //! Elements y of the stabilizer with y z y = y for some z in it.
  inline std::set<Id> internally_regular(Stabilizer const& t) {
    std::set<Id> out;
    for (auto const& y : t.elements) {
      for (auto const& z : t.elements) {
        if (*t.monoid.product(*t.monoid.product(y, z), y) == y) {
          out.insert(y);
          break;
        }
      }
    }
    return out;
  }

  struct StabilizerKernelReport {
    Stabilizer   stab;
    LChainReport chain;
    std::set<Id> kernel;
    bool         kernel_left_zero    = false;
    std::set<Id> regulars;
    bool         regulars_idempotent = false;
  };

  //! Gathers the kernel of the stabilizer and the facts the structure
  //! theorems predict for equidivisible aperiodic inputs; the report
  //! states what holds, expectations belong to the caller.
  inline StabilizerKernelReport
  stabilizer_kernel_check(FiniteSemigroupoid const& s, Id const& x) {
    StabilizerKernelReport report;
    report.stab  = stabilizer(s, x);
    report.chain = is_internal_L_chain(report.stab);
    auto k = kernel(report.stab.monoid);
    // The unit is always present, so the monoid is never empty.
    report.kernel.insert(k->begin(), k->end());
    report.kernel_left_zero
        = is_left_zero_semigroup(report.stab.monoid, report.kernel);
    report.regulars = internally_regular(report.stab);
    report.regulars_idempotent = true;
    for (auto const& y : report.regulars) {
      if (*report.stab.monoid.product(y, y) != y) {
        report.regulars_idempotent = false;
        break;
      }
    }
    return report;
  }

}  // namespace sgpd

#endif  // SGPD_STABILIZER_HPP_
