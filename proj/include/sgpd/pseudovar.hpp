// Membership tests for the standard pseudovarieties used throughout,
// plus equidivisibility of a finite semigroupoid.
//
// The one-vertex predicates reject genuine multi-vertex input; the
// local variants test every local semigroup of loops.  All predicates
// are vacuously true on the empty semigroupoid, except is_CS which
// needs a nonempty semigroup.

#ifndef SGPD_PSEUDOVAR_HPP_
#define SGPD_PSEUDOVAR_HPP_

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "common.hpp"
#include "green.hpp"
#include "semigroupoid.hpp"

namespace sgpd {

  namespace detail {
    inline void require_semigroup(FiniteSemigroupoid const& s) {
      if (s.underlying().vertices.size() > 1) {
        throw_error(errc::not_a_semigroup,
                    "this membership test expects a one-vertex semigroupoid");
      }
    }

    //! The subset {e s e : s in S} for an idempotent e of a semigroup.
    inline std::set<int> local_monoid_at(FiniteSemigroupoid const& s, int e) {
      std::set<int> out;
      int n = static_cast<int>(s.size());
      for (int x = 0; x < n; ++x) {
        out.insert(s.product_ix(s.product_ix(e, x), e));
      }
      return out;
    }

    inline bool subset_is_semilattice(FiniteSemigroupoid const& s,
                                      std::set<int> const&      subset) {
      for (int x : subset) {
        if (s.product_ix(x, x) != x) {
          return false;
        }
        for (int y : subset) {
          if (s.product_ix(x, y) != s.product_ix(y, x)) {
            return false;
          }
        }
      }
      return true;
    }
  }  // namespace detail

  //! Commutative band: xx = x and xy = yx.
  inline bool is_Sl(FiniteSemigroupoid const& s) {
    detail::require_semigroup(s);
    std::set<int> all;
    for (int i = 0; i < static_cast<int>(s.size()); ++i) {
      all.insert(i);
    }
    return detail::subset_is_semilattice(s, all);
  }

  //! Nilpotent: a zero exists and all products of |S| factors equal it.
  inline bool is_N(FiniteSemigroupoid const& s) {
    detail::require_semigroup(s);
    if (s.empty()) {
      return true;
    }
    int n = static_cast<int>(s.size());
    int zero = -1;
    for (int z = 0; z < n && zero < 0; ++z) {
      bool is_zero = true;
      for (int x = 0; x < n && is_zero; ++x) {
        is_zero = s.product_ix(z, x) == z && s.product_ix(x, z) == z;
      }
      if (is_zero) {
        zero = z;
      }
    }
    if (zero < 0) {
      return false;
    }
    std::set<int> layer;
    for (int x = 0; x < n; ++x) {
      layer.insert(x);
    }
    for (int k = 1; k < n; ++k) {
      std::set<int> next;
      for (int p : layer) {
        for (int x = 0; x < n; ++x) {
          next.insert(s.product_ix(p, x));
        }
      }
      if (next == layer) {
        break;
      }
      layer = std::move(next);
    }
    return layer.size() == 1 && *layer.begin() == zero;
  }

  //! Every product of n factors is a left zero.
  inline bool is_Kn(FiniteSemigroupoid const& s, std::size_t n) {
    detail::require_semigroup(s);
    if (n == 0) {
      throw_error(errc::invalid_argument, "need n >= 1");
    }
    if (s.empty()) {
      return true;
    }
    int m = static_cast<int>(s.size());
    std::set<int> layer;
    for (int x = 0; x < m; ++x) {
      layer.insert(x);
    }
    for (std::size_t k = 1; k < n; ++k) {
      std::set<int> next;
      for (int p : layer) {
        for (int x = 0; x < m; ++x) {
          next.insert(s.product_ix(p, x));
        }
      }
      if (next == layer) {
        break;  // the factor-count layers decrease, then stay fixed
      }
      layer = std::move(next);
    }
    for (int p : layer) {
      for (int x = 0; x < m; ++x) {
        if (s.product_ix(p, x) != p) {
          return false;
        }
      }
    }
    return true;
  }

  //! Idempotents are left zeros.
  inline bool is_K(FiniteSemigroupoid const& s) {
    detail::require_semigroup(s);
    int n = static_cast<int>(s.size());
    for (int e = 0; e < n; ++e) {
      if (s.product_ix(e, e) != e) {
        continue;
      }
      for (int x = 0; x < n; ++x) {
        if (s.product_ix(e, x) != e) {
          return false;
        }
      }
    }
    return true;
  }

  //! Idempotents are right zeros.
  inline bool is_D(FiniteSemigroupoid const& s) {
    detail::require_semigroup(s);
    int n = static_cast<int>(s.size());
    for (int e = 0; e < n; ++e) {
      if (s.product_ix(e, e) != e) {
        continue;
      }
      for (int x = 0; x < n; ++x) {
        if (s.product_ix(x, e) != e) {
          return false;
        }
      }
    }
    return true;
  }

  //! e S e = {e} for every idempotent e.
  inline bool is_LI(FiniteSemigroupoid const& s) {
    detail::require_semigroup(s);
    int n = static_cast<int>(s.size());
    for (int e = 0; e < n; ++e) {
      if (s.product_ix(e, e) != e) {
        continue;
      }
      auto local = detail::local_monoid_at(s, e);
      if (local.size() != 1 || *local.begin() != e) {
        return false;
      }
    }
    return true;
  }

  //! e S e is a semilattice for every idempotent e.
  inline bool is_LSl(FiniteSemigroupoid const& s) {
    detail::require_semigroup(s);
    int n = static_cast<int>(s.size());
    for (int e = 0; e < n; ++e) {
      if (s.product_ix(e, e) != e) {
        continue;
      }
      if (!detail::subset_is_semilattice(s, detail::local_monoid_at(s, e))) {
        return false;
      }
    }
    return true;
  }

  //! Aperiodic: the idempotent power of x absorbs one more factor of x.
  inline bool is_A(FiniteSemigroupoid const& s) {
    detail::require_semigroup(s);
    for (auto const& x : s.elements()) {
      Id e = omega_power(s, x);
      if (s.mul(e, x) != e) {
        return false;
      }
    }
    return true;
  }

  //! Completely simple: nonempty with a single J-class.
  inline bool is_CS(FiniteSemigroupoid const& s) {
    detail::require_semigroup(s);
    if (s.empty()) {
      throw_error(errc::empty_semigroup,
                  "complete simplicity is undefined for the empty semigroup");
    }
    return green_structure(s).j_classes.size() == 1;
  }

  //! Applies a semigroup predicate to the loop semigroup at every
  //! vertex; vertices without loops pass vacuously.
  inline bool
  is_local(FiniteSemigroupoid const& s,
           std::function<bool(FiniteSemigroupoid const&)> const& pred) {
    for (auto const& v : s.underlying().vertices) {
      auto loops = s.underlying().loops_at(v);
      if (loops.empty()) {
        continue;
      }
      Graph h;
      h.add_vertex(v);
      for (auto const& e : loops) {
        h.add_edge(e, v, v);
      }
      std::map<std::pair<Id, Id>, Id> mul;
      for (auto const& a : loops) {
        for (auto const& b : loops) {
          mul[{a, b}] = s.mul(a, b);
        }
      }
      if (!pred(FiniteSemigroupoid(std::move(h), std::move(mul)))) {
        return false;
      }
    }
    return true;
  }

  struct EquidivReport {
    bool equidivisible = true;
    // A factorization pair u v = x y admitting no one-sided transfer.
    std::optional<std::array<Id, 4>> witness;
  };

  //! Equidivisibility: whenever u v == x y, some t (possibly a local
  //! unit) satisfies u t == x and v == t y, or x t == u and y == t v.
  inline EquidivReport is_equidivisible(FiniteSemigroupoid const& s) {
    if (s.size() > limits::equidiv_max_edges) {
      throw_error(errc::budget_exceeded,
                  "too many edges for the equidivisibility scan");
    }
    int m = static_cast<int>(s.size());
    std::size_t words = (static_cast<std::size_t>(m) + 63) / 64;
    // bitsets over t: right_div[u][x] = { t : u t == x },
    //                 left_div[y][v]  = { t : t y == v }.
    std::vector<std::uint64_t> right_div(
        static_cast<std::size_t>(m) * static_cast<std::size_t>(m) * words, 0);
    std::vector<std::uint64_t> left_div(
        static_cast<std::size_t>(m) * static_cast<std::size_t>(m) * words, 0);
    auto set_bit = [&](std::vector<std::uint64_t>& bits, int a, int b, int t) {
      bits[(static_cast<std::size_t>(a) * static_cast<std::size_t>(m)
            + static_cast<std::size_t>(b))
               * words
           + static_cast<std::size_t>(t) / 64]
          |= (std::uint64_t(1) << (static_cast<std::size_t>(t) % 64));
    };
    for (int a = 0; a < m; ++a) {
      for (int t = 0; t < m; ++t) {
        if (s.composable_ix(a, t)) {
          set_bit(right_div, a, s.product_ix(a, t), t);
        }
        if (s.composable_ix(t, a)) {
          set_bit(left_div, a, s.product_ix(t, a), t);
        }
      }
    }
    auto meet = [&](std::vector<std::uint64_t> const& r, int a, int b,
                    std::vector<std::uint64_t> const& l, int c, int d) {
      std::size_t ro = (static_cast<std::size_t>(a)
                        * static_cast<std::size_t>(m)
                        + static_cast<std::size_t>(b))
                       * words;
      std::size_t lo = (static_cast<std::size_t>(c)
                        * static_cast<std::size_t>(m)
                        + static_cast<std::size_t>(d))
                       * words;
      for (std::size_t w = 0; w < words; ++w) {
        if ((r[ro + w] & l[lo + w]) != 0) {
          return true;
        }
      }
      return false;
    };

    // Group composable pairs by their product.
    std::map<int, std::vector<std::pair<int, int>>> by_product;
    for (int u = 0; u < m; ++u) {
      for (int v = 0; v < m; ++v) {
        if (s.composable_ix(u, v)) {
          by_product[s.product_ix(u, v)].emplace_back(u, v);
        }
      }
    }
    for (int u = 0; u < m; ++u) {
      for (int v = 0; v < m; ++v) {
        if (!s.composable_ix(u, v)) {
          continue;
        }
        for (auto const& [x, y] : by_product.at(s.product_ix(u, v))) {
          if (u == x && v == y) {
            continue;  // witnessed by the local unit
          }
          // u t == x with v == t y, or x t == u with y == t v.
          if (meet(right_div, u, x, left_div, y, v)) {
            continue;
          }
          if (meet(right_div, x, u, left_div, v, y)) {
            continue;
          }
          return {false,
                  std::array<Id, 4>{s.element(u), s.element(v), s.element(x),
                                    s.element(y)}};
        }
      }
    }
    return {true, std::nullopt};
  }

  struct PseudovarietyPredicate {
    Id                                              name;
    std::function<bool(FiniteSemigroupoid const&)>  test;
  };

  //! Named membership tests for the command line and for sweeps.  The
  //! lowercase-l names apply the corresponding test to every local loop
  //! semigroup of a semigroupoid.
  inline std::vector<PseudovarietyPredicate> const& predicate_registry() {
    static std::vector<PseudovarietyPredicate> const preds = [] {
      std::vector<PseudovarietyPredicate> out;
      auto base = std::vector<PseudovarietyPredicate>{
          {"Sl", [](FiniteSemigroupoid const& s) { return is_Sl(s); }},
          {"N", [](FiniteSemigroupoid const& s) { return is_N(s); }},
          {"K", [](FiniteSemigroupoid const& s) { return is_K(s); }},
          {"K2", [](FiniteSemigroupoid const& s) { return is_Kn(s, 2); }},
          {"K3", [](FiniteSemigroupoid const& s) { return is_Kn(s, 3); }},
          {"D", [](FiniteSemigroupoid const& s) { return is_D(s); }},
          {"LI", [](FiniteSemigroupoid const& s) { return is_LI(s); }},
          {"LSl", [](FiniteSemigroupoid const& s) { return is_LSl(s); }},
          {"A", [](FiniteSemigroupoid const& s) { return is_A(s); }},
          {"CS", [](FiniteSemigroupoid const& s) { return is_CS(s); }},
      };
      for (auto const& p : base) {
        out.push_back(p);
      }
      for (auto const& p : base) {
        out.push_back({"l" + p.name, [t = p.test](FiniteSemigroupoid const& s) {
                         return is_local(s, t);
                       }});
      }
      return out;
    }();
    return preds;
  }

  inline PseudovarietyPredicate const& predicate(Id const& name) {
    for (auto const& p : predicate_registry()) {
      if (p.name == name) {
        return p;
      }
    }
    throw_error(errc::invalid_argument,
                "no membership test named " + detail::quote(name));
  }

}  // namespace sgpd

#endif  // SGPD_PSEUDOVAR_HPP_
