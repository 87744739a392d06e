// Green's preorders and equivalences, idempotents, omega powers, the
// kernel of a finite semigroup, and the eggbox picture.

#ifndef SGPD_GREEN_HPP_
#define SGPD_GREEN_HPP_

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "common.hpp"
#include "semigroupoid.hpp"

namespace sgpd {

  //! Green's data for a finite semigroupoid: the preorders below-R,
  //! below-L, below-J on edges (computed with local units adjoined) and
  //! the four induced partitions.  Class lists are in canonical order:
  //! classes sorted by least member, members sorted lexicographically.
  struct GreenStructure {
    std::vector<Id>                elements;
    std::vector<std::vector<bool>> leq_R;  // leq_R[x][y]: x below y
    std::vector<std::vector<bool>> leq_L;
    std::vector<std::vector<bool>> leq_J;
    std::vector<int>               r_class_of;
    std::vector<int>               l_class_of;
    std::vector<int>               j_class_of;
    std::vector<int>               h_class_of;
    std::vector<std::vector<Id>>   r_classes;
    std::vector<std::vector<Id>>   l_classes;
    std::vector<std::vector<Id>>   j_classes;
    std::vector<std::vector<Id>>   h_classes;
  };

  namespace detail {
    inline std::vector<int>
    classes_from_preorder(std::vector<std::vector<bool>> const& leq,
                          std::vector<std::vector<Id>>&         out,
                          std::vector<Id> const&                elements) {
      int n = static_cast<int>(elements.size());
      std::vector<int> cls(static_cast<std::size_t>(n), -1);
      out.clear();
      for (int x = 0; x < n; ++x) {
        if (cls[static_cast<std::size_t>(x)] >= 0) {
          continue;
        }
        int id = static_cast<int>(out.size());
        out.emplace_back();
        for (int y = x; y < n; ++y) {
          if (cls[static_cast<std::size_t>(y)] < 0
              && leq[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]
              && leq[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)]) {
            cls[static_cast<std::size_t>(y)] = id;
            out.back().push_back(elements[static_cast<std::size_t>(y)]);
          }
        }
      }
      return cls;
    }
  }  // namespace detail

  //! x is below y in the R-order when x lies in the principal right ideal
  //! of y taken with local units; one-step products suffice because the
  //! one-step set is already closed under further right multiplication.
  inline GreenStructure green_structure(FiniteSemigroupoid const& s) {
    int n = static_cast<int>(s.size());
    GreenStructure g;
    g.elements = s.elements();
    auto matrix = [n]() {
      return std::vector<std::vector<bool>>(
          static_cast<std::size_t>(n),
          std::vector<bool>(static_cast<std::size_t>(n), false));
    };
    g.leq_R = matrix();
    g.leq_L = matrix();
    g.leq_J = matrix();

    for (int y = 0; y < n; ++y) {
      g.leq_R[static_cast<std::size_t>(y)][static_cast<std::size_t>(y)] = true;
      g.leq_L[static_cast<std::size_t>(y)][static_cast<std::size_t>(y)] = true;
      std::set<int> right = {y};
      std::set<int> left  = {y};
      for (int t = 0; t < n; ++t) {
        if (s.composable_ix(y, t)) {
          right.insert(s.product_ix(y, t));
        }
        if (s.composable_ix(t, y)) {
          left.insert(s.product_ix(t, y));
        }
      }
      for (int x : right) {
        g.leq_R[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]
            = true;
      }
      for (int x : left) {
        g.leq_L[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]
            = true;
      }
      std::set<int> twosided = right;
      for (int r : right) {
        for (int t = 0; t < n; ++t) {
          if (s.composable_ix(t, r)) {
            twosided.insert(s.product_ix(t, r));
          }
        }
      }
      for (int x : twosided) {
        g.leq_J[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]
            = true;
      }
    }

    g.r_class_of = detail::classes_from_preorder(g.leq_R, g.r_classes,
                                                 g.elements);
    g.l_class_of = detail::classes_from_preorder(g.leq_L, g.l_classes,
                                                 g.elements);
    g.j_class_of = detail::classes_from_preorder(g.leq_J, g.j_classes,
                                                 g.elements);

    // H is the meet of R and L.
    std::map<std::pair<int, int>, int> h_ids;
    g.h_class_of.assign(static_cast<std::size_t>(n), -1);
    for (int x = 0; x < n; ++x) {
      auto key = std::make_pair(g.r_class_of[static_cast<std::size_t>(x)],
                                g.l_class_of[static_cast<std::size_t>(x)]);
      auto it  = h_ids.find(key);
      if (it == h_ids.end()) {
        int id = static_cast<int>(g.h_classes.size());
        h_ids.emplace(key, id);
        g.h_classes.emplace_back();
        g.h_class_of[static_cast<std::size_t>(x)] = id;
        g.h_classes.back().push_back(g.elements[static_cast<std::size_t>(x)]);
      } else {
        g.h_class_of[static_cast<std::size_t>(x)] = it->second;
        g.h_classes[static_cast<std::size_t>(it->second)].push_back(
            g.elements[static_cast<std::size_t>(x)]);
      }
    }
    return g;
  }

  inline std::vector<Id> idempotents(FiniteSemigroupoid const& s) {
    std::vector<Id> out;
    for (auto const& e : s.elements()) {
      if (s.composable(e, e) && s.mul(e, e) == e) {
        out.push_back(e);
      }
    }
    return out;
  }

  //! The unique idempotent power of a loop edge, found by cycle detection
  //! on the power sequence.
  inline Id omega_power(FiniteSemigroupoid const& s, Id const& x) {
    if (s.underlying().src(x) != s.underlying().dst(x)) {
      throw_error(errc::not_a_loop,
                  detail::quote(x) + " is not a loop, so has no powers");
    }
    std::map<Id, std::size_t> first_seen;
    std::vector<Id>           powers;
    Id                        current = x;
    while (first_seen.emplace(current, powers.size()).second) {
      powers.push_back(current);
      current = s.mul(current, x);
    }
    std::size_t start = first_seen.at(current);
    for (std::size_t i = start; i < powers.size(); ++i) {
      if (s.mul(powers[i], powers[i]) == powers[i]) {
        return powers[i];
      }
    }
    throw_error(errc::invalid_argument,
                "power cycle of " + detail::quote(x)
                    + " contains no idempotent; table is not associative");
  }

  //! Kernel (least two-sided ideal) of a one-vertex semigroupoid.
  //! Returns std::nullopt for the empty semigroup.
  inline std::optional<std::vector<Id>>
  kernel(FiniteSemigroupoid const& s) {
    if (s.underlying().vertices.size() > 1) {
      throw_error(errc::not_a_semigroup,
                  "kernel is defined here for one-vertex semigroupoids only");
    }
    if (s.empty()) {
      return std::nullopt;
    }
    GreenStructure g = green_structure(s);
    int n = static_cast<int>(s.size());
    std::vector<Id> out;
    for (int x = 0; x < n; ++x) {
      bool below_all = true;
      for (int y = 0; y < n && below_all; ++y) {
        below_all = g.leq_J[static_cast<std::size_t>(x)]
                           [static_cast<std::size_t>(y)];
      }
      if (below_all) {
        out.push_back(s.element(x));
      }
    }
    if (out.empty()) {
      throw_error(errc::invalid_argument,
                  "no least ideal found; table is not associative");
    }
    return out;
  }

  //! Checks that the subset is closed under the (total, for a left-zero
  //! band) multiplication and that xy == x throughout.
  inline bool is_left_zero_semigroup(FiniteSemigroupoid const& s,
                                     std::set<Id> const&       subset) {
    for (auto const& x : subset) {
      for (auto const& y : subset) {
        if (!s.composable(x, y)) {
          throw_error(errc::not_closed,
                      detail::quote(x) + " and " + detail::quote(y)
                          + " are not composable, so the subset is not a "
                            "subsemigroup");
        }
        if (subset.count(s.mul(x, y)) == 0) {
          throw_error(errc::not_closed,
                      "product " + detail::quote(s.mul(x, y))
                          + " escapes the subset");
        }
      }
    }
    for (auto const& x : subset) {
      for (auto const& y : subset) {
        if (s.mul(x, y) != x) {
          return false;
        }
      }
    }
    return true;
  }

  //! True when x == x t x for some t in the subset (all products defined).
  inline bool is_regular_in(FiniteSemigroupoid const& s,
                            std::set<Id> const& subset, Id const& x) {
    for (auto const& t : subset) {
      if (!s.composable(x, t)) {
        continue;
      }
      Id xt = s.mul(x, t);
      if (s.composable(xt, x) && s.mul(xt, x) == x) {
        return true;
      }
    }
    return false;
  }

  //! Deterministic eggbox picture: one block per D-class (ordered by
  //! least member), R-classes as rows, L-classes as columns, H-classes
  //! in the cells, idempotents starred.
  inline std::string eggbox(FiniteSemigroupoid const& s) {
    GreenStructure g = green_structure(s);
    std::set<Id> idem;
    for (auto const& e : idempotents(s)) {
      idem.insert(e);
    }
    auto decorate = [&](Id const& e) {
      return idem.count(e) > 0 ? e + "*" : e;
    };

    std::string out;
    for (std::size_t d = 0; d < g.j_classes.size(); ++d) {
      std::vector<int> rows;
      std::vector<int> cols;
      for (auto const& e : g.j_classes[d]) {
        int ix = 0;
        for (int i = 0; i < static_cast<int>(g.elements.size()); ++i) {
          if (g.elements[static_cast<std::size_t>(i)] == e) {
            ix = i;
            break;
          }
        }
        int r = g.r_class_of[static_cast<std::size_t>(ix)];
        int l = g.l_class_of[static_cast<std::size_t>(ix)];
        if (std::find(rows.begin(), rows.end(), r) == rows.end()) {
          rows.push_back(r);
        }
        if (std::find(cols.begin(), cols.end(), l) == cols.end()) {
          cols.push_back(l);
        }
      }
      // Grid of cells: H-class contents.
      std::vector<std::vector<std::string>> cells(
          rows.size(), std::vector<std::string>(cols.size(), ""));
      for (auto const& e : g.j_classes[d]) {
        int ix = 0;
        for (int i = 0; i < static_cast<int>(g.elements.size()); ++i) {
          if (g.elements[static_cast<std::size_t>(i)] == e) {
            ix = i;
            break;
          }
        }
        auto r = std::find(rows.begin(), rows.end(),
                           g.r_class_of[static_cast<std::size_t>(ix)])
                 - rows.begin();
        auto c = std::find(cols.begin(), cols.end(),
                           g.l_class_of[static_cast<std::size_t>(ix)])
                 - cols.begin();
        auto& cell = cells[static_cast<std::size_t>(r)]
                          [static_cast<std::size_t>(c)];
        if (!cell.empty()) {
          cell += " ";
        }
        cell += decorate(e);
      }
      std::vector<std::size_t> width(cols.size(), 0);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
          width[c] = std::max(width[c], cells[r][c].size());
        }
      }
      auto rule = [&]() {
        std::string line = "  +";
        for (std::size_t c = 0; c < cols.size(); ++c) {
          line += std::string(width[c] + 2, '-');
          line += "+";
        }
        return line + "\n";
      };
      out += "D-class " + std::to_string(d + 1) + "\n";
      out += rule();
      for (std::size_t r = 0; r < rows.size(); ++r) {
        out += "  |";
        for (std::size_t c = 0; c < cols.size(); ++c) {
          out += " " + cells[r][c]
                 + std::string(width[c] - cells[r][c].size(), ' ') + " |";
        }
        out += "\n";
        out += rule();
      }
    }
    return out;
  }

}  // namespace sgpd

#endif  // SGPD_GREEN_HPP_
