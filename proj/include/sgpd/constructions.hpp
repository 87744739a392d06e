// Standard semigroup(oid) constructions: one-vertex wrappers, Brandt
// semigroups, truncated free semigroups, the composability homomorphism
// of a graph, and transition semigroups of automata.

#ifndef SGPD_CONSTRUCTIONS_HPP_
#define SGPD_CONSTRUCTIONS_HPP_

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "common.hpp"
#include "dfa.hpp"
#include "graph.hpp"
#include "semigroupoid.hpp"

namespace sgpd {

  //! A vertex name not colliding with any of the given identifiers.
  inline Id fresh_vertex_id(std::set<Id> const& taken) {
    Id v = "@";
    while (taken.count(v) > 0) {
      v += "@";
    }
    return v;
  }

  inline Graph one_vertex_graph(std::vector<Id> const& loops) {
    Graph g;
    Id v = fresh_vertex_id(std::set<Id>(loops.begin(), loops.end()));
    g.add_vertex(v);
    for (auto const& e : loops) {
      g.add_edge(e, v, v);
    }
    return g;
  }

  //! Builds a one-vertex semigroupoid from a total multiplication rule.
  inline FiniteSemigroupoid
  make_semigroup(std::vector<Id> const& elements,
                 std::function<Id(Id const&, Id const&)> const& rule) {
    Graph g = one_vertex_graph(elements);
    std::map<std::pair<Id, Id>, Id> mul;
    for (auto const& a : elements) {
      for (auto const& b : elements) {
        mul[{a, b}] = rule(a, b);
      }
    }
    return FiniteSemigroupoid(std::move(g), std::move(mul));
  }

  //! Brandt semigroup over {1..n}: pairs (p,q) and a zero, with
  //! (p,r)(s,q) = (p,q) when r == s and 0 otherwise.
  inline FiniteSemigroupoid brandt(std::size_t n) {
    if (n == 0) {
      throw_error(errc::invalid_argument, "brandt requires n >= 1");
    }
    auto pair_id = [](std::size_t p, std::size_t q) {
      return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
    };
    std::vector<Id> elements = {"0"};
    for (std::size_t p = 1; p <= n; ++p) {
      for (std::size_t q = 1; q <= n; ++q) {
        elements.push_back(pair_id(p, q));
      }
    }
    Graph g = one_vertex_graph(elements);
    std::map<std::pair<Id, Id>, Id> mul;
    for (auto const& a : elements) {
      mul[{a, "0"}] = "0";
      mul[{"0", a}] = "0";
    }
    for (std::size_t p = 1; p <= n; ++p) {
      for (std::size_t r = 1; r <= n; ++r) {
        for (std::size_t s = 1; s <= n; ++s) {
          for (std::size_t q = 1; q <= n; ++q) {
            mul[{pair_id(p, r), pair_id(s, q)}]
                = (r == s) ? pair_id(p, q) : "0";
          }
        }
      }
    }
    return FiniteSemigroupoid(std::move(g), std::move(mul));
  }

  namespace detail {
    inline std::string
    word_separator(std::vector<Id> const& letters) {
      bool single = true;
      for (auto const& a : letters) {
        single = single && a.size() == 1;
      }
      if (single) {
        return "";
      }
      std::string sep = "·";
      auto clashes = [&]() {
        for (auto const& a : letters) {
          if (a.find(sep) != std::string::npos) {
            return true;
          }
        }
        return false;
      };
      while (clashes()) {
        sep += "·";
      }
      return sep;
    }

    inline Id word_id(std::vector<Id> const& w, std::string const& sep) {
      return join(w, sep);
    }

    inline std::vector<std::vector<Id>>
    words_up_to(std::vector<Id> const& letters, std::size_t n) {
      std::vector<std::vector<Id>> out;
      std::vector<std::vector<Id>> layer;
      for (auto const& a : letters) {
        layer.push_back({a});
      }
      for (std::size_t len = 1; len <= n; ++len) {
        out.insert(out.end(), layer.begin(), layer.end());
        if (len == n) {
          break;
        }
        std::vector<std::vector<Id>> next;
        for (auto const& w : layer) {
          for (auto const& a : letters) {
            auto e = w;
            e.push_back(a);
            next.push_back(std::move(e));
          }
        }
        layer = std::move(next);
      }
      return out;
    }
  }  // namespace detail

  //! Words of length <= n over the alphabet, multiplied by keeping the
  //! prefix of length n of the concatenation.  The elements are the words
  //! themselves.
  inline FiniteSemigroupoid truncation(std::vector<Id> const& alphabet,
                                       std::size_t            n) {
    if (alphabet.empty() || n == 0) {
      throw_error(errc::invalid_argument,
                  "truncation requires a nonempty alphabet and n >= 1");
    }
    std::vector<Id> letters = alphabet;
    std::sort(letters.begin(), letters.end());
    letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
    std::string sep = detail::word_separator(letters);
    auto words = detail::words_up_to(letters, n);
    std::vector<Id> elements;
    for (auto const& w : words) {
      elements.push_back(detail::word_id(w, sep));
    }
    Graph g = one_vertex_graph(elements);
    std::map<std::pair<Id, Id>, Id> mul;
    for (auto const& u : words) {
      for (auto const& v : words) {
        std::vector<Id> uv = u;
        uv.insert(uv.end(), v.begin(), v.end());
        if (uv.size() > n) {
          uv.resize(n);
        }
        mul[{detail::word_id(u, sep), detail::word_id(v, sep)}]
            = detail::word_id(uv, sep);
      }
    }
    return FiniteSemigroupoid(std::move(g), std::move(mul));
  }

  //! The dual of truncation: the product keeps the suffix of length n.
  inline FiniteSemigroupoid cotruncation(std::vector<Id> const& alphabet,
                                         std::size_t            n) {
    if (alphabet.empty() || n == 0) {
      throw_error(errc::invalid_argument,
                  "cotruncation requires a nonempty alphabet and n >= 1");
    }
    std::vector<Id> letters = alphabet;
    std::sort(letters.begin(), letters.end());
    letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
    std::string sep = detail::word_separator(letters);
    auto words = detail::words_up_to(letters, n);
    std::vector<Id> elements;
    for (auto const& w : words) {
      elements.push_back(detail::word_id(w, sep));
    }
    Graph g = one_vertex_graph(elements);
    std::map<std::pair<Id, Id>, Id> mul;
    for (auto const& u : words) {
      for (auto const& v : words) {
        std::vector<Id> uv = u;
        uv.insert(uv.end(), v.begin(), v.end());
        if (uv.size() > n) {
          uv.erase(uv.begin(), uv.end() - static_cast<std::ptrdiff_t>(n));
        }
        mul[{detail::word_id(u, sep), detail::word_id(v, sep)}]
            = detail::word_id(uv, sep);
      }
    }
    return FiniteSemigroupoid(std::move(g), std::move(mul));
  }

  //! The edge labeling of a graph into the Brandt semigroup over its
  //! vertex set, sending e to (dst(e), src(e)).  A word over the edges is
  //! a composable path exactly when its evaluation is nonzero.
  struct ComposabilityHom {
    FiniteSemigroupoid target;
    GraphMorphism      labeling;
  };

  inline ComposabilityHom composability_hom(Graph const& a) {
    auto pair_id = [](Id const& p, Id const& q) {
      return "(" + p + "," + q + ")";
    };
    std::vector<Id> elements = {"0"};
    for (auto const& p : a.vertices) {
      for (auto const& q : a.vertices) {
        elements.push_back(pair_id(p, q));
      }
    }
    Graph g = one_vertex_graph(elements);
    std::map<std::pair<Id, Id>, Id> mul;
    for (auto const& x : elements) {
      mul[{x, "0"}] = "0";
      mul[{"0", x}] = "0";
    }
    for (auto const& p : a.vertices) {
      for (auto const& r : a.vertices) {
        for (auto const& s : a.vertices) {
          for (auto const& q : a.vertices) {
            mul[{pair_id(p, r), pair_id(s, q)}]
                = (r == s) ? pair_id(p, q) : "0";
          }
        }
      }
    }
    ComposabilityHom out;
    out.target = FiniteSemigroupoid(std::move(g), std::move(mul));
    out.labeling.domain   = a;
    out.labeling.codomain = out.target.underlying();
    Id const& v = *out.target.underlying().vertices.begin();
    for (auto const& w : a.vertices) {
      out.labeling.vmap[w] = v;
    }
    for (auto const& [e, ends] : a.edges) {
      out.labeling.emap[e] = pair_id(ends.dst, ends.src);
    }
    return out;
  }

  //! The transition semigroup of a complete DFA: transformations of the
  //! state set induced by nonempty words, multiplied by "apply left
  //! factor first".  Elements are named by their shortest witness word,
  //! ties broken lexicographically.
  struct TransitionSemigroup {
    FiniteSemigroupoid semigroup;
    std::map<Id, Id>   letter_to_element;
    std::map<Id, std::vector<int>> action;  // element -> state map
  };

  inline TransitionSemigroup transition_semigroup(Dfa const& d) {
    auto dv = validate_dfa(d);
    if (!dv.ok()) {
      throw_error(errc::incomplete_dfa, dv.issues.front());
    }
    std::vector<Id> letters = d.alphabet;
    std::sort(letters.begin(), letters.end());
    std::string sep = detail::word_separator(letters);

    std::size_t nq = d.states.size();
    std::map<std::vector<int>, Id> id_of;
    std::vector<std::pair<Id, std::vector<int>>> order;
    std::map<Id, Id> letter_to_element;

    // Breadth-first over products keeps the first witness word shortest;
    // within a length, words are tried in lexicographic order.
    std::vector<std::pair<std::vector<Id>, std::vector<int>>> layer;
    for (auto const& a : letters) {
      std::vector<int> f(nq);
      int ax = d.letter_index(a);
      for (std::size_t q = 0; q < nq; ++q) {
        f[q] = d.delta[q][static_cast<std::size_t>(ax)];
      }
      layer.emplace_back(std::vector<Id>{a}, f);
    }
    std::vector<std::pair<std::vector<Id>, std::vector<int>>> basis = layer;
    while (!layer.empty()) {
      std::vector<std::pair<std::vector<Id>, std::vector<int>>> next;
      for (auto const& [w, f] : layer) {
        Id name = detail::word_id(w, sep);
        auto [it, inserted] = id_of.emplace(f, name);
        if (!inserted) {
          continue;
        }
        order.emplace_back(name, f);
        if (w.size() == 1) {
          letter_to_element[w.front()] = name;
        }
        for (auto const& [a, g] : basis) {
          std::vector<Id> wa = w;
          wa.push_back(a.front());
          std::vector<int> fg(nq);
          for (std::size_t q = 0; q < nq; ++q) {
            fg[q] = g[static_cast<std::size_t>(f[q])];
          }
          next.emplace_back(std::move(wa), std::move(fg));
        }
      }
      layer = std::move(next);
    }
    for (auto const& a : letters) {
      if (letter_to_element.count(a) == 0) {
        // Letter's action coincided with an earlier one.
        std::vector<int> f(nq);
        int ax = d.letter_index(a);
        for (std::size_t q = 0; q < nq; ++q) {
          f[q] = d.delta[q][static_cast<std::size_t>(ax)];
        }
        letter_to_element[a] = id_of.at(f);
      }
    }

    std::vector<Id> elements;
    for (auto const& [name, f] : order) {
      (void) f;
      elements.push_back(name);
    }
    Graph g = one_vertex_graph(elements);
    std::map<std::pair<Id, Id>, Id> mul;
    for (auto const& [n1, f1] : order) {
      for (auto const& [n2, f2] : order) {
        std::vector<int> fg(nq);
        for (std::size_t q = 0; q < nq; ++q) {
          fg[q] = f2[static_cast<std::size_t>(f1[q])];
        }
        mul[{n1, n2}] = id_of.at(fg);
      }
    }
    TransitionSemigroup out;
    out.semigroup         = FiniteSemigroupoid(std::move(g), std::move(mul));
    out.letter_to_element = std::move(letter_to_element);
    for (auto const& [name, f] : order) {
      out.action[name] = f;
    }
    return out;
  }

}  // namespace sgpd

#endif  // SGPD_CONSTRUCTIONS_HPP_
