// Recognizable path languages: syntactic semigroups, concatenation,
// factor-closure testing, membership through a pseudovariety test, and
// the double-occurrence construction.
//
// A path language over a base graph is a word language over its edge
// set whose members are all composable paths; path typing is enforced
// by intersecting with the composability automaton of the base.

#ifndef SGPD_LANGUAGE_HPP_
#define SGPD_LANGUAGE_HPP_

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "common.hpp"
#include "constructions.hpp"
#include "dfa.hpp"
#include "graph.hpp"
#include "path.hpp"
#include "pseudovar.hpp"
#include "semigroupoid.hpp"

namespace sgpd {

  //! A recognizer over E(base) promising that every accepted word is a
  //! composable path.
  struct PathLanguage {
    Graph base;
    Dfa   dfa;

    bool accepts(std::vector<Id> const& word) const {
      return dfa.accepts(word);
    }

    bool accepts(Path const& p) const {
      return dfa.accepts(p.edges());
    }
  };

  //! DFA over E(base) accepting exactly the nonempty composable words.
  //! One state per vertex remembers the source of the path read so far.
  inline Dfa composability_dfa(Graph const& base) {
    std::vector<Id> verts(base.vertices.begin(), base.vertices.end());
    auto vstate = [&](Id const& v) {
      return static_cast<int>(
                 std::find(verts.begin(), verts.end(), v) - verts.begin())
             + 1;
    };
    Dfa d;
    d.alphabet = base.edge_ids();
    int dead   = static_cast<int>(verts.size()) + 1;
    d.states.push_back("start");
    for (auto const& v : verts) {
      d.states.push_back("at_" + v);
      d.accept.insert(vstate(v));
    }
    d.states.push_back("dead");
    d.init = 0;
    d.delta.assign(d.states.size(),
                   std::vector<int>(d.alphabet.size(), dead));
    for (std::size_t a = 0; a < d.alphabet.size(); ++a) {
      Id const& e = d.alphabet[a];
      d.delta[0][a] = vstate(base.src(e));
      for (auto const& v : verts) {
        if (base.dst(e) == v) {
          d.delta[static_cast<std::size_t>(vstate(v))][a]
              = vstate(base.src(e));
        }
      }
    }
    return d;
  }

  inline Diagnostics validate_path_language(PathLanguage const& l) {
    Diagnostics d = validate_dfa(l.dfa);
    if (!d.ok()) {
      return d;
    }
    if (l.dfa.alphabet != l.base.edge_ids()) {
      d.add("recognizer alphabet differs from the edge set of the base");
      return d;
    }
    if (l.dfa.accepts_empty()) {
      d.add("the empty word is accepted but is not a path");
      return d;
    }
    if (!is_empty_language(intersect(l.dfa,
                                     complement(composability_dfa(l.base))))) {
      d.add("a non-composable word is accepted");
    }
    return d;
  }

  //! Restricts a recognizer to composable paths and minimizes.
  inline PathLanguage make_path_language(Graph const& base, Dfa const& dfa) {
    PathLanguage out;
    out.base = base;
    out.dfa  = minimize(intersect(dfa, composability_dfa(base)));
    return out;
  }

  //! Finite language given by an explicit word list.
  inline PathLanguage language_of_words(Graph const& base,
                                        std::vector<std::vector<Id>> const&
                                            words) {
    Nfa n;
    n.alphabet = base.edge_ids();
    int root   = n.add_state();
    n.init.insert(root);
    for (auto const& w : words) {
      if (w.empty()) {
        throw_error(errc::length_out_of_range,
                    "the empty word cannot belong to a path language");
      }
      int q = root;
      for (auto const& a : w) {
        auto it = std::find(n.alphabet.begin(), n.alphabet.end(), a);
        if (it == n.alphabet.end()) {
          throw_error(errc::invalid_argument,
                      "word uses unknown edge " + detail::quote(a));
        }
        int next = n.add_state();
        n.add_edge(q, static_cast<int>(it - n.alphabet.begin()), next);
        q = next;
      }
      n.accept.insert(q);
    }
    return make_path_language(base, determinize(n));
  }

  //! Syntactic semigroup of a path language, computed as the transition
  //! semigroup of the minimal recognizer, together with the evaluation
  //! labeling and the accepting image.
  struct SyntacticResult {
    FiniteSemigroupoid semigroup;
    GraphMorphism      labeling;   // base -> underlying one-vertex graph
    std::set<Id>       accepting;  // image of the language
    Dfa                minimal;

    Id evaluate(std::vector<Id> const& word) const {
      Path p(labeling.domain, word);
      return evaluate_path(semigroup, labeling, p);
    }

    bool member(std::vector<Id> const& word) const {
      return accepting.count(evaluate(word)) > 0;
    }
  };

  inline SyntacticResult syntactic_semigroup(PathLanguage const& l) {
    auto d = validate_path_language(l);
    if (!d.ok()) {
      throw_error(errc::invalid_argument, d.issues.front());
    }
    SyntacticResult out;
    out.minimal = minimize(l.dfa);
    auto ts     = transition_semigroup(out.minimal);
    out.semigroup = ts.semigroup;
    out.labeling.domain   = l.base;
    out.labeling.codomain = out.semigroup.underlying();
    Id const& v = *out.semigroup.underlying().vertices.begin();
    for (auto const& w : l.base.vertices) {
      out.labeling.vmap[w] = v;
    }
    out.labeling.emap = ts.letter_to_element;
    for (auto const& [name, f] : ts.action) {
      if (out.minimal.accept.count(
              f[static_cast<std::size_t>(out.minimal.init)])
          > 0) {
        out.accepting.insert(name);
      }
    }
    return out;
  }

  //! Recognizer for { u v : u in l, v in k, src(u) == dst(v) }.
  inline PathLanguage concat_languages(PathLanguage const& l,
                                       PathLanguage const& k) {
    if (l.base != k.base) {
      throw_error(errc::base_mismatch,
                  "concatenation needs languages over the same base");
    }
    Nfa n;
    n.alphabet = l.dfa.alphabet;
    std::vector<int> lmap, kmap;
    for (std::size_t q = 0; q < l.dfa.states.size(); ++q) {
      lmap.push_back(n.add_state());
    }
    for (std::size_t q = 0; q < k.dfa.states.size(); ++q) {
      kmap.push_back(n.add_state());
    }
    for (std::size_t q = 0; q < l.dfa.states.size(); ++q) {
      for (std::size_t a = 0; a < n.alphabet.size(); ++a) {
        n.add_edge(lmap[q], static_cast<int>(a),
                   lmap[static_cast<std::size_t>(l.dfa.delta[q][a])]);
      }
    }
    for (std::size_t q = 0; q < k.dfa.states.size(); ++q) {
      for (std::size_t a = 0; a < n.alphabet.size(); ++a) {
        n.add_edge(kmap[q], static_cast<int>(a),
                   kmap[static_cast<std::size_t>(k.dfa.delta[q][a])]);
      }
    }
    for (int q : l.dfa.accept) {
      n.add_eps(lmap[static_cast<std::size_t>(q)],
                kmap[static_cast<std::size_t>(k.dfa.init)]);
    }
    n.init.insert(lmap[static_cast<std::size_t>(l.dfa.init)]);
    for (int q : k.dfa.accept) {
      n.accept.insert(kmap[static_cast<std::size_t>(q)]);
    }
    return make_path_language(l.base, determinize(n));
  }

  struct FactorialReport {
    bool                         factorial = true;
    std::size_t                  bound     = 0;
    std::optional<std::vector<Id>> word;    // accepted word ...
    std::optional<std::vector<Id>> factor;  // ... with a rejected factor
  };

  //! Checks factor-closure of the accepted set, exactly for all words of
  //! length <= bound.
  inline FactorialReport is_factorial(PathLanguage const& l,
                                      std::size_t bound
                                      = limits::brute_force_length_bound) {
    FactorialReport report;
    report.bound = bound;
    double count = 1;
    for (std::size_t i = 0; i < bound; ++i) {
      count *= static_cast<double>(std::max<std::size_t>(
          l.dfa.alphabet.size(), 1));
      if (count > 1e7) {
        throw_error(errc::budget_exceeded,
                    "word enumeration too large; lower the bound");
      }
    }
    std::vector<std::vector<Id>> layer = {{}};
    for (std::size_t len = 1; len <= bound; ++len) {
      std::vector<std::vector<Id>> next;
      for (auto const& w : layer) {
        for (auto const& a : l.dfa.alphabet) {
          auto e = w;
          e.push_back(a);
          next.push_back(std::move(e));
        }
      }
      layer = std::move(next);
      for (auto const& w : layer) {
        if (!l.accepts(w)) {
          continue;
        }
        for (std::size_t i = 0; i < w.size(); ++i) {
          for (std::size_t m = 1; i + m <= w.size(); ++m) {
            if (m == w.size()) {
              continue;
            }
            std::vector<Id> f(w.begin() + static_cast<std::ptrdiff_t>(i),
                              w.begin()
                                  + static_cast<std::ptrdiff_t>(i + m));
            if (!l.accepts(f)) {
              report.factorial = false;
              report.word      = w;
              report.factor    = f;
              return report;
            }
          }
        }
      }
    }
    return report;
  }

  inline bool
  is_V_recognizable(PathLanguage const& l,
                    std::function<bool(FiniteSemigroupoid const&)> const&
                        pred) {
    return pred(syntactic_semigroup(l).semigroup);
  }

  //! Recognizer for the words that start with u and contain a later
  //! occurrence of v: u (anything) v (anything), restricted to paths.
  inline PathLanguage clopen_double_occurrence(Path const& u, Path const& v) {
    if (u.base() != v.base()) {
      throw_error(errc::base_mismatch,
                  "both paths must live over the same graph");
    }
    Graph const& base = u.base();
    Nfa n;
    n.alphabet = base.edge_ids();
    auto letter = [&](Id const& e) {
      return static_cast<int>(std::find(n.alphabet.begin(), n.alphabet.end(),
                                        e)
                              - n.alphabet.begin());
    };
    std::vector<int> uspine;
    for (std::size_t i = 0; i <= u.length(); ++i) {
      uspine.push_back(n.add_state());
    }
    for (std::size_t i = 0; i < u.length(); ++i) {
      n.add_edge(uspine[i], letter(u.edges()[i]), uspine[i + 1]);
    }
    int mid = uspine.back();
    for (std::size_t a = 0; a < n.alphabet.size(); ++a) {
      n.add_edge(mid, static_cast<int>(a), mid);
    }
    std::vector<int> vspine = {mid};
    for (std::size_t i = 1; i <= v.length(); ++i) {
      vspine.push_back(n.add_state());
    }
    for (std::size_t i = 0; i < v.length(); ++i) {
      n.add_edge(vspine[i], letter(v.edges()[i]), vspine[i + 1]);
    }
    int fin = vspine.back();
    for (std::size_t a = 0; a < n.alphabet.size(); ++a) {
      n.add_edge(fin, static_cast<int>(a), fin);
    }
    n.init.insert(uspine.front());
    n.accept.insert(fin);
    return make_path_language(base, determinize(n));
  }

  //! The typed syntactic object: reachable (source, target, action)
  //! triples of paths through the minimal recognizer, quotiented by the
  //! syntactic congruence restricted to coterminal paths.
  struct TypedSyntactic {
    FiniteSemigroupoid semigroupoid;
    GraphMorphism      labeling;  // base -> underlying, evaluates paths
    std::set<Id>       accepting;
  };

  inline TypedSyntactic syntactic_semigroupoid(PathLanguage const& l,
                                               std::size_t max_triples
                                               = 300) {
    auto d = validate_path_language(l);
    if (!d.ok()) {
      throw_error(errc::invalid_argument, d.issues.front());
    }
    Dfa m = minimize(l.dfa);
    std::size_t nq = m.states.size();
    auto act_of_edge = [&](Id const& e) {
      std::vector<int> f(nq);
      int a = m.letter_index(e);
      for (std::size_t q = 0; q < nq; ++q) {
        f[q] = m.delta[q][static_cast<std::size_t>(a)];
      }
      return f;
    };

    using Triple = std::pair<std::pair<Id, Id>, std::vector<int>>;
    std::set<Triple>    triples;
    std::vector<Triple> queue;
    for (auto const& [e, ends] : l.base.edges) {
      Triple t{{ends.src, ends.dst}, act_of_edge(e)};
      if (triples.insert(t).second) {
        queue.push_back(t);
      }
    }
    while (!queue.empty()) {
      Triple t = queue.back();
      queue.pop_back();
      if (triples.size() > max_triples) {
        throw_error(errc::budget_exceeded,
                    "too many path actions for the typed construction");
      }
      // extend on the right by one edge: t . e defined when src(t)=dst(e)
      for (auto const& [e, ends] : l.base.edges) {
        if (t.first.first != ends.dst) {
          continue;
        }
        auto fe = act_of_edge(e);
        std::vector<int> f(nq);
        for (std::size_t q = 0; q < nq; ++q) {
          f[q] = fe[static_cast<std::size_t>(t.second[q])];
        }
        Triple ext{{ends.src, t.first.second}, std::move(f)};
        if (triples.insert(ext).second) {
          queue.push_back(ext);
        }
      }
    }

    std::vector<Triple> all(triples.begin(), triples.end());
    auto composable = [&](Triple const& a, Triple const& b) {
      return a.first.first == b.first.second;  // src(a) == dst(b)
    };
    auto mul3 = [&](Triple const& a, Triple const& b) {
      // path a followed by path b: a acts first
      std::vector<int> f(nq);
      for (std::size_t q = 0; q < nq; ++q) {
        f[q] = b.second[static_cast<std::size_t>(a.second[q])];
      }
      return Triple{{b.first.first, a.first.second}, std::move(f)};
    };
    auto accepts3 = [&](Triple const& t) {
      return m.accept.count(
                 t.second[static_cast<std::size_t>(m.init)])
             > 0;
    };

    // Two coterminal triples are congruent when every typed context
    // (including empty sides) preserves acceptance.
    auto congruent = [&](Triple const& a, Triple const& b) {
      if (a.first != b.first) {
        return false;
      }
      if (accepts3(a) != accepts3(b)) {
        return false;
      }
      for (auto const& x : all) {
        if (composable(x, a)) {
          auto xa = mul3(x, a);
          auto xb = mul3(x, b);
          if (accepts3(xa) != accepts3(xb)) {
            return false;
          }
          for (auto const& y : all) {
            if (composable(xa, y)
                && accepts3(mul3(xa, y)) != accepts3(mul3(xb, y))) {
              return false;
            }
          }
        }
        if (composable(a, x)
            && accepts3(mul3(a, x)) != accepts3(mul3(b, x))) {
          return false;
        }
      }
      return true;
    };

    std::vector<int> class_of(all.size(), -1);
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t r = 0; r < reps.size(); ++r) {
        if (congruent(all[i], all[reps[r]])) {
          class_of[i] = static_cast<int>(r);
          break;
        }
      }
      if (class_of[i] < 0) {
        class_of[i] = static_cast<int>(reps.size());
        reps.push_back(i);
      }
    }

    auto class_name = [](std::size_t r) { return "c" + std::to_string(r); };
    Graph g;
    g.vertices = l.base.vertices;
    for (std::size_t r = 0; r < reps.size(); ++r) {
      g.add_edge(class_name(r), all[reps[r]].first.first,
                 all[reps[r]].first.second);
    }
    std::map<std::pair<Id, Id>, Id> mul;
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = 0; j < all.size(); ++j) {
        if (!composable(all[i], all[j])) {
          continue;
        }
        auto p  = mul3(all[i], all[j]);
        auto it = triples.find(p);
        std::size_t pix = static_cast<std::size_t>(
            std::distance(triples.begin(), it));
        mul[{class_name(static_cast<std::size_t>(class_of[i])),
             class_name(static_cast<std::size_t>(class_of[j]))}]
            = class_name(static_cast<std::size_t>(class_of[pix]));
      }
    }
    TypedSyntactic out;
    out.semigroupoid = FiniteSemigroupoid(std::move(g), std::move(mul));
    out.labeling.domain   = l.base;
    out.labeling.codomain = out.semigroupoid.underlying();
    for (auto const& v : l.base.vertices) {
      out.labeling.vmap[v] = v;
    }
    for (auto const& [e, ends] : l.base.edges) {
      Triple t{{ends.src, ends.dst}, act_of_edge(e)};
      auto   it  = triples.find(t);
      std::size_t ix = static_cast<std::size_t>(
          std::distance(triples.begin(), it));
      out.labeling.emap[e]
          = class_name(static_cast<std::size_t>(class_of[ix]));
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (accepts3(all[i])) {
        out.accepting.insert(
            class_name(static_cast<std::size_t>(class_of[i])));
      }
    }
    return out;
  }

}  // namespace sgpd

#endif  // SGPD_LANGUAGE_HPP_
