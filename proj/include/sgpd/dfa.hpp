// Deterministic and nondeterministic finite automata over identifier
// alphabets: completion, product, determinization, minimization.

#ifndef SGPD_DFA_HPP_
#define SGPD_DFA_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "common.hpp"

namespace sgpd {

  //! A complete DFA.  States and letters are indexed; the identifier
  //! tables keep outputs deterministic.
  struct Dfa {
    std::vector<Id>               states;
    std::vector<Id>               alphabet;
    std::vector<std::vector<int>> delta;  // delta[state][letter]
    int                           init = 0;
    std::set<int>                 accept;

    int letter_index(Id const& a) const {
      auto it = std::find(alphabet.begin(), alphabet.end(), a);
      if (it == alphabet.end()) {
        throw_error(errc::invalid_argument,
                    "unknown letter " + detail::quote(a));
      }
      return static_cast<int>(it - alphabet.begin());
    }

    bool accepts(std::vector<Id> const& word) const {
      int q = init;
      for (auto const& a : word) {
        q = delta[static_cast<std::size_t>(q)]
                 [static_cast<std::size_t>(letter_index(a))];
      }
      return accept.count(q) > 0;
    }

    bool accepts_empty() const {
      return accept.count(init) > 0;
    }
  };

  inline Diagnostics validate_dfa(Dfa const& d) {
    Diagnostics out;
    if (d.states.empty()) {
      out.add("no states");
      return out;
    }
    if (d.init < 0 || d.init >= static_cast<int>(d.states.size())) {
      out.add("initial state out of range");
    }
    if (d.delta.size() != d.states.size()) {
      out.add("transition table has wrong number of rows");
      return out;
    }
    for (std::size_t q = 0; q < d.delta.size(); ++q) {
      if (d.delta[q].size() != d.alphabet.size()) {
        out.add("state " + detail::quote(d.states[q])
                + " has an incomplete transition row");
        continue;
      }
      for (std::size_t a = 0; a < d.alphabet.size(); ++a) {
        int t = d.delta[q][a];
        if (t < 0 || t >= static_cast<int>(d.states.size())) {
          out.add("transition out of range at state "
                  + detail::quote(d.states[q]) + " letter "
                  + detail::quote(d.alphabet[a]));
        }
      }
    }
    for (int q : d.accept) {
      if (q < 0 || q >= static_cast<int>(d.states.size())) {
        out.add("accepting state out of range");
      }
    }
    return out;
  }

  //! Renames states canonically: breadth-first from the initial state
  //! over the alphabet in order, dropping unreachable states.  Names are
  //! "q0", "q1", ...
  inline Dfa canonicalize(Dfa const& d) {
    std::vector<int> order;
    std::vector<int> name(d.states.size(), -1);
    std::queue<int>  bfs;
    bfs.push(d.init);
    name[static_cast<std::size_t>(d.init)] = 0;
    order.push_back(d.init);
    while (!bfs.empty()) {
      int q = bfs.front();
      bfs.pop();
      for (std::size_t a = 0; a < d.alphabet.size(); ++a) {
        int t = d.delta[static_cast<std::size_t>(q)][a];
        if (name[static_cast<std::size_t>(t)] < 0) {
          name[static_cast<std::size_t>(t)] = static_cast<int>(order.size());
          order.push_back(t);
          bfs.push(t);
        }
      }
    }
    Dfa out;
    out.alphabet = d.alphabet;
    out.init     = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      out.states.push_back("q" + std::to_string(i));
      out.delta.emplace_back();
      for (std::size_t a = 0; a < d.alphabet.size(); ++a) {
        int t = d.delta[static_cast<std::size_t>(order[i])][a];
        out.delta.back().push_back(name[static_cast<std::size_t>(t)]);
      }
    }
    for (int q : d.accept) {
      if (name[static_cast<std::size_t>(q)] >= 0) {
        out.accept.insert(name[static_cast<std::size_t>(q)]);
      }
    }
    return out;
  }

  //! Moore partition refinement on the reachable part; the result is the
  //! unique minimal complete DFA in canonical form.
  inline Dfa minimize(Dfa const& d) {
    Dfa r = canonicalize(d);
    std::size_t n = r.states.size();
    std::vector<int> cls(n);
    for (std::size_t q = 0; q < n; ++q) {
      cls[q] = r.accept.count(static_cast<int>(q)) > 0 ? 1 : 0;
    }
    while (true) {
      std::map<std::vector<int>, int> signatures;
      std::vector<int>                next(n);
      for (std::size_t q = 0; q < n; ++q) {
        std::vector<int> sig;
        sig.push_back(cls[q]);
        for (std::size_t a = 0; a < r.alphabet.size(); ++a) {
          sig.push_back(cls[static_cast<std::size_t>(r.delta[q][a])]);
        }
        auto [it, inserted]
            = signatures.emplace(sig, static_cast<int>(signatures.size()));
        (void) inserted;
        next[q] = it->second;
      }
      if (next == cls) {
        break;
      }
      cls = next;
    }
    int k = 1 + *std::max_element(cls.begin(), cls.end());
    Dfa m;
    m.alphabet = r.alphabet;
    m.states.resize(static_cast<std::size_t>(k));
    m.delta.assign(static_cast<std::size_t>(k),
                   std::vector<int>(r.alphabet.size(), -1));
    for (std::size_t q = 0; q < n; ++q) {
      m.states[static_cast<std::size_t>(cls[q])] = "m" + std::to_string(cls[q]);
      for (std::size_t a = 0; a < r.alphabet.size(); ++a) {
        m.delta[static_cast<std::size_t>(cls[q])][a]
            = cls[static_cast<std::size_t>(r.delta[q][a])];
      }
      if (r.accept.count(static_cast<int>(q)) > 0) {
        m.accept.insert(cls[q]);
      }
    }
    m.init = cls[static_cast<std::size_t>(r.init)];
    return canonicalize(m);
  }

  //! Product automaton recognizing the intersection.
  inline Dfa intersect(Dfa const& a, Dfa const& b) {
    if (a.alphabet != b.alphabet) {
      throw_error(errc::base_mismatch,
                  "intersection requires identical alphabets");
    }
    std::map<std::pair<int, int>, int> id_of;
    std::vector<std::pair<int, int>>   order;
    Dfa out;
    out.alphabet = a.alphabet;
    auto get = [&](int p, int q) {
      auto key = std::make_pair(p, q);
      auto it  = id_of.find(key);
      if (it != id_of.end()) {
        return it->second;
      }
      int id = static_cast<int>(order.size());
      id_of.emplace(key, id);
      order.push_back(key);
      return id;
    };
    out.init = get(a.init, b.init);
    for (std::size_t i = 0; i < order.size(); ++i) {
      auto [p, q] = order[i];
      out.states.push_back("q" + std::to_string(i));
      out.delta.emplace_back();
      for (std::size_t x = 0; x < out.alphabet.size(); ++x) {
        out.delta.back().push_back(
            get(a.delta[static_cast<std::size_t>(p)][x],
                b.delta[static_cast<std::size_t>(q)][x]));
      }
      if (a.accept.count(p) > 0 && b.accept.count(q) > 0) {
        out.accept.insert(static_cast<int>(i));
      }
    }
    return out;
  }

  inline Dfa complement(Dfa const& d) {
    Dfa out = d;
    out.accept.clear();
    for (std::size_t q = 0; q < d.states.size(); ++q) {
      if (d.accept.count(static_cast<int>(q)) == 0) {
        out.accept.insert(static_cast<int>(q));
      }
    }
    return out;
  }

  //! True when the automaton accepts no word at all.
  inline bool is_empty_language(Dfa const& d) {
    std::vector<bool> seen(d.states.size(), false);
    std::queue<int>   bfs;
    bfs.push(d.init);
    seen[static_cast<std::size_t>(d.init)] = true;
    while (!bfs.empty()) {
      int q = bfs.front();
      bfs.pop();
      if (d.accept.count(q) > 0) {
        return false;
      }
      for (std::size_t a = 0; a < d.alphabet.size(); ++a) {
        int t = d.delta[static_cast<std::size_t>(q)][a];
        if (!seen[static_cast<std::size_t>(t)]) {
          seen[static_cast<std::size_t>(t)] = true;
          bfs.push(t);
        }
      }
    }
    return true;
  }

  //! A nondeterministic automaton with epsilon moves, used internally by
  //! the language constructions.
  struct Nfa {
    std::size_t                             n_states = 0;
    std::vector<Id>                         alphabet;
    std::vector<std::map<int, std::set<int>>> trans;  // by letter index
    std::vector<std::set<int>>              eps;
    std::set<int>                           init;
    std::set<int>                           accept;

    int add_state() {
      trans.emplace_back();
      eps.emplace_back();
      return static_cast<int>(n_states++);
    }

    void add_edge(int from, int letter, int to) {
      trans[static_cast<std::size_t>(from)][letter].insert(to);
    }

    void add_eps(int from, int to) {
      eps[static_cast<std::size_t>(from)].insert(to);
    }
  };

  //! Subset construction; refuses beyond the documented state cap.
  inline Dfa determinize(Nfa const& n) {
    auto closure = [&](std::set<int> states) {
      std::vector<int> queue(states.begin(), states.end());
      while (!queue.empty()) {
        int q = queue.back();
        queue.pop_back();
        for (int t : n.eps[static_cast<std::size_t>(q)]) {
          if (states.insert(t).second) {
            queue.push_back(t);
          }
        }
      }
      return states;
    };

    std::map<std::set<int>, int> id_of;
    std::vector<std::set<int>>   order;
    Dfa out;
    out.alphabet = n.alphabet;
    auto get = [&](std::set<int> const& subset) {
      auto it = id_of.find(subset);
      if (it != id_of.end()) {
        return it->second;
      }
      if (order.size() >= limits::determinize_max_states) {
        throw_error(errc::budget_exceeded,
                    "determinization exceeds the state cap");
      }
      int id = static_cast<int>(order.size());
      id_of.emplace(subset, id);
      order.push_back(subset);
      return id;
    };
    out.init = get(closure(n.init));
    for (std::size_t i = 0; i < order.size(); ++i) {
      out.states.push_back("q" + std::to_string(i));
      out.delta.emplace_back();
      for (std::size_t a = 0; a < n.alphabet.size(); ++a) {
        std::set<int> next;
        for (int q : order[i]) {
          auto it = n.trans[static_cast<std::size_t>(q)].find(
              static_cast<int>(a));
          if (it != n.trans[static_cast<std::size_t>(q)].end()) {
            next.insert(it->second.begin(), it->second.end());
          }
        }
        out.delta.back().push_back(get(closure(std::move(next))));
      }
      for (int q : order[i]) {
        if (n.accept.count(q) > 0) {
          out.accept.insert(static_cast<int>(i));
          break;
        }
      }
    }
    return out;
  }

  inline Nfa nfa_of_dfa(Dfa const& d) {
    Nfa n;
    n.alphabet = d.alphabet;
    for (std::size_t q = 0; q < d.states.size(); ++q) {
      n.add_state();
    }
    for (std::size_t q = 0; q < d.states.size(); ++q) {
      for (std::size_t a = 0; a < d.alphabet.size(); ++a) {
        n.add_edge(static_cast<int>(q), static_cast<int>(a), d.delta[q][a]);
      }
    }
    n.init.insert(d.init);
    n.accept = d.accept;
    return n;
  }

}  // namespace sgpd

#endif  // SGPD_DFA_HPP_
