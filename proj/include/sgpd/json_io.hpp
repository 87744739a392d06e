// JSON (de)serialization for graphs, semigroupoids, automata, path
// languages, and labelings.  Dumps are canonical: object keys sorted,
// two-space indent, trailing newline, so byte-stable across runs.
//
// Multiplication and transition tables use "left,right" keys.  Ids may
// themselves contain commas; the loader tries every split and requires
// exactly one to name two known ids.

#ifndef SGPD_JSON_IO_HPP_
#define SGPD_JSON_IO_HPP_

#include <fstream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "common.hpp"
#include "constructions.hpp"
#include "dfa.hpp"
#include "graph.hpp"
#include "language.hpp"
#include "semigroupoid.hpp"

namespace sgpd {

  using json = nlohmann::json;

  namespace detail {

    inline std::pair<Id, Id> split_pair_key(std::string const& key,
                                            std::set<Id> const& left_ids,
                                            std::set<Id> const& right_ids) {
      std::vector<std::pair<Id, Id>> hits;
      for (std::size_t i = 0; i < key.size(); ++i) {
        if (key[i] != ',') {
          continue;
        }
        Id l = key.substr(0, i);
        Id r = key.substr(i + 1);
        if (left_ids.count(l) > 0 && right_ids.count(r) > 0) {
          hits.emplace_back(std::move(l), std::move(r));
        }
      }
      if (hits.size() != 1) {
        throw_error(errc::parse_error,
                    "key " + quote(key)
                        + (hits.empty() ? " does not name a known id pair"
                                        : " splits ambiguously"));
      }
      return hits.front();
    }

    inline void need(bool ok, std::string const& what) {
      if (!ok) {
        throw_error(errc::parse_error, what);
      }
    }

  }  // namespace detail

  // --- graphs -------------------------------------------------------------

  inline json to_json(Graph const& g) {
    json j;
    j["convention"] = "category";
    j["vertices"]   = json::array();
    for (auto const& v : g.vertices) {
      j["vertices"].push_back(v);
    }
    j["edges"] = json::array();
    for (auto const& [e, ends] : g.edges) {
      j["edges"].push_back({{"id", e}, {"src", ends.src}, {"dst", ends.dst}});
    }
    return j;
  }

  inline Graph graph_from_json(json const& j) {
    detail::need(j.is_object(), "graph must be a JSON object");
    detail::need(j.contains("convention") && j["convention"] == "category",
                 "graph is missing \"convention\": \"category\"");
    detail::need(j.contains("vertices") && j["vertices"].is_array(),
                 "graph needs a \"vertices\" array");
    detail::need(j.contains("edges") && j["edges"].is_array(),
                 "graph needs an \"edges\" array");
    Graph g;
    for (auto const& v : j["vertices"]) {
      detail::need(v.is_string(), "vertex ids must be strings");
      g.vertices.insert(v.get<Id>());
    }
    for (auto const& e : j["edges"]) {
      detail::need(e.is_object() && e.contains("id") && e.contains("src")
                       && e.contains("dst"),
                   "each edge needs id, src, dst");
      g.edges[e["id"].get<Id>()]
          = {e["src"].get<Id>(), e["dst"].get<Id>()};
    }
    auto d = validate_graph(g);
    if (!d.ok()) {
      throw_error(errc::parse_error, d.issues.front());
    }
    return g;
  }

  // --- semigroupoids ------------------------------------------------------

  inline json to_json(FiniteSemigroupoid const& s) {
    json j;
    j["graph"] = to_json(s.underlying());
    j["mul"]   = json::object();
    for (auto const& [pair, value] : s.table()) {
      j["mul"][pair.first + "," + pair.second] = value;
    }
    if (!s.identity_edges().empty()) {
      j["identities"] = json::array();
      for (auto const& e : s.identity_edges()) {
        j["identities"].push_back(e);
      }
    }
    return j;
  }

  inline FiniteSemigroupoid semigroupoid_from_json(json const& j) {
    detail::need(j.is_object() && j.contains("graph"),
                 "semigroupoid needs a \"graph\" field");
    detail::need(j.contains("mul") && j["mul"].is_object(),
                 "semigroupoid needs a \"mul\" object");
    Graph g = graph_from_json(j["graph"]);
    std::set<Id> ids;
    for (auto const& [e, ends] : g.edges) {
      ids.insert(e);
    }
    std::map<std::pair<Id, Id>, Id> mul;
    for (auto const& [key, value] : j["mul"].items()) {
      detail::need(value.is_string(), "products must be edge ids");
      mul[detail::split_pair_key(key, ids, ids)] = value.get<Id>();
    }
    std::set<Id> identities;
    if (j.contains("identities")) {
      detail::need(j["identities"].is_array(),
                   "\"identities\" must be an array");
      for (auto const& e : j["identities"]) {
        identities.insert(e.get<Id>());
      }
    }
    FiniteSemigroupoid s(std::move(g), std::move(mul),
                         std::move(identities));
    auto d = validate_semigroupoid(s);
    if (!d.ok()) {
      throw_error(errc::parse_error, d.issues.front());
    }
    return s;
  }

  // --- automata -----------------------------------------------------------

  inline json to_json(Dfa const& d) {
    json j;
    j["states"] = d.states;
    j["alphabet"] = d.alphabet;
    j["init"]   = d.states[static_cast<std::size_t>(d.init)];
    j["accept"] = json::array();
    for (int q : d.accept) {
      j["accept"].push_back(d.states[static_cast<std::size_t>(q)]);
    }
    j["delta"] = json::object();
    for (std::size_t q = 0; q < d.states.size(); ++q) {
      for (std::size_t a = 0; a < d.alphabet.size(); ++a) {
        j["delta"][d.states[q] + "," + d.alphabet[a]]
            = d.states[static_cast<std::size_t>(d.delta[q][a])];
      }
    }
    return j;
  }

  //! Loads a DFA; a partial transition table is completed with a fresh
  //! rejecting sink.  The alphabet is sorted and transitions remapped.
  inline Dfa dfa_from_json(json const& j) {
    detail::need(j.is_object() && j.contains("states")
                     && j.contains("alphabet") && j.contains("init")
                     && j.contains("accept") && j.contains("delta"),
                 "dfa needs states, alphabet, init, accept, delta");
    Dfa d;
    std::set<Id> state_set, letter_set;
    for (auto const& q : j["states"]) {
      Id id = q.get<Id>();
      detail::need(state_set.insert(id).second,
                   "duplicate state " + detail::quote(id));
      d.states.push_back(id);
    }
    for (auto const& a : j["alphabet"]) {
      Id id = a.get<Id>();
      detail::need(letter_set.insert(id).second,
                   "duplicate letter " + detail::quote(id));
    }
    d.alphabet.assign(letter_set.begin(), letter_set.end());
    auto state_ix = [&](Id const& q) {
      for (std::size_t i = 0; i < d.states.size(); ++i) {
        if (d.states[i] == q) {
          return static_cast<int>(i);
        }
      }
      throw_error(errc::parse_error, "unknown state " + detail::quote(q));
    };
    d.init = state_ix(j["init"].get<Id>());
    for (auto const& q : j["accept"]) {
      d.accept.insert(state_ix(q.get<Id>()));
    }
    d.delta.assign(d.states.size(),
                   std::vector<int>(d.alphabet.size(), -1));
    for (auto const& [key, value] : j["delta"].items()) {
      auto [q, a] = detail::split_pair_key(key, state_set, letter_set);
      int qi = state_ix(q);
      int ai = d.letter_index(a);
      detail::need(
          d.delta[static_cast<std::size_t>(qi)][static_cast<std::size_t>(ai)]
              == -1,
          "duplicate transition for " + detail::quote(key));
      d.delta[static_cast<std::size_t>(qi)][static_cast<std::size_t>(ai)]
          = state_ix(value.get<Id>());
    }
    bool partial = false;
    for (auto const& row : d.delta) {
      for (int t : row) {
        partial = partial || t == -1;
      }
    }
    if (partial) {
      Id sink = "sink";
      while (state_set.count(sink) > 0) {
        sink += "'";
      }
      d.states.push_back(sink);
      int si = static_cast<int>(d.states.size()) - 1;
      d.delta.push_back(std::vector<int>(d.alphabet.size(), si));
      for (auto& row : d.delta) {
        for (auto& t : row) {
          if (t == -1) {
            t = si;
          }
        }
      }
    }
    auto diag = validate_dfa(d);
    if (!diag.ok()) {
      throw_error(errc::parse_error, diag.issues.front());
    }
    return d;
  }

  // --- path languages -----------------------------------------------------

  inline json to_json(PathLanguage const& l) {
    json j;
    j["graph"] = to_json(l.base);
    j["dfa"]   = to_json(l.dfa);
    return j;
  }

  //! Accepts either {"graph":…, "dfa":…} or a bare DFA object; for a
  //! bare DFA the base is a one-vertex graph with one loop per letter.
  inline PathLanguage language_from_json(json const& j) {
    detail::need(j.is_object(), "language must be a JSON object");
    Graph base;
    Dfa   dfa;
    if (j.contains("dfa")) {
      detail::need(j.contains("graph"), "language needs graph and dfa");
      base = graph_from_json(j["graph"]);
      dfa  = dfa_from_json(j["dfa"]);
    } else {
      dfa  = dfa_from_json(j);
      base = one_vertex_graph(dfa.alphabet);
    }
    PathLanguage l{std::move(base), std::move(dfa)};
    auto d = validate_path_language(l);
    if (!d.ok()) {
      throw_error(errc::parse_error, d.issues.front());
    }
    return l;
  }

  // --- labelings ----------------------------------------------------------

  inline json to_json(GraphMorphism const& m) {
    json j;
    j["base"] = to_json(m.domain);
    j["vmap"] = json::object();
    for (auto const& [v, w] : m.vmap) {
      j["vmap"][v] = w;
    }
    j["emap"] = json::object();
    for (auto const& [e, f] : m.emap) {
      j["emap"][e] = f;
    }
    return j;
  }

  //! Loads a labeling of the stored base graph into the given target.
  inline GraphMorphism labeling_from_json(json const& j,
                                          FiniteSemigroupoid const& target) {
    detail::need(j.is_object() && j.contains("base") && j.contains("emap"),
                 "labeling needs base and emap");
    GraphMorphism m;
    m.domain   = graph_from_json(j["base"]);
    m.codomain = target.underlying();
    if (j.contains("vmap")) {
      for (auto const& [v, w] : j["vmap"].items()) {
        m.vmap[v] = w.get<Id>();
      }
    }
    for (auto const& [e, f] : j["emap"].items()) {
      m.emap[e] = f.get<Id>();
    }
    if (!j.contains("vmap")) {
      // Infer vertex images from edge endpoints where forced.
      for (auto const& [e, f] : m.emap) {
        if (m.domain.has_edge(e) && m.codomain.has_edge(f)) {
          m.vmap[m.domain.src(e)] = m.codomain.src(f);
          m.vmap[m.domain.dst(e)] = m.codomain.dst(f);
        }
      }
    }
    auto d = check_morphism(m);
    if (!d.ok()) {
      throw_error(errc::parse_error, d.issues.front());
    }
    return m;
  }

  // --- files --------------------------------------------------------------

  inline std::string dumps(json const& j) {
    return j.dump(2) + "\n";
  }

  inline json load_json_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw_error(errc::parse_error, "cannot open " + detail::quote(path));
    }
    json j;
    try {
      in >> j;
    } catch (json::parse_error const& e) {
      throw_error(errc::parse_error,
                  "invalid JSON in " + detail::quote(path) + ": "
                      + e.what());
    }
    return j;
  }

}  // namespace sgpd

#endif  // SGPD_JSON_IO_HPP_
