// Finite directed multigraphs, morphisms, edge equivalences and quotients.
//
// Composition in everything built on top of these graphs follows the
// category-style convention: a pair of edges (s, t) is composable when
// src(s) == dst(t), and the composite st runs src(t) -> dst(s).

#ifndef SGPD_GRAPH_HPP_
#define SGPD_GRAPH_HPP_

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "common.hpp"

namespace sgpd {

  //! A finite directed multigraph with named vertices and edges.
  //! Vertex and edge identifier sets must be disjoint; validate_graph
  //! reports violations.
  struct Graph {
    struct Ends {
      Id src;
      Id dst;

      bool operator==(Ends const&) const = default;
    };

    std::set<Id>       vertices;
    std::map<Id, Ends> edges;

    bool has_vertex(Id const& v) const {
      return vertices.count(v) > 0;
    }

    bool has_edge(Id const& e) const {
      return edges.count(e) > 0;
    }

    Id const& src(Id const& e) const {
      return edges.at(e).src;
    }

    Id const& dst(Id const& e) const {
      return edges.at(e).dst;
    }

    void add_vertex(Id v) {
      vertices.insert(std::move(v));
    }

    void add_edge(Id e, Id src, Id dst) {
      edges[std::move(e)] = Ends{std::move(src), std::move(dst)};
    }

    //! Edges from x to y, in canonical order.
    std::vector<Id> hom_set(Id const& x, Id const& y) const {
      std::vector<Id> out;
      for (auto const& [e, ends] : edges) {
        if (ends.src == x && ends.dst == y) {
          out.push_back(e);
        }
      }
      return out;
    }

    std::vector<Id> loops_at(Id const& v) const {
      return hom_set(v, v);
    }

    std::vector<Id> edge_ids() const {
      std::vector<Id> out;
      for (auto const& [e, ends] : edges) {
        (void) ends;
        out.push_back(e);
      }
      return out;
    }

    bool operator==(Graph const& that) const {
      if (vertices != that.vertices || edges.size() != that.edges.size()) {
        return false;
      }
      for (auto const& [e, ends] : edges) {
        auto it = that.edges.find(e);
        if (it == that.edges.end() || it->second.src != ends.src
            || it->second.dst != ends.dst) {
          return false;
        }
      }
      return true;
    }

    bool operator!=(Graph const& that) const {
      return !(*this == that);
    }
  };

  inline Diagnostics validate_graph(Graph const& g) {
    Diagnostics d;
    for (auto const& [e, ends] : g.edges) {
      if (g.vertices.count(e) > 0) {
        d.add("identifier " + detail::quote(e)
              + " is used for both a vertex and an edge");
      }
      if (!g.has_vertex(ends.src)) {
        d.add("edge " + detail::quote(e) + " has unknown source "
              + detail::quote(ends.src));
      }
      if (!g.has_vertex(ends.dst)) {
        d.add("edge " + detail::quote(e) + " has unknown target "
              + detail::quote(ends.dst));
      }
    }
    return d;
  }

  //! A morphism of graphs: vertex map and edge map commuting with
  //! src and dst.
  struct GraphMorphism {
    Graph            domain;
    Graph            codomain;
    std::map<Id, Id> vmap;
    std::map<Id, Id> emap;

    Id const& on_vertex(Id const& v) const {
      return vmap.at(v);
    }

    Id const& on_edge(Id const& e) const {
      return emap.at(e);
    }
  };

  inline Diagnostics check_morphism(GraphMorphism const& m) {
    Diagnostics d;
    for (auto const& v : m.domain.vertices) {
      auto it = m.vmap.find(v);
      if (it == m.vmap.end()) {
        d.add("vertex " + detail::quote(v) + " has no image");
      } else if (!m.codomain.has_vertex(it->second)) {
        d.add("vertex " + detail::quote(v) + " maps to unknown vertex "
              + detail::quote(it->second));
      }
    }
    for (auto const& [e, ends] : m.domain.edges) {
      auto it = m.emap.find(e);
      if (it == m.emap.end()) {
        d.add("edge " + detail::quote(e) + " has no image");
        continue;
      }
      if (!m.codomain.has_edge(it->second)) {
        d.add("edge " + detail::quote(e) + " maps to unknown edge "
              + detail::quote(it->second));
        continue;
      }
      auto vs = m.vmap.find(ends.src);
      auto vd = m.vmap.find(ends.dst);
      if (vs != m.vmap.end() && m.codomain.src(it->second) != vs->second) {
        d.add("edge " + detail::quote(e) + ": image source "
              + detail::quote(m.codomain.src(it->second))
              + " does not match mapped source " + detail::quote(vs->second));
      }
      if (vd != m.vmap.end() && m.codomain.dst(it->second) != vd->second) {
        d.add("edge " + detail::quote(e) + ": image target "
              + detail::quote(m.codomain.dst(it->second))
              + " does not match mapped target " + detail::quote(vd->second));
      }
    }
    return d;
  }

  inline GraphMorphism identity_morphism(Graph const& g) {
    GraphMorphism m;
    m.domain   = g;
    m.codomain = g;
    for (auto const& v : g.vertices) {
      m.vmap[v] = v;
    }
    for (auto const& [e, ends] : g.edges) {
      (void) ends;
      m.emap[e] = e;
    }
    return m;
  }

  inline GraphMorphism compose(GraphMorphism const& g, GraphMorphism const& f) {
    // g after f
    if (f.codomain != g.domain) {
      throw_error(errc::base_mismatch,
                  "morphism composition requires matching middle graph");
    }
    GraphMorphism m;
    m.domain   = f.domain;
    m.codomain = g.codomain;
    for (auto const& [v, w] : f.vmap) {
      m.vmap[v] = g.vmap.at(w);
    }
    for (auto const& [e, h] : f.emap) {
      m.emap[e] = g.emap.at(h);
    }
    return m;
  }

  //! An equivalence on a graph that merges edges only.  Distinct vertices
  //! are never identified, and any two merged edges must be coterminal.
  //! Edges not listed in any class are implicitly singletons.
  struct GraphEquivalence {
    Graph                        base;
    std::vector<std::vector<Id>> classes;

    //! Representative of the class of e: the lexicographically least
    //! member of its class.
    Id representative(Id const& e) const {
      for (auto const& cls : classes) {
        if (std::find(cls.begin(), cls.end(), e) != cls.end()) {
          return *std::min_element(cls.begin(), cls.end());
        }
      }
      return e;
    }
  };

  inline Diagnostics validate_equivalence(GraphEquivalence const& q) {
    Diagnostics d;
    std::set<Id> seen;
    for (auto const& cls : q.classes) {
      if (cls.empty()) {
        d.add("empty class");
        continue;
      }
      std::vector<Id> valid;
      for (auto const& e : cls) {
        if (q.base.has_vertex(e)) {
          d.add("class member " + detail::quote(e)
                + " is a vertex; only edges may be merged");
          continue;
        }
        if (!q.base.has_edge(e)) {
          d.add("class member " + detail::quote(e) + " is not an edge");
          continue;
        }
        if (!seen.insert(e).second) {
          d.add("edge " + detail::quote(e) + " occurs in two classes");
        }
        valid.push_back(e);
      }
      for (auto const& e : valid) {
        if (q.base.src(e) != q.base.src(valid.front())
            || q.base.dst(e) != q.base.dst(valid.front())) {
          d.add("class of " + detail::quote(valid.front())
                + " merges non-coterminal edges (" + detail::quote(e) + ")");
        }
      }
    }
    return d;
  }

  //! Quotient graph together with the projection morphism.  Merged edge
  //! classes are named by their lexicographically least member.
  struct GraphQuotient {
    Graph         graph;
    GraphMorphism projection;
  };

  inline GraphQuotient quotient(Graph const& g, GraphEquivalence const& q) {
    if (q.base != g) {
      throw_error(errc::base_mismatch, "equivalence is over a different graph");
    }
    auto d = validate_equivalence(q);
    if (!d.ok()) {
      throw_error(errc::invalid_equivalence, d.issues.front());
    }
    std::map<Id, Id> rep;
    for (auto const& [e, ends] : g.edges) {
      (void) ends;
      rep[e] = e;
    }
    for (auto const& cls : q.classes) {
      Id r = *std::min_element(cls.begin(), cls.end());
      for (auto const& e : cls) {
        rep[e] = r;
      }
    }
    GraphQuotient out;
    out.graph.vertices = g.vertices;
    for (auto const& [e, ends] : g.edges) {
      if (rep[e] == e) {
        out.graph.add_edge(e, ends.src, ends.dst);
      }
    }
    out.projection.domain   = g;
    out.projection.codomain = out.graph;
    for (auto const& v : g.vertices) {
      out.projection.vmap[v] = v;
    }
    out.projection.emap = rep;
    return out;
  }

  //! Decides whether b is a retract of g: b must be a subgraph, and the
  //! search looks for a morphism g -> b restricting to the identity on b.
  //! Exhaustive over vertex assignments, with pruning; refuses above the
  //! documented size limits.
  struct RetractReport {
    bool                         is_retract;
    std::optional<GraphMorphism> retraction;
  };

  inline RetractReport is_retract_subgraph(Graph const& g, Graph const& b) {
    for (auto const& v : b.vertices) {
      if (!g.has_vertex(v)) {
        throw_error(errc::not_a_subgraph,
                    "vertex " + detail::quote(v) + " is not in the ambient graph");
      }
    }
    for (auto const& [e, ends] : b.edges) {
      if (!g.has_edge(e) || g.src(e) != ends.src || g.dst(e) != ends.dst) {
        throw_error(errc::not_a_subgraph,
                    "edge " + detail::quote(e)
                        + " is not an edge of the ambient graph");
      }
    }
    if (g.vertices.size() > limits::retract_max_vertices
        || g.edges.size() > limits::retract_max_edges) {
      throw_error(errc::budget_exceeded, "graph too large for retract search");
    }

    std::vector<Id> free_vertices;
    for (auto const& v : g.vertices) {
      if (!b.has_vertex(v)) {
        free_vertices.push_back(v);
      }
    }
    std::vector<Id> b_vertices(b.vertices.begin(), b.vertices.end());
    std::map<Id, Id> vmap;
    for (auto const& v : b.vertices) {
      vmap[v] = v;
    }

    // A vertex assignment extends to a retraction iff for every edge of g
    // outside b the induced hom-set of b is nonempty; edge images can then
    // be chosen independently (least edge in each hom-set).
    auto edges_ok = [&](std::map<Id, Id> const& vm, bool partial) {
      for (auto const& [e, ends] : g.edges) {
        if (b.has_edge(e)) {
          continue;
        }
        auto is = vm.find(ends.src);
        auto id_ = vm.find(ends.dst);
        if (is == vm.end() || id_ == vm.end()) {
          if (partial) {
            continue;
          }
          return false;
        }
        if (b.hom_set(is->second, id_->second).empty()) {
          return false;
        }
      }
      return true;
    };

    RetractReport report{false, std::nullopt};
    std::vector<std::size_t> choice(free_vertices.size(), 0);

    std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
      if (!edges_ok(vmap, i < free_vertices.size())) {
        return false;
      }
      if (i == free_vertices.size()) {
        return true;
      }
      for (auto const& target : b_vertices) {
        vmap[free_vertices[i]] = target;
        if (search(i + 1)) {
          return true;
        }
        vmap.erase(free_vertices[i]);
      }
      return false;
    };

    if (!b_vertices.empty() || free_vertices.empty()) {
      if (search(0)) {
        GraphMorphism r;
        r.domain   = g;
        r.codomain = b;
        r.vmap     = vmap;
        for (auto const& [e, ends] : g.edges) {
          if (b.has_edge(e)) {
            r.emap[e] = e;
          } else {
            r.emap[e] = b.hom_set(vmap.at(ends.src), vmap.at(ends.dst)).front();
          }
        }
        report.is_retract = true;
        report.retraction = std::move(r);
      }
    }
    return report;
  }

}  // namespace sgpd

#endif  // SGPD_GRAPH_HPP_
