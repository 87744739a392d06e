// Finite semigroupoids: a graph plus an associative partial multiplication
// defined exactly on composable edge pairs.

#ifndef SGPD_SEMIGROUPOID_HPP_
#define SGPD_SEMIGROUPOID_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "common.hpp"
#include "graph.hpp"
#include "path.hpp"

namespace sgpd {

  //! A finite semigroupoid.  The multiplication table is stored densely
  //! over edge indices; composability is derived from the underlying graph.
  //! Edges flagged in identity_edges() are adjoined local units, so the
  //! structure they were added to can be recovered by dropping them.
  class FiniteSemigroupoid {
   public:
    FiniteSemigroupoid() = default;

    FiniteSemigroupoid(Graph graph, std::map<std::pair<Id, Id>, Id> mul,
                       std::set<Id> identity_edges = {})
        : graph_(std::move(graph)),
          mul_(std::move(mul)),
          identities_(std::move(identity_edges)) {
      index_();
    }

    Graph const& underlying() const {
      return graph_;
    }

    std::map<std::pair<Id, Id>, Id> const& table() const {
      return mul_;
    }

    std::set<Id> const& identity_edges() const {
      return identities_;
    }

    std::size_t size() const {
      return elements_.size();
    }

    bool empty() const {
      return elements_.empty();
    }

    //! Edge identifiers in canonical order.
    std::vector<Id> const& elements() const {
      return elements_;
    }

    bool has_element(Id const& e) const {
      return index_of_.count(e) > 0;
    }

    int index(Id const& e) const {
      auto it = index_of_.find(e);
      if (it == index_of_.end()) {
        throw_error(errc::invalid_argument, "unknown edge " + detail::quote(e));
      }
      return it->second;
    }

    Id const& element(int i) const {
      return elements_.at(static_cast<std::size_t>(i));
    }

    int src_ix(int e) const {
      return src_[static_cast<std::size_t>(e)];
    }

    int dst_ix(int e) const {
      return dst_[static_cast<std::size_t>(e)];
    }

    bool composable_ix(int s, int t) const {
      return src_[static_cast<std::size_t>(s)]
             == dst_[static_cast<std::size_t>(t)];
    }

    bool composable(Id const& s, Id const& t) const {
      return composable_ix(index(s), index(t));
    }

    //! Table entry for (s, t), or -1 when the pair is not composable or
    //! the entry is missing.
    int product_ix(int s, int t) const {
      return table_[static_cast<std::size_t>(s) * elements_.size()
                    + static_cast<std::size_t>(t)];
    }

    std::optional<Id> product(Id const& s, Id const& t) const {
      int p = product_ix(index(s), index(t));
      if (p < 0) {
        return std::nullopt;
      }
      return elements_[static_cast<std::size_t>(p)];
    }

    //! Multiplication; throws when (s, t) is not composable.
    Id const& mul(Id const& s, Id const& t) const {
      int p = product_ix(index(s), index(t));
      if (p < 0) {
        throw_error(errc::not_composable,
                    detail::quote(s) + " * " + detail::quote(t)
                        + " is not defined");
      }
      return elements_[static_cast<std::size_t>(p)];
    }

    bool is_one_vertex() const {
      return graph_.vertices.size() == 1;
    }

    bool operator==(FiniteSemigroupoid const& that) const {
      return graph_ == that.graph_ && mul_ == that.mul_
             && identities_ == that.identities_;
    }

    bool operator!=(FiniteSemigroupoid const& that) const {
      return !(*this == that);
    }

   private:
    void index_() {
      elements_ = graph_.edge_ids();
      for (std::size_t i = 0; i < elements_.size(); ++i) {
        index_of_[elements_[i]] = static_cast<int>(i);
      }
      std::vector<Id> verts(graph_.vertices.begin(), graph_.vertices.end());
      std::map<Id, int> vix;
      for (std::size_t i = 0; i < verts.size(); ++i) {
        vix[verts[i]] = static_cast<int>(i);
      }
      std::size_t m = elements_.size();
      src_.resize(m);
      dst_.resize(m);
      for (std::size_t i = 0; i < m; ++i) {
        src_[i] = vix.at(graph_.src(elements_[i]));
        dst_[i] = vix.at(graph_.dst(elements_[i]));
      }
      table_.assign(m * m, -1);
      for (auto const& [key, value] : mul_) {
        auto s = index_of_.find(key.first);
        auto t = index_of_.find(key.second);
        auto p = index_of_.find(value);
        if (s == index_of_.end() || t == index_of_.end()
            || p == index_of_.end()) {
          continue;  // reported by validate_semigroupoid
        }
        if (!composable_ix(s->second, t->second)) {
          continue;  // likewise
        }
        table_[static_cast<std::size_t>(s->second) * m
               + static_cast<std::size_t>(t->second)] = p->second;
      }
    }

    Graph                           graph_;
    std::map<std::pair<Id, Id>, Id> mul_;
    std::set<Id>                    identities_;
    std::vector<Id>                 elements_;
    std::map<Id, int>               index_of_;
    std::vector<int>                src_;
    std::vector<int>                dst_;
    std::vector<std::int32_t>       table_;
  };

  //! Full validation: underlying graph, table typing and totality on
  //! composable pairs, exact associativity scan, and the local identity
  //! law for flagged unit edges.
  inline Diagnostics validate_semigroupoid(FiniteSemigroupoid const& s) {
    Diagnostics d = validate_graph(s.underlying());
    if (!d.ok()) {
      return d;
    }
    if (s.size() > limits::assoc_scan_max_edges) {
      throw_error(errc::budget_exceeded,
                  "too many edges for the exact associativity scan");
    }
    Graph const& g = s.underlying();
    for (auto const& [key, value] : s.table()) {
      auto const& [a, b] = key;
      if (!g.has_edge(a) || !g.has_edge(b)) {
        d.add("table key (" + detail::quote(a) + ", " + detail::quote(b)
              + ") mentions an unknown edge");
        continue;
      }
      if (!g.has_edge(value)) {
        d.add("product of (" + detail::quote(a) + ", " + detail::quote(b)
              + ") is an unknown edge " + detail::quote(value));
        continue;
      }
      if (g.src(a) != g.dst(b)) {
        d.add("table entry for non-composable pair (" + detail::quote(a)
              + ", " + detail::quote(b) + ")");
        continue;
      }
      if (g.src(value) != g.src(b) || g.dst(value) != g.dst(a)) {
        d.add("product " + detail::quote(value) + " of (" + detail::quote(a)
              + ", " + detail::quote(b) + ") has wrong endpoints");
      }
    }
    if (!d.ok()) {
      return d;
    }
    int n = static_cast<int>(s.size());
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (!s.composable_ix(a, b)) {
          continue;
        }
        if (s.product_ix(a, b) < 0) {
          d.add("missing product for composable pair ("
                + detail::quote(s.element(a)) + ", "
                + detail::quote(s.element(b)) + ")");
        }
      }
    }
    if (!d.ok()) {
      return d;
    }
    // (ab)c and a(bc) are both defined whenever (a,b) and (b,c) are
    // composable; the scan is exact.
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (!s.composable_ix(a, b)) {
          continue;
        }
        int ab = s.product_ix(a, b);
        for (int c = 0; c < n; ++c) {
          if (!s.composable_ix(b, c)) {
            continue;
          }
          int bc = s.product_ix(b, c);
          if (s.product_ix(ab, c) != s.product_ix(a, bc)) {
            d.add("associativity fails on (" + detail::quote(s.element(a))
                  + ", " + detail::quote(s.element(b)) + ", "
                  + detail::quote(s.element(c)) + ")");
          }
        }
      }
    }
    if (!d.ok()) {
      return d;
    }
    for (auto const& e : s.identity_edges()) {
      if (!g.has_edge(e)) {
        d.add("flagged unit " + detail::quote(e) + " is not an edge");
        continue;
      }
      if (g.src(e) != g.dst(e)) {
        d.add("flagged unit " + detail::quote(e) + " is not a loop");
        continue;
      }
      for (auto const& x : s.elements()) {
        if (g.dst(x) == g.src(e) && s.mul(e, x) != x) {
          d.add("flagged unit " + detail::quote(e)
                + " does not act as a left unit on " + detail::quote(x));
        }
        if (g.src(x) == g.src(e) && s.mul(x, e) != x) {
          d.add("flagged unit " + detail::quote(e)
                + " does not act as a right unit on " + detail::quote(x));
        }
      }
    }
    return d;
  }

  //! Result of adjoining one local unit per vertex: the extended
  //! semigroupoid plus the identifiers of the new loops.
  struct AdjoinResult {
    FiniteSemigroupoid extended;
    std::map<Id, Id>   unit_at;  // vertex -> new loop
    std::set<Id>       added;
  };

  //! Adjoins a fresh local identity loop at every vertex.  Applying this
  //! twice adds units on top of units: the first batch stops being
  //! neutral because it does not fix the second batch.
  inline AdjoinResult adjoin_identities(FiniteSemigroupoid const& s) {
    Graph const& g = s.underlying();
    AdjoinResult out;
    Graph        h = g;
    std::map<std::pair<Id, Id>, Id> mul = s.table();

    for (auto const& v : g.vertices) {
      Id unit = "1_" + v;
      while (h.has_edge(unit) || h.has_vertex(unit)) {
        unit += "'";
      }
      h.add_edge(unit, v, v);
      out.unit_at[v] = unit;
      out.added.insert(unit);
    }
    for (auto const& [e, ends] : g.edges) {
      (void) ends;
      mul[{out.unit_at.at(g.dst(e)), e}] = e;
      mul[{e, out.unit_at.at(g.src(e))}] = e;
    }
    for (auto const& [v, unit] : out.unit_at) {
      (void) v;
      mul[{unit, unit}] = unit;
    }
    // Old units stop being identities: they are absorbed by the fresh
    // ones, so only the fresh units carry the flag.
    std::set<Id> flags(out.added.begin(), out.added.end());
    out.extended = FiniteSemigroupoid(std::move(h), std::move(mul),
                                      std::move(flags));
    return out;
  }

  //! Restriction to a subset of edges; used to undo adjoin_identities.
  inline FiniteSemigroupoid without_edges(FiniteSemigroupoid const& s,
                                          std::set<Id> const&       drop) {
    Graph h;
    h.vertices = s.underlying().vertices;
    for (auto const& [e, ends] : s.underlying().edges) {
      if (drop.count(e) == 0) {
        h.add_edge(e, ends.src, ends.dst);
      }
    }
    std::map<std::pair<Id, Id>, Id> mul;
    for (auto const& [key, value] : s.table()) {
      if (drop.count(key.first) == 0 && drop.count(key.second) == 0
          && drop.count(value) == 0) {
        mul[key] = value;
      }
    }
    std::set<Id> flags;
    for (auto const& e : s.identity_edges()) {
      if (drop.count(e) == 0) {
        flags.insert(e);
      }
    }
    return FiniteSemigroupoid(std::move(h), std::move(mul), std::move(flags));
  }

  //! A map of semigroupoids: a graph morphism between the underlying
  //! graphs that respects multiplication.
  struct SgpdHomomorphism {
    FiniteSemigroupoid domain;
    FiniteSemigroupoid codomain;
    std::map<Id, Id>   vmap;
    std::map<Id, Id>   emap;

    GraphMorphism graph_part() const {
      return GraphMorphism{domain.underlying(), codomain.underlying(), vmap,
                           emap};
    }
  };

  struct HomReport {
    Diagnostics diagnostics;
    bool        faithful = false;  // injective on every hom-set
    bool        quotient = false;  // vertex-bijective and onto every hom-set

    bool ok() const {
      return diagnostics.ok();
    }
  };

  inline HomReport check_homomorphism(SgpdHomomorphism const& h) {
    HomReport report;
    report.diagnostics = check_morphism(h.graph_part());
    if (!report.diagnostics.ok()) {
      return report;
    }
    int n = static_cast<int>(h.domain.size());
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (!h.domain.composable_ix(a, b)) {
          continue;
        }
        Id const& pa = h.emap.at(h.domain.element(a));
        Id const& pb = h.emap.at(h.domain.element(b));
        Id const& ab = h.domain.element(h.domain.product_ix(a, b));
        if (h.codomain.mul(pa, pb) != h.emap.at(ab)) {
          report.diagnostics.add(
              "image of " + detail::quote(h.domain.element(a)) + " * "
              + detail::quote(h.domain.element(b))
              + " differs from the product of the images");
        }
      }
    }
    if (!report.diagnostics.ok()) {
      return report;
    }

    Graph const& dg = h.domain.underlying();
    Graph const& cg = h.codomain.underlying();

    report.faithful = true;
    {
      std::map<std::pair<std::pair<Id, Id>, Id>, Id> seen;
      for (auto const& [e, ends] : dg.edges) {
        auto key = std::make_pair(std::make_pair(ends.src, ends.dst),
                                  h.emap.at(e));
        auto [it, inserted] = seen.emplace(key, e);
        (void) it;
        if (!inserted) {
          report.faithful = false;
          break;
        }
      }
    }

    std::set<Id> vimage;
    for (auto const& [v, w] : h.vmap) {
      (void) v;
      vimage.insert(w);
    }
    bool vertex_bijective = (vimage.size() == dg.vertices.size()
                             && vimage.size() == cg.vertices.size());
    report.quotient = vertex_bijective;
    if (vertex_bijective) {
      std::set<Id> eimage;
      for (auto const& [e, f] : h.emap) {
        (void) e;
        eimage.insert(f);
      }
      for (auto const& [f, ends] : cg.edges) {
        (void) ends;
        if (eimage.count(f) == 0) {
          report.quotient = false;
          break;
        }
      }
    }
    return report;
  }

  //! Closure of a set of edges under all defined products.  The result
  //! keeps only the vertices incident to the closure.
  inline FiniteSemigroupoid
  generate_subsemigroupoid(FiniteSemigroupoid const& s,
                           std::set<Id> const&       generators) {
    if (generators.empty()) {
      throw_error(errc::empty_generators, "no generators given");
    }
    std::set<int> closure;
    std::vector<int> queue;
    for (auto const& e : generators) {
      int i = s.index(e);
      if (closure.insert(i).second) {
        queue.push_back(i);
      }
    }
    while (!queue.empty()) {
      int a = queue.back();
      queue.pop_back();
      std::vector<int> known(closure.begin(), closure.end());
      for (int b : known) {
        for (auto [x, y] : {std::make_pair(a, b), std::make_pair(b, a)}) {
          if (s.composable_ix(x, y)) {
            int p = s.product_ix(x, y);
            if (p >= 0 && closure.insert(p).second) {
              queue.push_back(p);
            }
          }
        }
      }
    }
    Graph h;
    for (int i : closure) {
      Id const& e = s.element(i);
      h.add_vertex(s.underlying().src(e));
      h.add_vertex(s.underlying().dst(e));
    }
    for (int i : closure) {
      Id const& e = s.element(i);
      h.add_edge(e, s.underlying().src(e), s.underlying().dst(e));
    }
    std::map<std::pair<Id, Id>, Id> mul;
    for (int a : closure) {
      for (int b : closure) {
        if (s.composable_ix(a, b)) {
          mul[{s.element(a), s.element(b)}]
              = s.element(s.product_ix(a, b));
        }
      }
    }
    std::set<Id> flags;
    for (auto const& e : s.identity_edges()) {
      if (h.has_edge(e)) {
        flags.insert(e);
      }
    }
    return FiniteSemigroupoid(std::move(h), std::move(mul), std::move(flags));
  }

  //! Componentwise direct product; vertices and edges are named
  //! "(x|y)".
  inline FiniteSemigroupoid direct_product(FiniteSemigroupoid const& s,
                                           FiniteSemigroupoid const& t) {
    auto pair_id = [](Id const& a, Id const& b) {
      return "(" + a + "|" + b + ")";
    };
    Graph h;
    for (auto const& v : s.underlying().vertices) {
      for (auto const& w : t.underlying().vertices) {
        h.add_vertex(pair_id(v, w));
      }
    }
    for (auto const& [e, ee] : s.underlying().edges) {
      for (auto const& [f, fe] : t.underlying().edges) {
        h.add_edge(pair_id(e, f), pair_id(ee.src, fe.src),
                   pair_id(ee.dst, fe.dst));
      }
    }
    std::map<std::pair<Id, Id>, Id> mul;
    for (auto const& [k1, p1] : s.table()) {
      for (auto const& [k2, p2] : t.table()) {
        mul[{pair_id(k1.first, k2.first), pair_id(k1.second, k2.second)}]
            = pair_id(p1, p2);
      }
    }
    return FiniteSemigroupoid(std::move(h), std::move(mul));
  }

  struct SgpdQuotient {
    FiniteSemigroupoid quotient;
    SgpdHomomorphism   projection;
  };

  //! Quotient by an edge equivalence that is a congruence: merged edges
  //! are coterminal and the equivalence is compatible with multiplication.
  inline SgpdQuotient quotient_semigroupoid(FiniteSemigroupoid const& s,
                                            GraphEquivalence const&   eq) {
    GraphQuotient gq = quotient(s.underlying(), eq);
    auto rep = [&](Id const& e) { return gq.projection.emap.at(e); };
    int n = static_cast<int>(s.size());
    for (int a = 0; a < n; ++a) {
      for (int a2 = 0; a2 < n; ++a2) {
        if (rep(s.element(a)) != rep(s.element(a2))) {
          continue;
        }
        for (int b = 0; b < n; ++b) {
          if (!s.composable_ix(a, b)) {
            continue;
          }
          for (int b2 = 0; b2 < n; ++b2) {
            if (rep(s.element(b)) != rep(s.element(b2))
                || !s.composable_ix(a2, b2)) {
              continue;
            }
            Id const& p  = s.element(s.product_ix(a, b));
            Id const& p2 = s.element(s.product_ix(a2, b2));
            if (rep(p) != rep(p2)) {
              throw_error(errc::not_a_congruence,
                          "products of (" + detail::quote(s.element(a)) + ", "
                              + detail::quote(s.element(b)) + ") and ("
                              + detail::quote(s.element(a2)) + ", "
                              + detail::quote(s.element(b2))
                              + ") land in different classes");
            }
          }
        }
      }
    }
    std::map<std::pair<Id, Id>, Id> mul;
    for (auto const& [key, value] : s.table()) {
      mul[{rep(key.first), rep(key.second)}] = rep(value);
    }
    SgpdQuotient out;
    out.quotient = FiniteSemigroupoid(gq.graph, std::move(mul));
    out.projection.domain   = s;
    out.projection.codomain = out.quotient;
    out.projection.vmap     = gq.projection.vmap;
    out.projection.emap     = gq.projection.emap;
    return out;
  }

  //! Evaluates a path under an edge labeling into s (a graph morphism
  //! from the path's base to the underlying graph of s), folding
  //! products from the left.
  inline Id evaluate_path(FiniteSemigroupoid const& s,
                          GraphMorphism const& label, Path const& u) {
    if (label.domain != u.base()) {
      throw_error(errc::base_mismatch, "labeling is over a different graph");
    }
    Id acc = label.emap.at(u.edges().front());
    for (std::size_t i = 1; i < u.edges().size(); ++i) {
      acc = s.mul(acc, label.emap.at(u.edges()[i]));
    }
    return acc;
  }

  //! Greedy generating set: irreducible edges first, then least missing
  //! edges until the closure is everything.
  inline std::vector<Id> greedy_generators(FiniteSemigroupoid const& s) {
    std::set<Id> products;
    int n = static_cast<int>(s.size());
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (s.composable_ix(a, b) && s.product_ix(a, b) >= 0) {
          products.insert(s.element(s.product_ix(a, b)));
        }
      }
    }
    std::set<Id> gens;
    for (auto const& e : s.elements()) {
      if (products.count(e) == 0) {
        gens.insert(e);
      }
    }
    auto closed = [&]() {
      if (gens.empty()) {
        return std::set<Id>{};
      }
      auto sub = generate_subsemigroupoid(s, gens);
      return std::set<Id>(sub.elements().begin(), sub.elements().end());
    };
    std::set<Id> have = closed();
    for (auto const& e : s.elements()) {
      if (have.count(e) == 0) {
        gens.insert(e);
        have = closed();
      }
    }
    return std::vector<Id>(gens.begin(), gens.end());
  }

  enum class DivisorVerdict { yes, no, inconclusive };

  struct DivisorReport {
    DivisorVerdict verdict;
    std::string    detail;
  };

  //! Decides whether s divides t: some semigroupoid maps faithfully into
  //! t and admits a quotient map onto s.  The search enumerates vertex
  //! maps and generator assignments and closes pairs in s x t; a closure
  //! containing two coterminal s-edges paired with the same t-edge is
  //! rejected.  Exhaustive within the budget, otherwise inconclusive.
  inline DivisorReport is_divisor(FiniteSemigroupoid const& s,
                                  FiniteSemigroupoid const& t,
                                  std::size_t budget
                                  = limits::divisor_search_budget) {
    if (s.empty()) {
      return {DivisorVerdict::yes, "the empty semigroupoid divides anything"};
    }
    std::vector<Id> gens = greedy_generators(s);
    std::vector<Id> sverts(s.underlying().vertices.begin(),
                           s.underlying().vertices.end());
    std::vector<Id> tverts(t.underlying().vertices.begin(),
                           t.underlying().vertices.end());
    if (tverts.empty()) {
      return {DivisorVerdict::no, "no vertices available in the target"};
    }

    std::size_t work    = 0;
    bool        skipped = false;

    // Closure of {(g_i, u_i)}; fails when two coterminal domain edges
    // share a target partner.
    auto try_assignment = [&](std::map<Id, Id> const& vmap,
                              std::vector<Id> const& partner) -> bool {
      std::set<std::pair<int, int>>    pairs;
      std::vector<std::pair<int, int>> queue;
      std::map<std::pair<std::pair<int, int>, int>, int> by_type_partner;

      auto add = [&](int a, int u) -> bool {
        auto p = std::make_pair(a, u);
        if (!pairs.insert(p).second) {
          return true;
        }
        auto key = std::make_pair(std::make_pair(s.src_ix(a), s.dst_ix(a)), u);
        auto [it, inserted] = by_type_partner.emplace(key, a);
        if (!inserted && it->second != a) {
          return false;
        }
        queue.push_back(p);
        return true;
      };

      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (!add(s.index(gens[i]), t.index(partner[i]))) {
          return false;
        }
      }
      while (!queue.empty()) {
        auto [a, u] = queue.back();
        queue.pop_back();
        std::vector<std::pair<int, int>> known(pairs.begin(), pairs.end());
        for (auto const& [b, v] : known) {
          ++work;
          if (work > budget) {
            skipped = true;
            return false;
          }
          if (s.composable_ix(a, b)) {
            if (!add(s.product_ix(a, b), t.product_ix(u, v))) {
              return false;
            }
          }
          if (s.composable_ix(b, a)) {
            if (!add(s.product_ix(b, a), t.product_ix(v, u))) {
              return false;
            }
          }
        }
      }
      (void) vmap;
      return true;
    };

    // Enumerate vertex maps V(s) -> V(t).
    std::vector<std::size_t> vchoice(sverts.size(), 0);
    while (true) {
      std::map<Id, Id> vmap;
      for (std::size_t i = 0; i < sverts.size(); ++i) {
        vmap[sverts[i]] = tverts[vchoice[i]];
      }
      // Candidate partners per generator, constrained by typing.
      std::vector<std::vector<Id>> candidates;
      bool feasible = true;
      for (auto const& x : gens) {
        auto hs = t.underlying().hom_set(vmap.at(s.underlying().src(x)),
                                         vmap.at(s.underlying().dst(x)));
        if (hs.empty()) {
          feasible = false;
          break;
        }
        candidates.push_back(std::move(hs));
      }
      if (feasible) {
        std::vector<std::size_t> pick(gens.size(), 0);
        while (true) {
          std::vector<Id> partner;
          for (std::size_t i = 0; i < gens.size(); ++i) {
            partner.push_back(candidates[i][pick[i]]);
          }
          if (work > budget) {
            skipped = true;
            break;
          }
          if (try_assignment(vmap, partner)) {
            return {DivisorVerdict::yes,
                    "generators " + detail::join(gens, " ") + " -> "
                        + detail::join(partner, " ")};
          }
          if (skipped) {
            break;
          }
          std::size_t i = 0;
          while (i < pick.size() && ++pick[i] == candidates[i].size()) {
            pick[i] = 0;
            ++i;
          }
          if (i == pick.size()) {
            break;
          }
        }
      }
      if (skipped) {
        break;
      }
      std::size_t i = 0;
      while (i < vchoice.size() && ++vchoice[i] == tverts.size()) {
        vchoice[i] = 0;
        ++i;
      }
      if (i == vchoice.size()) {
        break;
      }
    }
    if (skipped) {
      return {DivisorVerdict::inconclusive, "search budget exceeded"};
    }
    return {DivisorVerdict::no, "no faithful quotient assignment exists"};
  }

}  // namespace sgpd

#endif  // SGPD_SEMIGROUPOID_HPP_
