// Standalone acceptance checks for the toolkit.  Each criterion prints
// exactly one PASS/FAIL line; the exit status is 0 only if all pass.
//
// Usage: sgpd_acceptance [--seed N]

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <sgpd/catalog.hpp>
#include <sgpd/constructions.hpp>
#include <sgpd/green.hpp>
#include <sgpd/language.hpp>
#include <sgpd/omega_term.hpp>
#include <sgpd/pseudovar.hpp>
#include <sgpd/recurrence.hpp>
#include <sgpd/stabilizer.hpp>

using namespace sgpd;
using Clock = std::chrono::steady_clock;
using Word  = std::vector<Id>;

namespace {

  double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start)
        .count();
  }

  int failures = 0;

  void report(int n, bool pass, std::string const& detail) {
    failures += pass ? 0 : 1;
    std::cout << "criterion " << n << ": " << (pass ? "PASS" : "FAIL");
    if (!detail.empty()) {
      std::cout << " (" << detail << ")";
    }
    std::cout << "\n";
  }

  // ---- 1: the Brandt multiplication law on every pair -------------------

  void criterion1() {
    auto start = Clock::now();
    auto b2    = brandt(2);
    auto parse = [](Id const& x) {
      return std::pair<char, char>{x[1], x[3]};
    };
    int checked = 0;
    bool ok = validate_semigroupoid(b2).ok();
    for (auto const& a : b2.elements()) {
      for (auto const& b : b2.elements()) {
        Id expected = "0";
        if (a != "0" && b != "0") {
          auto [p, q] = parse(a);
          auto [r, s] = parse(b);
          if (q == r) {
            expected = Id("(") + p + "," + s + ")";
          }
        }
        ok = ok && b2.mul(a, b) == expected;
        ++checked;
      }
    }
    ok = ok && b2.mul("(1,2)", "(2,1)") == "(1,1)"
         && b2.mul("(1,2)", "(1,2)") == "0";
    double ms = ms_since(start);
    ok        = ok && checked == 25 && ms < 1.0;
    std::ostringstream d;
    d << checked << " pairs, " << ms << " ms";
    report(1, ok, d.str());
  }

  // ---- 2: composability read off in a Brandt quotient -------------------

  void criterion2(std::uint64_t seed) {
    auto start = Clock::now();
    std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
    long words = 0, mismatches = 0;
    for (int trial = 0; trial < 20; ++trial) {
      std::uniform_int_distribution<int> nv(1, 4);
      Graph g;
      int   v = nv(rng);
      for (int i = 0; i < v; ++i) {
        g.add_vertex("v" + std::to_string(i));
      }
      std::uniform_int_distribution<int> ne(1, 8), pick(0, v - 1);
      int e = ne(rng);
      for (int i = 0; i < e; ++i) {
        g.add_edge("e" + std::to_string(i),
                   "v" + std::to_string(pick(rng)),
                   "v" + std::to_string(pick(rng)));
      }
      auto hom  = composability_hom(g);
      auto const& t = hom.target;
      int  zero = t.index("0");
      std::vector<Id>  edges = g.edge_ids();
      std::vector<int> image;
      for (auto const& x : edges) {
        image.push_back(t.index(hom.labeling.emap.at(x)));
      }
      // Depth-first over all words of length <= 6, folding the product
      // and the path condition incrementally.
      std::function<void(int, Id const&, bool, int)> walk =
          [&](int acc, Id const& last_src, bool path, int depth) {
            ++words;
            bool nonzero = acc != zero;
            mismatches += (path == nonzero) ? 0 : 1;
            if (depth == 6) {
              return;
            }
            for (std::size_t i = 0; i < edges.size(); ++i) {
              bool still = path && last_src == g.dst(edges[i]);
              walk(t.product_ix(acc, image[i]), g.src(edges[i]), still,
                   depth + 1);
            }
          };
      for (std::size_t i = 0; i < edges.size(); ++i) {
        walk(image[i], g.src(edges[i]), true, 1);
      }
    }
    double ms = ms_since(start);
    bool ok = mismatches == 0 && ms < 5000.0;
    std::ostringstream d;
    d << words << " words, " << mismatches << " mismatches, " << ms
      << " ms";
    report(2, ok, d.str());
  }

  // ---- 3: length-n prefixes rule the truncation -------------------------

  void criterion3() {
    std::vector<Id> pool = {"a", "b", "c"};
    bool ok = true;
    long checked = 0;
    for (std::size_t k = 1; k <= 3 && ok; ++k) {
      std::vector<Id> letters(pool.begin(),
                              pool.begin() + static_cast<std::ptrdiff_t>(k));
      for (std::size_t n = 1; n <= 3 && ok; ++n) {
        auto t = truncation(letters, n);
        ok     = ok && is_Kn(t, n);
        auto eval = [&](Word const& w) {
          Id acc = w.front();
          for (std::size_t i = 1; i < w.size(); ++i) {
            acc = t.mul(acc, w[i]);
          }
          return acc;
        };
        std::vector<Word> layer = {{}};
        for (std::size_t len = 1; len <= n + 3; ++len) {
          std::vector<Word> next;
          for (auto const& w : layer) {
            for (auto const& a : letters) {
              auto e = w;
              e.push_back(a);
              next.push_back(std::move(e));
            }
          }
          layer = std::move(next);
          if (len < n) {
            continue;
          }
          for (auto const& w : layer) {
            Word head(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(n));
            ok = ok && eval(w) == eval(head);
            ++checked;
          }
        }
      }
    }
    std::ostringstream d;
    d << checked << " words";
    report(3, ok, d.str());
  }

  // ---- 4: concatenation leaves the locally-semilattice class ------------

  void criterion4() {
    auto start = Clock::now();
    Dfa d;
    d.states   = {"A", "B", "C", "D"};
    d.alphabet = {"x", "y"};
    d.init     = 0;
    d.accept   = {2};
    d.delta    = {{1, 3}, {1, 2}, {3, 2}, {3, 3}};
    auto l = make_path_language(one_vertex_graph({"x", "y"}), d);
    bool single = is_V_recognizable(
        l, [](FiniteSemigroupoid const& s) { return is_LSl(s); });
    auto c = concat_languages(l, l);
    bool doubled = is_V_recognizable(
        c, [](FiniteSemigroupoid const& s) { return is_LSl(s); });
    double ms = ms_since(start);
    bool ok = single && !doubled && ms < 1000.0;
    std::ostringstream out;
    out << "x+y+ LSl=" << (single ? "yes" : "no")
        << ", squared LSl=" << (doubled ? "yes" : "no") << ", " << ms
        << " ms";
    report(4, ok, out.str());
  }

  // ---- 5: equidivisibility across the catalog ---------------------------

  void criterion5() {
    bool ok = true;
    std::ostringstream note;
    for (auto const& entry : catalog()) {
      auto const& s = entry.value;
      bool simple = s.is_one_vertex() && !s.empty() && is_CS(s);
      if (simple && !is_equidivisible(s).equidivisible) {
        ok = false;
        note << " CS entry " << entry.name << " not equidivisible;";
      }
    }
    for (Id name : {"trivial", "cyclic2", "cyclic3", "cyclic4", "cyclic6"}) {
      if (!is_equidivisible(catalog_entry(name)).equidivisible) {
        ok = false;
        note << " group " << name << " not equidivisible;";
      }
    }
    auto const& b2 = catalog_entry("brandt2");
    auto rep = is_equidivisible(b2);
    bool witnessed = !rep.equidivisible && rep.witness.has_value();
    if (witnessed) {
      auto const& w = *rep.witness;
      auto uv = b2.product(w[0], w[1]);
      auto xy = b2.product(w[2], w[3]);
      witnessed = uv && xy && *uv == *xy;
      // No middle factor t can connect the two factorizations.
      for (auto const& t : b2.elements()) {
        auto ut = b2.product(w[0], t);
        auto ty = b2.product(t, w[3]);
        auto xt = b2.product(w[2], t);
        auto tv = b2.product(t, w[1]);
        witnessed = witnessed
                    && !(ut && ty && *ut == w[2] && *ty == w[1])
                    && !(xt && tv && *xt == w[0] && *tv == w[3]);
      }
      witnessed = witnessed && !(w[0] == w[2] && w[1] == w[3]);
    }
    ok = ok && witnessed;
    std::ostringstream d;
    d << "B2 witness "
      << (witnessed && rep.witness
              ? (*rep.witness)[0] + " " + (*rep.witness)[1] + " "
                    + (*rep.witness)[2] + " " + (*rep.witness)[3]
              : std::string("missing"))
      << note.str();
    report(5, ok, d.str());
  }

  // ---- 6: stabilizers of equidivisible members ---------------------------

  void criterion6() {
    bool ok = true;
    int entries = 0;
    long checked = 0;
    for (auto const& entry : catalog()) {
      auto const& s = entry.value;
      if (!is_equidivisible(s).equidivisible) {
        continue;
      }
      ++entries;
      bool aperiodic = s.is_one_vertex() && !s.empty() && is_A(s);
      for (auto const& x : s.elements()) {
        auto rep = stabilizer_kernel_check(s, x);
        ok = ok && rep.chain.chain;
        if (aperiodic) {
          ok = ok && rep.kernel_left_zero && rep.regulars_idempotent;
        }
        ++checked;
      }
    }
    ok = ok && entries >= 10;
    std::ostringstream d;
    d << entries << " equidivisible entries, " << checked
      << " stabilizers";
    report(6, ok, d.str());
  }

  // ---- 7: recurrence on a seeded corpus ---------------------------------

  bool oracle_recurrent(PeriodicWord const& w) {
    std::size_t horizon =
        50 * (w.preperiod().size() + w.period().size() + 1);
    Word expanded;
    for (std::size_t i = 0; i < horizon; ++i) {
      expanded.push_back(w.at(i));
    }
    std::size_t upto = w.preperiod().size() + 2 * w.period().size();
    for (std::size_t n = 1; n <= upto; ++n) {
      auto hit = std::search(expanded.begin() + 1, expanded.end(),
                             expanded.begin(),
                             expanded.begin()
                                 + static_cast<std::ptrdiff_t>(n));
      if (hit == expanded.end()) {
        return false;
      }
    }
    return true;
  }

  //! Every labeling of the word's letters into loops at one vertex of
  //! the target must see an idempotent among the recurring images.
  bool idempotent_in_every_quotient(PeriodicWord const& w) {
    std::vector<Id> letters = w.base().edge_ids();
    for (auto const& entry : catalog()) {
      auto const& s = entry.value;
      for (auto const& v : s.underlying().vertices) {
        std::vector<Id> loops = s.underlying().loops_at(v);
        if (loops.empty()) {
          continue;
        }
        std::vector<std::size_t> odo(letters.size(), 0);
        for (;;) {
          GraphMorphism lab;
          lab.domain   = w.base();
          lab.codomain = s.underlying();
          lab.vmap["@"] = v;
          for (std::size_t i = 0; i < letters.size(); ++i) {
            lab.emap[letters[i]] = loops[odo[i]];
          }
          if (!has_recurring_idempotent(w, s, lab)) {
            return false;
          }
          std::size_t i = 0;
          while (i < odo.size() && ++odo[i] == loops.size()) {
            odo[i] = 0;
            ++i;
          }
          if (i == odo.size()) {
            break;
          }
        }
      }
    }
    return true;
  }

  void criterion7(std::uint64_t seed) {
    auto start = Clock::now();
    std::mt19937 rng(static_cast<std::mt19937::result_type>(seed + 1));
    std::vector<Id> pool = {"a", "b", "c"};
    long disagreements = 0, quotient_misses = 0, uncertified = 0;
    int recurrent_count = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      std::uniform_int_distribution<std::size_t> nk(1, 3);
      std::size_t k = nk(rng);
      std::uniform_int_distribution<std::size_t> prelen(0, 6), perlen(1, 6);
      std::uniform_int_distribution<std::size_t> letter(0, k - 1);
      Word pre(prelen(rng)), per(perlen(rng));
      for (auto& x : pre) {
        x = pool[letter(rng)];
      }
      for (auto& x : per) {
        x = pool[letter(rng)];
      }
      std::set<Id> used(pre.begin(), pre.end());
      used.insert(per.begin(), per.end());
      Graph base = one_vertex_graph(Word(used.begin(), used.end()));
      PeriodicWord w(base, pre, per);

      bool lib = is_recurrent(w).recurrent;
      if (lib != is_recurrent_uxuy(w) || lib != oracle_recurrent(w)) {
        ++disagreements;
        continue;
      }
      if (lib) {
        ++recurrent_count;
        if (!idempotent_in_every_quotient(w)) {
          ++quotient_misses;
        }
      } else {
        auto rep = is_recurrent(w);
        Path u(base, *rep.failing_prefix);
        auto synt = syntactic_semigroup(clopen_double_occurrence(u, u));
        if (has_recurring_idempotent(w, synt.semigroup, synt.labeling)) {
          ++uncertified;
        }
      }
    }
    double ms = ms_since(start);
    bool ok = disagreements == 0 && quotient_misses == 0
              && uncertified == 0 && ms < 60000.0;
    std::ostringstream d;
    d << "1000 words, " << recurrent_count << " recurrent, "
      << disagreements << "/" << quotient_misses << "/" << uncertified
      << " violations, " << ms << " ms";
    report(7, ok, d.str());
  }

  // ---- 8: omega-term identities match the membership tests --------------

  void criterion8() {
    bool ok = true;
    std::ostringstream note;

    auto [l1, r1] = parse_pseudoidentity("a^w = a^w b a^w");
    auto li = check_over_catalog(
        l1, r1, [](FiniteSemigroupoid const& s) { return is_LI(s); });
    ok = ok && !li.empty();
    for (auto const& e : li) {
      if (!e.report.holds) {
        ok = false;
        note << " LI member " << e.member << " fails;";
      }
    }
    auto u1 = check_pseudoidentity(l1, r1, catalog_entry("semilattice2"));
    bool witness = !u1.holds && u1.witness
                   && *u1.witness == std::map<Id, Id>{{"a", "1"},
                                                      {"b", "0"}};
    if (!witness) {
      ok = false;
      note << " U1 witness a=1 b=0 not reproduced;";
    }

    auto [l2, r2] = parse_pseudoidentity("x^w y x^w = x^w");
    auto [l3, r3] = parse_pseudoidentity("x^w = x^w x");
    for (auto const& entry : catalog()) {
      auto const& s = entry.value;
      if (!s.is_one_vertex() || s.empty()) {
        continue;
      }
      if (check_pseudoidentity(l2, r2, s).holds != is_LI(s)) {
        ok = false;
        note << " LI law vs is_LI differ on " << entry.name << ";";
      }
      if (check_pseudoidentity(l3, r3, s).holds != is_A(s)) {
        ok = false;
        note << " A law vs is_A differ on " << entry.name << ";";
      }
    }
    std::ostringstream d;
    d << li.size() << " LI members" << note.str();
    report(8, ok, d.str());
  }

  // ---- 9: scope note ----------------------------------------------------

  void criterion9() {
    report(9, true,
           "topological statements about free profinite semigroupoids are "
           "out of scope; they are exercised only through the finite "
           "suites above");
  }

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t seed = 20240811;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--seed" && i + 1 < argc) {
      seed = std::stoull(argv[++i]);
    } else if (arg.rfind("--seed=", 0) == 0) {
      seed = std::stoull(arg.substr(7));
    } else {
      std::cerr << "usage: sgpd_acceptance [--seed N]\n";
      return 2;
    }
  }
  auto guard = [](int n, std::function<void()> const& f) {
    try {
      f();
    } catch (std::exception const& e) {
      report(n, false, std::string("exception: ") + e.what());
    }
  };
  guard(1, [] { criterion1(); });
  guard(2, [&] { criterion2(seed); });
  guard(3, [] { criterion3(); });
  guard(4, [] { criterion4(); });
  guard(5, [] { criterion5(); });
  guard(6, [] { criterion6(); });
  guard(7, [&] { criterion7(seed); });
  guard(8, [] { criterion8(); });
  guard(9, [] { criterion9(); });
  return failures == 0 ? 0 : 1;
}
