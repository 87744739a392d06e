// Batch command-line surface: loads JSON artifacts, runs the analyses,
// prints deterministic reports.
//
// Exit codes: 0 success, 2 invalid input or usage, 1 internal error.

#include <cstdint>
#include <exception>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <sgpd/catalog.hpp>
#include <sgpd/common.hpp>
#include <sgpd/constructions.hpp>
#include <sgpd/dfa.hpp>
#include <sgpd/graph.hpp>
#include <sgpd/green.hpp>
#include <sgpd/json_io.hpp>
#include <sgpd/language.hpp>
#include <sgpd/omega_term.hpp>
#include <sgpd/path.hpp>
#include <sgpd/pseudovar.hpp>
#include <sgpd/recurrence.hpp>
#include <sgpd/semigroupoid.hpp>
#include <sgpd/stabilizer.hpp>

namespace {

  using sgpd::Id;

  std::string joined(std::vector<Id> const& items) {
    std::string out;
    for (auto const& x : items) {
      if (!out.empty()) {
        out += " ";
      }
      out += x;
    }
    return out;
  }

  template <typename C>
  std::string joined_set(C const& items) {
    return joined(std::vector<Id>(items.begin(), items.end()));
  }

  std::string braced_classes(std::vector<std::vector<Id>> const& classes) {
    std::string out;
    for (auto const& c : classes) {
      if (!out.empty()) {
        out += " ";
      }
      out += "{" + joined(c) + "}";
    }
    return out;
  }

  std::vector<Id> split_letters(std::string const& csv) {
    std::vector<Id> out;
    if (csv.empty()) {
      return out;
    }
    std::size_t start = 0;
    for (;;) {
      auto comma = csv.find(',', start);
      if (comma == std::string::npos) {
        out.push_back(csv.substr(start));
        return out;
      }
      out.push_back(csv.substr(start, comma - start));
      start = comma + 1;
    }
  }

  sgpd::FiniteSemigroupoid load_semigroupoid(std::string const& path) {
    return sgpd::semigroupoid_from_json(sgpd::load_json_file(path));
  }

  sgpd::PathLanguage load_language(std::string const& path) {
    return sgpd::language_from_json(sgpd::load_json_file(path));
  }

  int run_validate(std::string const& path) {
    auto j = sgpd::load_json_file(path);
    try {
      if (j.is_object() && j.contains("mul")) {
        sgpd::semigroupoid_from_json(j);
      } else if (j.is_object() && j.contains("dfa")) {
        sgpd::language_from_json(j);
      } else if (j.is_object() && j.contains("delta")) {
        sgpd::dfa_from_json(j);
      } else if (j.is_object() && j.contains("convention")) {
        sgpd::graph_from_json(j);
      } else {
        std::cout << "invalid: unrecognized artifact shape" << std::endl;
        return 2;
      }
    } catch (sgpd::Error const& e) {
      std::cout << "invalid: " << e.message() << std::endl;
      return 2;
    }
    std::cout << "ok" << std::endl;
    return 0;
  }

  int run_green(std::string const& path) {
    auto s = load_semigroupoid(path);
    auto g = sgpd::green_structure(s);
    std::cout << "elements: " << g.elements.size() << "\n";
    std::cout << "R: " << braced_classes(g.r_classes) << "\n";
    std::cout << "L: " << braced_classes(g.l_classes) << "\n";
    std::cout << "J: " << braced_classes(g.j_classes) << "\n";
    std::cout << "H: " << braced_classes(g.h_classes) << "\n";
    auto idem = sgpd::idempotents(s);
    std::cout << "idempotents: " << (idem.empty() ? "none" : joined(idem))
              << std::endl;
    return 0;
  }

  int run_eggbox(std::string const& path) {
    std::cout << sgpd::eggbox(load_semigroupoid(path));
    return 0;
  }

  int run_stab(std::string const& path, std::string const& edge) {
    auto s      = load_semigroupoid(path);
    auto report = sgpd::stabilizer_kernel_check(s, edge);
    auto const& t = report.stab;
    std::cout << "anchor: " << t.anchor << "\n";
    std::cout << "vertex: " << s.underlying().src(t.anchor) << "\n";
    std::cout << "unit: " << t.unit << "\n";
    std::cout << "elements: " << joined_set(t.elements) << "\n";
    std::cout << "table:\n";
    for (auto const& y : t.elements) {
      for (auto const& z : t.elements) {
        std::cout << "  " << y << " * " << z << " = "
                  << *t.monoid.product(y, z) << "\n";
      }
    }
    std::cout << "internal L-chain: " << (report.chain.chain ? "yes" : "no");
    if (report.chain.witness) {
      std::cout << "; incomparable " << report.chain.witness->first << " "
                << report.chain.witness->second;
    }
    std::cout << "\n";
    std::cout << "kernel: " << joined_set(report.kernel) << "\n";
    std::cout << "kernel left-zero: "
              << (report.kernel_left_zero ? "yes" : "no") << "\n";
    std::cout << "internally regular: " << joined_set(report.regulars)
              << "\n";
    std::cout << "regulars idempotent: "
              << (report.regulars_idempotent ? "yes" : "no") << std::endl;
    return 0;
  }

  int run_equidiv(std::string const& path) {
    auto report = sgpd::is_equidivisible(load_semigroupoid(path));
    if (report.equidivisible) {
      std::cout << "equidivisible" << std::endl;
    } else {
      auto const& w = *report.witness;
      std::cout << "NOT equidivisible; witness u=" << w[0] << " v=" << w[1]
                << " x=" << w[2] << " y=" << w[3] << std::endl;
    }
    return 0;
  }

  int run_pseudovar(std::string const& path, std::string const& pred) {
    auto s = load_semigroupoid(path);
    if (!pred.empty()) {
      std::cout << pred << ": "
                << (sgpd::predicate(pred).test(s) ? "true" : "false")
                << std::endl;
      return 0;
    }
    for (auto const& p : sgpd::predicate_registry()) {
      std::cout << p.name << ": ";
      try {
        std::cout << (p.test(s) ? "true" : "false");
      } catch (sgpd::Error const& e) {
        std::cout << "error[" << sgpd::errc_name(e.code()) << "]";
      }
      std::cout << "\n";
    }
    std::cout.flush();
    return 0;
  }

  int run_synt(std::string const& path, bool as_json, bool typed) {
    auto l = load_language(path);
    if (typed) {
      auto t = sgpd::syntactic_semigroupoid(l);
      std::cout << "typed size: " << t.semigroupoid.size() << "\n";
      std::string classes;
      for (auto const& e : t.semigroupoid.elements()) {
        if (!classes.empty()) {
          classes += " ";
        }
        classes += e + ":" + t.semigroupoid.underlying().src(e) + "->"
                   + t.semigroupoid.underlying().dst(e);
      }
      std::cout << "classes: " << classes << "\n";
      std::cout << "accepting: " << joined_set(t.accepting) << std::endl;
      return 0;
    }
    auto r = sgpd::syntactic_semigroup(l);
    if (as_json) {
      sgpd::json j;
      j["semigroupoid"] = sgpd::to_json(r.semigroup);
      j["letters"]      = sgpd::json::object();
      for (auto const& [a, e] : r.labeling.emap) {
        j["letters"][a] = e;
      }
      j["accepting"] = sgpd::json::array();
      for (auto const& e : r.accepting) {
        j["accepting"].push_back(e);
      }
      std::cout << sgpd::dumps(j);
      return 0;
    }
    std::cout << "size: " << r.semigroup.size() << "\n";
    std::cout << "elements: " << joined(r.semigroup.elements()) << "\n";
    std::string letters;
    for (auto const& [a, e] : r.labeling.emap) {
      if (!letters.empty()) {
        letters += " ";
      }
      letters += a + "->" + e;
    }
    std::cout << "letters: " << letters << "\n";
    std::cout << "accepting: " << joined_set(r.accepting) << std::endl;
    return 0;
  }

  int run_concat(std::string const& a, std::string const& b) {
    auto l = load_language(a);
    auto k = load_language(b);
    std::cout << sgpd::dumps(sgpd::to_json(sgpd::concat_languages(l, k)));
    return 0;
  }

  int run_recog(std::string const& path, std::string const& pred) {
    auto l = load_language(path);
    bool v = sgpd::is_V_recognizable(l, sgpd::predicate(pred).test);
    std::cout << pred << "-recognizable: " << (v ? "true" : "false")
              << std::endl;
    return 0;
  }

  int run_factorial(std::string const& path, std::size_t bound) {
    auto report = sgpd::is_factorial(load_language(path), bound);
    std::cout << "factorial up to length " << report.bound << ": ";
    if (report.factorial) {
      std::cout << "yes" << std::endl;
    } else {
      std::cout << "no; word=[" << joined(*report.word) << "] factor=["
                << joined(*report.factor) << "]" << std::endl;
    }
    return 0;
  }

  int run_recur(std::string const& p_csv, std::string const& q_csv,
                std::string const& target_path,
                std::string const& label_path) {
    auto p = split_letters(p_csv);
    auto q = split_letters(q_csv);
    sgpd::Graph base;
    sgpd::FiniteSemigroupoid target;
    sgpd::GraphMorphism labeling;
    bool with_target = !target_path.empty();
    if (with_target != !label_path.empty()) {
      throw sgpd::Error(sgpd::errc::invalid_argument,
                        "--target and --label go together");
    }
    if (with_target) {
      target   = load_semigroupoid(target_path);
      labeling = sgpd::labeling_from_json(sgpd::load_json_file(label_path),
                                          target);
      base     = labeling.domain;
    } else {
      std::set<Id> letters(p.begin(), p.end());
      letters.insert(q.begin(), q.end());
      base = sgpd::one_vertex_graph(
          std::vector<Id>(letters.begin(), letters.end()));
    }
    sgpd::PeriodicWord w(base, p, q);
    std::cout << "word: p=[" << joined(w.preperiod()) << "] q=["
              << joined(w.period()) << "]\n";
    auto rec = sgpd::is_recurrent(w);
    std::cout << "recurrent: " << (rec.recurrent ? "yes" : "no") << "\n";
    if (!rec.recurrent) {
      std::cout << "failing prefix: [" << joined(*rec.failing_prefix)
                << "]\n";
    }
    std::cout << "uxuy: " << (sgpd::is_recurrent_uxuy(w) ? "yes" : "no")
              << "\n";
    if (with_target) {
      auto images = sgpd::recurring_images(w, target, labeling);
      std::cout << "recurring images: " << joined_set(images.images) << "\n";
      std::cout << "recurring idempotent: "
                << (sgpd::has_recurring_idempotent(w, target, labeling)
                        ? "yes"
                        : "no")
                << "\n";
    }
    std::cout.flush();
    return 0;
  }

  int run_pseudoid(std::string const& identity, std::string const& filter,
                   std::string const& member) {
    auto [lhs, rhs] = sgpd::parse_pseudoidentity(identity);
    std::cout << "identity: " << sgpd::term_to_string(lhs) << " = "
              << sgpd::term_to_string(rhs) << "\n";
    auto print = [&](Id const& name,
                     sgpd::PseudoidentityReport const& report) {
      std::cout << name << ": ";
      if (report.holds) {
        std::cout << "holds";
      } else {
        std::cout << "fails";
        for (auto const& [var, value] : *report.witness) {
          std::cout << " " << var << "=" << value;
        }
      }
      std::cout << "\n";
    };
    if (!member.empty()) {
      auto const& s = sgpd::catalog_entry(member);
      print(member, sgpd::check_pseudoidentity(lhs, rhs, s));
    } else {
      std::function<bool(sgpd::FiniteSemigroupoid const&)> test;
      if (!filter.empty()) {
        test = sgpd::predicate(filter).test;
      }
      for (auto const& entry : sgpd::check_over_catalog(lhs, rhs, test)) {
        print(entry.member, entry.report);
      }
    }
    std::cout.flush();
    return 0;
  }

  int run_catalog(std::string const& name, bool as_json) {
    if (name.empty()) {
      for (auto const& entry : sgpd::catalog()) {
        auto const& g = entry.value.underlying();
        std::cout << entry.name << ": vertices=" << g.vertices.size()
                  << " edges=" << g.edges.size() << "\n";
      }
      std::cout.flush();
      return 0;
    }
    auto const& s = sgpd::catalog_entry(name);
    if (as_json) {
      std::cout << sgpd::dumps(sgpd::to_json(s));
      return 0;
    }
    auto const& g = s.underlying();
    std::cout << name << ": vertices=" << g.vertices.size()
              << " edges=" << g.edges.size() << "\n";
    std::cout << "elements: " << joined(s.elements()) << std::endl;
    return 0;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite semigroupoid toolkit"};
  app.require_subcommand(1);
  std::uint64_t seed = 20240811;
  app.add_option("--seed", seed,
                 "seed for randomized sweeps (reserved; analyses here are "
                 "deterministic)");

  std::string file, file_b, edge, pred, target, label;
  std::string p_csv, q_csv, identity, filter, member, name;
  std::size_t bound   = sgpd::limits::brute_force_length_bound;
  bool        as_json = false, typed = false;
  int         code    = 0;

  auto* validate = app.add_subcommand("validate", "validate a JSON artifact");
  validate->add_option("file", file)->required();
  validate->callback([&] { code = run_validate(file); });

  auto* green = app.add_subcommand("green", "Green's relations");
  green->add_option("file", file)->required();
  green->callback([&] { code = run_green(file); });

  auto* eggbox = app.add_subcommand("eggbox", "eggbox picture");
  eggbox->add_option("file", file)->required();
  eggbox->callback([&] { code = run_eggbox(file); });

  auto* stab = app.add_subcommand("stab", "right stabilizer of an edge");
  stab->add_option("file", file)->required();
  stab->add_option("--edge", edge)->required();
  stab->callback([&] { code = run_stab(file, edge); });

  auto* equidiv = app.add_subcommand("equidiv", "equidivisibility check");
  equidiv->add_option("file", file)->required();
  equidiv->callback([&] { code = run_equidiv(file); });

  auto* pseudovar
      = app.add_subcommand("pseudovar", "pseudovariety membership");
  pseudovar->add_option("file", file)->required();
  pseudovar->add_option("--pred", pred, "single predicate name");
  pseudovar->callback([&] { code = run_pseudovar(file, pred); });

  auto* synt = app.add_subcommand("synt", "syntactic semigroup");
  synt->add_option("file", file)->required();
  synt->add_flag("--json", as_json, "emit JSON");
  synt->add_flag("--typed", typed, "typed syntactic semigroupoid");
  synt->callback([&] { code = run_synt(file, as_json, typed); });

  auto* concat
      = app.add_subcommand("concat", "concatenation of two languages");
  concat->add_option("first", file)->required();
  concat->add_option("second", file_b)->required();
  concat->callback([&] { code = run_concat(file, file_b); });

  auto* recog
      = app.add_subcommand("recog", "pseudovariety recognizability");
  recog->add_option("file", file)->required();
  recog->add_option("--pred", pred)->required();
  recog->callback([&] { code = run_recog(file, pred); });

  auto* factorial = app.add_subcommand("factorial", "factor-closure check");
  factorial->add_option("file", file)->required();
  factorial->add_option("--bound", bound, "maximum word length checked");
  factorial->callback([&] { code = run_factorial(file, bound); });

  auto* recur
      = app.add_subcommand("recur", "recurrence of p q^infinity");
  recur->add_option("--p", p_csv, "preperiod, comma-separated edges");
  recur->add_option("--q", q_csv, "period, comma-separated edges")
      ->required();
  recur->add_option("--target", target, "semigroupoid JSON");
  recur->add_option("--label", label, "labeling JSON");
  recur->callback([&] { code = run_recur(p_csv, q_csv, target, label); });

  auto* pseudoid
      = app.add_subcommand("pseudoid", "check an omega-term identity");
  pseudoid->add_option("identity", identity, "e.g. \"a^w = a^w b a^w\"")
      ->required();
  pseudoid->add_option("--filter", filter, "pseudovariety filter");
  pseudoid->add_option("--member", member, "single catalog member");
  pseudoid->callback(
      [&] { code = run_pseudoid(identity, filter, member); });

  auto* catalog = app.add_subcommand("catalog", "built-in structures");
  catalog->add_option("name", name);
  catalog->add_flag("--json", as_json, "emit JSON");
  catalog->callback([&] { code = run_catalog(name, as_json); });

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    std::cerr << e.what() << std::endl;
    return 2;
  } catch (sgpd::Error const& e) {
    std::cerr << "error[" << sgpd::errc_name(e.code()) << "]: "
              << e.message() << std::endl;
    return 2;
  } catch (std::exception const& e) {
    std::cerr << "internal error: " << e.what() << std::endl;
    return 1;
  }
  return code;
}
