// Formal omega-terms (variables, concatenation, omega-power) with
// evaluation over a finite semigroupoid and exhaustive pseudoidentity
// checking.
//
// Assignments under which both sides are undefined are skipped; an
// assignment defined on exactly one side refutes the identity.

#ifndef SGPD_OMEGA_TERM_HPP_
#define SGPD_OMEGA_TERM_HPP_

#include <cctype>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "catalog.hpp"
#include "common.hpp"
#include "green.hpp"
#include "semigroupoid.hpp"

namespace sgpd {

  struct OmegaTerm;
  using TermPtr = std::shared_ptr<OmegaTerm const>;

  struct OmegaTerm {
    enum class Kind { var, concat, omega };
    Kind    kind;
    Id      name;         // var
    TermPtr left, right;  // concat both, omega left only
  };

  inline TermPtr term_var(Id name) {
    return std::make_shared<OmegaTerm const>(
        OmegaTerm{OmegaTerm::Kind::var, std::move(name), nullptr, nullptr});
  }

  inline TermPtr term_concat(TermPtr a, TermPtr b) {
    return std::make_shared<OmegaTerm const>(OmegaTerm{
        OmegaTerm::Kind::concat, {}, std::move(a), std::move(b)});
  }

  inline TermPtr term_omega(TermPtr a) {
    return std::make_shared<OmegaTerm const>(
        OmegaTerm{OmegaTerm::Kind::omega, {}, std::move(a), nullptr});
  }

  inline void collect_variables(TermPtr const& t, std::set<Id>& out) {
    switch (t->kind) {
      case OmegaTerm::Kind::var:
        out.insert(t->name);
        break;
      case OmegaTerm::Kind::concat:
        collect_variables(t->left, out);
        collect_variables(t->right, out);
        break;
      case OmegaTerm::Kind::omega:
        collect_variables(t->left, out);
        break;
    }
  }

  inline std::set<Id> term_variables(TermPtr const& t) {
    std::set<Id> out;
    collect_variables(t, out);
    return out;
  }

  inline std::string term_to_string(TermPtr const& t) {
    switch (t->kind) {
      case OmegaTerm::Kind::var:
        return t->name;
      case OmegaTerm::Kind::concat:
        return term_to_string(t->left) + " " + term_to_string(t->right);
      case OmegaTerm::Kind::omega: {
        std::string inner = term_to_string(t->left);
        if (t->left->kind != OmegaTerm::Kind::var) {
          inner = "(" + inner + ")";
        }
        return inner + "^w";
      }
    }
    return {};
  }

  namespace detail {

    //! nullopt encodes "undefined under this assignment".
    inline std::optional<Id> eval_partial(TermPtr const& t,
                                          FiniteSemigroupoid const& s,
                                          std::map<Id, Id> const& assign) {
      switch (t->kind) {
        case OmegaTerm::Kind::var: {
          auto it = assign.find(t->name);
          if (it == assign.end()) {
            throw_error(errc::invalid_argument,
                        "assignment misses variable "
                            + detail::quote(t->name));
          }
          return it->second;
        }
        case OmegaTerm::Kind::concat: {
          auto l = eval_partial(t->left, s, assign);
          auto r = eval_partial(t->right, s, assign);
          if (!l || !r) {
            return std::nullopt;
          }
          return s.product(*l, *r);
        }
        case OmegaTerm::Kind::omega: {
          auto v = eval_partial(t->left, s, assign);
          if (!v) {
            return std::nullopt;
          }
          auto const& g = s.underlying();
          if (g.src(*v) != g.dst(*v)) {
            return std::nullopt;
          }
          return omega_power(s, *v);
        }
      }
      return std::nullopt;
    }

  }  // namespace detail

  //! Total evaluation; undefined composites and omega on a non-loop are
  //! reported as errors.
  inline Id eval_term(TermPtr const& t, FiniteSemigroupoid const& s,
                      std::map<Id, Id> const& assign) {
    switch (t->kind) {
      case OmegaTerm::Kind::var: {
        auto it = assign.find(t->name);
        if (it == assign.end()) {
          throw_error(errc::invalid_argument,
                      "assignment misses variable " + detail::quote(t->name));
        }
        if (!s.has_element(it->second)) {
          throw_error(errc::invalid_argument,
                      "assignment value " + detail::quote(it->second)
                          + " is not an element");
        }
        return it->second;
      }
      case OmegaTerm::Kind::concat:
        return s.mul(eval_term(t->left, s, assign),
                     eval_term(t->right, s, assign));
      case OmegaTerm::Kind::omega: {
        Id v = eval_term(t->left, s, assign);
        auto const& g = s.underlying();
        if (g.src(v) != g.dst(v)) {
          throw_error(errc::omega_on_non_loop,
                      "omega-power of non-loop " + detail::quote(v));
        }
        return omega_power(s, v);
      }
    }
    throw_error(errc::invalid_argument, "malformed term");
  }

  struct PseudoidentityReport {
    bool                            holds = true;
    std::optional<std::map<Id, Id>> witness;  // failing assignment
  };

  inline PseudoidentityReport
  check_pseudoidentity(TermPtr const& lhs, TermPtr const& rhs,
                       FiniteSemigroupoid const& s) {
    PseudoidentityReport report;
    std::set<Id> varset = term_variables(lhs);
    collect_variables(rhs, varset);
    std::vector<Id> vars(varset.begin(), varset.end());
    if (s.empty()) {
      return report;  // no assignments at all
    }
    double total = 1;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      total *= static_cast<double>(s.size());
      if (total > static_cast<double>(limits::omega_assignment_cap)) {
        throw_error(errc::budget_exceeded,
                    "too many assignments to enumerate");
      }
    }
    std::vector<std::size_t> odo(vars.size(), 0);
    for (;;) {
      std::map<Id, Id> assign;
      for (std::size_t i = 0; i < vars.size(); ++i) {
        assign[vars[i]] = s.element(odo[i]);
      }
      auto l = detail::eval_partial(lhs, s, assign);
      auto r = detail::eval_partial(rhs, s, assign);
      bool bad = l.has_value() != r.has_value()
                 || (l.has_value() && *l != *r);
      if (bad) {
        report.holds   = false;
        report.witness = std::move(assign);
        return report;
      }
      std::size_t i = 0;
      while (i < odo.size() && ++odo[i] == s.size()) {
        odo[i] = 0;
        ++i;
      }
      if (i == odo.size()) {
        break;
      }
    }
    return report;
  }

  struct CatalogCheckEntry {
    Id                   member;
    PseudoidentityReport report;
  };

  inline std::vector<CatalogCheckEntry> check_over_catalog(
      TermPtr const& lhs, TermPtr const& rhs,
      std::function<bool(FiniteSemigroupoid const&)> const& filter) {
    std::vector<CatalogCheckEntry> out;
    for (auto const& entry : catalog()) {
      if (filter) {
        bool pass = false;
        try {
          pass = filter(entry.value);
        } catch (Error const& e) {
          // A member outside the filter's domain (wrong shape, empty)
          // does not pass it.
          if (e.code() != errc::not_a_semigroup
              && e.code() != errc::empty_semigroup) {
            throw;
          }
        }
        if (!pass) {
          continue;
        }
      }
      out.push_back(
          {entry.name, check_pseudoidentity(lhs, rhs, entry.value)});
    }
    return out;
  }

  // --- surface syntax -----------------------------------------------------
  //
  //   term   = factor { factor }          juxtaposition, left associative
  //   factor = atom { "^" "w" }
  //   atom   = name | "(" term ")"
  //   name   = one or more of [A-Za-z0-9_]

  namespace detail {

    struct TermParser {
      std::string const& text;
      std::size_t        pos = 0;

      void skip_space() {
        while (pos < text.size()
               && std::isspace(static_cast<unsigned char>(text[pos]))) {
          ++pos;
        }
      }

      [[noreturn]] void fail(std::string const& what) {
        throw_error(errc::parse_error,
                    what + " at position " + std::to_string(pos));
      }

      bool at_name() {
        if (pos >= text.size()) {
          return false;
        }
        unsigned char c = static_cast<unsigned char>(text[pos]);
        return std::isalnum(c) || c == '_';
      }

      std::string name() {
        std::size_t start = pos;
        while (at_name()) {
          ++pos;
        }
        return text.substr(start, pos - start);
      }

      TermPtr atom() {
        skip_space();
        if (pos < text.size() && text[pos] == '(') {
          ++pos;
          TermPtr t = term();
          skip_space();
          if (pos >= text.size() || text[pos] != ')') {
            fail("expected ')'");
          }
          ++pos;
          return t;
        }
        if (!at_name()) {
          fail("expected a variable or '('");
        }
        return term_var(name());
      }

      TermPtr factor() {
        TermPtr t = atom();
        for (;;) {
          skip_space();
          if (pos >= text.size() || text[pos] != '^') {
            return t;
          }
          ++pos;
          skip_space();
          if (name() != "w") {
            fail("expected 'w' after '^'");
          }
          t = term_omega(t);
        }
      }

      bool more_factors() {
        skip_space();
        return pos < text.size() && text[pos] != ')' && text[pos] != '=';
      }

      TermPtr term() {
        TermPtr t = factor();
        while (more_factors()) {
          t = term_concat(t, factor());
        }
        return t;
      }
    };

  }  // namespace detail

  inline TermPtr parse_term(std::string const& text) {
    detail::TermParser p{text};
    TermPtr t = p.term();
    p.skip_space();
    if (p.pos != text.size()) {
      p.fail("unexpected trailing input");
    }
    return t;
  }

  //! Parses "lhs = rhs".
  inline std::pair<TermPtr, TermPtr>
  parse_pseudoidentity(std::string const& text) {
    auto eq = text.find('=');
    if (eq == std::string::npos || text.find('=', eq + 1) != std::string::npos) {
      throw_error(errc::parse_error,
                  "a pseudoidentity needs exactly one '='");
    }
    return {parse_term(text.substr(0, eq)), parse_term(text.substr(eq + 1))};
  }

}  // namespace sgpd

#endif  // SGPD_OMEGA_TERM_HPP_
