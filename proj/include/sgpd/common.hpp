// Core identifiers, error codes and diagnostics shared by all modules.

#ifndef SGPD_COMMON_HPP_
#define SGPD_COMMON_HPP_

#include <cstddef>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace sgpd {

  //! Identifiers for vertices, edges and states are opaque strings.
  //! Canonical ordering is lexicographic; every container keyed by an Id
  //! iterates in that order, which keeps all outputs deterministic.
  using Id = std::string;

  enum class errc {
    not_composable,
    length_out_of_range,
    invalid_equivalence,
    not_a_subgraph,
    empty_generators,
    not_a_congruence,
    not_closed,
    not_a_loop,
    empty_semigroup,
    incomplete_dfa,
    base_mismatch,
    omega_on_non_loop,
    not_a_semigroup,
    budget_exceeded,
    invalid_argument,
    parse_error
  };

  inline char const* errc_name(errc c) {
    switch (c) {
      case errc::not_composable: return "NotComposable";
      case errc::length_out_of_range: return "LengthOutOfRange";
      case errc::invalid_equivalence: return "InvalidEquivalence";
      case errc::not_a_subgraph: return "NotASubgraph";
      case errc::empty_generators: return "EmptyGenerators";
      case errc::not_a_congruence: return "NotACongruence";
      case errc::not_closed: return "NotClosed";
      case errc::not_a_loop: return "NotALoop";
      case errc::empty_semigroup: return "EmptySemigroup";
      case errc::incomplete_dfa: return "IncompleteDFA";
      case errc::base_mismatch: return "BaseMismatch";
      case errc::omega_on_non_loop: return "OmegaOnNonLoop";
      case errc::not_a_semigroup: return "NotASemigroup";
      case errc::budget_exceeded: return "BudgetExceeded";
      case errc::invalid_argument: return "InvalidArgument";
      case errc::parse_error: return "ParseError";
    }
    return "UnknownError";
  }

  //! Exception thrown on contract violations.  Validators do not throw;
  //! they return Diagnostics instead.
  class Error : public std::runtime_error {
   public:
    Error(errc code, std::string const& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what),
          code_(code),
          message_(what) {}

    errc code() const noexcept {
      return code_;
    }

    //! The description without the error-name prefix of what().
    std::string const& message() const noexcept {
      return message_;
    }

   private:
    errc        code_;
    std::string message_;
  };

  [[noreturn]] inline void throw_error(errc code, std::string const& what) {
    throw Error(code, what);
  }

  //! Result of a validation pass: empty issue list means ok.
  struct Diagnostics {
    std::vector<std::string> issues;

    bool ok() const noexcept {
      return issues.empty();
    }

    void add(std::string msg) {
      issues.push_back(std::move(msg));
    }

    std::string to_string() const {
      if (ok()) {
        return "ok";
      }
      std::string out;
      for (auto const& s : issues) {
        out += s;
        out += '\n';
      }
      return out;
    }
  };

  namespace detail {
    template <typename C>
    std::string join(C const& items, std::string const& sep) {
      std::string out;
      bool first = true;
      for (auto const& x : items) {
        if (!first) {
          out += sep;
        }
        out += x;
        first = false;
      }
      return out;
    }

    inline std::string quote(Id const& x) {
      return "\"" + x + "\"";
    }
  }  // namespace detail

  //! Hard limits.  Operations refuse (throwing errc::budget_exceeded)
  //! rather than sample or approximate when a limit is hit.
  namespace limits {
    inline constexpr std::size_t retract_max_vertices     = 12;
    inline constexpr std::size_t retract_max_edges        = 64;
    inline constexpr std::size_t assoc_scan_max_edges     = 10000;
    inline constexpr std::size_t equidiv_max_edges        = 200;
    inline constexpr std::size_t omega_assignment_cap     = 10000000;
    inline constexpr std::size_t determinize_max_states   = 65536;
    inline constexpr std::size_t divisor_search_budget    = 2000000;
    // Default length bound for brute-force language checks; tests may
    // pass a larger bound explicitly.
    inline constexpr std::size_t brute_force_length_bound = 8;
  }  // namespace limits

}  // namespace sgpd

#endif  // SGPD_COMMON_HPP_
