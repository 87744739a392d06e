// Recurrence of eventually periodic right-infinite words, and the
// recurring prefix images of such a word inside a finite semigroupoid.
//
// The recurrence decision inspects prefixes up to |p| + 2|q| and looks
// for reoccurrences inside a window of |p| + 4(|p| + 2|q|) + 4|q|
// symbols.  The window is a conjectured sufficient bound; the test
// suite validates it against a much larger brute-force window over a
// randomized corpus.

#ifndef SGPD_RECURRENCE_HPP_
#define SGPD_RECURRENCE_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "common.hpp"
#include "graph.hpp"
#include "green.hpp"
#include "path.hpp"
#include "semigroupoid.hpp"

namespace sgpd {

  namespace detail {

    //! Least m in [lo, hi] with w[m, m+n) = w[0, n), if any.
    inline std::optional<std::size_t> reoccurrence_at(PeriodicWord const& w,
                                                      std::size_t n,
                                                      std::size_t lo,
                                                      std::size_t hi) {
      for (std::size_t m = lo; m <= hi; ++m) {
        bool match = true;
        for (std::size_t i = 0; i < n && match; ++i) {
          match = (w.at(m + i) == w.at(i));
        }
        if (match) {
          return m;
        }
      }
      return std::nullopt;
    }

    inline std::size_t prefix_check_bound(PeriodicWord const& w) {
      return w.preperiod().size() + 2 * w.period().size();
    }

    inline std::size_t reoccurrence_window(PeriodicWord const& w) {
      return w.preperiod().size() + 4 * prefix_check_bound(w)
             + 4 * w.period().size();
    }

  }  // namespace detail

  struct RecurrenceReport {
    bool recurrent = true;
    //! For each checked prefix length, a position where it reoccurs.
    std::vector<std::pair<std::size_t, std::size_t>> reoccurrences;
    //! On failure, the shortest prefix that never reoccurs.
    std::optional<std::vector<Id>> failing_prefix;
  };

  //! A word is recurrent when every finite prefix occurs again at some
  //! positive position.
  inline RecurrenceReport is_recurrent(PeriodicWord const& w) {
    RecurrenceReport report;
    std::size_t bound  = detail::prefix_check_bound(w);
    std::size_t window = detail::reoccurrence_window(w);
    for (std::size_t n = 1; n <= bound; ++n) {
      auto m = detail::reoccurrence_at(w, n, 1, window);
      if (!m) {
        report.recurrent = false;
        report.reoccurrences.clear();
        std::vector<Id> prefix;
        for (std::size_t i = 0; i < n; ++i) {
          prefix.push_back(w.at(i));
        }
        report.failing_prefix = std::move(prefix);
        return report;
      }
      report.reoccurrences.emplace_back(n, *m);
    }
    return report;
  }

  //! Variant phrased through clopen witnesses: every prefix u must
  //! reappear past its own end, so some prefix reads u x u y.
  inline bool is_recurrent_uxuy(PeriodicWord const& w) {
    std::size_t bound  = detail::prefix_check_bound(w);
    std::size_t window = detail::reoccurrence_window(w);
    for (std::size_t n = 1; n <= bound; ++n) {
      if (!detail::reoccurrence_at(w, n, n, window)) {
        return false;
      }
    }
    return true;
  }

  struct RecurringImageSet {
    PeriodicWord       word;
    FiniteSemigroupoid target;
    GraphMorphism      labeling;
    std::set<Id>       images;
  };

  //! Values taken by the prefix evaluations for infinitely many prefix
  //! lengths.  The sequence of images is eventually periodic: beyond the
  //! preperiod, the pair (position mod period, image) determines the
  //! future, so the first repeated pair closes the cycle.
  inline RecurringImageSet recurring_images(PeriodicWord const& w,
                                            FiniteSemigroupoid const& target,
                                            GraphMorphism const& labeling) {
    if (labeling.domain != w.base()
        || labeling.codomain != target.underlying()) {
      throw_error(errc::base_mismatch,
                  "labeling must map the word's base into the target");
    }
    auto d = check_morphism(labeling);
    if (!d.ok()) {
      throw_error(errc::invalid_argument, d.issues.front());
    }
    std::size_t pre = w.preperiod().size();
    std::size_t per = w.period().size();

    Id current = labeling.emap.at(w.at(0));
    if (!target.has_element(current)) {
      throw_error(errc::invalid_argument,
                  "labeling image " + detail::quote(current)
                      + " is not an element of the target");
    }
    std::map<std::pair<std::size_t, Id>, std::size_t> seen;
    std::vector<Id> trace = {current};  // trace[k] = image of prefix k+1
    std::size_t n = 1;                  // prefix length evaluated so far
    for (;;) {
      if (n >= pre + 1) {
        std::pair<std::size_t, Id> key{(n - pre) % per, current};
        auto it = seen.find(key);
        if (it != seen.end()) {
          RecurringImageSet out{w, target, labeling, {}};
          for (std::size_t k = it->second; k < n; ++k) {
            out.images.insert(trace[k - 1]);
          }
          return out;
        }
        seen.emplace(key, n);
      }
      auto next = target.product(current, labeling.emap.at(w.at(n)));
      if (!next) {
        throw_error(errc::not_composable,
                    "labeling does not respect composability at position "
                        + std::to_string(n));
      }
      current = *next;
      trace.push_back(current);
      ++n;
    }
  }

  //! A recurrent word leaves an idempotent among its recurring images in
  //! every finite quotient; a target without one certifies
  //! non-recurrence.
  inline bool has_recurring_idempotent(PeriodicWord const& w,
                                       FiniteSemigroupoid const& target,
                                       GraphMorphism const& labeling) {
    auto r = recurring_images(w, target, labeling);
    auto idem = idempotents(target);
    std::set<Id> idem_set(idem.begin(), idem.end());
    for (auto const& e : r.images) {
      if (idem_set.count(e) > 0) {
        return true;
      }
    }
    return false;
  }

}  // namespace sgpd

#endif  // SGPD_RECURRENCE_HPP_
