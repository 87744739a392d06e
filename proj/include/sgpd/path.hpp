// Finite paths and eventually periodic infinite paths over a graph.
//
// A path is a nonempty edge sequence a0 a1 ... a{n-1} with
// src(a_i) == dst(a_{i+1}); it runs from src(a_{n-1}) to dst(a0).
// Over a one-vertex graph paths are exactly nonempty words.

#ifndef SGPD_PATH_HPP_
#define SGPD_PATH_HPP_

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "common.hpp"
#include "graph.hpp"

namespace sgpd {

  //! A nonempty composable edge sequence over a fixed base graph.
  class Path {
   public:
    Path(Graph base, std::vector<Id> edges)
        : base_(std::move(base)), edges_(std::move(edges)) {
      if (edges_.empty()) {
        throw_error(errc::length_out_of_range, "a path must be nonempty");
      }
      for (auto const& e : edges_) {
        if (!base_.has_edge(e)) {
          throw_error(errc::invalid_argument,
                      "unknown edge " + detail::quote(e));
        }
      }
      for (std::size_t i = 0; i + 1 < edges_.size(); ++i) {
        if (base_.src(edges_[i]) != base_.dst(edges_[i + 1])) {
          throw_error(errc::not_composable,
                      "edges " + detail::quote(edges_[i]) + " and "
                          + detail::quote(edges_[i + 1])
                          + " are not composable");
        }
      }
    }

    Graph const& base() const {
      return base_;
    }

    std::vector<Id> const& edges() const {
      return edges_;
    }

    std::size_t length() const {
      return edges_.size();
    }

    Id const& src() const {
      return base_.src(edges_.back());
    }

    Id const& dst() const {
      return base_.dst(edges_.front());
    }

    bool is_loop() const {
      return src() == dst();
    }

    bool operator==(Path const& that) const {
      return base_ == that.base_ && edges_ == that.edges_;
    }

    bool operator!=(Path const& that) const {
      return !(*this == that);
    }

    bool operator<(Path const& that) const {
      return edges_ < that.edges_;
    }

   private:
    Graph           base_;
    std::vector<Id> edges_;
  };

  //! Concatenation u * v, defined when src(u) == dst(v); the result is the
  //! sequence u followed by v.
  inline Path concat(Path const& u, Path const& v) {
    if (u.base() != v.base()) {
      throw_error(errc::base_mismatch, "paths over different graphs");
    }
    if (u.src() != v.dst()) {
      throw_error(errc::not_composable,
                  "src of the left path differs from dst of the right path");
    }
    std::vector<Id> edges = u.edges();
    edges.insert(edges.end(), v.edges().begin(), v.edges().end());
    return Path(u.base(), std::move(edges));
  }

  //! First n edges of u; requires 1 <= n <= length(u).
  inline Path prefix(Path const& u, std::size_t n) {
    if (n < 1 || n > u.length()) {
      throw_error(errc::length_out_of_range,
                  "prefix length out of range");
    }
    return Path(u.base(),
                std::vector<Id>(u.edges().begin(), u.edges().begin() + n));
  }

  //! Drops the first n edges of u; requires 0 <= n < length(u).
  inline Path cut_prefix(Path const& u, std::size_t n) {
    if (n >= u.length()) {
      throw_error(errc::length_out_of_range,
                  "cannot cut the whole path away");
    }
    return Path(u.base(),
                std::vector<Id>(u.edges().begin() + n, u.edges().end()));
  }

  //! All distinct contiguous factors of u of length <= max_len,
  //! in canonical order.
  inline std::vector<Path> factors(Path const& u, std::size_t max_len) {
    std::set<std::vector<Id>> seen;
    for (std::size_t i = 0; i < u.length(); ++i) {
      for (std::size_t n = 1; n <= max_len && i + n <= u.length(); ++n) {
        seen.insert(std::vector<Id>(u.edges().begin() + i,
                                    u.edges().begin() + i + n));
      }
    }
    std::vector<Path> out;
    for (auto const& edges : seen) {
      out.emplace_back(u.base(), edges);
    }
    return out;
  }

  //! An eventually periodic right-infinite path p q q q ...; stored in
  //! normal form: the period is primitive and the preperiod is shortest.
  //! Structural equality on the normal form decides equality of the
  //! underlying infinite paths.
  class PeriodicWord {
   public:
    PeriodicWord(Graph base, std::vector<Id> pre, std::vector<Id> period)
        : base_(std::move(base)),
          pre_(std::move(pre)),
          period_(std::move(period)) {
      if (period_.empty()) {
        throw_error(errc::length_out_of_range, "period must be nonempty");
      }
      check_edges(pre_);
      check_edges(period_);
      check_window();
      normalize();
    }

    Graph const& base() const {
      return base_;
    }

    std::vector<Id> const& preperiod() const {
      return pre_;
    }

    std::vector<Id> const& period() const {
      return period_;
    }

    //! Symbol at position i (0-based).
    Id const& at(std::size_t i) const {
      if (i < pre_.size()) {
        return pre_[i];
      }
      return period_[(i - pre_.size()) % period_.size()];
    }

    //! The finite path formed by the first n symbols; requires n >= 1.
    Path prefix(std::size_t n) const {
      if (n < 1) {
        throw_error(errc::length_out_of_range, "prefix length must be >= 1");
      }
      std::vector<Id> edges;
      edges.reserve(n);
      for (std::size_t i = 0; i < n; ++i) {
        edges.push_back(at(i));
      }
      return Path(base_, std::move(edges));
    }

    //! Drops the first k symbols and renormalizes.
    PeriodicWord cut_prefix(std::size_t k) const {
      std::vector<Id> pre;
      if (k < pre_.size()) {
        pre.assign(pre_.begin() + k, pre_.end());
        return PeriodicWord(base_, std::move(pre), period_);
      }
      std::size_t shift = (k - pre_.size()) % period_.size();
      std::vector<Id> q(period_.begin() + shift, period_.end());
      q.insert(q.end(), period_.begin(), period_.begin() + shift);
      return PeriodicWord(base_, {}, std::move(q));
    }

    bool operator==(PeriodicWord const& that) const {
      return base_ == that.base_ && pre_ == that.pre_
             && period_ == that.period_;
    }

    bool operator!=(PeriodicWord const& that) const {
      return !(*this == that);
    }

   private:
    void check_edges(std::vector<Id> const& edges) const {
      for (auto const& e : edges) {
        if (!base_.has_edge(e)) {
          throw_error(errc::invalid_argument,
                      "unknown edge " + detail::quote(e));
        }
      }
    }

    // Every finite window must be a path: consecutive symbols composable,
    // including the wrap-around of the period onto itself and the junction
    // of the preperiod with the period.
    void check_window() const {
      auto need = [&](Id const& a, Id const& b) {
        if (base_.src(a) != base_.dst(b)) {
          throw_error(errc::not_composable,
                      "edges " + detail::quote(a) + " and " + detail::quote(b)
                          + " are not composable");
        }
      };
      for (std::size_t i = 0; i + 1 < pre_.size(); ++i) {
        need(pre_[i], pre_[i + 1]);
      }
      if (!pre_.empty()) {
        need(pre_.back(), period_.front());
      }
      for (std::size_t i = 0; i + 1 < period_.size(); ++i) {
        need(period_[i], period_[i + 1]);
      }
      need(period_.back(), period_.front());
    }

    void normalize() {
      // Reduce the period to its primitive root.
      for (std::size_t d = 1; d <= period_.size() / 2; ++d) {
        if (period_.size() % d != 0) {
          continue;
        }
        bool repeats = true;
        for (std::size_t i = d; i < period_.size() && repeats; ++i) {
          repeats = (period_[i] == period_[i - d]);
        }
        if (repeats) {
          period_.resize(d);
          break;
        }
      }
      // Absorb the tail of the preperiod into the period.
      while (!pre_.empty() && pre_.back() == period_.back()) {
        pre_.pop_back();
        std::rotate(period_.begin(), period_.end() - 1, period_.end());
      }
    }

    Graph           base_;
    std::vector<Id> pre_;
    std::vector<Id> period_;
  };

}  // namespace sgpd

#endif  // SGPD_PATH_HPP_
