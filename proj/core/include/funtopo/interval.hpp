#pragma once

#include <compare>
#include <string>

#include "funtopo/extended_real.hpp"

namespace funtopo {

/// An interval of the real line with independent openness flags.
///
/// Invariants (checked on construction, std::invalid_argument otherwise):
/// lo <= hi; a closed endpoint is finite; lo == hi only for a closed,
/// finite singleton [a, a].
class Interval {
 public:
  Interval(ExtendedReal lo, ExtendedReal hi, bool lo_closed, bool hi_closed);

  /// [lo, hi), or [lo, inf) when hi is infinite.
  static Interval closed_open(double lo, ExtendedReal hi);
  /// (lo, hi) with either end possibly infinite.
  static Interval open(ExtendedReal lo, ExtendedReal hi);
  /// [lo, hi].
  static Interval closed(double lo, double hi);
  static Interval singleton(double at) { return closed(at, at); }

  const ExtendedReal& lo() const noexcept { return lo_; }
  const ExtendedReal& hi() const noexcept { return hi_; }
  bool lo_closed() const noexcept { return lo_closed_; }
  bool hi_closed() const noexcept { return hi_closed_; }
  bool is_singleton() const noexcept { return lo_ == hi_; }

  bool contains(double t) const noexcept;

  /// `[0,1)`, `(-inf,inf)`, ... as used by the .bar format.
  std::string to_string() const;

  friend std::weak_ordering operator<=>(const Interval& a, const Interval& b) noexcept;
  friend bool operator==(const Interval& a, const Interval& b) noexcept {
    return (a <=> b) == 0;
  }

 private:
  ExtendedReal lo_;
  ExtendedReal hi_;
  bool lo_closed_;
  bool hi_closed_;
};

}  // namespace funtopo
