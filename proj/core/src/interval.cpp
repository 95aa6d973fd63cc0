#include "funtopo/interval.hpp"

#include <stdexcept>

namespace funtopo {

Interval::Interval(ExtendedReal lo, ExtendedReal hi, bool lo_closed, bool hi_closed)
    : lo_(lo), hi_(hi), lo_closed_(lo_closed), hi_closed_(hi_closed) {
  if (hi < lo) throw std::invalid_argument("Interval: lo > hi");
  if (lo_closed && !lo.is_finite()) throw std::invalid_argument("Interval: closed infinite lo");
  if (hi_closed && !hi.is_finite()) throw std::invalid_argument("Interval: closed infinite hi");
  if (lo == hi && !(lo_closed && hi_closed))
    throw std::invalid_argument("Interval: empty interval");
}

Interval Interval::closed_open(double lo, ExtendedReal hi) {
  return Interval(lo, hi, true, false);
}

Interval Interval::open(ExtendedReal lo, ExtendedReal hi) { return Interval(lo, hi, false, false); }

Interval Interval::closed(double lo, double hi) { return Interval(lo, hi, true, true); }

bool Interval::contains(double t) const noexcept {
  const ExtendedReal x(t);
  const auto lower = lo_ <=> x;
  const auto upper = x <=> hi_;
  const bool above = lower < 0 || (lower == 0 && lo_closed_);
  const bool below = upper < 0 || (upper == 0 && hi_closed_);
  return above && below;
}

std::string Interval::to_string() const {
  std::string s;
  s += lo_closed_ ? '[' : '(';
  s += funtopo::to_string(lo_);
  s += ',';
  s += funtopo::to_string(hi_);
  s += hi_closed_ ? ']' : ')';
  return s;
}

std::weak_ordering operator<=>(const Interval& a, const Interval& b) noexcept {
  if (auto c = a.lo_ <=> b.lo_; c != 0) return c;
  // [a,. sorts before (a,.
  if (a.lo_closed_ != b.lo_closed_)
    return a.lo_closed_ ? std::weak_ordering::less : std::weak_ordering::greater;
  if (auto c = a.hi_ <=> b.hi_; c != 0) return c;
  if (a.hi_closed_ != b.hi_closed_)
    return a.hi_closed_ ? std::weak_ordering::greater : std::weak_ordering::less;
  return std::weak_ordering::equivalent;
}

}  // namespace funtopo
