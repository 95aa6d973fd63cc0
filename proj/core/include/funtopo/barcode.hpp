#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "funtopo/interval.hpp"

namespace funtopo {

struct Bar {
  int degree;
  Interval interval;

  friend auto operator<=>(const Bar&, const Bar&) = default;
  friend bool operator==(const Bar&, const Bar&) = default;
};

/// A graded finite multiset of intervals: the barcode of a direct sum of
/// interval modules. Equality is multiset equality.
class Barcode {
 public:
  Barcode() = default;
  explicit Barcode(std::vector<Bar> bars) : bars_(std::move(bars)) {}

  void add(int degree, const Interval& interval) { bars_.push_back({degree, interval}); }

  std::span<const Bar> bars() const noexcept { return bars_; }
  std::vector<Interval> in_degree(int degree) const;
  std::size_t size() const noexcept { return bars_.size(); }
  bool empty() const noexcept { return bars_.empty(); }

  /// Bars sorted by (degree, interval); the canonical representative.
  Barcode sorted() const;

  friend bool operator==(const Barcode& a, const Barcode& b);

 private:
  std::vector<Bar> bars_;
};

/// Endpoints between which a barcode module is constant below and above.
struct ConstancyWitness {
  double t0 = 0.0;
  double t1 = 0.0;

  friend bool operator==(const ConstancyWitness&, const ConstancyWitness&) = default;
};

/// Rank of the structure map C(I)_{s,t}: 1 iff s and t both lie in I.
/// Throws std::invalid_argument when s > t.
int interval_module_rank(const Interval& interval, double s, double t);

/// Rank of M_{s,t} for the degree-d part of the barcode module.
/// Throws std::invalid_argument when s > t.
std::size_t barcode_rank(const Barcode& barcode, int degree, double s, double t);

/// Barcode of the radical sum_{s<t} im M_{s,t}: closed finite left endpoints
/// become open and singletons disappear.
Barcode radical(const Barcode& barcode);

/// t0 = (min finite endpoint) - 1 and t1 = (max finite endpoint) + 1 over the
/// degree-d bars; (0, 0) when there are no finite endpoints.
ConstancyWitness constancy_witness(const Barcode& barcode, int degree);

}  // namespace funtopo
