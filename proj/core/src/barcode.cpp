#include "funtopo/barcode.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace funtopo {

std::vector<Interval> Barcode::in_degree(int degree) const {
  std::vector<Interval> out;
  for (const auto& bar : bars_)
    if (bar.degree == degree) out.push_back(bar.interval);
  return out;
}

Barcode Barcode::sorted() const {
  auto bars = bars_;
  std::sort(bars.begin(), bars.end());
  return Barcode(std::move(bars));
}

bool operator==(const Barcode& a, const Barcode& b) {
  if (a.size() != b.size()) return false;
  const auto sa = a.sorted();
  const auto sb = b.sorted();
  return std::equal(sa.bars_.begin(), sa.bars_.end(), sb.bars_.begin());
}

int interval_module_rank(const Interval& interval, double s, double t) {
  if (s > t) throw std::invalid_argument("interval_module_rank: s > t");
  return interval.contains(s) && interval.contains(t) ? 1 : 0;
}

std::size_t barcode_rank(const Barcode& barcode, int degree, double s, double t) {
  if (s > t) throw std::invalid_argument("barcode_rank: s > t");
  std::size_t rank = 0;
  for (const auto& bar : barcode.bars())
    if (bar.degree == degree) rank += static_cast<std::size_t>(interval_module_rank(bar.interval, s, t));
  return rank;
}

Barcode radical(const Barcode& barcode) {
  Barcode out;
  for (const auto& [degree, iv] : barcode.bars()) {
    if (iv.is_singleton()) continue;
    out.add(degree, Interval(iv.lo(), iv.hi(), false, iv.hi_closed()));
  }
  return out;
}

ConstancyWitness constancy_witness(const Barcode& barcode, int degree) {
  std::optional<double> lo;
  std::optional<double> hi;
  auto visit = [&](const ExtendedReal& x) {
    if (!x.is_finite()) return;
    const double v = x.value();
    lo = lo ? std::min(*lo, v) : v;
    hi = hi ? std::max(*hi, v) : v;
  };
  for (const auto& bar : barcode.bars()) {
    if (bar.degree != degree) continue;
    visit(bar.interval.lo());
    visit(bar.interval.hi());
  }
  if (!lo) return {};
  return {*lo - 1.0, *hi + 1.0};
}

}  // namespace funtopo
