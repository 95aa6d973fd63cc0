#include "funtopo/persistence.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

namespace funtopo {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

using Coefficient = PrimeField::Element;

/// A boundary column: (row, coefficient) sorted by row, no zero entries.
class Column {
 public:
  void push(std::size_t row, Coefficient c) { entries_.emplace_back(row, c); }
  void finish() { std::sort(entries_.begin(), entries_.end()); }

  bool empty() const noexcept { return entries_.empty(); }
  std::size_t pivot() const noexcept { return entries_.back().first; }
  Coefficient pivot_coefficient() const noexcept { return entries_.back().second; }

  // this <- this - factor * other
  void subtract(Coefficient factor, const Column& other, const PrimeField& field) {
    std::vector<std::pair<std::size_t, Coefficient>> out;
    out.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
      if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
        out.push_back(*a++);
      } else if (a == entries_.end() || b->first < a->first) {
        out.emplace_back(b->first, field.neg(field.mul(factor, b->second)));
        ++b;
      } else {
        const auto c = field.sub(a->second, field.mul(factor, b->second));
        if (c != 0) out.emplace_back(a->first, c);
        ++a;
        ++b;
      }
    }
    entries_ = std::move(out);
  }

 private:
  std::vector<std::pair<std::size_t, Coefficient>> entries_;
};

}  // namespace

Barcode compute_persistence(const FilteredComplex& complex, const PrimeField& field,
                            const PersistenceOptions& options) {
  complex.validate();
  const auto simplices = complex.simplices();

  // Filtration order: (value, dimension, vertices).
  std::vector<std::size_t> order(simplices.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = simplices[a];
    const auto& y = simplices[b];
    if (x.value != y.value) return x.value < y.value;
    if (x.vertices.size() != y.vertices.size()) return x.vertices.size() < y.vertices.size();
    return x.vertices < y.vertices;
  });

  std::map<Vertices, std::size_t> position;
  for (std::size_t i = 0; i < order.size(); ++i) position.emplace(simplices[order[i]].vertices, i);

  const auto minus_one = field.neg(1);
  std::vector<Column> columns(order.size());
  for (std::size_t j = 0; j < order.size(); ++j) {
    const auto faces = facets(simplices[order[j]].vertices);
    for (std::size_t i = 0; i < faces.size(); ++i)
      columns[j].push(position.at(faces[i]), i % 2 == 0 ? Coefficient{1} : minus_one);
    columns[j].finish();
  }

  // pivot_owner[r] = reduced column whose lowest nonzero row is r.
  std::vector<std::size_t> pivot_owner(order.size(), kNone);
  std::vector<bool> paired(order.size(), false);
  for (std::size_t j = 0; j < columns.size(); ++j) {
    auto& col = columns[j];
    while (!col.empty() && pivot_owner[col.pivot()] != kNone) {
      const auto& other = columns[pivot_owner[col.pivot()]];
      const auto factor = field.mul(col.pivot_coefficient(), field.inverse(other.pivot_coefficient()));
      col.subtract(factor, other, field);
    }
    if (!col.empty()) {
      pivot_owner[col.pivot()] = j;
      paired[col.pivot()] = true;
      paired[j] = true;
    }
  }

  Barcode out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& birth = simplices[order[i]];
    if (pivot_owner[i] != kNone) {
      const double death = simplices[order[pivot_owner[i]]].value;
      if (death > birth.value)
        out.add(birth.dimension(), Interval::closed_open(birth.value, death));
      else if (options.keep_zero_persistence)
        out.add(birth.dimension(), Interval::singleton(birth.value));
    } else if (!paired[i]) {
      out.add(birth.dimension(), Interval::closed_open(birth.value, ExtendedReal::infinity()));
    }
  }
  return out;
}

}  // namespace funtopo
