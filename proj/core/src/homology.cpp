#include "funtopo/homology.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace funtopo {

namespace {

using Entry = std::pair<std::size_t, PrimeField::Element>;
using SparseVector = std::vector<Entry>;  // sorted by index, no zeros

// v <- v - factor * w
void axpy(SparseVector& v, PrimeField::Element factor, const SparseVector& w,
          const PrimeField& field) {
  SparseVector out;
  out.reserve(v.size() + w.size());
  auto a = v.begin();
  auto b = w.begin();
  while (a != v.end() || b != w.end()) {
    if (b == w.end() || (a != v.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == v.end() || b->first < a->first) {
      out.emplace_back(b->first, field.neg(field.mul(factor, b->second)));
      ++b;
    } else {
      const auto x = field.sub(a->second, field.mul(factor, b->second));
      if (x != 0) out.emplace_back(a->first, x);
      ++a;
      ++b;
    }
  }
  v = std::move(out);
}

// Rank by forward elimination on the first nonzero entry of each column,
// with pivot columns normalised to leading coefficient 1.
std::size_t rank(std::vector<SparseVector> columns, const PrimeField& field) {
  std::map<std::size_t, SparseVector> pivots;
  for (auto& col : columns) {
    while (!col.empty()) {
      const auto it = pivots.find(col.front().first);
      if (it == pivots.end()) break;
      axpy(col, col.front().second, it->second, field);
    }
    if (col.empty()) continue;
    const auto inv = field.inverse(col.front().second);
    for (auto& [row, c] : col) c = field.mul(c, inv);
    const auto lead = col.front().first;
    pivots.emplace(lead, std::move(col));
  }
  return pivots.size();
}

}  // namespace

std::vector<std::size_t> betti_numbers(std::span<const Vertices> simplices,
                                       const PrimeField& field) {
  std::vector<std::vector<const Vertices*>> by_dim;
  for (const auto& s : simplices) {
    if (s.empty()) continue;
    const auto d = s.size() - 1;
    if (by_dim.size() <= d) by_dim.resize(d + 1);
    by_dim[d].push_back(&s);
  }
  if (by_dim.empty()) return {0};

  // ranks[d] = rank of the boundary map from d-chains to (d-1)-chains.
  std::vector<std::size_t> ranks(by_dim.size() + 1, 0);
  for (std::size_t d = 1; d < by_dim.size(); ++d) {
    std::map<Vertices, std::size_t> row_of;
    for (std::size_t i = 0; i < by_dim[d - 1].size(); ++i) row_of.emplace(*by_dim[d - 1][i], i);
    std::vector<SparseVector> columns;
    columns.reserve(by_dim[d].size());
    for (const auto* s : by_dim[d]) {
      SparseVector col;
      const auto faces = facets(*s);
      for (std::size_t i = 0; i < faces.size(); ++i) {
        const auto it = row_of.find(faces[i]);
        if (it == row_of.end()) continue;
        col.emplace_back(it->second, i % 2 == 0 ? 1u : field.neg(1));
      }
      std::sort(col.begin(), col.end());
      columns.push_back(std::move(col));
    }
    ranks[d] = rank(std::move(columns), field);
  }

  std::vector<std::size_t> betti(by_dim.size());
  for (std::size_t d = 0; d < by_dim.size(); ++d)
    betti[d] = by_dim[d].size() - ranks[d] - ranks[d + 1];
  return betti;
}

std::size_t betti_at(const FilteredComplex& complex, double t, int degree,
                     const PrimeField& field) {
  complex.validate();
  if (degree < 0) return 0;
  std::vector<Vertices> sub;
  for (const auto& s : complex.simplices())
    if (s.value <= t) sub.push_back(s.vertices);
  const auto betti = betti_numbers(sub, field);
  return static_cast<std::size_t>(degree) < betti.size() ? betti[degree] : 0;
}

std::vector<EulerSample> euler_profile(const FilteredComplex& complex) {
  std::map<double, long long> delta;
  for (const auto& s : complex.simplices())
    delta[s.value] += s.dimension() % 2 == 0 ? 1 : -1;
  std::vector<EulerSample> out;
  long long chi = 0;
  for (const auto& [value, d] : delta) {
    chi += d;
    out.push_back({value, chi});
  }
  return out;
}

}  // namespace funtopo
