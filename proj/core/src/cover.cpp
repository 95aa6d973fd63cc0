#include "funtopo/cover.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iterator>
#include <set>
#include <stdexcept>

#include "funtopo/errors.hpp"
#include "funtopo/homology.hpp"

namespace funtopo {

namespace {

constexpr std::size_t kMaxVietorisSet = 24;

bool by_dimension(const Vertices& a, const Vertices& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

void normalise(std::vector<int>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void check_ids(const std::vector<CoverSet>& sets) {
  std::set<int> ids;
  for (const auto& s : sets)
    if (!ids.insert(s.id).second)
      throw ValidationError("cover: duplicate set id " + std::to_string(s.id));
}

}  // namespace

Cover::Cover(std::vector<int> ground, std::vector<CoverSet> sets)
    : ground_(std::move(ground)), sets_(std::move(sets)) {
  normalise(ground_);
  for (auto& s : sets_) {
    normalise(s.elements);
    for (const int e : s.elements)
      if (!std::binary_search(ground_.begin(), ground_.end(), e))
        throw ValidationError("cover: set " + std::to_string(s.id) + " has element " +
                              std::to_string(e) + " outside the ground set");
  }
  check_ids(sets_);
}

Cover::Cover(std::vector<CoverSet> sets) : sets_(std::move(sets)) {
  for (auto& s : sets_) {
    normalise(s.elements);
    ground_.insert(ground_.end(), s.elements.begin(), s.elements.end());
  }
  normalise(ground_);
  check_ids(sets_);
}

SimplicialComplex::SimplicialComplex(std::span<const Vertices> simplices)
    : simplices_(face_closure(simplices)) {}

bool SimplicialComplex::contains(const Vertices& simplex) const {
  return std::binary_search(simplices_.begin(), simplices_.end(), simplex, by_dimension);
}

int SimplicialComplex::dimension() const noexcept {
  return simplices_.empty() ? -1 : static_cast<int>(simplices_.back().size()) - 1;
}

namespace {

void extend_nerve(const std::vector<const CoverSet*>& sets, std::size_t next, Vertices& ids,
                  const std::vector<int>& common, std::vector<Vertices>& out) {
  for (std::size_t k = next; k < sets.size(); ++k) {
    std::vector<int> meet;
    std::set_intersection(common.begin(), common.end(), sets[k]->elements.begin(),
                          sets[k]->elements.end(), std::back_inserter(meet));
    if (meet.empty()) continue;
    ids.push_back(sets[k]->id);
    out.push_back(ids);
    extend_nerve(sets, k + 1, ids, meet, out);
    ids.pop_back();
  }
}

}  // namespace

SimplicialComplex nerve(const Cover& cover) {
  std::vector<const CoverSet*> sets;
  for (const auto& s : cover.sets()) sets.push_back(&s);
  std::sort(sets.begin(), sets.end(), [](auto* a, auto* b) { return a->id < b->id; });

  std::vector<Vertices> simplices;
  Vertices ids;
  for (std::size_t k = 0; k < sets.size(); ++k) {
    if (sets[k]->elements.empty()) continue;
    ids.assign(1, sets[k]->id);
    simplices.push_back(ids);
    extend_nerve(sets, k + 1, ids, sets[k]->elements, simplices);
  }
  return SimplicialComplex(simplices);
}

SimplicialComplex vietoris(const Cover& cover) {
  std::set<Vertices> simplices;
  for (const auto& s : cover.sets()) {
    const auto& e = s.elements;
    if (e.size() > kMaxVietorisSet)
      throw TooLargeError("vietoris: cover set " + std::to_string(s.id) + " is too large");
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << e.size()); ++mask) {
      Vertices sigma;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (mask & (std::uint32_t{1} << i)) sigma.push_back(e[i]);
      simplices.insert(std::move(sigma));
    }
  }
  return SimplicialComplex(std::vector<Vertices>(simplices.begin(), simplices.end()));
}

std::vector<std::size_t> homology_ranks(const SimplicialComplex& complex, const PrimeField& field) {
  return betti_numbers(complex.simplices(), field);
}

DowkerResult dowker_check(const Cover& cover, const PrimeField& field) {
  DowkerResult r{false, homology_ranks(nerve(cover), field), homology_ranks(vietoris(cover), field)};
  auto a = r.nerve_ranks;
  auto b = r.vietoris_ranks;
  const auto n = std::max(a.size(), b.size());
  a.resize(n, 0);
  b.resize(n, 0);
  r.agrees = a == b;
  return r;
}

Cover balls_cover(const std::vector<std::vector<double>>& distances, double delta) {
  if (!(delta > 0.0)) throw std::invalid_argument("balls_cover: delta must be positive");
  const auto n = distances.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (distances[i].size() != n) throw ValidationError("distance matrix is not square");
    if (distances[i][i] != 0.0) throw ValidationError("distance matrix has a nonzero diagonal");
    for (std::size_t j = 0; j < n; ++j) {
      const double d = distances[i][j];
      if (std::isnan(d) || d < 0.0) throw ValidationError("distance matrix has a negative entry");
      if (j < i && d != distances[j][i]) throw ValidationError("distance matrix is not symmetric");
    }
  }
  std::vector<int> ground;
  std::vector<CoverSet> sets;
  for (std::size_t i = 0; i < n; ++i) {
    ground.push_back(static_cast<int>(i));
    CoverSet ball{static_cast<int>(i), {}};
    for (std::size_t j = 0; j < n; ++j)
      if (distances[i][j] < delta) ball.elements.push_back(static_cast<int>(j));
    sets.push_back(std::move(ball));
  }
  return Cover(std::move(ground), std::move(sets));
}

}  // namespace funtopo
