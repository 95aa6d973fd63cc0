#include "funtopo/bottleneck.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>

#include "funtopo/errors.hpp"

namespace funtopo {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kFree = -1;

/// Hopcroft-Karp maximum matching on a bipartite graph with `left` and
/// `right` vertices.
class BipartiteMatcher {
 public:
  BipartiteMatcher(int left, int right)
      : adjacency_(left), match_left_(left, kFree), match_right_(right, kFree), layer_(left) {}

  void add_edge(int u, int v) { adjacency_[u].push_back(v); }

  int solve() {
    int size = 0;
    while (build_layers())
      for (int u = 0; u < static_cast<int>(adjacency_.size()); ++u)
        if (match_left_[u] == kFree && augment(u)) ++size;
    return size;
  }

  int partner_of_left(int u) const { return match_left_[u]; }

 private:
  bool build_layers() {
    std::queue<int> frontier;
    bool reachable_free = false;
    for (int u = 0; u < static_cast<int>(adjacency_.size()); ++u) {
      if (match_left_[u] == kFree) {
        layer_[u] = 0;
        frontier.push(u);
      } else {
        layer_[u] = -1;
      }
    }
    while (!frontier.empty()) {
      const int u = frontier.front();
      frontier.pop();
      for (const int v : adjacency_[u]) {
        const int w = match_right_[v];
        if (w == kFree) {
          reachable_free = true;
        } else if (layer_[w] < 0) {
          layer_[w] = layer_[u] + 1;
          frontier.push(w);
        }
      }
    }
    return reachable_free;
  }

  bool augment(int u) {
    for (const int v : adjacency_[u]) {
      const int w = match_right_[v];
      if (w == kFree || (layer_[w] == layer_[u] + 1 && augment(w))) {
        match_left_[u] = v;
        match_right_[v] = u;
        return true;
      }
    }
    layer_[u] = -1;
    return false;
  }

  std::vector<std::vector<int>> adjacency_;
  std::vector<int> match_left_;
  std::vector<int> match_right_;
  std::vector<int> layer_;
};

// Left: A points, then diagonal copies of B. Right: B points, then diagonal
// copies of A.
MatchingResult threshold_matching(const std::vector<DiagramPoint>& a,
                                  const std::vector<DiagramPoint>& b, double delta) {
  const int na = static_cast<int>(a.size());
  const int nb = static_cast<int>(b.size());
  BipartiteMatcher matcher(na + nb, na + nb);
  for (int i = 0; i < na; ++i) {
    for (int j = 0; j < nb; ++j)
      if (point_distance(a[i], b[j]) <= delta) matcher.add_edge(i, j);
    if (diagonal_cost(a[i]) <= delta) matcher.add_edge(i, nb + i);
  }
  for (int j = 0; j < nb; ++j) {
    if (diagonal_cost(b[j]) <= delta) matcher.add_edge(na + j, j);
    for (int i = 0; i < na; ++i) matcher.add_edge(na + j, nb + i);
  }

  MatchingResult result;
  if (matcher.solve() != na + nb) return result;
  result.feasible = true;
  for (int i = 0; i < na; ++i) {
    const int v = matcher.partner_of_left(i);
    if (v < nb)
      result.matched.emplace_back(a[i], b[v]);
    else
      result.unmatched_a.push_back(a[i]);
  }
  for (int j = 0; j < nb; ++j)
    if (matcher.partner_of_left(na + j) == j) result.unmatched_b.push_back(b[j]);
  return result;
}

}  // namespace

double point_distance(const DiagramPoint& a, const DiagramPoint& b) noexcept {
  return std::max(distance(a.birth(), b.birth()), distance(a.death(), b.death()));
}

double diagonal_cost(const DiagramPoint& a) noexcept {
  if (!a.is_finite()) return kInf;
  return (a.death().value() - a.birth().value()) / 2.0;
}

MatchingResult matching_at(const PersistenceDiagram& a, const PersistenceDiagram& b, int degree,
                           double delta) {
  if (!(delta >= 0.0)) throw std::invalid_argument("matching_at: delta must be nonnegative");
  return threshold_matching(a.expanded(degree), b.expanded(degree), delta);
}

ExtendedReal bottleneck(const PersistenceDiagram& a, const PersistenceDiagram& b, int degree) {
  const auto pa = a.expanded(degree);
  const auto pb = b.expanded(degree);

  // The optimum is attained at one of these values.
  std::vector<double> candidates{0.0};
  for (const auto& x : pa) {
    candidates.push_back(diagonal_cost(x));
    for (const auto& y : pb) candidates.push_back(point_distance(x, y));
  }
  for (const auto& y : pb) candidates.push_back(diagonal_cost(y));
  candidates.erase(std::remove_if(candidates.begin(), candidates.end(),
                                  [](double c) { return std::isinf(c); }),
                   candidates.end());
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  if (!threshold_matching(pa, pb, candidates.back()).feasible) return ExtendedReal::infinity();
  std::size_t lo = 0;
  std::size_t hi = candidates.size() - 1;  // feasible
  while (lo < hi) {
    const auto mid = lo + (hi - lo) / 2;
    if (threshold_matching(pa, pb, candidates[mid]).feasible)
      hi = mid;
    else
      lo = mid + 1;
  }
  return candidates[lo];
}

namespace {

void enumerate_matchings(const std::vector<DiagramPoint>& a, const std::vector<DiagramPoint>& b,
                         std::size_t i, std::vector<bool>& used, double cost, double& best) {
  if (cost >= best) return;
  if (i == a.size()) {
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!used[j]) cost = std::max(cost, diagonal_cost(b[j]));
    best = std::min(best, cost);
    return;
  }
  enumerate_matchings(a, b, i + 1, used, std::max(cost, diagonal_cost(a[i])), best);
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (used[j]) continue;
    used[j] = true;
    enumerate_matchings(a, b, i + 1, used, std::max(cost, point_distance(a[i], b[j])), best);
    used[j] = false;
  }
}

}  // namespace

ExtendedReal bottleneck_bruteforce(const PersistenceDiagram& a, const PersistenceDiagram& b,
                                   int degree) {
  const auto pa = a.expanded(degree);
  const auto pb = b.expanded(degree);
  if (pa.size() + pb.size() > kBruteForceLimit)
    throw TooLargeError("bottleneck_bruteforce: more than " + std::to_string(kBruteForceLimit) +
                        " points");
  std::vector<bool> used(pb.size(), false);
  double best = kInf;
  enumerate_matchings(pa, pb, 0, used, 0.0, best);
  return best;
}

ExtendedReal interleaving_distance(const Barcode& a, const Barcode& b, int degree) {
  return bottleneck(diagram_of(a), diagram_of(b), degree);
}

}  // namespace funtopo
