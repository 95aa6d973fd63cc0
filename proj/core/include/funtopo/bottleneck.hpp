#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "funtopo/barcode.hpp"
#include "funtopo/diagram.hpp"
#include "funtopo/extended_real.hpp"

namespace funtopo {

/// L-infinity distance between two diagram points. Matching infinities
/// contribute 0; an infinite coordinate against a finite one gives +inf.
double point_distance(const DiagramPoint& a, const DiagramPoint& b) noexcept;

/// Cost of leaving a point unmatched: (q - p) / 2, +inf for infinite points.
double diagonal_cost(const DiagramPoint& a) noexcept;

struct MatchingResult {
  bool feasible = false;
  std::vector<std::pair<DiagramPoint, DiagramPoint>> matched;
  std::vector<DiagramPoint> unmatched_a;
  std::vector<DiagramPoint> unmatched_b;
};

/// A delta-matching of the degree-d points, found as a maximum matching of the
/// threshold graph (Hopcroft-Karp). When infeasible the point lists are empty.
/// Throws std::invalid_argument on delta < 0.
MatchingResult matching_at(const PersistenceDiagram& a, const PersistenceDiagram& b, int degree,
                           double delta);

/// Bottleneck distance in degree d. Binary search over the finite candidate
/// set of point distances and diagonal costs, so the value is exact. +inf when
/// no finite matching exists (for instance unequal essential counts).
ExtendedReal bottleneck(const PersistenceDiagram& a, const PersistenceDiagram& b, int degree);

/// Largest combined point count bottleneck_bruteforce accepts.
inline constexpr std::size_t kBruteForceLimit = 12;

/// Exhaustive minimum over all partial matchings. Throws TooLargeError when
/// the two sides together hold more than kBruteForceLimit points.
ExtendedReal bottleneck_bruteforce(const PersistenceDiagram& a, const PersistenceDiagram& b,
                                   int degree);

/// Interleaving distance of two barcode modules, via the isometry theorem.
ExtendedReal interleaving_distance(const Barcode& a, const Barcode& b, int degree);

}  // namespace funtopo
