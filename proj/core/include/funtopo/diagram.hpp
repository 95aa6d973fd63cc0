#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <vector>

#include "funtopo/barcode.hpp"
#include "funtopo/extended_real.hpp"

namespace funtopo {

/// A point of E = {(p, q) : p < q}, p never +inf, q never -inf.
class DiagramPoint {
 public:
  /// Throws std::invalid_argument unless p < q.
  DiagramPoint(ExtendedReal birth, ExtendedReal death);

  const ExtendedReal& birth() const noexcept { return birth_; }
  const ExtendedReal& death() const noexcept { return death_; }
  bool is_essential() const noexcept { return death_.is_pos_infinity(); }
  bool is_finite() const noexcept { return birth_.is_finite() && death_.is_finite(); }

  /// q - p, saturating to +inf.
  double persistence() const noexcept;

  friend std::weak_ordering operator<=>(const DiagramPoint&, const DiagramPoint&) = default;
  friend bool operator==(const DiagramPoint&, const DiagramPoint&) = default;

 private:
  ExtendedReal birth_;
  ExtendedReal death_;
};

/// Per-degree finite multiplicity function on E.
class PersistenceDiagram {
 public:
  using PointMap = std::map<DiagramPoint, std::size_t>;

  /// Throws std::invalid_argument when multiplicity is 0.
  void add(int degree, const DiagramPoint& point, std::size_t multiplicity = 1);

  std::size_t multiplicity(int degree, const DiagramPoint& point) const;
  /// Empty map for a degree without points.
  const PointMap& points(int degree) const;
  /// Points of a degree repeated according to multiplicity.
  std::vector<DiagramPoint> expanded(int degree) const;
  /// Degrees with at least one point, ascending.
  std::vector<int> degrees() const;
  /// Sum of multiplicities in a degree.
  std::size_t count(int degree) const;
  bool empty() const noexcept { return by_degree_.empty(); }

  const std::map<int, PointMap>& by_degree() const noexcept { return by_degree_; }

  friend bool operator==(const PersistenceDiagram&, const PersistenceDiagram&) = default;

 private:
  std::map<int, PointMap> by_degree_;
};

/// Multiplicity of (inf I, sup I) over the bars of each degree. Openness is
/// forgotten and singleton bars are dropped.
PersistenceDiagram diagram_of(const Barcode& barcode);

/// Sum of degree-d multiplicities over the open quadrant p < x, y < q.
std::size_t quadrant_count(const PersistenceDiagram& diagram, int degree, ExtendedReal x,
                           ExtendedReal y);

}  // namespace funtopo
