#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "funtopo/errors.hpp"

namespace funtopo {

/// Strictly increasing nonnegative vertex ids.
using Vertices = std::vector<int>;

struct FilteredSimplex {
  Vertices vertices;
  double value;

  int dimension() const noexcept { return static_cast<int>(vertices.size()) - 1; }

  friend bool operator==(const FilteredSimplex&, const FilteredSimplex&) = default;
};

/// Why a complex failed validation.
class ComplexError : public ValidationError {
 public:
  enum class Kind { malformed_simplex, duplicate_simplex, missing_face, non_monotone };

  ComplexError(Kind kind, Vertices simplex, Vertices face = {});

  Kind kind() const noexcept { return kind_; }
  /// The offending simplex.
  const Vertices& simplex() const noexcept { return simplex_; }
  /// The facet involved, for missing_face and non_monotone.
  const Vertices& face() const noexcept { return face_; }

 private:
  Kind kind_;
  Vertices simplex_;
  Vertices face_;
};

class MissingVertexValueError : public ValidationError {
 public:
  explicit MissingVertexValueError(int vertex);
  int vertex() const noexcept { return vertex_; }

 private:
  int vertex_;
};

/// A finite simplicial complex with a value on every simplex.
///
/// The class stores what it is given; validate() checks face closure and
/// monotonicity. Every algorithm taking a FilteredComplex validates first.
class FilteredComplex {
 public:
  FilteredComplex() = default;
  explicit FilteredComplex(std::vector<FilteredSimplex> simplices)
      : simplices_(std::move(simplices)) {}

  void add(Vertices vertices, double value) {
    simplices_.push_back({std::move(vertices), value});
  }

  std::span<const FilteredSimplex> simplices() const noexcept { return simplices_; }
  std::size_t size() const noexcept { return simplices_.size(); }
  bool empty() const noexcept { return simplices_.empty(); }
  int dimension() const noexcept;

  /// Throws ComplexError for the first offending simplex in input order.
  void validate() const;

 private:
  std::vector<FilteredSimplex> simplices_;
};

/// Codimension-one faces of a simplex, in the order obtained by dropping
/// vertex 0, 1, ...
std::vector<Vertices> facets(const Vertices& simplex);

/// The face closure of a set of simplices, sorted by (dimension, vertices).
std::vector<Vertices> face_closure(std::span<const Vertices> simplices);

/// Lower-star filtration: each simplex of the face closure of `complex` gets
/// the maximum of its vertex values. Throws MissingVertexValueError.
FilteredComplex lower_star(const std::map<int, double>& vertex_values,
                           std::span<const Vertices> complex);

/// The same simplices with values taken from `values` (which must have one
/// entry per simplex, in the order of `complex.simplices()`).
FilteredComplex with_values(const FilteredComplex& complex, std::span<const double> values);

/// max |f(sigma) - g(sigma)| over two filtrations of the same simplex set.
/// Throws std::invalid_argument if the simplex sets differ.
double sup_distance(const FilteredComplex& f, const FilteredComplex& g);

std::string to_string(const Vertices& simplex);

}  // namespace funtopo
