#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "funtopo/filtered_complex.hpp"
#include "funtopo/prime_field.hpp"

namespace funtopo {

struct CoverSet {
  int id;
  std::vector<int> elements;  ///< sorted, unique
};

/// A finite family of named subsets of a finite ground set.
class Cover {
 public:
  Cover() = default;
  /// Sorts and dedups every set. Throws ValidationError when a set leaves the
  /// ground set or two sets share an id.
  Cover(std::vector<int> ground, std::vector<CoverSet> sets);
  /// Ground set = union of the sets.
  explicit Cover(std::vector<CoverSet> sets);

  std::span<const int> ground() const noexcept { return ground_; }
  std::span<const CoverSet> sets() const noexcept { return sets_; }

 private:
  std::vector<int> ground_;
  std::vector<CoverSet> sets_;
};

/// A face-closed set of simplices, kept sorted by (dimension, vertices).
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Takes the face closure of its input.
  explicit SimplicialComplex(std::span<const Vertices> simplices);

  std::span<const Vertices> simplices() const noexcept { return simplices_; }
  bool contains(const Vertices& simplex) const;
  std::size_t size() const noexcept { return simplices_.size(); }
  int dimension() const noexcept;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::vector<Vertices> simplices_;
};

/// Subfamilies of cover sets (by id) with nonempty common intersection.
SimplicialComplex nerve(const Cover& cover);

/// Finite subsets of the ground set contained in at least one cover set.
SimplicialComplex vietoris(const Cover& cover);

/// Betti numbers by degree, 0..dim; {0} for the empty complex.
std::vector<std::size_t> homology_ranks(const SimplicialComplex& complex,
                                        const PrimeField& field = PrimeField{});

struct DowkerResult {
  bool agrees;
  std::vector<std::size_t> nerve_ranks;
  std::vector<std::size_t> vietoris_ranks;
};

/// Compares nerve and Vietoris homology degreewise, zero padded.
DowkerResult dowker_check(const Cover& cover, const PrimeField& field = PrimeField{});

/// Open delta-balls {y : d(x, y) < delta}, one per point. Throws
/// std::invalid_argument for delta <= 0 and ValidationError for a matrix that
/// is not square, symmetric, nonnegative with zero diagonal.
Cover balls_cover(const std::vector<std::vector<double>>& distances, double delta);

}  // namespace funtopo
