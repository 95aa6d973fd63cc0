#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "funtopo/filtered_complex.hpp"
#include "funtopo/prime_field.hpp"

namespace funtopo {

/// Betti numbers of a face-closed simplex set over F_p, computed by
/// rank-nullity on the boundary matrices. Indexed by degree 0..dim; an empty
/// set yields {0}. Does not check face closure.
std::vector<std::size_t> betti_numbers(std::span<const Vertices> simplices,
                                       const PrimeField& field);

/// dim H_d of the sublevel subcomplex {sigma : value(sigma) <= t}.
/// Validates the complex first.
std::size_t betti_at(const FilteredComplex& complex, double t, int degree,
                     const PrimeField& field = PrimeField{});

struct EulerSample {
  double value;
  long long euler_characteristic;

  friend bool operator==(const EulerSample&, const EulerSample&) = default;
};

/// Euler characteristic of the sublevel subcomplex at every distinct value,
/// ascending.
std::vector<EulerSample> euler_profile(const FilteredComplex& complex);

}  // namespace funtopo
