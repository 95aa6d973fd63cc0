#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "funtopo/barcode.hpp"
#include "funtopo/filtered_complex.hpp"

namespace funtopo {

/// Truncation H^d_k of the d-dimensional Hawaiian earring: k-1 hollow
/// d-spheres and one filled d-sphere wedged at vertex 0. Each sphere is the
/// boundary of a (d+1)-simplex through vertex 0.
struct HawaiianSpec {
  int dimension = 1;
  int truncation = 1;
};

/// Vertex 0 at value 0, all other simplices at value 1. Throws
/// std::invalid_argument for dimension < 1 or truncation < 1.
FilteredComplex hawaiian_complex(const HawaiianSpec& spec);

struct RankSample {
  int truncation;
  std::size_t rank;

  friend bool operator==(const RankSample&, const RankSample&) = default;
};

/// Rank of H_d(f_{<=1} -> f_{<=2}) on H^d_k for k = 1..k_max. The growth is
/// finite evidence of divergence: the limit module is not q-tame.
std::vector<RankSample> hawaiian_rank_sweep(int dimension, int max_truncation);

/// {[0, 1/n) : n = 1..N} in degree 0. Throws std::invalid_argument for N < 1.
Barcode product_family(int n);

}  // namespace funtopo
