#include "funtopo/gallery.hpp"

#include <cstdint>
#include <stdexcept>

#include "funtopo/persistence.hpp"

namespace funtopo {

FilteredComplex hawaiian_complex(const HawaiianSpec& spec) {
  if (spec.dimension < 1) throw std::invalid_argument("hawaiian_complex: dimension must be >= 1");
  if (spec.truncation < 1) throw std::invalid_argument("hawaiian_complex: truncation must be >= 1");
  const int d = spec.dimension;
  const auto corners = static_cast<std::size_t>(d) + 2;
  if (corners > 20) throw std::invalid_argument("hawaiian_complex: dimension too large");

  FilteredComplex out;
  out.add({0}, 0.0);
  for (int sphere = 1; sphere <= spec.truncation; ++sphere) {
    const bool filled = sphere == spec.truncation;
    Vertices corner{0};
    for (int i = 0; i <= d; ++i) corner.push_back((sphere - 1) * (d + 1) + 1 + i);
    const std::uint32_t full = (std::uint32_t{1} << corners) - 1;
    for (std::uint32_t mask = 2; mask <= full; ++mask) {
      if (mask == full && !filled) continue;
      Vertices simplex;
      for (std::size_t i = 0; i < corners; ++i)
        if (mask & (std::uint32_t{1} << i)) simplex.push_back(corner[i]);
      out.add(std::move(simplex), 1.0);
    }
  }
  out.validate();
  return out;
}

std::vector<RankSample> hawaiian_rank_sweep(int dimension, int max_truncation) {
  if (max_truncation < 1) throw std::invalid_argument("hawaiian_rank_sweep: k_max must be >= 1");
  std::vector<RankSample> out;
  for (int k = 1; k <= max_truncation; ++k) {
    const auto bars = compute_persistence(hawaiian_complex({dimension, k}));
    out.push_back({k, barcode_rank(bars, dimension, 1.0, 2.0)});
  }
  return out;
}

Barcode product_family(int n) {
  if (n < 1) throw std::invalid_argument("product_family: N must be >= 1");
  Barcode out;
  for (int i = 1; i <= n; ++i) out.add(0, Interval::closed_open(0.0, 1.0 / i));
  return out;
}

}  // namespace funtopo
