#pragma once

#include <cstdint>

namespace funtopo {

/// Arithmetic in Z/pZ for a prime 2 <= p < 2^31. Elements are kept in [0, p).
class PrimeField {
 public:
  using Element = std::uint32_t;

  /// Throws std::invalid_argument unless p is a prime below 2^31.
  explicit PrimeField(std::int64_t p = 2);

  std::uint32_t characteristic() const noexcept { return p_; }

  Element reduce(std::int64_t x) const noexcept;
  Element add(Element a, Element b) const noexcept;
  Element sub(Element a, Element b) const noexcept;
  Element mul(Element a, Element b) const noexcept;
  Element neg(Element a) const noexcept;
  /// Throws std::domain_error for 0.
  Element inverse(Element a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::int64_t n) noexcept;

}  // namespace funtopo
