#include "funtopo/prime_field.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace funtopo {

bool is_prime(std::int64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::int64_t p) {
  if (p >= (std::int64_t{1} << 31) || !is_prime(p))
    throw std::invalid_argument("PrimeField: " + std::to_string(p) + " is not a prime below 2^31");
  p_ = static_cast<std::uint32_t>(p);
}

PrimeField::Element PrimeField::reduce(std::int64_t x) const noexcept {
  auto r = x % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Element>(r);
}

PrimeField::Element PrimeField::add(Element a, Element b) const noexcept {
  const std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<Element>(s >= p_ ? s - p_ : s);
}

PrimeField::Element PrimeField::sub(Element a, Element b) const noexcept {
  return a >= b ? a - b : static_cast<Element>(std::uint64_t{a} + p_ - b);
}

PrimeField::Element PrimeField::mul(Element a, Element b) const noexcept {
  return static_cast<Element>((std::uint64_t{a} * b) % p_);
}

PrimeField::Element PrimeField::neg(Element a) const noexcept { return a == 0 ? 0 : p_ - a; }

PrimeField::Element PrimeField::inverse(Element a) const {
  if (a % p_ == 0) throw std::domain_error("PrimeField: inverse of zero");
  // Extended Euclid on (a, p).
  std::int64_t r0 = p_, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const auto q = r0 / r1;
    r0 = std::exchange(r1, r0 - q * r1);
    s0 = std::exchange(s1, s0 - q * s1);
  }
  return reduce(s0);
}

}  // namespace funtopo
