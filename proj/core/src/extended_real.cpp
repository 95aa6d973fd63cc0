#include "funtopo/extended_real.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <system_error>

namespace funtopo {

ExtendedReal::ExtendedReal(double value) {
  if (std::isnan(value)) throw std::invalid_argument("ExtendedReal: NaN is not a value");
  if (std::isinf(value)) {
    kind_ = value > 0 ? Kind::pos_infinity : Kind::neg_infinity;
  } else {
    value_ = value;
  }
}

double ExtendedReal::value() const {
  if (!is_finite()) throw std::logic_error("ExtendedReal::value() on an infinity");
  return value_;
}

double ExtendedReal::to_double() const noexcept {
  switch (kind_) {
    case Kind::neg_infinity: return -std::numeric_limits<double>::infinity();
    case Kind::pos_infinity: return std::numeric_limits<double>::infinity();
    case Kind::finite: break;
  }
  return value_;
}

std::weak_ordering operator<=>(const ExtendedReal& a, const ExtendedReal& b) noexcept {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  if (!a.is_finite()) return std::weak_ordering::equivalent;
  if (a.value_ < b.value_) return std::weak_ordering::less;
  if (a.value_ > b.value_) return std::weak_ordering::greater;
  return std::weak_ordering::equivalent;
}

double distance(const ExtendedReal& a, const ExtendedReal& b) noexcept {
  if (a.is_finite() && b.is_finite()) return std::abs(a.value() - b.value());
  if (a.kind() == b.kind()) return 0.0;
  return std::numeric_limits<double>::infinity();
}

std::string format_double(double x) {
  std::array<char, 32> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
  return std::string(buf.data(), end);
}

std::string to_string(const ExtendedReal& x) {
  switch (x.kind()) {
    case ExtendedReal::Kind::neg_infinity: return "-inf";
    case ExtendedReal::Kind::pos_infinity: return "inf";
    case ExtendedReal::Kind::finite: break;
  }
  return format_double(x.value());
}

ExtendedReal parse_extended_real(std::string_view text) {
  if (text == "inf" || text == "+inf") return ExtendedReal::infinity();
  if (text == "-inf") return ExtendedReal::neg_infinity();
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  if (!std::isfinite(v))
    throw std::invalid_argument("use the tokens inf/-inf for infinities: '" + std::string(text) + "'");
  return ExtendedReal(v);
}

}  // namespace funtopo
