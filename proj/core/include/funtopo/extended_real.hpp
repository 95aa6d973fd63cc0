#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace funtopo {

/// A finite double or one of the two symbolic infinities.
///
/// Infinities are explicit tokens, not IEEE values: text formats spell them
/// `inf` / `-inf` and ordering never depends on floating-point corner cases.
/// Finite values are never NaN.
class ExtendedReal {
 public:
  enum class Kind : std::uint8_t { neg_infinity, finite, pos_infinity };

  constexpr ExtendedReal() noexcept = default;

  /// IEEE infinities map onto the symbolic tokens. Throws std::invalid_argument
  /// on NaN.
  ExtendedReal(double value);  // NOLINT(google-explicit-constructor)

  static constexpr ExtendedReal infinity() noexcept { return ExtendedReal(Kind::pos_infinity); }
  static constexpr ExtendedReal neg_infinity() noexcept { return ExtendedReal(Kind::neg_infinity); }

  constexpr Kind kind() const noexcept { return kind_; }
  constexpr bool is_finite() const noexcept { return kind_ == Kind::finite; }
  constexpr bool is_pos_infinity() const noexcept { return kind_ == Kind::pos_infinity; }
  constexpr bool is_neg_infinity() const noexcept { return kind_ == Kind::neg_infinity; }

  /// The finite value. Throws std::logic_error on an infinity.
  double value() const;

  /// IEEE view, for arithmetic that should saturate to +/-inf.
  double to_double() const noexcept;

  friend std::weak_ordering operator<=>(const ExtendedReal& a, const ExtendedReal& b) noexcept;
  friend bool operator==(const ExtendedReal& a, const ExtendedReal& b) noexcept {
    return (a <=> b) == 0;
  }

 private:
  constexpr explicit ExtendedReal(Kind kind) noexcept : kind_(kind) {}

  Kind kind_ = Kind::finite;
  double value_ = 0.0;
};

/// |a - b|, where two equal infinities are at distance 0 and any other pairing
/// involving an infinity is at IEEE +inf.
double distance(const ExtendedReal& a, const ExtendedReal& b) noexcept;

/// Shortest round-trip decimal for finite values; `inf` / `-inf` otherwise.
std::string to_string(const ExtendedReal& x);

/// Inverse of to_string. Accepts any decimal std::from_chars accepts, plus
/// `inf`, `+inf`, `-inf`. Throws std::invalid_argument.
ExtendedReal parse_extended_real(std::string_view text);

/// Shortest round-trip decimal for a double.
std::string format_double(double x);

}  // namespace funtopo
