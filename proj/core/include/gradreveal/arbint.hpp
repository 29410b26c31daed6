#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gradreveal {

/// Arbitrary-precision non-negative integer.
///
/// A thin value type over GMP's mpz_class. Construction from text accepts
/// plain decimal only (no sign, no whitespace, no radix prefix), and every
/// arithmetic result that would go negative is rejected, so the non-negative
/// invariant holds for every live instance.
class ArbInt {
 public:
  ArbInt() = default;
  ArbInt(std::uint64_t value);  // NOLINT(google-explicit-constructor)

  /// Parses a decimal string. Leading zeros are accepted ("007" == 7).
  static ArbInt parse(std::string_view decimal);
  static std::optional<ArbInt> try_parse(std::string_view decimal) noexcept;

  /// 10^exponent.
  static ArbInt pow10(std::size_t exponent);

  std::string to_string() const;

  /// Number of decimal digits; zero has one digit.
  std::size_t digit_count() const;
  /// Most significant decimal digit.
  int leading_digit() const;

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_even() const { return mpz_even_p(value_.get_mpz_t()) != 0; }

  /// Value as u64 when it fits.
  std::optional<std::uint64_t> to_u64() const;

  /// True when `divisor` divides *this exactly. Zero divides only zero.
  bool divisible_by(const ArbInt& divisor) const;
  /// Remainder modulo a small word.
  std::uint64_t mod_u64(std::uint64_t modulus) const;

  ArbInt& operator+=(const ArbInt& rhs);
  /// Throws std::domain_error when the result would be negative.
  ArbInt& operator-=(const ArbInt& rhs);
  ArbInt& operator*=(const ArbInt& rhs);
  /// Floor division; throws std::domain_error on a zero divisor.
  ArbInt& operator/=(const ArbInt& rhs);
  ArbInt& operator%=(const ArbInt& rhs);

  friend ArbInt operator+(ArbInt lhs, const ArbInt& rhs) { return lhs += rhs; }
  friend ArbInt operator-(ArbInt lhs, const ArbInt& rhs) { return lhs -= rhs; }
  friend ArbInt operator*(ArbInt lhs, const ArbInt& rhs) { return lhs *= rhs; }
  friend ArbInt operator/(ArbInt lhs, const ArbInt& rhs) { return lhs /= rhs; }
  friend ArbInt operator%(ArbInt lhs, const ArbInt& rhs) { return lhs %= rhs; }

  friend bool operator==(const ArbInt& lhs, const ArbInt& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const ArbInt& lhs, const ArbInt& rhs) {
    return cmp(lhs.value_, rhs.value_) <=> 0;
  }

  /// Underlying GMP value, for the number-theory kernels.
  const mpz_class& mpz() const { return value_; }
  static ArbInt from_mpz(mpz_class value);

 private:
  mpz_class value_;
};

std::ostream& operator<<(std::ostream& os, const ArbInt& value);

}  // namespace gradreveal
