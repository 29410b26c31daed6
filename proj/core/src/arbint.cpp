#include "gradreveal/arbint.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "gradreveal/error.hpp"

namespace gradreveal {

ArbInt::ArbInt(std::uint64_t value) {
  // mpz_class has no portable unsigned long long constructor.
  mpz_import(value_.get_mpz_t(), 1, 1, sizeof(value), 0, 0, &value);
}

std::optional<ArbInt> ArbInt::try_parse(std::string_view decimal) noexcept {
  if (decimal.empty() ||
      !std::all_of(decimal.begin(), decimal.end(),
                   [](char c) { return c >= '0' && c <= '9'; })) {
    return std::nullopt;
  }
  ArbInt out;
  std::string buffer(decimal);
  if (mpz_set_str(out.value_.get_mpz_t(), buffer.c_str(), 10) != 0) {
    return std::nullopt;
  }
  return out;
}

ArbInt ArbInt::parse(std::string_view decimal) {
  auto value = try_parse(decimal);
  if (!value) {
    throw Error(ErrorCode::ParseError,
                "not a non-negative decimal integer: '" + std::string(decimal) + "'");
  }
  return *std::move(value);
}

ArbInt ArbInt::pow10(std::size_t exponent) {
  ArbInt out;
  mpz_ui_pow_ui(out.value_.get_mpz_t(), 10, exponent);
  return out;
}

ArbInt ArbInt::from_mpz(mpz_class value) {
  if (sgn(value) < 0) {
    throw std::domain_error("ArbInt cannot hold a negative value");
  }
  ArbInt out;
  out.value_ = std::move(value);
  return out;
}

std::string ArbInt::to_string() const { return value_.get_str(10); }

std::size_t ArbInt::digit_count() const {
  // mpz_sizeinbase may overshoot by one for base 10.
  std::size_t estimate = mpz_sizeinbase(value_.get_mpz_t(), 10);
  if (estimate > 1 && cmp(value_, pow10(estimate - 1).value_) < 0) {
    --estimate;
  }
  return estimate;
}

int ArbInt::leading_digit() const {
  const std::size_t digits = digit_count();
  mpz_class top = value_ / pow10(digits - 1).value_;
  return static_cast<int>(top.get_ui());
}

std::optional<std::uint64_t> ArbInt::to_u64() const {
  if (mpz_sizeinbase(value_.get_mpz_t(), 2) > 64) return std::nullopt;
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, value_.get_mpz_t());
  return out;
}

bool ArbInt::divisible_by(const ArbInt& divisor) const {
  return mpz_divisible_p(value_.get_mpz_t(), divisor.value_.get_mpz_t()) != 0;
}

std::uint64_t ArbInt::mod_u64(std::uint64_t modulus) const {
  if (modulus == 0) throw std::domain_error("modulo by zero");
  return (*this % ArbInt(modulus)).to_u64().value();
}

ArbInt& ArbInt::operator+=(const ArbInt& rhs) {
  value_ += rhs.value_;
  return *this;
}

ArbInt& ArbInt::operator-=(const ArbInt& rhs) {
  if (cmp(value_, rhs.value_) < 0) {
    throw std::domain_error("ArbInt subtraction would go negative");
  }
  value_ -= rhs.value_;
  return *this;
}

ArbInt& ArbInt::operator*=(const ArbInt& rhs) {
  value_ *= rhs.value_;
  return *this;
}

ArbInt& ArbInt::operator/=(const ArbInt& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  mpz_fdiv_q(value_.get_mpz_t(), value_.get_mpz_t(), rhs.value_.get_mpz_t());
  return *this;
}

ArbInt& ArbInt::operator%=(const ArbInt& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  mpz_fdiv_r(value_.get_mpz_t(), value_.get_mpz_t(), rhs.value_.get_mpz_t());
  return *this;
}

std::ostream& operator<<(std::ostream& os, const ArbInt& value) {
  return os << value.to_string();
}

}  // namespace gradreveal
