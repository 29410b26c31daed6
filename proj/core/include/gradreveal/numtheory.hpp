#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "gradreveal/arbint.hpp"
#include "gradreveal/random.hpp"

namespace gradreveal {

/// Identifies one coded stock. The range check against the configured code
/// count lives with the configuration, not here.
struct Code {
  unsigned value = 0;

  friend bool operator==(Code, Code) = default;
  friend auto operator<=>(Code, Code) = default;
};

inline constexpr int kDefaultMillerRabinRounds = 40;
inline constexpr std::uint64_t kTrialDivisionLimit = 1'000'000;

struct GenerationOptions {
  int rounds = kDefaultMillerRabinRounds;
  /// Candidate draws before giving up with ExhaustedAttempts.
  std::size_t max_attempts = 1'000'000;
};

/// Primality test. Below kTrialDivisionLimit the answer is exact (trial
/// division); above it, small-prime sieving followed by `rounds` rounds of
/// Miller-Rabin with bases drawn from a stream seeded by n itself, so the
/// verdict is a pure function of (n, rounds).
bool is_prime(const ArbInt& n, int rounds = kDefaultMillerRabinRounds);

namespace detail {
/// Miller-Rabin alone, without the trial-division front end. n must be odd
/// and >= 5.
bool miller_rabin(const ArbInt& n, int rounds);
}  // namespace detail

/// floor((p mod 10000) / 10): the first three of p's last four digits.
/// Throws InputTooSmall for p < 10000.
Code extract_code(const ArbInt& p);

/// Same digits as extract_code without the size precondition; for values
/// below 10000 the missing high digits read as zero.
Code trailing_code(const ArbInt& p);

/// Random prime with exactly `digits` decimal digits (digits >= 2).
ArbInt gen_prime(std::size_t digits, RandomStream& rng,
                 const GenerationOptions& options = {});

/// Random prime with exactly `digits` digits (digits >= 5) whose last four
/// digits are the three digits of w followed by one of {1,3,7,9}.
/// w must be below 1000.
ArbInt gen_constrained_prime(std::size_t digits, Code w, RandomStream& rng,
                             const GenerationOptions& options = {});

/// Exact product p*q of two values >= 2.
ArbInt compose(const ArbInt& p, const ArbInt& q);

}  // namespace gradreveal
