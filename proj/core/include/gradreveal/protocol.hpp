#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gradreveal/arbint.hpp"
#include "gradreveal/numtheory.hpp"
#include "gradreveal/random.hpp"

namespace gradreveal {

/// Whole US dollars.
using Dollars = std::int64_t;

/// Public parameters of one commitment run.
struct ProtocolConfig {
  unsigned num_codes = 1000;
  std::size_t digits = 300;
  std::size_t days = 300;
  Dollars payout = 1'000'000'000;
  std::vector<std::string> code_labels;

  /// 1000 codes, 300-digit primes, 300 trading days, $1B.
  static ProtocolConfig paper();
  /// 100 codes, 24-digit primes, 24 days, $1B.
  static ProtocolConfig desk();

  /// Throws InvalidConfig naming the first violated constraint.
  void validate() const;

  friend bool operator==(const ProtocolConfig&, const ProtocolConfig&) = default;
};

/// "MC000", "MC001", ... zero-padded to three digits.
std::vector<std::string> default_code_labels(unsigned num_codes);

/// Confidential material held by the secure computer.
struct Secret {
  Code w;
  ArbInt p;
  ArbInt q;

  friend bool operator==(const Secret&, const Secret&) = default;
};

/// The public record. `revealed` holds the disclosed digits of p as ASCII
/// characters, most significant first; one character per elapsed day.
struct Bulletin {
  ProtocolConfig config;
  ArbInt n;
  std::string revealed;

  std::size_t day() const noexcept { return revealed.size(); }
  std::size_t remaining() const noexcept { return config.days - revealed.size(); }
  bool complete() const noexcept { return revealed.size() >= config.days; }

  friend bool operator==(const Bulletin&, const Bulletin&) = default;
};

struct SetupResult {
  Secret secret;
  Bulletin bulletin;
};

/// Draws w, the constrained prime p and the smaller cofactor q, and builds
/// the bulletin with n = p*q and an empty reveal log.
SetupResult setup(const ProtocolConfig& config, RandomStream& rng,
                  const GenerationOptions& options = {});

/// Checks the Secret invariants against a config. Throws InvalidConfig.
void check_secret(const ProtocolConfig& config, const Secret& secret);

/// Returns the bulletin with the next digit of p appended.
/// Throws ProtocolComplete once every digit is out.
Bulletin reveal_next(const Secret& secret, const Bulletin& bulletin);

struct PayoutEvent {
  Code winner;
  std::string label;
  Dollars amount = 0;
};

struct VerificationReport {
  /// The reconstructed p is prime.
  bool p_is_prime = false;
  /// p divides n exactly.
  bool p_divides_n = false;
  /// n/p is prime, has config.digits digits, and is smaller than p.
  bool cofactor_valid = false;
  /// extract_code(p) names a listed code.
  bool winner_listed = false;

  ArbInt p;
  std::optional<Code> winner;
  std::optional<PayoutEvent> payout;

  bool passed() const noexcept {
    return p_is_prime && p_divides_n && cofactor_valid && winner_listed;
  }
};

/// Audits a fully revealed bulletin. Throws IncompleteReveal before the
/// last day; failed checks are reported, not thrown.
VerificationReport verify(const Bulletin& bulletin);

}  // namespace gradreveal
