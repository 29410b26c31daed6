#include "gradreveal/protocol.hpp"

#include <cstdio>
#include <string>

#include "gradreveal/error.hpp"

namespace gradreveal {
namespace {

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorCode::InvalidConfig, what);
}

}  // namespace

std::vector<std::string> default_code_labels(unsigned num_codes) {
  std::vector<std::string> labels;
  labels.reserve(num_codes);
  char buffer[16];
  for (unsigned i = 0; i < num_codes; ++i) {
    std::snprintf(buffer, sizeof(buffer), "MC%03u", i);
    labels.emplace_back(buffer);
  }
  return labels;
}

ProtocolConfig ProtocolConfig::paper() {
  ProtocolConfig config;
  config.num_codes = 1000;
  config.digits = 300;
  config.days = 300;
  config.payout = 1'000'000'000;
  config.code_labels = default_code_labels(config.num_codes);
  return config;
}

ProtocolConfig ProtocolConfig::desk() {
  ProtocolConfig config;
  config.num_codes = 100;
  config.digits = 24;
  config.days = 24;
  config.payout = 1'000'000'000;
  config.code_labels = default_code_labels(config.num_codes);
  return config;
}

void ProtocolConfig::validate() const {
  if (num_codes < 1 || num_codes > 1000) {
    invalid("numCodes must be in [1, 1000], got " + std::to_string(num_codes));
  }
  if (digits < 5) invalid("digits must be >= 5, got " + std::to_string(digits));
  if (days != digits) {
    invalid("days (" + std::to_string(days) + ") must equal digits (" +
            std::to_string(digits) + "): one digit is revealed per day");
  }
  if (payout <= 0) invalid("payout must be positive");
  if (code_labels.size() != num_codes) {
    invalid("expected " + std::to_string(num_codes) + " code labels, got " +
            std::to_string(code_labels.size()));
  }
}

SetupResult setup(const ProtocolConfig& config, RandomStream& rng,
                  const GenerationOptions& options) {
  config.validate();

  const Code w{static_cast<unsigned>(rng.uniform(config.num_codes))};

  // A p led by 1 leaves no q that is both smaller and led by another digit.
  ArbInt p;
  std::size_t attempts = 0;
  do {
    if (attempts++ == options.max_attempts) {
      throw Error(ErrorCode::ExhaustedAttempts, "no usable constrained prime");
    }
    p = gen_constrained_prime(config.digits, w, rng, options);
  } while (p.leading_digit() == 1);

  ArbInt q;
  attempts = 0;
  do {
    if (attempts++ == options.max_attempts) {
      throw Error(ErrorCode::ExhaustedAttempts, "no usable cofactor prime");
    }
    q = gen_prime(config.digits, rng, options);
  } while (!(q < p && q.leading_digit() != p.leading_digit()));

  SetupResult out;
  out.bulletin.config = config;
  out.bulletin.n = compose(p, q);
  out.secret = Secret{w, std::move(p), std::move(q)};
  return out;
}

void check_secret(const ProtocolConfig& config, const Secret& secret) {
  if (secret.w.value >= config.num_codes) invalid("secret winner code out of range");
  if (secret.p.digit_count() != config.digits || secret.q.digit_count() != config.digits) {
    invalid("secret primes must have exactly " + std::to_string(config.digits) + " digits");
  }
  if (!(secret.q < secret.p)) invalid("secret cofactor must be smaller than p");
  if (secret.p.leading_digit() == secret.q.leading_digit()) {
    invalid("secret primes must differ in their leading digit");
  }
  if (extract_code(secret.p) != secret.w) invalid("secret p does not encode w");
  if (!is_prime(secret.p) || !is_prime(secret.q)) invalid("secret factors must be prime");
}

Bulletin reveal_next(const Secret& secret, const Bulletin& bulletin) {
  if (bulletin.complete()) {
    throw Error(ErrorCode::ProtocolComplete,
                "all " + std::to_string(bulletin.config.days) + " digits already revealed");
  }
  const std::string digits = secret.p.to_string();
  if (digits.size() != bulletin.config.digits) {
    invalid("secret does not match bulletin digit count");
  }
  Bulletin next = bulletin;
  next.revealed.push_back(digits[bulletin.day()]);
  return next;
}

VerificationReport verify(const Bulletin& bulletin) {
  const ProtocolConfig& config = bulletin.config;
  if (!bulletin.complete()) {
    throw Error(ErrorCode::IncompleteReveal,
                "verification needs all " + std::to_string(config.days) +
                    " digits; " + std::to_string(bulletin.day()) + " revealed");
  }

  VerificationReport report;
  report.p = ArbInt::parse(bulletin.revealed);
  const ArbInt& p = report.p;

  report.p_is_prime = is_prime(p);
  report.p_divides_n = p >= ArbInt(2) && bulletin.n.divisible_by(p);
  if (report.p_divides_n) {
    const ArbInt cofactor = bulletin.n / p;
    report.cofactor_valid = cofactor < p && cofactor.digit_count() == config.digits &&
                            is_prime(cofactor);
  }
  if (p >= ArbInt(10000)) {
    report.winner = extract_code(p);
    report.winner_listed = report.winner->value < config.num_codes;
  }

  if (report.passed()) {
    const Code w = *report.winner;
    report.payout = PayoutEvent{w, config.code_labels.at(w.value), config.payout};
  }
  return report;
}

}  // namespace gradreveal
