#include "gradreveal/numtheory.hpp"

#include <algorithm>
#include <array>
#include <vector>

#include "gradreveal/error.hpp"

namespace gradreveal {
namespace {

constexpr std::array<char, 4> kOddUnitEndings = {'1', '3', '7', '9'};
constexpr unsigned kSievePrimeLimit = 2000;

bool trial_division(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t f = 3; f * f <= n; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

const std::vector<unsigned>& small_primes() {
  static const std::vector<unsigned> primes = [] {
    std::vector<unsigned> out;
    for (unsigned i = 3; i < kSievePrimeLimit; i += 2) {
      if (trial_division(i)) out.push_back(i);
    }
    return out;
  }();
  return primes;
}

// Uniform in [0, bound) by masked rejection sampling over 64-bit words.
mpz_class random_below(const mpz_class& bound, RandomStream& rng) {
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const std::size_t words = (bits + 63) / 64;
  const std::size_t top_bits = bits - (words - 1) * 64;
  const std::uint64_t top_mask =
      top_bits == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << top_bits) - 1);
  std::vector<std::uint64_t> buffer(words);
  mpz_class out;
  do {
    for (auto& w : buffer) w = rng.next_u64();
    buffer.front() &= top_mask;  // most significant word first
    mpz_import(out.get_mpz_t(), words, 1, sizeof(std::uint64_t), 0, 0, buffer.data());
  } while (out >= bound);
  return out;
}

std::uint64_t witness_seed(const ArbInt& n) {
  const mpz_class& v = n.mpz();
  std::uint64_t low = mpz_getlimbn(v.get_mpz_t(), 0);
  std::uint64_t size = mpz_size(v.get_mpz_t());
  return 0x9e3779b97f4a7c15ULL ^ low ^ (size << 56);
}

char odd_unit_ending(RandomStream& rng) {
  return kOddUnitEndings[rng.uniform(kOddUnitEndings.size())];
}

char random_digit_char(RandomStream& rng, int lo = 0) {
  return static_cast<char>('0' + rng.digit(lo, 9));
}

}  // namespace

namespace detail {

bool miller_rabin(const ArbInt& n, int rounds) {
  const mpz_class& m = n.mpz();
  const mpz_class m_minus_1 = m - 1;

  mpz_class d = m_minus_1;
  const mp_bitcnt_t s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

  auto rng = RandomStream::seeded(witness_seed(n));
  const mpz_class base_span = m - 3;  // bases in [2, n-2]
  mpz_class x;
  for (int round = 0; round < std::max(rounds, 1); ++round) {
    const mpz_class a = random_below(base_span, rng) + 2;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t());
    if (x == 1 || x == m_minus_1) continue;
    bool witness = true;
    for (mp_bitcnt_t r = 1; r < s; ++r) {
      mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, m.get_mpz_t());
      if (x == m_minus_1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

}  // namespace detail

bool is_prime(const ArbInt& n, int rounds) {
  if (n < ArbInt(kTrialDivisionLimit)) {
    return trial_division(*n.to_u64());
  }
  if (n.is_even()) return false;
  for (unsigned p : small_primes()) {
    if (mpz_divisible_ui_p(n.mpz().get_mpz_t(), p) != 0) return false;
  }
  return detail::miller_rabin(n, rounds);
}

Code extract_code(const ArbInt& p) {
  if (p < ArbInt(10000)) {
    throw Error(ErrorCode::InputTooSmall,
                "extract_code needs at least five digits, got " + p.to_string());
  }
  return trailing_code(p);
}

Code trailing_code(const ArbInt& p) {
  return Code{static_cast<unsigned>(p.mod_u64(10000) / 10)};
}

ArbInt gen_prime(std::size_t digits, RandomStream& rng, const GenerationOptions& options) {
  if (digits < 2) {
    throw Error(ErrorCode::InvalidConfig, "gen_prime needs digits >= 2");
  }
  std::string text(digits, '0');
  for (std::size_t attempt = 0; attempt < options.max_attempts; ++attempt) {
    text.front() = random_digit_char(rng, 1);
    for (std::size_t i = 1; i + 1 < digits; ++i) text[i] = random_digit_char(rng);
    text.back() = odd_unit_ending(rng);
    ArbInt candidate = ArbInt::parse(text);
    if (is_prime(candidate, options.rounds)) return candidate;
  }
  throw Error(ErrorCode::ExhaustedAttempts,
              "no " + std::to_string(digits) + "-digit prime after " +
                  std::to_string(options.max_attempts) + " draws");
}

ArbInt gen_constrained_prime(std::size_t digits, Code w, RandomStream& rng,
                             const GenerationOptions& options) {
  if (digits < 5) {
    throw Error(ErrorCode::InvalidConfig, "gen_constrained_prime needs digits >= 5");
  }
  if (w.value >= 1000) {
    throw Error(ErrorCode::InvalidConfig,
                "code " + std::to_string(w.value) + " does not fit in three digits");
  }
  // Layout: lead, free digits, hundreds/tens/units of w, odd unit ending.
  std::string text(digits, '0');
  text[digits - 4] = static_cast<char>('0' + w.value / 100);
  text[digits - 3] = static_cast<char>('0' + (w.value / 10) % 10);
  text[digits - 2] = static_cast<char>('0' + w.value % 10);
  for (std::size_t attempt = 0; attempt < options.max_attempts; ++attempt) {
    text.front() = random_digit_char(rng, 1);
    for (std::size_t i = 1; i + 4 < digits; ++i) text[i] = random_digit_char(rng);
    text.back() = odd_unit_ending(rng);
    ArbInt candidate = ArbInt::parse(text);
    if (is_prime(candidate, options.rounds)) return candidate;
  }
  throw Error(ErrorCode::ExhaustedAttempts,
              "no " + std::to_string(digits) + "-digit prime for code " +
                  std::to_string(w.value) + " after " +
                  std::to_string(options.max_attempts) + " draws");
}

ArbInt compose(const ArbInt& p, const ArbInt& q) {
  if (p < ArbInt(2) || q < ArbInt(2)) {
    throw Error(ErrorCode::InvalidConfig, "compose needs both factors >= 2");
  }
  return p * q;
}

}  // namespace gradreveal
