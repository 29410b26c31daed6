#include "gradreveal/cracker.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <limits>
#include <thread>
#include <vector>

#include "gradreveal/error.hpp"

namespace gradreveal {
namespace {

constexpr std::array<unsigned, 4> kEndings = {1, 3, 7, 9};
constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

struct SearchSpace {
  mpz_class base;  // prefix * 10^k
  mpz_class n;
  std::uint64_t blocks = 0;  // 10^(k-1): one block per choice of middle digits
};

// Scans blocks [first, last) in ascending order and records the smallest
// candidate index that divides n. Stops once a lower index is already known.
void scan(const SearchSpace& space, std::uint64_t first, std::uint64_t last,
          std::atomic<std::uint64_t>& best) {
  mpz_class block = space.base + ArbInt(first).mpz() * 10;
  mpz_class candidate;
  for (std::uint64_t j = first; j < last; ++j, block += 10) {
    const std::uint64_t index0 = j * kEndings.size();
    if (index0 > best.load(std::memory_order_relaxed)) return;
    for (std::size_t e = 0; e < kEndings.size(); ++e) {
      mpz_add_ui(candidate.get_mpz_t(), block.get_mpz_t(), kEndings[e]);
      if (candidate <= 1 || candidate == space.n) continue;
      if (mpz_divisible_p(space.n.get_mpz_t(), candidate.get_mpz_t()) != 0) {
        const std::uint64_t index = index0 + e;
        std::uint64_t seen = best.load(std::memory_order_relaxed);
        while (index < seen &&
               !best.compare_exchange_weak(seen, index, std::memory_order_relaxed)) {
        }
        return;
      }
    }
  }
}

void validate_revealed(std::size_t digits, std::string_view revealed) {
  if (revealed.empty()) {
    throw Error(ErrorCode::NoDigitsRevealed,
                "refusing to factor n with no digits of p revealed");
  }
  if (revealed.size() > digits) {
    throw Error(ErrorCode::InvalidConfig, "more digits revealed than p has");
  }
  if (!std::all_of(revealed.begin(), revealed.end(),
                   [](char c) { return c >= '0' && c <= '9'; })) {
    throw Error(ErrorCode::InvalidConfig, "reveal log must hold decimal digits only");
  }
}

}  // namespace

std::string_view to_string(CrackOutcome outcome) noexcept {
  switch (outcome) {
    case CrackOutcome::Found: return "Found";
    case CrackOutcome::BudgetExceeded: return "BudgetExceeded";
    case CrackOutcome::NotFound: return "NotFound";
  }
  return "Unknown";
}

ArbInt candidate_space(std::size_t digits, std::size_t revealed_count) {
  if (revealed_count > digits) {
    throw Error(ErrorCode::InvalidConfig, "revealed count exceeds digit count");
  }
  const std::size_t k = digits - revealed_count;
  if (k == 0) return ArbInt(1);
  return ArbInt(4) * ArbInt::pow10(k - 1);
}

ArbInt unpruned_space(std::size_t digits, std::size_t revealed_count) {
  if (revealed_count > digits) {
    throw Error(ErrorCode::InvalidConfig, "revealed count exceeds digit count");
  }
  return ArbInt::pow10(digits - revealed_count);
}

CrackResult crack(const ArbInt& n, std::size_t digits, std::string_view revealed,
                  CrackBudget budget, const CrackOptions& options) {
  validate_revealed(digits, revealed);
  if (budget.max_candidates < 1) {
    throw Error(ErrorCode::InvalidConfig, "crack budget must allow at least one test");
  }

  CrackResult result;
  result.required = candidate_space(digits, revealed.size());
  if (result.required > ArbInt(budget.max_candidates)) {
    result.outcome = CrackOutcome::BudgetExceeded;
    return result;
  }
  const std::uint64_t total = *result.required.to_u64();
  const std::size_t k = digits - revealed.size();
  const ArbInt prefix = ArbInt::parse(revealed);

  if (k == 0) {
    result.tests_used = 1;
    if (prefix > ArbInt(1) && prefix != n && n.divisible_by(prefix)) {
      result.outcome = CrackOutcome::Found;
      result.p = prefix;
      result.w = trailing_code(prefix);
    }
    return result;
  }

  SearchSpace space;
  space.base = (prefix * ArbInt::pow10(k)).mpz();
  space.n = n.mpz();
  space.blocks = total / kEndings.size();

  std::atomic<std::uint64_t> best{kNone};
  unsigned workers = options.workers != 0 ? options.workers
                                          : std::max(1u, std::thread::hardware_concurrency());
  if (total < options.parallel_threshold) workers = 1;
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, space.blocks));

  if (workers <= 1) {
    scan(space, 0, space.blocks, best);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    const std::uint64_t chunk = (space.blocks + workers - 1) / workers;
    for (unsigned t = 0; t < workers; ++t) {
      const std::uint64_t first = std::min(space.blocks, t * chunk);
      const std::uint64_t last = std::min(space.blocks, first + chunk);
      pool.emplace_back([&space, &best, first, last] { scan(space, first, last, best); });
    }
  }

  const std::uint64_t index = best.load();
  if (index == kNone) {
    result.tests_used = total;
    return result;
  }
  const std::uint64_t block = index / kEndings.size();
  result.outcome = CrackOutcome::Found;
  result.p = ArbInt::from_mpz(space.base) + ArbInt(block) * ArbInt(10) +
             ArbInt(kEndings[index % kEndings.size()]);
  result.w = trailing_code(result.p);
  result.tests_used = index + 1;
  return result;
}

CrackResult crack(const Bulletin& bulletin, CrackBudget budget, const CrackOptions& options) {
  return crack(bulletin.n, bulletin.config.digits, bulletin.revealed, budget, options);
}

std::size_t first_crackable_day(const ProtocolConfig& config, CrackBudget budget) {
  const ArbInt limit(budget.max_candidates);
  for (std::size_t day = 1; day <= config.days; ++day) {
    if (candidate_space(config.digits, day) <= limit) return day;
  }
  return config.days;
}

}  // namespace gradreveal
