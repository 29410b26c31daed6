#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "gradreveal/arbint.hpp"
#include "gradreveal/numtheory.hpp"
#include "gradreveal/protocol.hpp"

namespace gradreveal {

/// Division tests permitted for one crack attempt.
struct CrackBudget {
  std::uint64_t max_candidates = 1;
};

enum class CrackOutcome { Found, BudgetExceeded, NotFound };

std::string_view to_string(CrackOutcome outcome) noexcept;

struct CrackResult {
  CrackOutcome outcome = CrackOutcome::NotFound;
  /// Set when Found.
  ArbInt p;
  Code w;
  /// Position of p in the ascending enumeration (1-based) when Found; the
  /// whole space when NotFound; zero when BudgetExceeded.
  std::uint64_t tests_used = 0;
  /// Size of the pruned candidate space for this attempt.
  ArbInt required;

  bool found() const noexcept { return outcome == CrackOutcome::Found; }
};

struct CrackOptions {
  /// 0 picks std::thread::hardware_concurrency().
  unsigned workers = 0;
  /// Spaces smaller than this are scanned on the calling thread.
  std::uint64_t parallel_threshold = 1u << 16;
};

/// Completions tested with `revealed_count` of `digits` digits known:
/// 4 * 10^(k-1) for k = digits - revealed_count >= 1, else 1.
ArbInt candidate_space(std::size_t digits, std::size_t revealed_count);

/// Completions without the last-digit pruning: 10^k.
ArbInt unpruned_space(std::size_t digits, std::size_t revealed_count);

/// Searches the completions of `revealed` (ascending, last digit in
/// {1,3,7,9}) for an exact divisor of n. Throws NoDigitsRevealed when
/// `revealed` is empty and InvalidConfig when it has more than `digits`
/// characters or a non-digit.
CrackResult crack(const ArbInt& n, std::size_t digits, std::string_view revealed,
                  CrackBudget budget, const CrackOptions& options = {});

CrackResult crack(const Bulletin& bulletin, CrackBudget budget,
                  const CrackOptions& options = {});

/// Earliest day d in [1, days] whose candidate space fits the budget.
std::size_t first_crackable_day(const ProtocolConfig& config, CrackBudget budget);

}  // namespace gradreveal
