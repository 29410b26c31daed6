#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gradreveal/cracker.hpp"
#include "gradreveal/protocol.hpp"

namespace gradreveal {

/// Posterior mass on the true winner above which its price "reflects" the
/// payout.
inline constexpr double kJumpThreshold = 0.99;
inline constexpr Dollars kDefaultBaseCap = 40'000'000;

/// A market participant with a fixed nightly compute allowance.
struct AgentProfile {
  std::string name;
  CrackBudget budget;
};

struct MarketState {
  std::size_t day = 0;
  std::vector<double> posterior;
  /// base_cap[i] + posterior[i] * payout, rounded to whole dollars.
  std::vector<Dollars> prices;
  std::optional<std::string> cracked_by;
};

/// Per-agent outcome of a run, in the order the agents were given.
struct AgentCrackDay {
  std::string name;
  std::optional<std::size_t> day;
};

struct SimulationReport {
  std::vector<MarketState> per_day;  // days 1..config.days
  std::size_t jump_day = 0;
  std::vector<AgentCrackDay> crack_days;
  Code winner;
  VerificationReport verification;
};

/// Mutable protocol side of a simulation: the secret, the bulletin as it
/// grows, and who has cracked so far.
struct MarketRun {
  Secret secret;
  Bulletin bulletin;
  std::vector<std::optional<std::size_t>> agent_crack_day;
  std::optional<Code> cracked_code;
  std::optional<std::string> cracked_by;
};

/// Posterior over codes implied by the reveal log alone. Throws
/// InconsistentReveal when the revealed winner digits match no listed code.
std::vector<double> posterior_from_reveal(const ProtocolConfig& config,
                                          std::string_view revealed);

std::vector<Dollars> price(std::span<const Dollars> base_caps,
                           std::span<const double> posterior, Dollars payout);

std::vector<Dollars> uniform_base_caps(unsigned num_codes,
                                       Dollars cap = kDefaultBaseCap);

/// Opening state before any reveal: uniform posterior.
MarketState initial_state(const ProtocolConfig& config,
                          std::span<const Dollars> base_caps);

/// One trading day: reveal the next digit after the close, let each agent
/// that has not yet succeeded try its nightly crack, and reprice.
MarketState step_day(MarketRun& run, std::span<const AgentProfile> agents,
                     const MarketState& previous,
                     std::span<const Dollars> base_caps,
                     const CrackOptions& crack_options = {});

SimulationReport run_simulation(const ProtocolConfig& config,
                                std::span<const AgentProfile> agents,
                                std::span<const Dollars> base_caps,
                                RandomStream& rng,
                                const CrackOptions& crack_options = {});

SimulationReport run_simulation(const ProtocolConfig& config,
                                std::span<const AgentProfile> agents,
                                std::span<const Dollars> base_caps,
                                std::uint64_t seed,
                                const CrackOptions& crack_options = {});

}  // namespace gradreveal
