#include "gradreveal/market.hpp"

#include <cmath>
#include <set>
#include <string>

#include "gradreveal/error.hpp"

namespace gradreveal {
namespace {

int digit_at(std::string_view revealed, std::size_t index) {
  return revealed.at(index) - '0';
}

std::vector<double> point_mass(unsigned num_codes, Code code) {
  if (code.value >= num_codes) {
    throw Error(ErrorCode::InconsistentReveal,
                "code " + std::to_string(code.value) + " is not listed");
  }
  std::vector<double> out(num_codes, 0.0);
  out[code.value] = 1.0;
  return out;
}

void validate_inputs(const ProtocolConfig& config, std::span<const AgentProfile> agents,
                     std::span<const Dollars> base_caps) {
  config.validate();
  if (base_caps.size() != config.num_codes) {
    throw Error(ErrorCode::InvalidConfig,
                "expected " + std::to_string(config.num_codes) + " base caps, got " +
                    std::to_string(base_caps.size()));
  }
  for (Dollars cap : base_caps) {
    if (cap <= 0) throw Error(ErrorCode::InvalidConfig, "base caps must be positive");
  }
  std::set<std::string_view> names;
  for (const auto& agent : agents) {
    if (agent.name.empty()) throw Error(ErrorCode::InvalidConfig, "agent without a name");
    if (!names.insert(agent.name).second) {
      throw Error(ErrorCode::InvalidConfig, "duplicate agent name '" + agent.name + "'");
    }
    if (agent.budget.max_candidates < 1) {
      throw Error(ErrorCode::InvalidConfig, "agent '" + agent.name + "' has a zero budget");
    }
  }
}

}  // namespace

std::vector<double> posterior_from_reveal(const ProtocolConfig& config,
                                          std::string_view revealed) {
  const std::size_t digits = config.digits;
  if (revealed.size() > digits) {
    throw Error(ErrorCode::InvalidConfig, "more digits revealed than p has");
  }
  const std::size_t unrevealed = digits - revealed.size();
  const unsigned codes = config.num_codes;

  if (unrevealed >= 4) return std::vector<double>(codes, 1.0 / codes);

  // Winner digits sit at 0-based positions digits-4 (hundreds), digits-3
  // (tens) and digits-2 (units).
  const int hundreds = digit_at(revealed, digits - 4);
  if (unrevealed <= 1) {
    const unsigned code = 100 * hundreds + 10 * digit_at(revealed, digits - 3) +
                          digit_at(revealed, digits - 2);
    return point_mass(codes, Code{code});
  }
  const int tens = unrevealed == 2 ? digit_at(revealed, digits - 3) : -1;

  std::vector<double> out(codes, 0.0);
  unsigned matches = 0;
  for (unsigned c = 0; c < codes; ++c) {
    const bool match = static_cast<int>(c / 100) == hundreds &&
                       (tens < 0 || static_cast<int>((c / 10) % 10) == tens);
    if (match) {
      out[c] = 1.0;
      ++matches;
    }
  }
  if (matches == 0) {
    throw Error(ErrorCode::InconsistentReveal, "revealed winner digits match no listed code");
  }
  for (double& v : out) v /= matches;
  return out;
}

std::vector<Dollars> price(std::span<const Dollars> base_caps,
                           std::span<const double> posterior, Dollars payout) {
  if (base_caps.size() != posterior.size()) {
    throw Error(ErrorCode::InvalidConfig, "base caps and posterior differ in length");
  }
  std::vector<Dollars> out(base_caps.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = base_caps[i] + std::llround(posterior[i] * static_cast<double>(payout));
  }
  return out;
}

std::vector<Dollars> uniform_base_caps(unsigned num_codes, Dollars cap) {
  return std::vector<Dollars>(num_codes, cap);
}

MarketState initial_state(const ProtocolConfig& config, std::span<const Dollars> base_caps) {
  MarketState state;
  state.posterior = posterior_from_reveal(config, {});
  state.prices = price(base_caps, state.posterior, config.payout);
  return state;
}

MarketState step_day(MarketRun& run, std::span<const AgentProfile> agents,
                     const MarketState& previous, std::span<const Dollars> base_caps,
                     const CrackOptions& crack_options) {
  if (previous.day != run.bulletin.day()) {
    throw Error(ErrorCode::InvalidConfig, "market state and bulletin are out of step");
  }
  if (run.agent_crack_day.size() != agents.size()) {
    run.agent_crack_day.resize(agents.size());
  }

  run.bulletin = reveal_next(run.secret, run.bulletin);
  const std::size_t day = run.bulletin.day();
  const ProtocolConfig& config = run.bulletin.config;

  // Every agent whose budget covers tonight's space gets the same answer,
  // so the search runs at most once per night.
  const ArbInt required = candidate_space(config.digits, day);
  std::optional<CrackResult> tonight;
  for (std::size_t i = 0; i < agents.size(); ++i) {
    if (run.agent_crack_day[i]) continue;
    if (ArbInt(agents[i].budget.max_candidates) < required) continue;
    if (!tonight) tonight = crack(run.bulletin, agents[i].budget, crack_options);
    if (!tonight->found()) continue;
    run.agent_crack_day[i] = day;
    if (!run.cracked_code) {
      run.cracked_code = tonight->w;
      run.cracked_by = agents[i].name;
    }
  }

  MarketState state;
  state.day = day;
  state.posterior = run.cracked_code ? point_mass(config.num_codes, *run.cracked_code)
                                     : posterior_from_reveal(config, run.bulletin.revealed);
  state.prices = price(base_caps, state.posterior, config.payout);
  state.cracked_by = run.cracked_by;
  return state;
}

SimulationReport run_simulation(const ProtocolConfig& config,
                                std::span<const AgentProfile> agents,
                                std::span<const Dollars> base_caps, RandomStream& rng,
                                const CrackOptions& crack_options) {
  validate_inputs(config, agents, base_caps);

  auto [secret, bulletin] = setup(config, rng);
  MarketRun run{std::move(secret), std::move(bulletin), {}, {}, {}};
  run.agent_crack_day.resize(agents.size());

  SimulationReport report;
  report.winner = run.secret.w;
  report.per_day.reserve(config.days);

  MarketState state = initial_state(config, base_caps);
  for (std::size_t d = 0; d < config.days; ++d) {
    state = step_day(run, agents, state, base_caps, crack_options);
    if (report.jump_day == 0 && state.posterior[report.winner.value] > kJumpThreshold) {
      report.jump_day = state.day;
    }
    report.per_day.push_back(state);
  }

  report.verification = verify(run.bulletin);
  for (std::size_t i = 0; i < agents.size(); ++i) {
    report.crack_days.push_back({agents[i].name, run.agent_crack_day[i]});
  }
  return report;
}

SimulationReport run_simulation(const ProtocolConfig& config,
                                std::span<const AgentProfile> agents,
                                std::span<const Dollars> base_caps, std::uint64_t seed,
                                const CrackOptions& crack_options) {
  auto rng = RandomStream::seeded(seed);
  return run_simulation(config, agents, base_caps, rng, crack_options);
}

}  // namespace gradreveal
