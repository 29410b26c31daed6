#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "gradreveal/market.hpp"
#include "gradreveal/protocol.hpp"

namespace gradreveal::cli {

/// Everything a `setup` or `simulate` invocation needs.
struct RunConfig {
  ProtocolConfig protocol;
  Dollars base_cap_default = kDefaultBaseCap;
  std::vector<AgentProfile> agents;
  std::uint64_t seed = 1;
  std::filesystem::path output_dir = ".";

  std::vector<Dollars> base_caps() const {
    return uniform_base_caps(protocol.num_codes, base_cap_default);
  }
};

/// The two shipped presets. Both carry agents with nightly budgets of
/// 10^3 and 10^6 division tests.
RunConfig paper_preset();
RunConfig desk_preset();

/// JSON run file. Keys: numCodes, digits, days, payout, baseCapDefault,
/// agents [{name, budget}], seed, outputDir, and optionally codeLabels.
/// Throws ParseError or InvalidConfig.
RunConfig run_config_from_json(const std::string& text);

/// "paper" and "desk" name the presets; anything else is a file path.
RunConfig load_run_config(const std::string& name_or_path);

}  // namespace gradreveal::cli
