#include "run_config.hpp"

#include "gradreveal/error.hpp"
#include "gradreveal/serialize.hpp"
#include "json.hpp"

namespace gradreveal::cli {
namespace {

using nlohmann::json;

std::vector<AgentProfile> standard_agents() {
  return {{"agent-1e3", CrackBudget{1'000}}, {"agent-1e6", CrackBudget{1'000'000}}};
}

template <typename T>
T required(const json& object, const char* key) {
  if (!object.contains(key)) {
    throw Error(ErrorCode::ParseError, std::string("run config: missing '") + key + "'");
  }
  return object.at(key).get<T>();
}

template <typename T>
T optional_field(const json& object, const char* key, T fallback) {
  return object.contains(key) ? object.at(key).get<T>() : fallback;
}

}  // namespace

RunConfig paper_preset() {
  RunConfig run;
  run.protocol = ProtocolConfig::paper();
  run.agents = standard_agents();
  return run;
}

RunConfig desk_preset() {
  RunConfig run;
  run.protocol = ProtocolConfig::desk();
  run.agents = standard_agents();
  return run;
}

RunConfig run_config_from_json(const std::string& text) {
  RunConfig run;
  try {
    const json object = json::parse(text);
    if (!object.is_object()) throw Error(ErrorCode::ParseError, "run config must be an object");

    ProtocolConfig& protocol = run.protocol;
    protocol.num_codes = required<unsigned>(object, "numCodes");
    protocol.digits = required<std::size_t>(object, "digits");
    protocol.days = required<std::size_t>(object, "days");
    protocol.payout = required<Dollars>(object, "payout");
    protocol.code_labels = optional_field(object, "codeLabels",
                                          default_code_labels(protocol.num_codes));
    run.base_cap_default = optional_field<Dollars>(object, "baseCapDefault", kDefaultBaseCap);
    run.seed = optional_field<std::uint64_t>(object, "seed", run.seed);
    run.output_dir = optional_field<std::string>(object, "outputDir", ".");
    if (object.contains("agents")) {
      for (const auto& agent : object.at("agents")) {
        run.agents.push_back({required<std::string>(agent, "name"),
                              CrackBudget{required<std::uint64_t>(agent, "budget")}});
      }
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("run config: ") + e.what());
  }

  run.protocol.validate();
  if (run.base_cap_default <= 0) {
    throw Error(ErrorCode::InvalidConfig, "baseCapDefault must be positive");
  }
  for (const auto& agent : run.agents) {
    if (agent.name.empty() || agent.budget.max_candidates < 1) {
      throw Error(ErrorCode::InvalidConfig, "agents need a name and a budget >= 1");
    }
  }
  return run;
}

RunConfig load_run_config(const std::string& name_or_path) {
  if (name_or_path == "paper") return paper_preset();
  if (name_or_path == "desk") return desk_preset();
  return run_config_from_json(read_file(name_or_path));
}

}  // namespace gradreveal::cli
