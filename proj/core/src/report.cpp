#include "gradreveal/report.hpp"

#include <ostream>

#include <fmt/format.h>
#include <fmt/ostream.h>

namespace gradreveal {

void write_timeline_csv(std::ostream& out, const SimulationReport& report) {
  out << "day,code,posterior,price\n";
  for (const auto& state : report.per_day) {
    for (std::size_t code = 0; code < state.posterior.size(); ++code) {
      fmt::print(out, "{},{},{:.17g},{}\n", state.day, code, state.posterior[code],
                 state.prices[code]);
    }
  }
}

void write_summary_csv(std::ostream& out, const SimulationReport& report) {
  out << "record,label,value\n";
  fmt::print(out, "jump_day,,{}\n", report.jump_day);
  fmt::print(out, "winner,,{}\n", report.winner.value);
  for (const auto& agent : report.crack_days) {
    if (agent.day) {
      fmt::print(out, "crack_day,{},{}\n", agent.name, *agent.day);
    } else {
      fmt::print(out, "crack_day,{},never\n", agent.name);
    }
  }
}

}  // namespace gradreveal
