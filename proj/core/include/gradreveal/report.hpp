#pragma once

#include <iosfwd>

#include "gradreveal/market.hpp"

namespace gradreveal {

/// day,code,posterior,price -- one row per (day, code).
void write_timeline_csv(std::ostream& out, const SimulationReport& report);

/// record,label,value -- jump day, winner, and one crack_day row per agent
/// ("never" when the agent did not crack).
void write_summary_csv(std::ostream& out, const SimulationReport& report);

}  // namespace gradreveal
