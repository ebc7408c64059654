#pragma once

#include <istream>
#include <ostream>

#include "repairkit/metrics.hpp"

namespace repairkit {

/// Line-delimited JSON reward service over arbitrary streams. Reads one
/// {id, candidate, oracle} request per line and writes one response per
/// line, in order, flushing after each. A malformed line produces
/// {"id": null, "error": ...} and the stream continues. Returns the number
/// of lines handled; ends cleanly at end of input.
size_t run_reward_service(std::istream& in, std::ostream& out,
                          const MetricConfig& cfg);

}  // namespace repairkit
