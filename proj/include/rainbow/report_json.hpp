#pragma once

#include "rainbow/harness.hpp"
#include "rainbow/probe.hpp"
#include "rainbow/proof_finder.hpp"
#include "rainbow/separation.hpp"
#include "rainbow/witness.hpp"

#include <json.hpp>

namespace rainbow {

/// Bumped whenever a report changes shape.
inline constexpr int report_schema_version = 1;

nlohmann::json to_json(const RainbowWitness &w);
nlohmann::json to_json(const FinderTrace &t);
nlohmann::json to_json(const SeparationReport &r);
nlohmann::json to_json(const ProbeReport &r);
nlohmann::json to_json(const TheoremReport &r);
nlohmann::json to_json(const DeltaBoundReport &r);
nlohmann::json to_json(const PropertyReport &r);
nlohmann::json to_json(const Reproducer &r);

Reproducer reproducer_from_json(const nlohmann::json &j);

} // namespace rainbow
