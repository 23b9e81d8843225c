#pragma once

#include <string>
#include <vector>

#include "morl/momdp.hpp"

namespace morl {

/// The four Space Traders variants. `mr` keeps the original transition
/// structure but penalises failure terminals on the first objective; `threest`
/// inserts an intermediate state on the Direct route out of the start state;
/// `id` swaps the time penalties between the two planets so the slow-first
/// route becomes optimal.
EnvironmentSpec build_original();
EnvironmentSpec build_mr();
EnvironmentSpec build_3st();
EnvironmentSpec build_id();

/// Names accepted by environment_by_name, in catalog order.
const std::vector<std::string>& catalog_names();

bool is_catalog_name(const std::string& name);

/// Builds a catalog environment ("original", "mr", "3st", "id").
EnvironmentSpec environment_by_name(const std::string& name);

/// First-objective threshold the experiments use for a catalog environment.
double default_threshold(const std::string& name);

/// Parses an environment from its JSON text. The schema is strict: unknown
/// keys are PARSE_ERROR.
EnvironmentSpec spec_from_json(const std::string& json_text);

/// Serialises a spec to the same JSON schema (round-trips exactly).
std::string spec_to_json(const EnvironmentSpec& spec);

/// Loads and validates a spec file.
EnvironmentSpec load_spec(const std::string& path);

/// Resolves a --env argument: catalog name, or path to a spec file.
EnvironmentSpec resolve_environment(const std::string& name_or_path);

}  // namespace morl
