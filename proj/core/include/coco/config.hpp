#pragma once

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "coco/engine.hpp"

namespace coco {

/// Configuration error carrying the offending field name in its message.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& message) : std::runtime_error(message) {}
};

/// Flat key -> value map. Section headers in the text form prefix the keys,
/// so "[channel]" + "t0_dbm" becomes "channel.t0_dbm". Ordered so manifests
/// serialize deterministically.
using ConfigMap = std::map<std::string, std::string>;

/// Parses the key = value scenario text format ('#' and ';' comments).
ConfigMap parse_config_text(std::istream& in);

/// Loads a scenario from disk: the key = value format, or a run manifest
/// (.json) whose "config" object is reused verbatim.
ConfigMap load_config_file(const std::string& path);

/// Applies "key=value" override strings (leading dashes tolerated) on top
/// of the map.
void apply_overrides(ConfigMap& map, const std::vector<std::string>& overrides);

/// Builds a validated ScenarioConfig. Unknown keys, unparsable values, and
/// the missing required "seed" field all raise ConfigError naming the field.
ScenarioConfig scenario_from_map(const ConfigMap& map);

/// Canonical echo of a resolved scenario; doubles round-trip exactly.
ConfigMap scenario_to_map(const ScenarioConfig& config);

}  // namespace coco
