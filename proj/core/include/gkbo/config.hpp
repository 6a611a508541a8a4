#pragma once

#include <string>
#include <vector>

#include "gkbo/harness.hpp"

namespace gkbo {

// Flat key-value config with sections [dynamics], [transition], [experiment]
// and an optional [sweep] section whose comma-separated values define grid
// axes. Unknown keys are errors.
struct ParsedConfig {
    RunConfig base;
    int runs = 20; // M, repetitions per grid point
    std::vector<SweepAxis> axes;
};

ParsedConfig parse_config_file(const std::string& path);
ParsedConfig parse_config_text(const std::string& text);

// Sets one RunConfig field by bare key name (e.g. "sigma_f", "dimension").
// Throws std::invalid_argument on unknown keys or unparsable values.
void set_config_key(RunConfig& cfg, const std::string& key, const std::string& value);

// Section a key belongs to ("dynamics", "transition", "experiment"), or empty
// if unknown.
std::string config_key_section(const std::string& key);

} // namespace gkbo
