#pragma once

#include <filesystem>
#include <string>

#include "sgao/descriptor.hpp"
#include "sgao/generator.hpp"
#include "sgao/inference.hpp"

namespace sgao {

/// Everything a run needs, bundled for the config file and the CLI.
struct RunConfig {
  GeneratorConfig generator = GeneratorConfig::stock();
  TrainConfig train;
  DescriptorConfig descriptor;
};

/// Flat JSON, keys mirroring the config fields; missing keys keep their
/// defaults. Unknown keys are a ConfigError.
RunConfig parse_run_config(const std::string& json_text, RunConfig base = {});

RunConfig load_run_config(const std::filesystem::path& path, RunConfig base = {});

std::string run_config_json(const RunConfig& cfg);

}  // namespace sgao
