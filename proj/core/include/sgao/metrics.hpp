#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "sgao/inference.hpp"

namespace sgao {

/// CSV text, one line per epoch: `epoch,mse,mean_z_norm2,wall_ms`, with
/// `mean_f_data,mean_f_synth` appended when any row carries them.
std::string metrics_csv(const std::vector<EpochMetrics>& rows);

void write_metrics_csv(const std::filesystem::path& path, const std::vector<EpochMetrics>& rows);

}  // namespace sgao
