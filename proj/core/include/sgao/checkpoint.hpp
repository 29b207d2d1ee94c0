#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sgao/descriptor.hpp"
#include "sgao/generator.hpp"
#include "sgao/inference.hpp"
#include "sgao/tensor.hpp"

namespace sgao {

/// Serialized model + training state. On disk: magic "SGAO", format
/// version, a JSON metadata block (configs, epoch, seed, per-epoch seeds,
/// blob manifest), then raw little-endian float blobs.
struct Checkpoint {
  GeneratorConfig generator;
  TrainConfig train;
  std::optional<DescriptorConfig> descriptor;
  int epoch = 0;            // epochs completed / next epoch to run
  std::uint64_t seed = 0;   // master seed of the run
  long adam_step = 0;
  std::vector<std::uint64_t> epoch_seeds;
  std::vector<std::pair<std::string, Tensor>> tensors;

  const Tensor* find(std::string_view name) const;
  const Tensor& require(std::string_view name) const;  // throws CheckpointError
};

enum class BlobPrecision {
  f32,  // compact export; narrows 64-bit compute values
  f64   // lossless at 64-bit compute; used for resumable training state
};

inline constexpr std::uint32_t kCheckpointVersion = 1;

void save_checkpoint(const std::filesystem::path& path, const Checkpoint& ckpt,
                     BlobPrecision precision = BlobPrecision::f32);

/// Verifies magic, version and manifest bounds. Bad magic, version
/// mismatch and truncation raise distinct error types.
Checkpoint load_checkpoint(const std::filesystem::path& path);

// --- packing helpers -------------------------------------------------------

void pack_generator(Checkpoint& ckpt, const GeneratorParams& params);
GeneratorParams unpack_generator(const Checkpoint& ckpt);

void pack_descriptor(Checkpoint& ckpt, const DescriptorParams& phi);
DescriptorParams unpack_descriptor(const Checkpoint& ckpt);

void pack_training_state(Checkpoint& ckpt, const TrainingRun& run);
TrainingRun unpack_training_state(const Checkpoint& ckpt);
bool has_training_state(const Checkpoint& ckpt);

/// One-line-per-field human summary for the `info` subcommand.
std::string checkpoint_summary(const Checkpoint& ckpt);

}  // namespace sgao
