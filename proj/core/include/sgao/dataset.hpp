#pragma once

#include <filesystem>
#include <vector>

#include "sgao/tensor.hpp"

namespace sgao {

/// Uniformly shaped training images in [-1, 1] with their source paths.
struct Dataset {
  std::vector<Tensor> images;
  std::vector<std::filesystem::path> sources;

  int size() const { return static_cast<int>(images.size()); }
};

/// Loads every decodable image under `dir` (lexicographic file order,
/// optionally limited to the first `limit`), center-crops to square,
/// bilinear-resizes to target_size x target_size and scales to [-1, 1].
/// Undecodable files are skipped with a warning on stderr; an empty
/// directory or all files undecodable is an IoError.
Dataset load_dataset(const std::filesystem::path& dir, int target_size, int limit = -1);

}  // namespace sgao
