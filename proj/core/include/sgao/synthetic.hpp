#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "sgao/tensor.hpp"

namespace sgao {

/// Deterministic toy corpus: `size` x `size` RGB images in [-1, 1], each a
/// flat background with random colored rectangles and oriented stroke
/// segments with a Gaussian cross-profile.
std::vector<Tensor> make_synthetic_corpus(int n, int size, std::uint64_t seed);

/// Writes the corpus as zero-padded img_0000.ppm ... under `dir`.
void write_corpus(const std::filesystem::path& dir, const std::vector<Tensor>& images);

}  // namespace sgao
