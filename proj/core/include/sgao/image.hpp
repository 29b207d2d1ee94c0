#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "sgao/tensor.hpp"

namespace sgao {

/// Interleaved 8-bit image, row-major.
struct ImageU8 {
  int height = 0;
  int width = 0;
  int channels = 0;  // 1 or 3
  std::vector<std::uint8_t> pixels;
};

/// Binary or ASCII PGM/PPM (P2/P3/P5/P6), maxval <= 255.
ImageU8 read_pnm(const std::filesystem::path& path);

/// Binary P6, deterministic bytes. Grayscale input is replicated to RGB.
void write_ppm(const std::filesystem::path& path, const ImageU8& image);

#ifdef SGAO_WITH_PNG
ImageU8 read_png(const std::filesystem::path& path);
#endif

/// Reads by extension: .png when compiled in, PNM otherwise.
ImageU8 read_image(const std::filesystem::path& path);

/// Bytes [0,255] -> reals [-1,1], shape {h, w, c}.
Tensor image_to_tensor(const ImageU8& image);

/// Clamps to [-1,1] and quantizes to bytes.
ImageU8 tensor_to_image(const Tensor& t);

Tensor center_crop_square(const Tensor& t);

/// Half-pixel-center sampling with edge clamping.
Tensor bilinear_resize(const Tensor& t, int out_h, int out_w);

enum class GridNorm { per_cell, global };

/// Row-major arrangement of equally shaped cells with a padding border
/// between and around them. Cells are min-max normalized to bytes either
/// individually or against the global range; a degenerate range maps to 0.
struct ImageGrid {
  int rows = 0;
  int cols = 0;
  int pad = 1;
  GridNorm norm = GridNorm::per_cell;
  std::vector<Tensor> cells;
};

ImageU8 render_grid(const ImageGrid& grid);

void write_grid_ppm(const std::filesystem::path& path, const ImageGrid& grid);

/// Near-square grid layout for n cells: cols = ceil(sqrt(n)).
ImageGrid make_grid(std::vector<Tensor> cells, GridNorm norm = GridNorm::per_cell, int pad = 1);

}  // namespace sgao
