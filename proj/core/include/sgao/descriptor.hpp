#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "sgao/inference.hpp"
#include "sgao/tensor.hpp"

namespace sgao {

struct ConvSpec {
  int kernel = 4;
  int stride = 2;
  int pad = 0;
  int out_channels = 0;
};

/// Energy model over images: unnormalized density exp[f(y)] q(y) with q a
/// zero-mean Gaussian of scale sigma_q. f is a small bottom-up ConvNet with
/// a scalar affine head. The normalizer is never represented or computed.
struct DescriptorConfig {
  std::vector<ConvSpec> conv = {{4, 2, 0, 32}, {4, 2, 0, 64}};
  real sigma_q = 1.0;
  real delta = 0.02;  // image-space Langevin step size
  int steps = 10;
  real learning_rate = 0.01;

  bool operator==(const DescriptorConfig&) const = default;
};

inline bool operator==(const ConvSpec& a, const ConvSpec& b) {
  return a.kernel == b.kernel && a.stride == b.stride && a.pad == b.pad &&
         a.out_channels == b.out_channels;
}

struct DescriptorParams {
  struct Layer {
    Tensor kernel;  // {c_in, k, k, c_out}
    Tensor bias;    // {c_out}
  };
  std::vector<Layer> conv;
  Tensor head_weight;  // {flattened conv output}
  real head_bias = 0;
};

/// Mirrors DescriptorParams; holds gradients.
using DescriptorGrads = DescriptorParams;

/// Validates that the conv stack fits the image shape; throws ConfigError.
void validate_descriptor(const DescriptorConfig& dcfg, const std::array<int, 3>& image_shape);

DescriptorParams init_descriptor(const DescriptorConfig& dcfg,
                                 const std::array<int, 3>& image_shape, std::uint64_t seed);

/// f(y; phi).
real energy_score(const DescriptorParams& phi, const Tensor& y);

struct EnergyGradients {
  real value = 0;
  Tensor d_image;          // ∂f/∂y
  DescriptorGrads d_phi;   // ∂f/∂phi
};

EnergyGradients energy_backward(const DescriptorParams& phi, const Tensor& y);

using ImageGradFn = std::function<Tensor(const Tensor& y)>;

/// y <- y + (delta^2/2) (grad_f(y) - y/sigma_q^2) + delta * eps. Targets the
/// tilted density exp[f] q. Same divergence guard as the latent chain.
Tensor image_langevin(const ImageGradFn& grad_f, Tensor y, real delta, int steps, real sigma_q,
                      bool noise_enabled, std::uint64_t seed,
                      real divergence_bound = 1e3);

/// Batch sampling from the descriptor; chain i uses an independent noise
/// stream derived from (seed, i).
std::vector<Tensor> langevin_sample_images(const DescriptorParams& phi,
                                           const std::vector<Tensor>& y_init,
                                           const DescriptorConfig& dcfg, std::uint64_t seed,
                                           bool noise_enabled = true);

/// phi += lr * (mean over data of ∂f/∂phi - mean over synthesized of
/// ∂f/∂phi). Plain ascent; identical batches cancel exactly.
void descriptor_step(DescriptorParams& phi, const std::vector<Tensor>& y_data,
                     const std::vector<Tensor>& y_synth, real lr);

struct CoopResult {
  TrainingRun run;
  DescriptorParams descriptor;
};

/// Cooperative loop: per batch, (1) infer latents against the true images,
/// (2) generate, (3) revise the generations by descriptor Langevin,
/// (4) update the descriptor on data vs revised, (5) update the generator
/// toward the revised images.
CoopResult coop_train(GeneratorParams& params, const std::vector<Tensor>& images,
                      const GeneratorConfig& gcfg, const TrainConfig& tcfg,
                      const DescriptorConfig& dcfg, std::uint64_t seed);

}  // namespace sgao
