#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "sgao/ops.hpp"
#include "sgao/tensor.hpp"

namespace sgao {

struct DeconvSpec {
  int kernel = 0;
  int stride = 1;
  int pad = 0;
  int out_channels = 0;
};

/// Architecture of the top-down sparse generator:
/// latent -> affine -> fm1 -> [topk -> relu -> deconv]* -> tanh.
/// Every feature map fm1..fmL carries the sparse operation (L = number of
/// deconv layers); the last deconv produces the image pre-activation, which
/// does not.
struct GeneratorConfig {
  int latent_dim = 20;
  std::array<int, 3> fc_shape = {2, 2, 64};  // {h, w, c} of fm1
  std::vector<DeconvSpec> layers;
  std::vector<int> top_k;  // one K per sparse feature map fm1..fmL
  real sigma = 0.3;
  int out_channels = 3;

  /// Throws ConfigError on inconsistent settings (top_k length, derived
  /// extents, channel counts, sigma).
  void validate() const;

  int num_sparse_maps() const { return static_cast<int>(layers.size()); }

  /// Shape of feature map i (1-based; i = layers.size()+1 is the image
  /// pre-activation).
  std::array<int, 3> feature_shape(int i) const;

  std::array<int, 3> image_shape() const;
  int image_numel() const;

  /// The stock desk-scale architecture: d=20, fm1 2x2x64 (K=4),
  /// deconv 6/2/2 -> 4x4x128 (K=32), deconv 6/4/1 -> 16x16x3.
  static GeneratorConfig stock();

  /// Minimal single-deconv architecture for gradient checks:
  /// d=2, fm1 2x2x2 (K=3), deconv 3/1/0 -> 4x4x1.
  static GeneratorConfig tiny();

  bool operator==(const GeneratorConfig&) const = default;
};

inline bool operator==(const DeconvSpec& a, const DeconvSpec& b) {
  return a.kernel == b.kernel && a.stride == b.stride && a.pad == b.pad &&
         a.out_channels == b.out_channels;
}

struct GeneratorParams {
  Tensor fc_weight;  // {latent_dim, h*w*c of fm1}
  Tensor fc_bias;    // {h*w*c of fm1}
  struct Layer {
    Tensor kernel;  // {c_in, k, k, c_out}
    Tensor bias;    // {c_out}
  };
  std::vector<Layer> layers;
};

/// Mirrors GeneratorParams; holds the ascent-direction gradients.
using GeneratorGrads = GeneratorParams;

/// Per-layer record of one forward pass: pre-activation, the two masks, and
/// the surviving sparse map (sparse = pre ⊙ mask_topk ⊙ mask_relu exactly).
struct SparseLayerTrace {
  Tensor pre;
  Tensor mask_topk;
  Tensor mask_relu;
  Tensor sparse;
  int k_effective = 0;  // ones in mask_topk
};

struct ForwardTrace {
  std::vector<SparseLayerTrace> layers;  // fm1..fmL
  Tensor preimage;                       // pre-tanh image tensor
  Tensor output;                         // tanh(preimage)
};

/// Weights i.i.d. N(0, 0.02), biases zero. Deterministic per seed.
GeneratorParams init_params(const GeneratorConfig& config, std::uint64_t seed);

Tensor forward(const GeneratorParams& params, const Tensor& z, const GeneratorConfig& config);

ForwardTrace forward_traced(const GeneratorParams& params, const Tensor& z,
                            const GeneratorConfig& config);

/// Re-evaluates the network at `z` with the non-linearities replaced by the
/// recorded masks. Reproduces the traced output bit-for-bit.
Tensor forward_frozen(const GeneratorParams& params, const Tensor& z, const ForwardTrace& trace,
                      const GeneratorConfig& config);

/// Pushes a tensor living in feature-map space `from_map` (2-based entry is
/// the first deconv output; from_map = L+1 is the image pre-activation) down
/// to the image pre-activation under the trace's frozen masks. `with_biases`
/// selects whether each traversed deconv adds its bias.
Tensor propagate_frozen(const GeneratorParams& params, const ForwardTrace& trace,
                        const GeneratorConfig& config, int from_map, Tensor x, bool with_biases);

/// log p(y, z) up to the additive constant:
/// -||y - g(z)||^2 / (2 sigma^2) - ||z||^2 / 2.
real log_joint(const GeneratorParams& params, const Tensor& z, const Tensor& y,
               const GeneratorConfig& config);

/// Exact reverse-mode gradient of log_joint with respect to z, masks frozen
/// at the forward pass.
Tensor grad_z_log_joint(const GeneratorParams& params, const Tensor& z, const Tensor& y,
                        const GeneratorConfig& config);

/// (1/sigma^2) (y_target - g(z)) ∂g/∂θ, masks frozen — the ascent direction
/// of the data term.
GeneratorGrads grad_theta(const GeneratorParams& params, const Tensor& z,
                          const Tensor& y_target, const GeneratorConfig& config);

/// Packed mask bits of every layer of a trace; identifies the active linear
/// region for gradient checking.
std::vector<std::uint8_t> mask_signature(const ForwardTrace& trace);

}  // namespace sgao
