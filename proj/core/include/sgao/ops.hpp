#pragma once

#include "sgao/tensor.hpp"

namespace sgao {

/// Result of the global top-k selection. `mask` holds exactly
/// `k_effective` ones and `values = input ⊙ mask`.
struct TopKResult {
  Tensor values;
  Tensor mask;
  int k_effective = 0;
};

/// Rectifier output with its activation mask (`mask = 1` where input > 0).
struct ReluResult {
  Tensor values;
  Tensor mask;
};

// ---------------------------------------------------------------------------
// affine: out[j] = sum_i x[i] * weight[i,j] + bias[j]
// ---------------------------------------------------------------------------

Tensor affine(const Tensor& x, const Tensor& weight, const Tensor& bias);

struct AffineBackward {
  Tensor d_input;
  Tensor d_weight;
  Tensor d_bias;
};

/// Vector-Jacobian products of `affine` for an upstream gradient `g`:
/// d_input = W·g, d_weight = x⊗g, d_bias = g.
AffineBackward affine_backward(const Tensor& x, const Tensor& weight, const Tensor& upstream);

// ---------------------------------------------------------------------------
// deconv2d: transposed convolution.
//
// Input {h, w, c_in}, kernel {c_in, k, k, c_out}, bias {c_out}.
// Each input activation scatters value*kernel into the output window anchored
// at (y*stride - pad, x*stride - pad), clipped to bounds; bias is added once
// per output element. Output extent per axis: (n-1)*stride + k - 2*pad.
// ---------------------------------------------------------------------------

int deconv_output_extent(int n, int kernel, int stride, int pad);

Tensor deconv2d(const Tensor& input, const Tensor& kernel, const Tensor& bias,
                int stride, int pad);

struct Deconv2dBackward {
  Tensor d_input;
  Tensor d_kernel;
  Tensor d_bias;
};

Deconv2dBackward deconv2d_backward(const Tensor& input, const Tensor& kernel,
                                   const Tensor& upstream, int stride, int pad);

// ---------------------------------------------------------------------------
// conv2d: strided correlation (bottom-up direction). Same kernel layout as
// deconv2d; c_in here is the input's channel count.
// Output extent per axis: (n + 2*pad - k) / stride + 1.
// ---------------------------------------------------------------------------

int conv_output_extent(int n, int kernel, int stride, int pad);

Tensor conv2d(const Tensor& input, const Tensor& kernel, const Tensor& bias,
              int stride, int pad);

struct Conv2dBackward {
  Tensor d_input;
  Tensor d_kernel;
  Tensor d_bias;
};

Conv2dBackward conv2d_backward(const Tensor& input, const Tensor& kernel,
                               const Tensor& upstream, int stride, int pad);

// ---------------------------------------------------------------------------
// Pointwise non-linearities.
// ---------------------------------------------------------------------------

/// Keeps the k largest elements of the whole tensor (spatial and channel
/// positions compete jointly), zeroes the rest. Ties break toward the lower
/// row-major linear index. k larger than numel clamps; the actual count is
/// reported in k_effective. Gradient contract: pass-through on the frozen
/// mask.
TopKResult topk(const Tensor& t, int k);

ReluResult relu(const Tensor& t);

Tensor tanh_map(const Tensor& t);

/// g * (1 - out^2), with `output` the forward tanh result.
Tensor tanh_backward(const Tensor& output, const Tensor& upstream);

}  // namespace sgao
