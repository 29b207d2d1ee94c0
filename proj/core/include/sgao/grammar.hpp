#pragma once

#include <span>
#include <string>
#include <vector>

#include "sgao/generator.hpp"
#include "sgao/tensor.hpp"

namespace sgao {

/// One surviving channel at a spatial location: a selected alternative from
/// the layer's channel dictionary, with its coefficient.
struct OrNode {
  int channel = 0;
  real coeff = 0;
  /// Position within the layer's surviving set when ordered by descending
  /// coefficient (ties by row-major position).
  int rank = 0;
};

/// A spatial location with at least one surviving activation.
struct AndNode {
  int x = 0;  // column
  int y = 0;  // row
  std::vector<OrNode> or_nodes;
};

struct LayerParse {
  int layer = 0;  // 1-based feature-map index
  int k_total = 0;
  std::vector<AndNode> and_nodes;
};

struct ParseGraph {
  std::vector<LayerParse> layers;
};

bool operator==(const OrNode& a, const OrNode& b);
bool operator==(const AndNode& a, const AndNode& b);
bool operator==(const LayerParse& a, const LayerParse& b);
bool operator==(const ParseGraph& a, const ParseGraph& b);

/// A surviving activation of one layer, in rank order.
struct Activation {
  int y = 0;
  int x = 0;
  int channel = 0;
  std::size_t flat = 0;  // row-major position in the feature map
  real coeff = 0;
};

/// Strictly positive entries of the layer's sparse map, ordered by
/// descending coefficient (ties by row-major position).
std::vector<Activation> surviving_activations(const ForwardTrace& trace, int layer);

/// Groups each layer's surviving activations into AND nodes (locations) of
/// OR nodes (channels). Throws TraceError when the trace has no recorded
/// masks.
ParseGraph parse_graph(const ForwardTrace& trace);

/// Feature map of layer `layer` with every activation but the j-th zeroed.
Tensor single_activation_map(const ForwardTrace& trace, int layer, int j);

struct ScaledBasis {
  real coeff = 0;
  Tensor basis;
};

/// Next-layer basis of activation j: coeff * basis is its contribution to
/// the next pre-activation, with the layer bias split uniformly across the
/// layer's surviving activations.
ScaledBasis basis_H(const GeneratorParams& params, const ForwardTrace& trace,
                    const GeneratorConfig& config, int layer, int j);

/// Image-space synthesis basis of activation j: the single-activation map
/// pushed to the image pre-activation under frozen masks, the bias of every
/// traversed layer split by the same surviving count, divided by the
/// coefficient.
ScaledBasis synthesis_basis_B(const GeneratorParams& params, const ForwardTrace& trace,
                              const GeneratorConfig& config, int layer, int j);

/// tanh of the summed synthesis contributions of one layer; equals the
/// traced output up to float round-off.
Tensor reconstruct_from_layer(const GeneratorParams& params, const ForwardTrace& trace,
                              const GeneratorConfig& config, int layer);

/// Reconstruction with the listed activations' coefficients set to zero
/// (their bias share remains).
Tensor ablate(const GeneratorParams& params, const ForwardTrace& trace,
              const GeneratorConfig& config, int layer, std::span<const int> drop);

/// Canonical JSON text: sorted keys, shortest round-trip floats.
std::string export_parse_graph(const ParseGraph& graph);

ParseGraph import_parse_graph(const std::string& json_text);

void write_parse_graph(const std::string& path, const ParseGraph& graph);
ParseGraph read_parse_graph(const std::string& path);

/// Every surviving activation of one layer with both bases materialized.
struct BasisAtlas {
  int layer = 0;
  struct Entry {
    int x = 0;
    int y = 0;
    int channel = 0;
    real coeff = 0;
    Tensor basis_next;   // H, next-feature-map shaped
    Tensor basis_image;  // B, image shaped
  };
  std::vector<Entry> entries;
};

BasisAtlas build_atlas(const GeneratorParams& params, const ForwardTrace& trace,
                       const GeneratorConfig& config, int layer);

}  // namespace sgao
