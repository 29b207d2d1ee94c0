#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "sgao/tensor.hpp"

namespace sgao {

/// One evaluation of a piecewise-smooth scalar function. `signature`
/// identifies the active linear region (packed top-k / relu masks); two
/// evaluations are comparable only when their signatures agree.
struct ScalarProbe {
  real value = 0;
  std::vector<std::uint8_t> signature;
};

using ScalarFn = std::function<ScalarProbe(const Tensor&)>;

struct GradCheckReport {
  real max_rel_err = 0;
  int checked = 0;
  int skipped = 0;
  std::vector<int> skipped_coords;

  /// False when every coordinate straddled a mask boundary; the check
  /// then says nothing either way.
  bool conclusive() const { return checked > 0; }
};

/// Central-difference check of `analytic_grad` against `f` around `x`.
/// A coordinate is skipped (and reported) when the two probes at x ± h
/// carry different mask signatures. Error metric per coordinate:
/// |analytic - central| / max(1, |analytic|).
///
/// `max_coords` < 0 checks every coordinate; otherwise that many are
/// sampled without replacement using `seed`.
GradCheckReport grad_check(const ScalarFn& f, const Tensor& x, const Tensor& analytic_grad,
                           real h, int max_coords = -1, std::uint64_t seed = 0);

}  // namespace sgao
