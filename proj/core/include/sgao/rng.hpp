#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sgao/tensor.hpp"

namespace sgao {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Stable derivation of independent stream seeds from a master seed.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0) {
  return splitmix64(splitmix64(base + 0x632be59bd9b4e019ull * (a + 1)) ^
                    splitmix64(b + 0x9e3779b97f4a7c15ull));
}

/// Seeded random stream. One instance per logical stream; never shared.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  real gauss() { return gauss_(engine_); }
  real uniform() { return uniform_(engine_); }

  /// Uniform integer in [lo, hi], inclusive.
  int uniform_int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(engine_);
  }

  void fill_gauss(Tensor& t, real mean, real stddev) {
    for (int i = 0; i < t.numel(); ++i) t[i] = mean + stddev * gauss();
  }

  Tensor gauss_vector(int n) {
    Tensor z({n});
    fill_gauss(z, 0.0, 1.0);
    return z;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
      std::swap(v[static_cast<std::size_t>(i)],
                v[static_cast<std::size_t>(uniform_int(0, i))]);
    }
  }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<real> gauss_{0.0, 1.0};
  std::uniform_real_distribution<real> uniform_{0.0, 1.0};
};

}  // namespace sgao
