#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace sgao {

#ifdef SGAO_SINGLE_PRECISION
using real = float;
#else
using real = double;
#endif

/// Dense row-major tensor of reals. The one value type the whole library
/// moves around.
///
/// Layout conventions:
///   rank-1  {n}                    vectors, biases
///   rank-2  {rows, cols}           matrices (affine weights: {in, out})
///   rank-3  {height, width, chan}  feature maps and images
///   rank-4  {c_in, k, k, c_out}    convolution / deconvolution kernels
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<int> shape);
  Tensor(std::vector<int> shape, std::vector<real> values);

  static Tensor zeros(std::vector<int> shape);
  static Tensor full(std::vector<int> shape, real value);
  static Tensor row(std::initializer_list<real> values);

  const std::vector<int>& shape() const { return shape_; }
  int rank() const { return static_cast<int>(shape_.size()); }
  int extent(int axis) const { return shape_[static_cast<std::size_t>(axis)]; }
  int numel() const { return static_cast<int>(data_.size()); }
  bool empty() const { return data_.empty(); }

  real* data() { return data_.data(); }
  const real* data() const { return data_.data(); }
  const std::vector<real>& values() const { return data_; }

  real operator[](int i) const { return data_[static_cast<std::size_t>(i)]; }
  real& operator[](int i) { return data_[static_cast<std::size_t>(i)]; }

  // rank-3 {h, w, c} accessors
  real at(int y, int x, int c) const { return data_[index3(y, x, c)]; }
  real& at(int y, int x, int c) { return data_[index3(y, x, c)]; }
  std::size_t index3(int y, int x, int c) const {
    return (static_cast<std::size_t>(y) * shape_[1] + x) * shape_[2] + c;
  }

  // rank-4 {c_in, k, k, c_out} accessors
  real at4(int a, int b, int c, int d) const { return data_[index4(a, b, c, d)]; }
  real& at4(int a, int b, int c, int d) { return data_[index4(a, b, c, d)]; }
  std::size_t index4(int a, int b, int c, int d) const {
    return ((static_cast<std::size_t>(a) * shape_[1] + b) * shape_[2] + c) * shape_[3] + d;
  }

  bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }
  bool all_finite() const;
  int count_nonzero() const;

  real sum() const;
  real min() const;
  real max() const;
  real squared_norm() const;
  real dot(const Tensor& other) const;

  /// Same data, new shape (element count must match).
  Tensor reshaped(std::vector<int> shape) const;

  Tensor& operator+=(const Tensor& other);
  Tensor& operator-=(const Tensor& other);
  Tensor& operator*=(real scalar);
  Tensor hadamard(const Tensor& other) const;

  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(Tensor a, real s) { return a *= s; }
  friend Tensor operator*(real s, Tensor a) { return a *= s; }

  bool operator==(const Tensor& other) const {
    return shape_ == other.shape_ && data_ == other.data_;
  }

 private:
  std::vector<int> shape_;
  std::vector<real> data_;
};

std::string shape_string(const std::vector<int>& shape);

/// Throws DimensionError when the shapes differ, naming the first
/// offending axis.
void require_same_shape(const Tensor& a, const Tensor& b, const char* op);

}  // namespace sgao
