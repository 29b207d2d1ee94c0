#include "sgao/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "sgao/errors.hpp"

namespace sgao {

namespace {

std::size_t checked_numel(const std::vector<int>& shape) {
  std::size_t n = 1;
  for (int e : shape) {
    if (e <= 0) throw DimensionError("non-positive extent in shape " + shape_string(shape));
    n *= static_cast<std::size_t>(e);
  }
  return n;
}

}  // namespace

Tensor::Tensor(std::vector<int> shape) : shape_(std::move(shape)) {
  data_.assign(checked_numel(shape_), real(0));
}

Tensor::Tensor(std::vector<int> shape, std::vector<real> values)
    : shape_(std::move(shape)), data_(std::move(values)) {
  if (checked_numel(shape_) != data_.size()) {
    throw DimensionError("value count " + std::to_string(data_.size()) +
                         " does not fill shape " + shape_string(shape_));
  }
}

Tensor Tensor::zeros(std::vector<int> shape) { return Tensor(std::move(shape)); }

Tensor Tensor::full(std::vector<int> shape, real value) {
  Tensor t(std::move(shape));
  std::fill(t.data_.begin(), t.data_.end(), value);
  return t;
}

Tensor Tensor::row(std::initializer_list<real> values) {
  return Tensor({static_cast<int>(values.size())}, std::vector<real>(values));
}

bool Tensor::all_finite() const {
  for (real v : data_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

int Tensor::count_nonzero() const {
  int n = 0;
  for (real v : data_) n += (v != real(0));
  return n;
}

real Tensor::sum() const {
  real s = 0;
  for (real v : data_) s += v;
  return s;
}

real Tensor::min() const {
  real m = std::numeric_limits<real>::infinity();
  for (real v : data_) m = std::min(m, v);
  return m;
}

real Tensor::max() const {
  real m = -std::numeric_limits<real>::infinity();
  for (real v : data_) m = std::max(m, v);
  return m;
}

real Tensor::squared_norm() const {
  real s = 0;
  for (real v : data_) s += v * v;
  return s;
}

real Tensor::dot(const Tensor& other) const {
  require_same_shape(*this, other, "dot");
  real s = 0;
  for (std::size_t i = 0; i < data_.size(); ++i) s += data_[i] * other.data_[i];
  return s;
}

Tensor Tensor::reshaped(std::vector<int> shape) const {
  if (checked_numel(shape) != data_.size()) {
    throw DimensionError("cannot reshape " + shape_string(shape_) + " to " + shape_string(shape));
  }
  return Tensor(std::move(shape), data_);
}

Tensor& Tensor::operator+=(const Tensor& other) {
  require_same_shape(*this, other, "add");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& other) {
  require_same_shape(*this, other, "subtract");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Tensor& Tensor::operator*=(real scalar) {
  for (real& v : data_) v *= scalar;
  return *this;
}

Tensor Tensor::hadamard(const Tensor& other) const {
  require_same_shape(*this, other, "hadamard");
  Tensor out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] *= other.data_[i];
  return out;
}

std::string shape_string(const std::vector<int>& shape) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (i) os << 'x';
    os << shape[i];
  }
  os << '}';
  return os.str();
}

void require_same_shape(const Tensor& a, const Tensor& b, const char* op) {
  if (a.shape() == b.shape()) return;
  if (a.rank() == b.rank()) {
    for (int axis = 0; axis < a.rank(); ++axis) {
      if (a.extent(axis) != b.extent(axis)) {
        throw DimensionError(std::string(op) + ": axis " + std::to_string(axis) +
                             " differs, " + shape_string(a.shape()) + " vs " +
                             shape_string(b.shape()));
      }
    }
  }
  throw DimensionError(std::string(op) + ": rank mismatch, " + shape_string(a.shape()) +
                       " vs " + shape_string(b.shape()));
}

}  // namespace sgao
