#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

namespace lapcon {

/// Dense row-major square matrix. Treated as immutable once an operation
/// returns it; all analysis routines take it by const reference.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0.0) {}

  static SquareMatrix identity(int n) {
    SquareMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  int dim() const { return n_; }

  double& operator()(int i, int j) {
    assert(i >= 0 && i < n_ && j >= 0 && j < n_);
    return data_[static_cast<std::size_t>(i) * n_ + j];
  }
  double operator()(int i, int j) const {
    assert(i >= 0 && i < n_ && j >= 0 && j < n_);
    return data_[static_cast<std::size_t>(i) * n_ + j];
  }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  std::size_t size() const { return data_.size(); }

  bool operator==(const SquareMatrix&) const = default;

 private:
  int n_ = 0;
  std::vector<double> data_;
};

}  // namespace lapcon
