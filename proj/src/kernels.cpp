#include "lapcon/kernels.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstddef>

namespace lapcon::kernels {

namespace {
// Below this dimension, thread startup costs more than the multiply.
constexpr int kParallelThreshold = 64;
}  // namespace

void matmul_serial(const SquareMatrix& a, const SquareMatrix& b, SquareMatrix& out) {
  const int n = a.dim();
  assert(b.dim() == n && out.dim() == n);
  const double* pa = a.data();
  const double* pb = b.data();
  double* po = out.data();
  for (int i = 0; i < n; ++i) {
    double* row = po + static_cast<std::size_t>(i) * n;
    std::fill(row, row + n, 0.0);
    for (int k = 0; k < n; ++k) {
      const double aik = pa[static_cast<std::size_t>(i) * n + k];
      const double* brow = pb + static_cast<std::size_t>(k) * n;
      for (int j = 0; j < n; ++j) row[j] += aik * brow[j];
    }
  }
}

void matmul(const SquareMatrix& a, const SquareMatrix& b, SquareMatrix& out) {
  const int n = a.dim();
  assert(b.dim() == n && out.dim() == n);
  if (n < kParallelThreshold) {
    matmul_serial(a, b, out);
    return;
  }
  const double* pa = a.data();
  const double* pb = b.data();
  double* po = out.data();
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    double* row = po + static_cast<std::size_t>(i) * n;
    std::fill(row, row + n, 0.0);
    for (int k = 0; k < n; ++k) {
      const double aik = pa[static_cast<std::size_t>(i) * n + k];
      const double* brow = pb + static_cast<std::size_t>(k) * n;
      for (int j = 0; j < n; ++j) row[j] += aik * brow[j];
    }
  }
}

SquareMatrix matmul(const SquareMatrix& a, const SquareMatrix& b) {
  SquareMatrix out(a.dim());
  matmul(a, b, out);
  return out;
}

void matvec_serial(const SquareMatrix& a, std::span<const double> x, std::span<double> out) {
  const int n = a.dim();
  assert(static_cast<int>(x.size()) == n && static_cast<int>(out.size()) == n);
  const double* pa = a.data();
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    const double* row = pa + static_cast<std::size_t>(i) * n;
    for (int j = 0; j < n; ++j) s += row[j] * x[j];
    out[i] = s;
  }
}

void matvec(const SquareMatrix& a, std::span<const double> x, std::span<double> out) {
  const int n = a.dim();
  if (n < kParallelThreshold) {
    matvec_serial(a, x, out);
    return;
  }
  const double* pa = a.data();
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    const double* row = pa + static_cast<std::size_t>(i) * n;
    for (int j = 0; j < n; ++j) s += row[j] * x[j];
    out[i] = s;
  }
}

void add_scaled(SquareMatrix& out, const SquareMatrix& a, double s) {
  assert(out.dim() == a.dim());
  double* po = out.data();
  const double* pa = a.data();
  const std::size_t len = out.size();
  for (std::size_t k = 0; k < len; ++k) po[k] += s * pa[k];
}

double max_abs(const SquareMatrix& a) {
  double m = 0.0;
  const double* pa = a.data();
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(pa[k]));
  return m;
}

double max_abs_diff(const SquareMatrix& a, const SquareMatrix& b) {
  assert(a.dim() == b.dim());
  double m = 0.0;
  const double* pa = a.data();
  const double* pb = b.data();
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(pa[k] - pb[k]));
  return m;
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

}  // namespace lapcon::kernels
