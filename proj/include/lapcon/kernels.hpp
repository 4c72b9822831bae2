#pragma once

#include <span>

#include "lapcon/matrix.hpp"

namespace lapcon::kernels {

/// Serial reference implementations, kept as the ground truth the parallel
/// kernels are tested against.
void matmul_serial(const SquareMatrix& a, const SquareMatrix& b, SquareMatrix& out);
void matvec_serial(const SquareMatrix& a, std::span<const double> x, std::span<double> out);

/// OpenMP kernels. Fall back to the serial path below a size threshold where
/// thread startup dominates.
void matmul(const SquareMatrix& a, const SquareMatrix& b, SquareMatrix& out);
void matvec(const SquareMatrix& a, std::span<const double> x, std::span<double> out);

SquareMatrix matmul(const SquareMatrix& a, const SquareMatrix& b);

/// out += s * a, elementwise.
void add_scaled(SquareMatrix& out, const SquareMatrix& a, double s);

double max_abs(const SquareMatrix& a);
double max_abs_diff(const SquareMatrix& a, const SquareMatrix& b);
double max_abs_diff(std::span<const double> a, std::span<const double> b);

}  // namespace lapcon::kernels
