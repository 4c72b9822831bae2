#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "lapcon/digraph.hpp"
#include "lapcon/matrix.hpp"

namespace lapcon {

inline constexpr double kDefaultZeroTol = 1e-9;   // relative to max |L|, floor 1e-12
inline constexpr double kDefaultRankTol = 1e-10;  // relative to largest singular value

/// All n eigenvalues with multiplicity, sorted by real part then imaginary
/// part. Throws convergence_failure if the QR iteration does not settle.
std::vector<std::complex<double>> eigenvalues(const SquareMatrix& m);

/// Count of singular values above rank_tol * sigma_max; 0 for the zero matrix.
int numerical_rank(const SquareMatrix& m, double rank_tol = kDefaultRankTol);

struct SpectralReport {
  std::vector<std::complex<double>> eigenvalues;  // sorted (re, im)
  int zero_multiplicity = 0;   // |lambda| <= effective zero tolerance
  int numerical_rank = 0;
  std::optional<double> min_nonzero_real_part;  // empty when all eigenvalues are zero
  bool localization_holds = false;  // every nonzero eigenvalue has Re > 0
};

/// For any valid digraph localization_holds must come out true; the nonzero
/// Laplacian eigenvalues of a digraph always have positive real parts.
SpectralReport spectral_report(const Digraph& g, double zero_tol = kDefaultZeroTol,
                               double rank_tol = kDefaultRankTol);

struct Eigenprojector {
  SquareMatrix matrix;  // real, idempotent, row sums 1
  int d = 0;            // kernel dimension used (sink-SCC count)
};

/// Projection onto ker(L) along range(L), via SVD null-space bases
/// Z (right) and W (left): Z (W^T Z)^{-1} W^T. The kernel dimension is taken
/// from the combinatorial d, not from singular-value thresholds. Throws
/// singular_pairing if W^T Z is numerically singular, which the
/// semisimplicity of the zero eigenvalue rules out for correct bases.
Eigenprojector eigenprojector_at_zero(const Digraph& g);

}  // namespace lapcon
