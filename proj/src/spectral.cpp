#include "lapcon/spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "lapcon/errors.hpp"
#include "lapcon/kernels.hpp"
#include "lapcon/scc.hpp"

namespace lapcon {

namespace {

Eigen::MatrixXd to_eigen(const SquareMatrix& m) {
  return Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
      m.data(), m.dim(), m.dim());
}

SquareMatrix from_eigen(const Eigen::MatrixXd& e) {
  SquareMatrix m(static_cast<int>(e.rows()));
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) m(i, j) = e(i, j);
  return m;
}

}  // namespace

std::vector<std::complex<double>> eigenvalues(const SquareMatrix& m) {
  Eigen::EigenSolver<Eigen::MatrixXd> solver(to_eigen(m), /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw Error(Errc::convergence_failure, "QR iteration did not converge");
  std::vector<std::complex<double>> vals(m.dim());
  for (int i = 0; i < m.dim(); ++i) vals[i] = solver.eigenvalues()(i);
  std::sort(vals.begin(), vals.end(), [](const auto& a, const auto& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return vals;
}

int numerical_rank(const SquareMatrix& m, double rank_tol) {
  if (!(rank_tol > 0.0)) throw std::invalid_argument("rank_tol must be positive");
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(m));
  const auto& sigma = svd.singularValues();
  if (sigma.size() == 0 || sigma(0) == 0.0) return 0;
  const double cutoff = rank_tol * sigma(0);
  int rank = 0;
  for (int i = 0; i < sigma.size(); ++i) rank += sigma(i) > cutoff ? 1 : 0;
  return rank;
}

SpectralReport spectral_report(const Digraph& g, double zero_tol, double rank_tol) {
  const SquareMatrix l = laplacian(g);
  SpectralReport rep;
  rep.eigenvalues = eigenvalues(l);
  rep.numerical_rank = numerical_rank(l, rank_tol);

  const double zero_cut = std::max(zero_tol * kernels::max_abs(l), 1e-12);
  rep.zero_multiplicity = 0;
  rep.localization_holds = true;
  for (const auto& lambda : rep.eigenvalues) {
    if (std::abs(lambda) <= zero_cut) {
      ++rep.zero_multiplicity;
      continue;
    }
    if (!(lambda.real() > 0.0)) rep.localization_holds = false;
    if (!rep.min_nonzero_real_part || lambda.real() < *rep.min_nonzero_real_part)
      rep.min_nonzero_real_part = lambda.real();
  }
  return rep;
}

Eigenprojector eigenprojector_at_zero(const Digraph& g) {
  const int d = in_forest_dimension(g);
  const SquareMatrix l = laplacian(g);

  // Null-space bases from the singular vectors for the d smallest singular
  // values; d comes from the sink-SCC count, thresholds play no role here.
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(l), Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::MatrixXd right_null = svd.matrixV().rightCols(d);  // ker L
  const Eigen::MatrixXd left_null = svd.matrixU().rightCols(d);   // ker L^T

  const Eigen::MatrixXd pairing = left_null.transpose() * right_null;  // d x d
  Eigen::FullPivLU<Eigen::MatrixXd> lu(pairing);
  lu.setThreshold(1e-10);
  if (!lu.isInvertible())
    throw Error(Errc::singular_pairing,
                "left/right kernel pairing is singular (d = " + std::to_string(d) + ")");

  Eigen::MatrixXd proj = right_null * lu.solve(left_null.transpose());
  Eigenprojector out;
  out.d = d;
  out.matrix = from_eigen(proj);
  return out;
}

}  // namespace lapcon
