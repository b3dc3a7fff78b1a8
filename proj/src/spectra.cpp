#include "lmmscan/spectra.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "lmmscan/error.hpp"

namespace lmmscan {

SpectralDecomposition decompose(const Eigen::MatrixXd& r) {
  if (r.rows() != r.cols()) throw NumericError("decompose: matrix not square");
  if (!r.allFinite()) throw NumericError("decompose: non-finite entries in relatedness matrix");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(r);
  if (solver.info() != Eigen::Success)
    throw NumericError("decompose: eigensolver failed to converge");

  const Eigen::Index n = r.rows();
  SpectralDecomposition d;
  d.n = n;
  d.eigenvalues.resize(n);
  d.eigenvectors.resize(n, n);

  // Eigen returns ascending order; store descending for deterministic caching.
  for (Eigen::Index i = 0; i < n; ++i) {
    d.eigenvalues[i] = solver.eigenvalues()[n - 1 - i];
    d.eigenvectors.col(i) = solver.eigenvectors().col(n - 1 - i);
  }

  const double lambda_max = std::max(d.eigenvalues[0], 0.0);
  const double abort_floor = -1e-6 * std::max(lambda_max, 1.0);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (d.eigenvalues[i] < abort_floor)
      throw NumericError("decompose: matrix is not positive semidefinite");
    if (d.eigenvalues[i] < 0.0) d.eigenvalues[i] = 0.0;
  }
  return d;
}

SpectralDecomposition decompose(const RelatednessMatrix& r) { return decompose(r.values); }

RotatedDataset rotate(const SpectralDecomposition& d, const Eigen::VectorXd& y,
                      const Eigen::MatrixXd& x) {
  if (y.size() != d.n || x.rows() != d.n)
    throw NumericError("rotate: dimension mismatch with decomposition");
  RotatedDataset rd;
  rd.y_rot = d.eigenvectors.transpose() * y;
  rd.x_rot = d.eigenvectors.transpose() * x;
  rd.eigenvalues = std::make_shared<const Eigen::VectorXd>(d.eigenvalues);
  return rd;
}

Eigen::VectorXd rotate_vector(const SpectralDecomposition& d, const Eigen::VectorXd& v) {
  if (v.size() != d.n) throw NumericError("rotate: dimension mismatch with decomposition");
  return d.eigenvectors.transpose() * v;
}

RotatedDataset RotatedDataset::with_column_appended(const Eigen::VectorXd& rotated_column) const {
  if (rotated_column.size() != y_rot.size())
    throw NumericError("with_column_appended: dimension mismatch");
  RotatedDataset out;
  out.y_rot = y_rot;
  out.x_rot.resize(x_rot.rows(), x_rot.cols() + 1);
  out.x_rot.leftCols(x_rot.cols()) = x_rot;
  out.x_rot.col(x_rot.cols()) = rotated_column;
  out.eigenvalues = eigenvalues;
  return out;
}

}  // namespace lmmscan
