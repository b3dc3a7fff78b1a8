#pragma once

#include <memory>

#include <Eigen/Core>

#include "lmmscan/kinship.hpp"

namespace lmmscan {

// Eigendecomposition R = U D U^T of the relatedness matrix: the one O(n^3)
// computation, reused for every predictor set. Eigenvalues are stored in
// descending order with small negative values floored at zero; immutable
// after construction and safe to share across workers.
struct SpectralDecomposition {
  Eigen::Index n = 0;
  Eigen::VectorXd eigenvalues;  // D, descending, all >= 0
  Eigen::MatrixXd eigenvectors; // U, columns aligned with eigenvalues
};

SpectralDecomposition decompose(const RelatednessMatrix& r);
SpectralDecomposition decompose(const Eigen::MatrixXd& r);

// Data and design rotated into the diagonalizing basis: y_rot = U^T y,
// x_rot = U^T X. Carries a shared reference to the eigenvalues so per-SNP
// copies stay cheap.
struct RotatedDataset {
  Eigen::VectorXd y_rot;
  Eigen::MatrixXd x_rot;
  std::shared_ptr<const Eigen::VectorXd> eigenvalues;

  Eigen::Index n() const { return y_rot.size(); }
  Eigen::Index k() const { return x_rot.cols(); }

  // New dataset with one already-rotated design column appended. Covariate
  // columns are rotated once and reused; only the changing column costs a
  // fresh O(n^2) rotation.
  RotatedDataset with_column_appended(const Eigen::VectorXd& rotated_column) const;
};

RotatedDataset rotate(const SpectralDecomposition& d, const Eigen::VectorXd& y,
                      const Eigen::MatrixXd& x);

// Rotates a single vector (used for per-SNP columns).
Eigen::VectorXd rotate_vector(const SpectralDecomposition& d, const Eigen::VectorXd& v);

}  // namespace lmmscan
