#pragma once

#include <vector>

#include <Eigen/Core>

#include "lmmscan/spectra.hpp"

namespace lmmscan {

// Split of the total variance sigma2: fraction eta flows through R, the
// rest is independent noise.
struct VarianceParams {
  double eta = 0.0;
  double sigma2 = 1.0;
};

struct CmOptions {
  std::vector<double> starts{0.01, 0.25, 0.5, 0.75, 0.99};
  double tol = 1e-8;     // stop when successive loglik improvements fall below
  int max_iter = 100;    // per start
  // Optional: records the best loglik after each accepted iteration.
  std::vector<double>* trace = nullptr;
};

struct MixedModelFit {
  Eigen::VectorXd beta;
  VarianceParams params;
  double loglik = 0.0;
  int n_iter = 0;
  bool converged = false;
  bool gls_approximation = false;
  // (X~' Sigma~^-1 X~)^-1, kept for standard errors of the coefficients.
  Eigen::MatrixXd xtwx_inverse;
};

struct AssociationResult {
  MixedModelFit fit_alt;
  MixedModelFit fit_null;
  double lrt = 0.0;
  int df = 1;
  double p_value = 1.0;
  double beta_snp = 0.0;
  double se_snp = 0.0;
};

enum class Method { cm, gls, lm };

// Log-likelihood of the rotated model at given parameters:
//   -(n/2)log(2 pi) - (n/2)log sigma2 - (1/2) sum log s_i
//   - (1/(2 sigma2)) sum (y_i - x_i beta)^2 / s_i,  s_i = eta*d_i + 1 - eta.
// Returns -inf if any s_i <= 0.
double loglik(const RotatedDataset& rd, const Eigen::VectorXd& beta,
              const VarianceParams& vp);

// Closed-form maximizer of (beta, sigma2) at fixed eta: weighted least
// squares with weights 1/s_i and the ML variance estimate. The returned
// loglik is the exact profile likelihood at eta.
struct ProfileFit {
  Eigen::VectorXd beta;
  double sigma2 = 0.0;
  double loglik = 0.0;
  Eigen::MatrixXd xtwx_inverse;
  bool clamped = false;  // some s_i hit the 1e-12 floor
};
ProfileFit profile_given_eta(const RotatedDataset& rd, double eta);

// Full ML fit: bounded one-dimensional search (golden section refined by
// parabolic interpolation) of the profile likelihood over eta in [0,1],
// run from each start and from both endpoints, keeping the best.
MixedModelFit fit_cm(const RotatedDataset& rd, const CmOptions& opts = {});

// Single profile evaluation at a fixed eta (the GLS approximation when
// eta comes from a null-model fit).
MixedModelFit fit_gls(const RotatedDataset& rd, double eta_fixed);

// Likelihood-ratio test of the columns the alternative design adds over
// the null design. method selects how both models are fitted; gls fixes
// eta at the null CM estimate, lm forces eta = 0.
AssociationResult assoc_test(const RotatedDataset& rd_null, const RotatedDataset& rd_alt,
                             Method method, const CmOptions& opts = {});

}  // namespace lmmscan
