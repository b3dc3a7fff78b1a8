#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace lmmscan {

// Upper tail of the chi-square distribution with df degrees of freedom,
// evaluated through the regularized incomplete gamma function Q(df/2, x/2).
// Returns 1 at x <= 0.
double chisq_upper_tail(double x, int df);

// Quantile of chi-square(df): x such that P(X <= x) = p.
double chisq_quantile(double p, int df);

double log_gamma(double x);

// log of the Beta(r, t) density at x in (0, 1).
double log_beta_pdf(double x, double r, double t);

// Gauss-Legendre nodes and weights for integrating over [a, b].
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
QuadratureRule gauss_legendre(int n_points, double a, double b);

// log(sum(exp(v))) without overflow; -inf for empty input.
double log_sum_exp(const std::vector<double>& v);

// Median of a sample (midpoint of central order statistics for even length).
double median(std::vector<double> v);

// Linearly interpolated empirical quantile, p in [0, 1], of a sorted sample.
double sorted_quantile(const std::vector<double>& sorted, double p);

}  // namespace lmmscan
