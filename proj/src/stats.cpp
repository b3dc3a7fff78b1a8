#include "lmmscan/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <gsl/gsl_cdf.h>
#include <gsl/gsl_integration.h>
#include <gsl/gsl_sf_gamma.h>

#include "lmmscan/error.hpp"

namespace lmmscan {

double chisq_upper_tail(double x, int df) {
  if (df < 1) throw NumericError("chisq_upper_tail: df must be >= 1");
  if (x <= 0.0) return 1.0;
  // Q(df/2, x/2), the regularized upper incomplete gamma function.
  return gsl_sf_gamma_inc_Q(0.5 * df, 0.5 * x);
}

double chisq_quantile(double p, int df) {
  if (p <= 0.0 || p >= 1.0) throw NumericError("chisq_quantile: p must be in (0,1)");
  return gsl_cdf_chisq_Pinv(p, static_cast<double>(df));
}

double log_gamma(double x) { return std::lgamma(x); }

double log_beta_pdf(double x, double r, double t) {
  if (x <= 0.0 || x >= 1.0) return -std::numeric_limits<double>::infinity();
  const double log_norm = std::lgamma(r + t) - std::lgamma(r) - std::lgamma(t);
  return log_norm + (r - 1.0) * std::log(x) + (t - 1.0) * std::log1p(-x);
}

QuadratureRule gauss_legendre(int n_points, double a, double b) {
  if (n_points < 1) throw NumericError("gauss_legendre: need at least one node");
  gsl_integration_glfixed_table* table =
      gsl_integration_glfixed_table_alloc(static_cast<std::size_t>(n_points));
  QuadratureRule rule;
  rule.nodes.resize(n_points);
  rule.weights.resize(n_points);
  for (int i = 0; i < n_points; ++i) {
    gsl_integration_glfixed_point(a, b, static_cast<std::size_t>(i), &rule.nodes[i],
                                  &rule.weights[i], table);
  }
  gsl_integration_glfixed_table_free(table);
  return rule;
}

double log_sum_exp(const std::vector<double>& v) {
  double hi = -std::numeric_limits<double>::infinity();
  for (double x : v) hi = std::max(hi, x);
  if (!std::isfinite(hi)) return hi;
  double acc = 0.0;
  for (double x : v) acc += std::exp(x - hi);
  return hi + std::log(acc);
}

double median(std::vector<double> v) {
  if (v.empty()) throw NumericError("median of empty sample");
  const std::size_t n = v.size();
  const std::size_t mid = n / 2;
  std::nth_element(v.begin(), v.begin() + mid, v.end());
  double upper = v[mid];
  if (n % 2 == 1) return upper;
  double lower = *std::max_element(v.begin(), v.begin() + mid);
  return 0.5 * (lower + upper);
}

double sorted_quantile(const std::vector<double>& sorted, double p) {
  if (sorted.empty()) throw NumericError("quantile of empty sample");
  if (p <= 0.0) return sorted.front();
  if (p >= 1.0) return sorted.back();
  const double pos = p * static_cast<double>(sorted.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(pos);
  const double frac = pos - static_cast<double>(lo);
  if (lo + 1 >= sorted.size()) return sorted.back();
  return (1.0 - frac) * sorted[lo] + frac * sorted[lo + 1];
}

}  // namespace lmmscan
