#include "secgraph/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "secgraph/error.hpp"

namespace secgraph::analytics {

namespace {

using std::numbers::pi;
using detail::require;

// log of the Poisson(a) pmf at k by running sum of log(a/j).
class PoissonLogTerms {
 public:
  explicit PoissonLogTerms(double a) : a_(a), log_term_(-a) {}
  double log_term() const noexcept { return log_term_; }
  int k() const noexcept { return k_; }
  void advance() {
    ++k_;
    log_term_ += std::log(a_ / k_);
  }

 private:
  double a_;
  double log_term_;
  int k_ = 0;
};

double poisson_pmf(double a, int n) {
  PoissonLogTerms t(a);
  while (t.k() < n) t.advance();
  return std::exp(t.log_term());
}

// numerator / (1 + lambda)^{n+1}, in log space when the power would overflow.
double divide_by_power(double numerator, double lambda, int n) {
  const double log_den = (n + 1.0) * std::log1p(lambda);
  if (log_den < 700.0) return numerator / std::pow(1.0 + lambda, n + 1);
  if (numerator <= 0.0) return 0.0;
  return std::exp(std::log(numerator) - log_den);
}

}  // namespace

void validate(const ModelParams& p) {
  require(std::isfinite(p.lambda) && p.lambda >= 0.0, "lambda must be finite and >= 0");
  require(!std::isnan(p.r) && p.r > 0.0, "r must be > 0 (or inf)");
  require(!(p.lambda == 0.0 && p.infinite_range()), "(lambda, r) = (0, inf) is degenerate");
}

double out_isolation(const ModelParams& p) {
  validate(p);
  if (p.infinite_range()) return p.lambda / (p.lambda + 1.0);
  const double a = pi * p.r * p.r * (p.lambda + 1.0);
  return (std::exp(-a) + p.lambda) / (1.0 + p.lambda);
}

double basic_isolation(double lambda) {
  require(std::isfinite(lambda) && lambda >= 0.0, "lambda must be finite and >= 0");
  const double cl = constants::c * lambda;
  return cl / (cl + 1.0);
}

double regularized_upper_gamma_int(int n, double a) {
  require(n >= 0, "gamma order must be >= 0");
  require(a >= 0.0 && !std::isnan(a), "gamma argument must be >= 0");
  if (n == 0) return 0.0;
  PoissonLogTerms t(a);
  double sum = std::exp(t.log_term());
  while (t.k() + 1 < n) {
    t.advance();
    sum += std::exp(t.log_term());
  }
  return std::min(sum, 1.0);
}

double regularized_lower_gamma_int(int n, double a) {
  require(n >= 0, "gamma order must be >= 0");
  require(a >= 0.0 && !std::isnan(a), "gamma argument must be >= 0");
  if (n == 0) return 1.0;
  if (n <= a) return 1.0 - regularized_upper_gamma_int(n, a);
  // Tail sum: terms decrease geometrically once k > a.
  PoissonLogTerms t(a);
  while (t.k() < n) t.advance();
  double sum = 0.0;
  for (;;) {
    const double term = std::exp(t.log_term());
    sum += term;
    if (term <= sum * 1e-18 || term == 0.0) break;
    t.advance();
  }
  return std::min(sum, 1.0);
}

double out_degree_pmf(const ModelParams& p, int n) {
  validate(p);
  require(n >= 0, "degree must be >= 0");
  if (p.lambda == 0.0) return poisson_pmf(pi * p.r * p.r, n);
  if (p.infinite_range()) {
    const double head = p.lambda / (1.0 + p.lambda);
    const double log_tail = n * std::log1p(p.lambda);
    if (log_tail < 700.0) return head / std::pow(1.0 + p.lambda, n);
    return std::exp(std::log(head) - log_tail);
  }
  const double a = pi * p.r * p.r * (p.lambda + 1.0);
  const double numerator = p.lambda * regularized_lower_gamma_int(n, a) + poisson_pmf(a, n);
  return divide_by_power(numerator, p.lambda, n);
}

double mean_out_degree(const ModelParams& p) {
  validate(p);
  if (p.lambda == 0.0) return pi * p.r * p.r;
  if (p.infinite_range()) return 1.0 / p.lambda;
  return -std::expm1(-p.lambda * pi * p.r * p.r) / p.lambda;
}

double mean_basic_degree(const ModelParams& p) {
  validate(p);
  if (p.lambda == 0.0) return pi * p.r * p.r;
  const double cl = constants::c * p.lambda;
  if (p.infinite_range()) return 1.0 / cl;
  return -std::expm1(-cl * pi * p.r * p.r) / cl;
}

double mean_enhanced_degree(const ModelParams& p) {
  return 2.0 * mean_out_degree(p) - mean_basic_degree(p);
}

SecrecyRatios secrecy_ratios(const ModelParams& p) {
  validate(p);
  require(!p.infinite_range(), "secrecy ratios need a finite range");
  const double disk = pi * p.r * p.r;
  return {mean_basic_degree(p) / disk, mean_enhanced_degree(p) / disk};
}

double basic_to_enhanced_floor() { return 1.0 / (2.0 * constants::c - 1.0); }

CdfBounds basic_cdf_bounds(double lambda, int n) {
  require(std::isfinite(lambda) && lambda > 0.0, "lambda must be > 0");
  require(n >= 0, "n must be >= 0");
  const double a = constants::bound_a;
  const double b = constants::bound_b;
  return {
      -std::expm1((n + 1.0) * std::log(a / (a + lambda))),
      -std::expm1((n + 1.0) * std::log(b / (b + lambda))),
      b / lambda,
      a / lambda,
  };
}

RegimeDescriptors::RegimeDescriptors(double lambda) : lambda_(lambda) {
  require(std::isfinite(lambda) && lambda > 0.0, "lambda must be > 0");
  r_t_ = 1.0 / std::sqrt(2.0 * pi * lambda);
  slope_ = std::sqrt(2.0 * pi / (std::numbers::e * lambda));
}

double RegimeDescriptors::piecewise_bound(double r) const {
  return std::min(slope_ * r, 1.0 / lambda_);
}

double RegimeDescriptors::r_eps(double eps) const {
  require(eps > 0.0 && eps < 1.0, "eps must lie in (0, 1)");
  return std::sqrt(-std::log(eps) / (lambda_ * pi));
}

bool RegimeDescriptors::power_limited(double r) const { return 2.0 * pi * r * r < 1.0 / lambda_; }

double lambda_c_approx(double r) {
  require(r >= constants::r_gilbert_ref, "lambda_c approximation needs r >= r_G");
  return constants::lambda_inf_ref - std::exp(constants::fit_a - constants::fit_b * r);
}

double r_c_approx(double lambda) {
  require(lambda >= 0.0 && lambda < constants::lambda_inf_ref,
          "r_c approximation needs 0 <= lambda < lambda_inf");
  return constants::fit_a / constants::fit_b -
         std::log(constants::lambda_inf_ref - lambda) / constants::fit_b;
}

double r_c_linear_lower_bound(double lambda) {
  require(lambda >= 0.0 && lambda < constants::lambda_inf_ref,
          "linear bound needs 0 <= lambda < lambda_inf");
  return constants::r_gilbert_ref + lambda / (constants::fit_b * constants::lambda_inf_ref);
}

CriticalGraphApprox critical_graph_approx(double lambda) {
  require(lambda >= 0.0 && std::isfinite(lambda), "lambda must be >= 0");
  const double rg = constants::r_gilbert_ref;
  return {1.0 / 80.0 + 0.8 * lambda, pi * rg * rg + 2.75 * lambda};
}

double range_from_power(double power, double theta, double noise, double alpha) {
  require(power > 0.0 && theta > 0.0 && noise > 0.0 && alpha > 0.0,
          "power, SNR threshold, noise and path-loss exponent must be > 0");
  return std::pow(power / (theta * noise), 1.0 / alpha);
}

double nearest_eaves_pdf(double lambda, double x) {
  require(lambda > 0.0, "lambda must be > 0");
  if (x < 0.0) return 0.0;
  return 2.0 * pi * lambda * x * std::exp(-pi * lambda * x * x);
}

double rayleigh_edge_mean(double lambda) {
  require(lambda > 0.0, "lambda must be > 0");
  return 0.5 / std::sqrt(lambda);
}

double rayleigh_cdf(double lambda, double x) {
  if (x <= 0.0) return 0.0;
  return -std::expm1(-pi * lambda * x * x);
}

double disk_edge_cdf(double r, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= r) return 1.0;
  return (x * x) / (r * r);
}

}  // namespace secgraph::analytics
