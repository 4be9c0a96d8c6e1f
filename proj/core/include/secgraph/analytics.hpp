#pragma once

#include <cmath>
#include <limits>
#include <numbers>

namespace secgraph::analytics {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Eavesdropper intensity lambda (relative to unit good-node intensity) and
/// transmission range r, which may be +inf.
struct ModelParams {
  double lambda = 0.0;
  double r = kInf;

  bool infinite_range() const noexcept { return std::isinf(r); }
};

/// Throws ParameterError unless lambda >= 0, r > 0, and (lambda, r) != (0, inf).
void validate(const ModelParams& p);

namespace constants {

/// Area of two unit disks whose centres are one unit apart, over pi.
inline const double c = 4.0 / 3.0 + std::sqrt(3.0) / (2.0 * std::numbers::pi);
/// Basic-degree CDF bounds: disk minus a cap of height R/2, and the R/2 disk.
inline const double bound_a = 2.0 / 3.0 + std::sqrt(3.0) / (4.0 * std::numbers::pi);
inline constexpr double bound_b = 0.25;
/// Exponential fit of the critical curve.
inline constexpr double fit_b = 4.0;
inline const double fit_a = 2.0 * std::numbers::sqrt2;
inline constexpr double lambda_inf_ref = 0.1499;
/// Gilbert's critical radius at unit intensity.
inline constexpr double r_gilbert_ref = 1.198;

}  // namespace constants

/// P[N_out = 0] = (exp(-pi r^2 (lambda+1)) + lambda) / (1 + lambda).
double out_isolation(const ModelParams& p);

/// P[N = 0] = c lambda / (c lambda + 1) for r = inf.
double basic_isolation(double lambda);

/// Gamma(n, a) / Gamma(n) for integer n >= 1, i.e. P[Poisson(a) < n].
/// Zero for n = 0.
double regularized_upper_gamma_int(int n, double a);

/// Complement 1 - Gamma(n, a)/Gamma(n) = P[Poisson(a) >= n], summed from
/// whichever side avoids cancellation.
double regularized_lower_gamma_int(int n, double a);

double out_degree_pmf(const ModelParams& p, int n);

double mean_out_degree(const ModelParams& p);
double mean_basic_degree(const ModelParams& p);
double mean_enhanced_degree(const ModelParams& p);

struct SecrecyRatios {
  double eta;
  double eta_prime;
};

/// Mean degree of the basic and enhanced graphs relative to the disk graph
/// mean pi r^2. Requires finite r.
SecrecyRatios secrecy_ratios(const ModelParams& p);

/// Limit of E N / E N' as lambda r^2 -> inf: 1 / (2c - 1).
double basic_to_enhanced_floor();

struct CdfBounds {
  double lower;
  double upper;
  double mean_lower;  ///< b / lambda
  double mean_upper;  ///< a / lambda
};

/// Geometric bounds on P[N <= n] in the basic graph for r = inf.
CdfBounds basic_cdf_bounds(double lambda, int n);

/// Power-limited vs. secrecy-limited description of E N_out(r) at fixed lambda.
class RegimeDescriptors {
 public:
  explicit RegimeDescriptors(double lambda);

  double lambda() const noexcept { return lambda_; }
  /// Inflection point of E N_out(r): (2 pi lambda)^{-1/2}.
  double r_transition() const noexcept { return r_t_; }
  /// Maximum slope of E N_out(r): sqrt(2 pi / (e lambda)).
  double slope() const noexcept { return slope_; }
  /// min(s r, 1/lambda), an upper bound on E N_out(r).
  double piecewise_bound(double r) const;
  /// Range achieving mean out-degree (1 - eps)/lambda.
  double r_eps(double eps) const;
  bool power_limited(double r) const;

 private:
  double lambda_;
  double r_t_;
  double slope_;
};

/// lambda_c(r) ~ lambda_inf - exp(a - b r), r > r_G.
double lambda_c_approx(double r);
/// r_c(lambda) ~ a/b - log(lambda_inf - lambda)/b, 0 <= lambda < lambda_inf.
double r_c_approx(double lambda);
/// r_G + lambda / (b lambda_inf), the linear lower bound implied by convexity.
double r_c_linear_lower_bound(double lambda);

struct CriticalGraphApprox {
  double p_isol;          ///< 1/80 + 4 lambda / 5
  double mean_deg_lower;  ///< pi r_G^2 + 11 lambda / 4
};

CriticalGraphApprox critical_graph_approx(double lambda);

/// r = (P / (Theta W))^{1/alpha}.
double range_from_power(double power, double theta, double noise, double alpha);

/// Density of the distance from a node to its nearest eavesdropper.
double nearest_eaves_pdf(double lambda, double x);
/// Mean 1/(2 sqrt(lambda)) of that density (Rayleigh reference for edge lengths).
double rayleigh_edge_mean(double lambda);
/// CDF 1 - exp(-pi lambda x^2).
double rayleigh_cdf(double lambda, double x);
/// Edge-length CDF x^2 / r^2 of the disk graph on [0, r].
double disk_edge_cdf(double r, double x);

}  // namespace secgraph::analytics
