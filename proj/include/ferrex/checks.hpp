#ifndef FERREX_CHECKS_HPP
#define FERREX_CHECKS_HPP

#include <map>
#include <string>
#include <vector>

#include "ferrex/polynomials.hpp"

namespace ferrex {

struct CheckReport {
  std::string check_name;
  std::map<std::string, double> params;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  double tol = 0.0;
  bool passed = false;
};

// abs_err = |lhs - rhs|; rel_err relative to max(|lhs|, |rhs|);
// passed <=> rel_err <= tol or abs_err <= tol * atol_scale.
CheckReport make_report(std::string name,
                        std::map<std::string, double> params, double lhs,
                        double rhs, double tol, double atol_scale = 1.0);

// JSON array with field names exactly:
// check_name, params, lhs, rhs, abs_err, rel_err, tol, passed.
std::string reports_to_json(const std::vector<CheckReport>& reports);

enum class OrthFamily {
  ferrers_p_mu,
  ferrers_p_pos,
  ferrers_mixed,
  ferrers_q,
  gegenbauer,
  chebyshev_trig,
};

// Quadrature of the product pair over (-1,1) against the closed-form norm.
// params keys: "mu" (ferrers_p_mu, gegenbauer), "n" (ferrers_p_pos,
// ferrers_mixed, ferrers_q), "kind" in {1,2} (chebyshev_trig).
CheckReport orthogonality_check(OrthFamily family,
                                const std::map<std::string, double>& params,
                                int k, int k_prime);

CheckReport christoffel_darboux_check(double mu, int n, double x,
                                      double x_prime, bool confluent,
                                      bool second_kind);

struct PoissonKernelInstance {
  double lambda = 0.0;
  double t = 0.0;       // |t| < 1
  double theta = 0.0;   // in (0, pi)
  double theta_prime = 0.0;
  double chi = 0.0;     // recomputed from the other fields
};

PoissonKernelInstance make_poisson_instance(double lambda, double t,
                                            double theta, double theta_prime);

enum class PoissonVariant { k0, k1, k2, addition };

CheckReport poisson_kernel_check(const PoissonKernelInstance& inst,
                                 PoissonVariant variant, int n_terms);

enum class GenFunVariant { alg0, alg1, alg2, p0, p1, p2, gauss };

CheckReport generating_function_check(double lambda, double t, double x,
                                      GenFunVariant variant, int n_terms,
                                      double gamma = 0.0);

enum class IntegralVariant { askey_razban, power_expansion, genfun_integral };

CheckReport definite_integral_check(IntegralVariant variant,
                                    const std::map<std::string, double>& params);

double mehler_heine_residual(double lambda, double z, int n);
double hermite_limit_residual(int n, double x, double lambda);
double gegenbauer_large_lambda_residual(int n, double x, double lambda);

CheckReport sobolev_bilinear_form(int N, int k, int k_prime);

CheckReport closure_projection_check(double mu, const PolynomialCoeffs& f,
                                     double x_eval, int n_max,
                                     double tol = 1e-10);

CheckReport closure_series_check(double lambda, double gamma, double x,
                                 int n_max);

enum class Suite {
  orthogonality,
  christoffel_darboux,
  poisson,
  generating,
  integrals,
  asymptotics,
  sobolev,
  closure,
  all,
};

// Parse a suite name ("orthogonality", ..., "all"); returns false on an
// unknown name.
bool parse_suite(const std::string& name, Suite* out);

// Registered acceptance grid for the suite; individual failures are
// reported, not thrown.
std::vector<CheckReport> run_suite(Suite suite);

}  // namespace ferrex

#endif
