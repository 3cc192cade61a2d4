#include "ferrex/hypergeometric.hpp"

#include <cmath>
#include <cstddef>

#include "ferrex/errors.hpp"
#include "ferrex/gamma.hpp"

namespace ferrex {

namespace {

constexpr double kSnapTol = 1e-12;

// Snap a parameter that is within 1e-12 of a non-positive integer, so float
// drift cannot turn a terminating polynomial into a divergent series.
double snap(double a) {
  if (a <= 0.5 && near_integer(a, kSnapTol)) return std::round(a);
  return a;
}

}  // namespace

int termination_index(const HypergeometricSpec& spec) {
  int best = -1;
  for (double a : spec.numerator_params) {
    int k;
    if (is_nonpositive_integer(a, &k, kSnapTol))
      if (best < 0 || k < best) best = k;
  }
  return best;
}

SeriesResult hyp_pfq(const HypergeometricSpec& spec, double tol,
                     int max_terms) {
  HypergeometricSpec s = spec;
  for (double& a : s.numerator_params) a = snap(a);
  for (double& b : s.denominator_params) b = snap(b);

  const int n_term = termination_index(s);

  // A denominator pole is tolerable only when termination hits first.
  for (double b : s.denominator_params) {
    int kb;
    if (is_nonpositive_integer(b, &kb, kSnapTol)) {
      if (n_term < 0 || n_term > kb)
        throw DomainError(
            "hyp_pfq: denominator parameter at a non-positive integer");
    }
  }

  const std::size_t r = s.numerator_params.size();
  const std::size_t q = s.denominator_params.size();
  const double z = s.argument;

  if (n_term < 0) {
    if (r > q + 1)
      throw DomainError("hyp_pfq: non-terminating series with r > s+1");
    if (r == q + 1) {
      if (std::fabs(z) >= 1.0)
        throw DomainError("hyp_pfq: |z| >= 1 for non-terminating 2F1-type");
      if (std::fabs(z) > 0.9 && max_terms <= kDefaultMaxTerms)
        throw DomainError(
            "hyp_pfq: |z| > 0.9 needs an explicit max_terms override");
    }
  }

  double sum = 1.0;
  double term = 1.0;
  int k = 0;
  int small_streak = 0;
  const int last_k = (n_term >= 0) ? n_term : max_terms;
  while (k < last_k) {
    double ratio = 1.0;
    for (double a : s.numerator_params) ratio *= a + k;
    for (double b : s.denominator_params) ratio /= b + k;
    term *= ratio * z / (k + 1);
    sum += term;
    ++k;
    if (n_term < 0) {
      if (std::fabs(term) <= tol * std::fmax(1.0, std::fabs(sum)))
        ++small_streak;
      else
        small_streak = 0;
      if (small_streak >= 2) break;
    }
  }

  SeriesResult res;
  res.value = sum;
  res.terms_used = k + 1;
  // A terminating sum is exact; there is no truncation remainder.
  res.last_term_magnitude = (n_term >= 0) ? 0.0 : std::fabs(term);
  res.converged =
      (n_term >= 0) ||
      res.last_term_magnitude <= tol * std::fmax(1.0, std::fabs(sum));
  if (!res.converged)
    throw ConvergenceError("hyp_pfq: series did not converge");
  return res;
}

SeriesResult gauss_2f1(double a, double b, double c, double z, double tol,
                       int max_terms) {
  return hyp_pfq({{a, b}, {c}, z}, tol, max_terms);
}

SeriesResult bessel_j(double lambda, double z, double tol) {
  if (is_nonpositive_integer(lambda + 1.0))
    throw PoleError("bessel_j: lambda+1 at a non-positive integer");
  if (z == 0.0) {
    SeriesResult res;
    res.converged = true;
    res.terms_used = 1;
    if (lambda == 0.0)
      res.value = 1.0;
    else if (lambda > 0.0)
      res.value = 0.0;
    else
      throw DomainError("bessel_j: z = 0 with negative lambda");
    return res;
  }
  SeriesResult f = hyp_pfq({{}, {lambda + 1.0}, -z * z / 4.0}, tol);
  const SignedLogValue g = log_gamma(lambda + 1.0);
  f.value *= std::pow(z / 2.0, lambda) / (g.sign * std::exp(g.log_abs));
  return f;
}

}  // namespace ferrex
