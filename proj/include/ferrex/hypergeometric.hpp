#ifndef FERREX_HYPERGEOMETRIC_HPP
#define FERREX_HYPERGEOMETRIC_HPP

#include <vector>

namespace ferrex {

// Parameters of a generalized hypergeometric series rFs(a; b; z).
struct HypergeometricSpec {
  std::vector<double> numerator_params;
  std::vector<double> denominator_params;
  double argument = 0.0;
};

struct SeriesResult {
  double value = 0.0;
  int terms_used = 0;
  bool converged = false;
  double last_term_magnitude = 0.0;
};

constexpr double kDefaultTol = 1e-14;
constexpr int kDefaultMaxTerms = 10000;

// Termination index of the series: smallest -a over numerator parameters
// that are non-positive integers (after a 1e-12 snap), or -1 if none.
int termination_index(const HypergeometricSpec& spec);

// Term-by-term sum of rFs with the ratio recurrence
//   term_{k+1} = term_k * prod(a_i + k)/prod(b_j + k) * z/(k+1).
// Terminating series are summed exactly to the termination index.
SeriesResult hyp_pfq(const HypergeometricSpec& spec, double tol = kDefaultTol,
                     int max_terms = kDefaultMaxTerms);

// Gauss hypergeometric series 2F1(a, b; c; z).
SeriesResult gauss_2f1(double a, double b, double c, double z,
                       double tol = kDefaultTol,
                       int max_terms = kDefaultMaxTerms);

// Bessel function of the first kind, (z/2)^lambda / Gamma(lambda+1)
// * 0F1(-; lambda+1; -z^2/4).
SeriesResult bessel_j(double lambda, double z, double tol = kDefaultTol);

}  // namespace ferrex

#endif
