#ifndef FERREX_FERRERS_HPP
#define FERREX_FERRERS_HPP

#include "ferrex/gamma.hpp"
#include "ferrex/hypergeometric.hpp"
#include "ferrex/polynomials.hpp"

namespace ferrex {

enum class EvalPath {
  polynomial_grade,
  gauss_series,
  trig_closed_form,
  parity_reflection,
};

// SeriesResult plus a record of which representation produced the value.
struct FerrersEval {
  double value = 0.0;
  int terms_used = 0;
  bool converged = false;
  double last_term_magnitude = 0.0;
  EvalPath path = EvalPath::gauss_series;

  SeriesResult series() const {
    return {value, terms_used, converged, last_term_magnitude};
  }
};

// Ferrers function of the first kind P_nu^mu(x), -1 < x < 1.  The order
// argument is the literal order of the evaluated function; callers wanting
// P_nu^{-mu} pass a negated value.
FerrersEval ferrers_p(double nu, double mu, double x,
                      double tol = kDefaultTol);

// Ferrers function of the second kind Q_nu^mu(x), -1 < x < 1, mu not an
// integer (integer order is out of scope here).
FerrersEval ferrers_q(double nu, double mu, double x,
                      double tol = kDefaultTol);

// log-space polynomial-grade evaluation of P_{n+lambda}^{-lambda}(x);
// needed by the large-lambda asymptotics where the value under- or
// overflows double range.
SignedLogValue ferrers_p_poly_log(int n, double lambda, double x);

enum class Normalization { olver, hobson };

struct LegendreQArgs {
  double nu = 0.0;
  double mu = 0.0;
  double z = 0.0;  // > 1
  Normalization normalization = Normalization::olver;
};

// Associated Legendre function of the second kind on (1, inf).  Olver
// normalization from the 1/z^2 Gauss series; Hobson multiplies by
// Gamma(nu+mu+1).
SeriesResult legendre_q(const LegendreQArgs& args, double tol = kDefaultTol);

// (1-x^2)^power * poly(x), closed under differentiation at the coefficient
// level: (s, p) -> (s-1, -2 s x p + (1-x^2) p').
struct WeightedPolyForm {
  double power = 0.0;
  PolynomialCoeffs poly;

  WeightedPolyForm derivative() const;
  double eval(double x) const;
};

// Rodrigues construction of P_{n+mu}^{-mu}(x) by n exact differentiations
// of (1-x^2)^{mu+n}.
double rodrigues_ferrers_p(int n, double mu, double x);

// Rodrigues construction of Q_{k+n-1/2}^{n-1/2}(x) by k differentiations of
// (1-x^2)^{k+n-1/2}.
double rodrigues_ferrers_q(int k, int n, double x);

// d^n/dx^n [P_nu^{-mu}(x) / (1-x^2)^{mu/2}]
//   = (-1)^n (nu+mu+1)_n (mu-nu)_n P_nu^{-mu-n}(x) / (1-x^2)^{(mu+n)/2}.
double scaled_derivative(double nu, double mu, int n, double x);

}  // namespace ferrex

#endif
