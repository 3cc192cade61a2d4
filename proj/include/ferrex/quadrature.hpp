#ifndef FERREX_QUADRATURE_HPP
#define FERREX_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "ferrex/hypergeometric.hpp"

namespace ferrex {

enum class RuleKind { gauss_legendre, tanh_sinh };

struct QuadratureRule {
  RuleKind kind = RuleKind::gauss_legendre;
  std::vector<double> nodes;
  std::vector<double> weights;
  int order_or_level = 0;

  double integrate(const std::function<double(double)>& f) const;
};

// n-point Gauss-Legendre rule on (-1, 1).  Nodes are the roots of P_n found
// by Newton iteration from the Chebyshev-angle guesses; weights are
// 2 / ((1 - x_i^2) P_n'(x_i)^2).
QuadratureRule gauss_legendre_rule(int n);

// Double-exponential (tanh-sinh) quadrature over (a, b); handles algebraic
// endpoint singularities of exponent > -1.  Level-doubling trapezoid sums
// until successive levels agree to tol relatively.
SeriesResult tanh_sinh_integrate(const std::function<double(double)>& f,
                                 double a, double b, double tol = 1e-12);

}  // namespace ferrex

#endif
