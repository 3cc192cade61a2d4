#include "ferrex/quadrature.hpp"

#include <cmath>

#include "ferrex/errors.hpp"

namespace ferrex {

double QuadratureRule::integrate(
    const std::function<double(double)>& f) const {
  double s = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(nodes[i]);
  return s;
}

QuadratureRule gauss_legendre_rule(int n) {
  if (n < 1 || n > 500) {
    throw DomainError("gauss_legendre_rule: n must be in [1, 500]");
  }
  QuadratureRule rule;
  rule.kind = RuleKind::gauss_legendre;
  rule.order_or_level = n;
  rule.nodes.resize(n);
  rule.weights.resize(n);

  for (int i = 0; i < n; ++i) {
    // Chebyshev-angle initial guess for the i-th root (descending order).
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    int iter = 0;
    for (;; ++iter) {
      if (iter > 100) {
        throw ConvergenceError("gauss_legendre_rule: Newton did not converge");
      }
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

namespace {

// One tanh-sinh abscissa/weight pair at parameter t for the map
// x = c + d tanh((pi/2) sinh t).
struct TsNode {
  double x;
  double w;
  bool usable;
};

TsNode ts_node(double t, double c, double d) {
  double u = M_PI_2 * std::sinh(t);
  if (u > 350.0 || u < -350.0) return {0.0, 0.0, false};
  double th = std::tanh(u);
  double x = c + d * th;
  // Refuse nodes that have collapsed onto an endpoint in double precision.
  if (x <= c - d || x >= c + d) return {0.0, 0.0, false};
  double ch = std::cosh(u);
  double w = d * M_PI_2 * std::cosh(t) / (ch * ch);
  if (w == 0.0 || !std::isfinite(w)) return {0.0, 0.0, false};
  return {x, w, true};
}

}  // namespace

SeriesResult tanh_sinh_integrate(const std::function<double(double)>& f,
                                 double a, double b, double tol) {
  double c = 0.5 * (a + b), d = 0.5 * (b - a);
  constexpr int kMaxLevel = 12;
  constexpr double kTMax = 6.2;

  int evals = 0;
  auto contrib = [&](double t) {
    TsNode node = ts_node(t, c, d);
    if (!node.usable) return 0.0;
    double v = f(node.x);
    ++evals;
    if (!std::isfinite(v)) return 0.0;
    return node.w * v;
  };

  double h = 1.0;
  double sum = contrib(0.0);
  for (int k = 1; k * h <= kTMax; ++k) {
    sum += contrib(k * h) + contrib(-k * h);
  }
  double previous = sum * h;

  for (int level = 1; level <= kMaxLevel; ++level) {
    h *= 0.5;
    // Only the odd multiples of the new h are new nodes.
    for (int k = 1; k * h <= kTMax; k += 2) {
      sum += contrib(k * h) + contrib(-k * h);
    }
    double current = sum * h;
    double diff = std::abs(current - previous);
    double scale = std::max(std::abs(current), 1e-300);
    if (diff <= tol * scale || diff <= tol) {
      return {current, evals, true, diff};
    }
    previous = current;
  }
  throw ConvergenceError("tanh_sinh_integrate: no convergence by level 12");
}

}  // namespace ferrex
