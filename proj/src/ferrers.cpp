#include "ferrex/ferrers.hpp"

#include <cmath>
#include <string>

#include "ferrex/errors.hpp"

namespace ferrex {

namespace {

constexpr double kSnapTol = 1e-12;

bool near_nonneg_integer(double x, int* n) {
  double r = std::round(x);
  if (r < -0.5 || std::abs(x - r) > kSnapTol) return false;
  if (n) *n = static_cast<int>(r);
  return true;
}

// P_{n+lambda}^{-lambda}(x) = G(2l+1) n! / (2^l G(n+2l+1) G(l+1))
//                             * (1-x^2)^{l/2} C_n^{l+1/2}(x).
FerrersEval ferrers_p_poly(int n, double lambda, double x, bool reflect) {
  double xa = reflect ? -x : x;
  double c = gegenbauer_c(n, lambda + 0.5, xa);
  if (reflect && (n % 2) != 0) c = -c;

  FerrersEval out;
  if (n + 2.0 * lambda + 1.0 < 170.0) {
    // Direct arithmetic while the gamma ratio fits in double range; the
    // combined ((1-x^2)/4)^{lambda/2} keeps low-degree values exact.
    double pref = gamma_fn(2.0 * lambda + 1.0) * gamma_fn(n + 1.0) /
                  (gamma_fn(n + 2.0 * lambda + 1.0) * gamma_fn(lambda + 1.0));
    out.value = pref * std::pow((1.0 - x * x) / 4.0, 0.5 * lambda) * c;
  } else {
    SignedLogValue pref = log_gamma(2.0 * lambda + 1.0) * log_gamma(n + 1.0) /
                          (log_gamma(n + 2.0 * lambda + 1.0) *
                           log_gamma(lambda + 1.0));
    pref.log_abs -= lambda * std::log(2.0);
    pref.log_abs += 0.5 * lambda * std::log1p(-x * x);
    out.value = (pref * signed_log(c)).value();
  }
  out.terms_used = n + 1;
  out.converged = true;
  out.last_term_magnitude = 0.0;
  out.path = reflect ? EvalPath::parity_reflection : EvalPath::polynomial_grade;
  return out;
}

double theta_of(double x) { return std::acos(x); }

FerrersEval trig_eval(double value) {
  FerrersEval out;
  out.value = value;
  out.terms_used = 1;
  out.converged = true;
  out.last_term_magnitude = 0.0;
  out.path = EvalPath::trig_closed_form;
  return out;
}

int series_budget(double x) {
  // Gauss-series argument is (1-x)/2; past 1/2 the geometric tail thins out
  // and the default term budget is not enough.
  return (1.0 - x) / 2.0 > 0.5 ? 200000 : kDefaultMaxTerms;
}

SignedLogValue inv_gamma(double x) {
  if (is_nonpositive_integer(x)) return SignedLogValue{0.0, 0};
  return signed_log(1.0) / log_gamma(x);
}

// 2F1(-nu, nu+1; c; (1-x)/2).  For x < 0 the direct series degenerates
// (argument -> 1 at the lower endpoint), so the z -> 1-z connection formula
// re-expands around (1+x)/2; it needs c - a - b = c - 1 non-integer, which
// holds on every non-integer-order call path.
SeriesResult ferrers_gauss_f(double nu, double c, double x, double tol) {
  double z = (1.0 - x) / 2.0;
  if (z <= 0.5) return gauss_2f1(-nu, nu + 1.0, c, z, tol);

  double w = 1.0 - z;  // (1+x)/2 <= 1/2
  double s = c - 1.0;
  SeriesResult f1 = gauss_2f1(-nu, nu + 1.0, 1.0 - s, w, tol);
  SeriesResult f2 = gauss_2f1(c + nu, c - nu - 1.0, 1.0 + s, w, tol);

  SignedLogValue gc = log_gamma(c);
  SignedLogValue a = gc * log_gamma(s) * inv_gamma(c + nu) *
                     inv_gamma(c - nu - 1.0);
  SignedLogValue b = gc * log_gamma(-s) * inv_gamma(-nu) * inv_gamma(nu + 1.0);
  b.log_abs += s * std::log(w);

  SeriesResult out;
  out.value = (a * signed_log(f1.value)).value() +
              (b * signed_log(f2.value)).value();
  out.terms_used = f1.terms_used + f2.terms_used;
  out.converged = f1.converged && f2.converged;
  out.last_term_magnitude =
      std::max(f1.last_term_magnitude, f2.last_term_magnitude);
  return out;
}

}  // namespace

FerrersEval ferrers_p(double nu, double mu, double x, double tol) {
  if (!(std::abs(x) < 1.0)) {
    throw DomainError("ferrers_p: x must satisfy -1 < x < 1");
  }

  // Snap mu to the nearby special-case line; gamma poles sit next to it.
  double mr = std::round(mu);
  if (std::abs(mu - mr) <= kSnapTol) mu = mr;
  if (std::abs(mu - 0.5) <= kSnapTol) mu = 0.5;
  if (std::abs(mu + 0.5) <= kSnapTol) mu = -0.5;

  // Polynomial grade: mu = -lambda <= 0 with nu = n + lambda.
  int n = 0;
  if (mu <= 0.0 && near_nonneg_integer(nu + mu, &n)) {
    return ferrers_p_poly(n, -mu, x, /*reflect=*/x < 0.0);
  }

  if (mu == 0.5 || mu == -0.5) {
    double theta = theta_of(x);
    double pre = std::sqrt(2.0 / (M_PI * std::sin(theta)));
    if (mu == 0.5) {
      return trig_eval(pre * std::cos((nu + 0.5) * theta));
    }
    double nuph = nu + 0.5;
    double ratio = std::abs(nuph) < 1e-14
                       ? theta
                       : std::sin(nuph * theta) / nuph;
    return trig_eval(pre * ratio);
  }

  // Positive integer order: P_nu^m = (-1)^m (nu-m+1)_{2m} P_nu^{-m}.
  if (mu >= 1.0 && mu == mr) {
    int m = static_cast<int>(mr);
    double factor = pochhammer(nu - m + 1.0, 2 * m);
    if ((m % 2) != 0) factor = -factor;
    FerrersEval base = ferrers_p(nu, -mu, x, tol);
    base.value *= factor;
    return base;
  }

  // Generic Gauss series at argument (1-x)/2 (connection form for x < 0).
  SignedLogValue pref = signed_log(1.0) / log_gamma(1.0 - mu);
  pref.log_abs += 0.5 * mu * (std::log1p(x) - std::log1p(-x));
  SeriesResult f =
      mu == mr ? gauss_2f1(-nu, nu + 1.0, 1.0 - mu, (1.0 - x) / 2.0, tol,
                           series_budget(x))
               : ferrers_gauss_f(nu, 1.0 - mu, x, tol);

  FerrersEval out;
  out.value = (pref * signed_log(f.value)).value();
  out.terms_used = f.terms_used;
  out.converged = f.converged;
  out.last_term_magnitude = f.last_term_magnitude;
  out.path = EvalPath::gauss_series;
  return out;
}

FerrersEval ferrers_q(double nu, double mu, double x, double tol) {
  if (!(std::abs(x) < 1.0)) {
    throw DomainError("ferrers_q: x must satisfy -1 < x < 1");
  }

  double mr = std::round(mu);
  if (std::abs(mu - mr) <= kSnapTol) {
    throw DomainError("ferrers_q: integer order is out of scope");
  }
  if (std::abs(mu - 0.5) <= kSnapTol) mu = 0.5;
  if (std::abs(mu + 0.5) <= kSnapTol) mu = -0.5;

  if (mu == 0.5 || mu == -0.5) {
    double theta = theta_of(x);
    double pre = std::sqrt(M_PI / (2.0 * std::sin(theta)));
    if (mu == 0.5) {
      return trig_eval(-pre * std::sin((nu + 0.5) * theta));
    }
    double nuph = nu + 0.5;
    if (std::abs(nuph) < kSnapTol) {
      throw PoleError("ferrers_q: Q_{-1/2}^{-1/2} is singular");
    }
    return trig_eval(pre * std::cos(nuph * theta) / nuph);
  }

  // Half-odd-integer order with nu - mu in N_0: invert
  //   P_{k+n-1/2}^{1/2-n} = 2 (-1)^n k! / (pi (2n+k-1)!) Q_{k+n-1/2}^{n-1/2}.
  double nd = mu + 0.5;
  int nn = 0, k = 0;
  if (near_nonneg_integer(nd, &nn) && near_nonneg_integer(nu - mu, &k)) {
    if (2 * nn + k - 1 < 0) {
      throw PoleError("ferrers_q: (2n+k-1)! pole in the half-integer route");
    }
    double factor = M_PI * gamma_fn(2.0 * nn + k) / (2.0 * gamma_fn(k + 1.0));
    if ((nn % 2) != 0) factor = -factor;
    FerrersEval p = ferrers_p(nu, -mu, x, tol);
    p.value *= factor;
    return p;
  }

  // Generic two-series formula; mu is not an integer so sin(pi mu) != 0 and
  // both 1 -+ mu parameters avoid the gamma poles.
  double half_log_ratio = 0.5 * (std::log1p(x) - std::log1p(-x));

  SeriesResult f1 = ferrers_gauss_f(nu, 1.0 - mu, x, tol);
  SignedLogValue t1 = signed_log(std::cos(M_PI * mu)) / log_gamma(1.0 - mu) *
                      signed_log(f1.value);
  t1.log_abs += mu * half_log_ratio;

  SeriesResult f2 = ferrers_gauss_f(nu, 1.0 + mu, x, tol);
  SignedLogValue coef;
  if (is_nonpositive_integer(nu - mu + 1.0)) {
    coef = SignedLogValue{0.0, 0};  // 1/Gamma at a pole: the term vanishes
  } else {
    coef = log_gamma(nu + mu + 1.0) /
           (log_gamma(nu - mu + 1.0) * log_gamma(1.0 + mu));
  }
  SignedLogValue t2 = coef * signed_log(f2.value);
  t2.log_abs -= mu * half_log_ratio;

  double value = M_PI / (2.0 * std::sin(M_PI * mu)) *
                 (t1.value() - t2.value());

  FerrersEval out;
  out.value = value;
  out.terms_used = f1.terms_used + f2.terms_used;
  out.converged = f1.converged && f2.converged;
  out.last_term_magnitude =
      std::max(f1.last_term_magnitude, f2.last_term_magnitude);
  out.path = EvalPath::gauss_series;
  return out;
}

SignedLogValue ferrers_p_poly_log(int n, double lambda, double x) {
  if (!(std::abs(x) < 1.0)) {
    throw DomainError("ferrers_p_poly_log: x must satisfy -1 < x < 1");
  }
  SignedLogValue pref = log_gamma(2.0 * lambda + 1.0) * log_gamma(n + 1.0) /
                        (log_gamma(n + 2.0 * lambda + 1.0) *
                         log_gamma(lambda + 1.0));
  pref.log_abs -= lambda * std::log(2.0);
  pref.log_abs += 0.5 * lambda * std::log1p(-x * x);
  return pref * signed_log(gegenbauer_c(n, lambda + 0.5, x));
}

SeriesResult legendre_q(const LegendreQArgs& args, double tol) {
  double nu = args.nu, mu = args.mu, z = args.z;
  if (z <= 1.0 + 1e-8) {
    throw ConvergenceError(
        "legendre_q: series argument 1/z^2 too close to 1 (z <= 1 + 1e-8)");
  }
  SeriesResult f = gauss_2f1((nu + mu + 1.0) / 2.0, (nu + mu + 2.0) / 2.0,
                             nu + 1.5, 1.0 / (z * z), tol, 200000);

  SignedLogValue pref = signed_log(std::sqrt(M_PI)) / log_gamma(nu + 1.5);
  pref.log_abs += 0.5 * mu * std::log(z * z - 1.0) -
                  (nu + 1.0) * std::log(2.0) -
                  (nu + mu + 1.0) * std::log(z);
  if (args.normalization == Normalization::hobson) {
    pref = pref * log_gamma(nu + mu + 1.0);  // PoleError at -N_0 as required
  }

  f.value = (pref * signed_log(f.value)).value();
  return f;
}

WeightedPolyForm WeightedPolyForm::derivative() const {
  // d/dx [(1-x^2)^s p] = (1-x^2)^{s-1} [ -2 s x p + (1-x^2) p' ]
  PolynomialCoeffs dp = poly.derivative();
  PolynomialCoeffs one_minus_x2{{1.0, 0.0, -1.0}};
  PolynomialCoeffs minus_2sx{{0.0, -2.0 * power}};
  WeightedPolyForm out;
  out.power = power - 1.0;
  out.poly = poly.multiply(minus_2sx).plus(one_minus_x2.multiply(dp));
  out.poly.trim();
  return out;
}

double WeightedPolyForm::eval(double x) const {
  return std::pow(1.0 - x * x, power) * poly.eval(x);
}

double rodrigues_ferrers_p(int n, double mu, double x) {
  if (n < 0) throw DomainError("rodrigues_ferrers_p: n must be >= 0");
  if (!(std::abs(x) < 1.0)) {
    throw DomainError("rodrigues_ferrers_p: x must satisfy -1 < x < 1");
  }
  WeightedPolyForm w{mu + n, PolynomialCoeffs{{1.0}}};
  for (int i = 0; i < n; ++i) w = w.derivative();

  SignedLogValue pref = signed_log((n % 2) == 0 ? 1.0 : -1.0) /
                        log_gamma(mu + n + 1.0);
  pref.log_abs -= (mu + n) * std::log(2.0);
  // w carries (1-x^2)^mu; dividing by (1-x^2)^{mu/2} leaves the +mu/2 weight.
  pref.log_abs += 0.5 * mu * std::log1p(-x * x);
  return (pref * signed_log(w.poly.eval(x))).value();
}

double rodrigues_ferrers_q(int k, int n, double x) {
  if (k < 0 || n < 0) throw DomainError("rodrigues_ferrers_q: k, n >= 0");
  if (!(std::abs(x) < 1.0)) {
    throw DomainError("rodrigues_ferrers_q: x must satisfy -1 < x < 1");
  }
  if (2 * n + k - 1 < 0) {
    throw PoleError("rodrigues_ferrers_q: (2n+k-1)! pole at k = n = 0");
  }
  WeightedPolyForm w{k + n - 0.5, PolynomialCoeffs{{1.0}}};
  for (int i = 0; i < k; ++i) w = w.derivative();

  SignedLogValue pref =
      signed_log(((n + k) % 2) == 0 ? M_PI : -M_PI) *
      log_gamma(2.0 * n + k) /
      (log_gamma(k + 1.0) * log_gamma(k + n + 0.5));
  pref.log_abs -= (k + n + 0.5) * std::log(2.0);
  // w carries (1-x^2)^{n-1/2}; the display divides by (1-x^2)^{n/2-1/4}.
  pref.log_abs += (0.5 * n - 0.25) * std::log1p(-x * x);
  return (pref * signed_log(w.poly.eval(x))).value();
}

double scaled_derivative(double nu, double mu, int n, double x) {
  if (n < 0) throw DomainError("scaled_derivative: n must be >= 0");
  double a = pochhammer(nu + mu + 1.0, n);
  double b = pochhammer(mu - nu, n);
  if (a == 0.0 || b == 0.0) return 0.0;
  double sign = (n % 2) == 0 ? 1.0 : -1.0;
  FerrersEval p = ferrers_p(nu, -(mu + n), x);
  return sign * a * b * p.value /
         std::pow(1.0 - x * x, 0.5 * (mu + n));
}

}  // namespace ferrex
