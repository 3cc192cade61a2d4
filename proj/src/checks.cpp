#include "ferrex/checks.hpp"

#include <cmath>
#include <utility>

#include "ferrex/errors.hpp"
#include "ferrex/ferrers.hpp"
#include "ferrex/gamma.hpp"
#include "ferrex/hypergeometric.hpp"
#include "ferrex/quadrature.hpp"

#include "json.hpp"

namespace ferrex {

namespace {

double fp(double nu, double mu, double x) { return ferrers_p(nu, mu, x).value; }
double fq(double nu, double mu, double x) { return ferrers_q(nu, mu, x).value; }

double factorial(int n) { return gamma_fn(n + 1.0); }

double binom(int n, int k) {
  return factorial(n) / (factorial(k) * factorial(n - k));
}

// Selection rule: the full integrand is polynomial exactly when its
// (1-x^2) endpoint exponent is a non-negative integer; only then is
// Gauss-Legendre exact.  Fractional exponents >= 0 still defeat a fixed-order
// rule, so they go to tanh-sinh along with the integrable singular ones.
double integrate_weighted(const std::function<double(double)>& f,
                          double endpoint_exponent, int poly_degree) {
  double r = std::round(endpoint_exponent);
  if (r >= 0.0 && std::abs(endpoint_exponent - r) < 1e-12) {
    int order = poly_degree / 2 + 12;
    return gauss_legendre_rule(order).integrate(f);
  }
  // Endpoint evaluations of the Ferrers series carry ~1e-12 relative noise,
  // so asking tanh-sinh for more than 1e-11 just stalls the level doubling.
  return tanh_sinh_integrate(f, -1.0, 1.0, 1e-11).value;
}

// Polynomial-grade split P_{k+lambda}^{-lambda}(cos t) =
// (sin t)^lambda * grade_part(k, lambda, t).  Working in the theta
// variable keeps endpoint factors like (1-x^2)^{mu} exact where x would
// round onto +-1.
double grade_part(int k, double lambda, double t) {
  if (lambda == -0.5) {
    // degenerate Gegenbauer normalization; the split reduces to the
    // Chebyshev kernel sqrt(2/pi) cos(k t)
    return std::sqrt(2.0 / M_PI) * std::cos(k * t);
  }
  double pref = gamma_fn(2.0 * lambda + 1.0) * factorial(k) /
                (gamma_fn(k + 2.0 * lambda + 1.0) * gamma_fn(lambda + 1.0) *
                 std::pow(2.0, lambda));
  return pref * gegenbauer_c(k, lambda + 0.5, std::cos(t));
}

double integrate_theta(const std::function<double(double)>& g) {
  return tanh_sinh_integrate(g, 0.0, M_PI, 1e-12).value;
}

// Real-axis Hobson Q_nu^m(z > 1) = (-1)^m Gamma(nu+m+1) * (Olver Q).
double hobson_q(double nu, int m, double z) {
  SeriesResult olver = legendre_q({nu, static_cast<double>(m), z,
                                   Normalization::olver});
  double g = (log_gamma(nu + m + 1.0)).value();
  double sign = (m % 2) == 0 ? 1.0 : -1.0;
  return sign * g * olver.value;
}

}  // namespace

CheckReport make_report(std::string name,
                        std::map<std::string, double> params, double lhs,
                        double rhs, double tol, double atol_scale) {
  CheckReport r;
  r.check_name = std::move(name);
  r.params = std::move(params);
  r.lhs = lhs;
  r.rhs = rhs;
  r.abs_err = std::abs(lhs - rhs);
  double scale = std::max(std::abs(lhs), std::abs(rhs));
  r.rel_err = scale > 0.0 ? r.abs_err / scale : r.abs_err;
  r.tol = tol;
  r.passed = (r.rel_err <= tol) || (r.abs_err <= tol * atol_scale);
  return r;
}

std::string reports_to_json(const std::vector<CheckReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json o;
    o["check_name"] = r.check_name;
    o["params"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) o["params"][k] = v;
    o["lhs"] = r.lhs;
    o["rhs"] = r.rhs;
    o["abs_err"] = r.abs_err;
    o["rel_err"] = r.rel_err;
    o["tol"] = r.tol;
    o["passed"] = r.passed;
    arr.push_back(std::move(o));
  }
  return arr.dump(2);
}

CheckReport orthogonality_check(OrthFamily family,
                                const std::map<std::string, double>& params,
                                int k, int kp) {
  std::map<std::string, double> p(params);
  p["k"] = k;
  p["k_prime"] = kp;
  const double tol = 1e-9;
  const double atol_scale = 0.1;  // off-diagonal |lhs| <= 1e-10

  switch (family) {
    case OrthFamily::ferrers_p_mu: {
      double mu = params.at("mu");
      if (!(mu > -1.0) || std::abs(mu + k + 0.5) < 1e-12 ||
          std::abs(mu + kp + 0.5) < 1e-12) {
        throw DomainError("orthogonality_check: need Re mu > -1, mu+k+1/2 != 0");
      }
      double lhs;
      double mr = std::round(mu);
      if (mr >= 0.0 && std::abs(mu - mr) < 1e-12) {
        auto f = [&](double x) {
          return fp(k + mu, -mu, x) * fp(kp + mu, -mu, x);
        };
        lhs = integrate_weighted(f, mu, k + kp + 2 * (int)mr);
      } else {
        lhs = integrate_theta([&](double t) {
          return std::pow(std::sin(t), 2.0 * mu + 1.0) *
                 grade_part(k, mu, t) *
                 grade_part(kp, mu, t);
        });
      }
      double rhs = 0.0;
      if (k == kp) {
        rhs = (log_gamma(k + 1.0) / log_gamma(2.0 * mu + k + 1.0)).value() /
              (mu + k + 0.5);
      }
      return make_report("orthogonality/ferrers_p_mu", p, lhs, rhs, tol,
                         atol_scale);
    }
    case OrthFamily::ferrers_p_pos: {
      int n = static_cast<int>(params.at("n"));
      auto f = [&](double x) { return fp(k + n, n, x) * fp(kp + n, n, x); };
      double lhs = integrate_weighted(f, n, k + kp + 2 * n);
      double rhs = k == kp ? factorial(2 * n + k) / (factorial(k) * (n + k + 0.5))
                           : 0.0;
      return make_report("orthogonality/ferrers_p_pos", p, lhs, rhs, tol,
                         atol_scale * std::max(std::abs(rhs), 1.0));
    }
    case OrthFamily::ferrers_mixed: {
      int n = static_cast<int>(params.at("n"));
      auto f = [&](double x) { return fp(k + n, n, x) * fp(kp + n, -n, x); };
      double lhs = integrate_weighted(f, n, k + kp + 2 * n);
      double rhs = 0.0;
      if (k == kp) rhs = ((n % 2) == 0 ? 1.0 : -1.0) / (n + k + 0.5);
      return make_report("orthogonality/ferrers_mixed", p, lhs, rhs, tol,
                         atol_scale);
    }
    case OrthFamily::ferrers_q: {
      int n = static_cast<int>(params.at("n"));
      if (n == 0 && (k == 0 || kp == 0)) {
        throw DomainError(
            "orthogonality_check: Q norm has a (2n+k-1)! pole at n=k=0");
      }
      double lhs;
      if (n == 0) {
        // Q_{k-1/2}^{-1/2}(cos t) = sqrt(pi/(2 sin t)) cos(k t) / k.
        lhs = M_PI / (2.0 * k * kp) * integrate_theta([&](double t) {
                return std::cos(k * t) * std::cos(kp * t);
              });
      } else {
        // Q_{k+n-1/2}^{n-1/2} = fac_k (sin t)^{n-1/2} grade_part(k, n-1/2).
        double fk = M_PI * gamma_fn(2.0 * n + k) / (2.0 * factorial(k));
        double fkp = M_PI * gamma_fn(2.0 * n + kp) / (2.0 * factorial(kp));
        lhs = fk * fkp * integrate_theta([&](double t) {
                return std::pow(std::sin(t), 2.0 * n) *
                       grade_part(k, n - 0.5, t) *
                       grade_part(kp, n - 0.5, t);
              });
      }
      double rhs = 0.0;
      if (k == kp) {
        rhs = M_PI * M_PI * gamma_fn(2.0 * n + k) /
              (4.0 * (n + k) * factorial(k));
      }
      return make_report("orthogonality/ferrers_q", p, lhs, rhs, tol,
                         atol_scale * std::max(std::abs(rhs), 1.0));
    }
    case OrthFamily::gegenbauer: {
      double mu = params.at("mu");
      if (!(mu > -0.5) || mu == 0.0) {
        throw DomainError("orthogonality_check: gegenbauer needs mu > -1/2, mu != 0");
      }
      double lhs;
      double er = std::round(mu - 0.5);
      if (er >= 0.0 && std::abs(mu - 0.5 - er) < 1e-12) {
        auto f = [&](double x) {
          return gegenbauer_c(k, mu, x) * gegenbauer_c(kp, mu, x) *
                 std::pow(1.0 - x * x, mu - 0.5);
        };
        lhs = integrate_weighted(f, mu - 0.5, k + kp + 2 * (int)er);
      } else {
        lhs = integrate_theta([&](double t) {
          return std::pow(std::sin(t), 2.0 * mu) *
                 gegenbauer_c(k, mu, std::cos(t)) *
                 gegenbauer_c(kp, mu, std::cos(t));
        });
      }
      double rhs = 0.0;
      if (k == kp) {
        SignedLogValue v = log_gamma(2.0 * mu + k) /
                           (log_gamma(mu) * log_gamma(mu));
        v.log_abs += std::log(M_PI) - (2.0 * mu - 1.0) * std::log(2.0) -
                     std::log(factorial(k));
        rhs = v.value() / (mu + k);
      }
      return make_report("orthogonality/gegenbauer", p, lhs, rhs, tol,
                         atol_scale * std::max(std::abs(rhs), 1.0));
    }
    case OrthFamily::chebyshev_trig: {
      int kind = static_cast<int>(params.at("kind"));
      double lhs, rhs = 0.0;
      const double tT = 1e-10;
      if (kind == 1) {
        lhs = integrate_theta([&](double t) {
          return chebyshev_t(k, std::cos(t)) * chebyshev_t(kp, std::cos(t));
        });
        if (k == kp) rhs = M_PI / (k == 0 ? 1.0 : 2.0);
      } else {
        lhs = integrate_theta([&](double t) {
          double s = std::sin(t);
          return chebyshev_u(k, std::cos(t)) * chebyshev_u(kp, std::cos(t)) *
                 s * s;
        });
        if (k == kp) rhs = M_PI / 2.0;
      }
      return make_report("orthogonality/chebyshev_trig", p, lhs, rhs, tT,
                         atol_scale);
    }
  }
  throw DomainError("orthogonality_check: unknown family");
}

CheckReport christoffel_darboux_check(double mu, int n, double x,
                                      double x_prime, bool confluent,
                                      bool second_kind) {
  if (n < 1) throw DomainError("christoffel_darboux_check: n >= 1 required");
  if (!confluent && x == x_prime) {
    throw DomainError("christoffel_darboux_check: x = x' needs confluent mode");
  }
  std::map<std::string, double> p{{"mu", mu},
                                  {"n", static_cast<double>(n)},
                                  {"x", x},
                                  {"x_prime", confluent ? x : x_prime},
                                  {"confluent", confluent ? 1.0 : 0.0},
                                  {"second_kind", second_kind ? 1.0 : 0.0}};
  const double tol = 1e-10;

  if (!second_kind) {
    double lhs = 0.0;
    for (int k = 0; k < n; ++k) {
      double coeff = (2.0 * mu + 2.0 * k + 1.0) *
                     (log_gamma(2.0 * mu + k + 1.0) / log_gamma(k + 1.0)).value();
      double a = fp(k + mu, -mu, x);
      lhs += coeff * a * (confluent ? a : fp(k + mu, -mu, x_prime));
    }
    double pref = (log_gamma(2.0 * mu + n + 1.0) / log_gamma(n + 0.0)).value();
    double pn_x = fp(n + mu, -mu, x);
    double pm_x = fp(n + mu - 1.0, -mu, x);
    double rhs;
    if (confluent) {
      rhs = pref / (1.0 - x * x) *
            ((n + 2.0 * mu) * pn_x * pn_x + n * pm_x * pm_x -
             2.0 * x * (n + mu) * pm_x * pn_x);
    } else {
      double pn_xp = fp(n + mu, -mu, x_prime);
      double pm_xp = fp(n + mu - 1.0, -mu, x_prime);
      rhs = pref / (x - x_prime) * (pn_x * pm_xp - pm_x * pn_xp);
    }
    return make_report("christoffel_darboux/first_kind", p, lhs, rhs, tol);
  }

  // Second kind: Q_{k+n-1/2}^{n-1/2}, parameterized by integer n >= 1.
  double lhs = 0.0;
  for (int k = 0; k < n; ++k) {
    double coeff = (n + k) * factorial(k) / gamma_fn(2.0 * n + k);
    double a = fq(k + n - 0.5, n - 0.5, x);
    lhs += coeff * a * (confluent ? a : fq(k + n - 0.5, n - 0.5, x_prime));
  }
  double pref = factorial(n) / (2.0 * gamma_fn(3.0 * n - 1.0));
  double qn_x = fq(2.0 * n - 0.5, n - 0.5, x);
  double qm_x = fq(2.0 * n - 1.5, n - 0.5, x);
  double rhs;
  if (confluent) {
    rhs = pref / (1.0 - x * x) *
          (n * qn_x * qn_x + (3.0 * n - 1.0) * qm_x * qm_x -
           x * (4.0 * n - 1.0) * qm_x * qn_x);
  } else {
    double qn_xp = fq(2.0 * n - 0.5, n - 0.5, x_prime);
    double qm_xp = fq(2.0 * n - 1.5, n - 0.5, x_prime);
    rhs = pref / (x - x_prime) * (qn_x * qm_xp - qm_x * qn_xp);
  }
  return make_report("christoffel_darboux/second_kind", p, lhs, rhs, tol);
}

PoissonKernelInstance make_poisson_instance(double lambda, double t,
                                            double theta, double theta_prime) {
  PoissonKernelInstance inst;
  inst.lambda = lambda;
  inst.t = t;
  inst.theta = theta;
  inst.theta_prime = theta_prime;
  // Kernel argument; the factor of t in the denominator is required for
  // chi > 1 on t in (0,1) and for all the kernel identities to close.
  inst.chi = (1.0 + t * t -
              2.0 * t * std::cos(theta) * std::cos(theta_prime)) /
             (2.0 * t * std::sin(theta) * std::sin(theta_prime));
  return inst;
}

CheckReport poisson_kernel_check(const PoissonKernelInstance& inst,
                                 PoissonVariant variant, int n_terms) {
  double lam = inst.lambda, t = inst.t, chi = inst.chi;
  double x = std::cos(inst.theta), y = std::cos(inst.theta_prime);
  double sx = std::sin(inst.theta), sy = std::sin(inst.theta_prime);
  if (chi <= 1.0 + 1e-8) {
    throw DomainError("poisson_kernel_check: chi <= 1 + 1e-8");
  }
  std::map<std::string, double> p{{"lambda", lam},
                                  {"t", t},
                                  {"theta", inst.theta},
                                  {"theta_prime", inst.theta_prime},
                                  {"chi", chi},
                                  {"n_terms", static_cast<double>(n_terms)},
                                  {"variant", static_cast<double>(variant)}};
  const double tol = 1e-8;

  double lhs = 0.0, last = 0.0;
  if (variant == PoissonVariant::addition) {
    int m = static_cast<int>(std::lround(lam));
    double coeff = std::pow(t, m) / factorial(2 * m);  // t^n (n-m)!/(n+m)!
    for (int n = m; n < m + n_terms; ++n) {
      last = coeff * fp(n, m, x) * fp(n, m, y);
      lhs += last;
      coeff *= t * (n + 1.0 - m) / (n + 1.0 + m);
    }
    double rhs = hobson_q(lam - 0.5, 0, chi) /
                 (M_PI * std::sqrt(t * sx * sy));
    p["tail_bound"] = std::abs(last) * std::abs(t) / (1.0 - std::abs(t));
    return make_report("poisson/addition", p, lhs, rhs, tol);
  }

  double c = 1.0;  // (2 lambda + 1)_n t^n / n!
  for (int n = 0; n < n_terms; ++n) {
    double term = c * fp(n + lam, -lam, x) * fp(n + lam, -lam, y);
    if (variant == PoissonVariant::k1) {
      term *= (lam + n + 0.5);
    } else if (variant == PoissonVariant::k2) {
      term *= (lam + n + 0.5) * (lam + n + 1.5);
    }
    lhs += term;
    last = term;
    c *= (2.0 * lam + 1.0 + n) * t / (n + 1.0);
  }
  p["tail_bound"] = std::abs(last) * std::abs(t) / (1.0 - std::abs(t));

  double g2l = gamma_fn(2.0 * lam + 1.0);
  double rhs;
  switch (variant) {
    case PoissonVariant::k0:
      rhs = hobson_q(lam - 0.5, 0, chi) /
            (M_PI * g2l * std::pow(t, lam + 0.5) * std::sqrt(sx * sy));
      break;
    case PoissonVariant::k1:
      rhs = -(1.0 - t * t) * hobson_q(lam - 0.5, 1, chi) /
            (2.0 * M_PI * g2l * std::pow(t, lam + 1.5) *
             std::pow((1.0 - x * x) * (1.0 - y * y), 0.75) *
             std::sqrt(chi * chi - 1.0));
      break;
    case PoissonVariant::k2: {
      double q1 = hobson_q(lam - 0.5, 1, chi);
      double q2 = hobson_q(lam - 0.5, 2, chi);
      double omt2 = 1.0 - t * t;
      rhs = (q1 / std::sqrt(chi * chi - 1.0) +
             omt2 * omt2 * q2 /
                 (4.0 * t * t * t * std::sqrt(1.0 - x * x) *
                  std::sqrt(1.0 - y * y) * (chi * chi - 1.0))) /
            (M_PI * std::pow(t, lam - 0.5) * g2l *
             std::pow((1.0 - x * x) * (1.0 - y * y), 0.75));
      break;
    }
    default:
      throw DomainError("poisson_kernel_check: bad variant");
  }
  const char* name = variant == PoissonVariant::k0   ? "poisson/k0"
                     : variant == PoissonVariant::k1 ? "poisson/k1"
                                                     : "poisson/k2";
  return make_report(name, p, lhs, rhs, tol);
}

CheckReport generating_function_check(double lambda, double t, double x,
                                      GenFunVariant variant, int n_terms,
                                      double gamma) {
  if (std::abs(t) >= 1.0) {
    throw ConvergenceError("generating_function_check: |t| must be < 1");
  }
  std::map<std::string, double> p{{"lambda", lambda},
                                  {"t", t},
                                  {"x", x},
                                  {"n_terms", static_cast<double>(n_terms)},
                                  {"variant", static_cast<double>(variant)}};
  const double tol = 1e-10;
  double b = 1.0 + t * t - 2.0 * t * x;
  double lhs = 0.0, last = 0.0;

  bool geg = variant == GenFunVariant::alg0 || variant == GenFunVariant::alg1 ||
             variant == GenFunVariant::alg2 || variant == GenFunVariant::gauss;
  if (geg) {
    std::vector<double> c = gegenbauer_c_all(n_terms - 1, lambda, x);
    double tn = 1.0, ratio = 1.0;  // ratio carries (gamma)_n / (2 lambda)_n
    for (int n = 0; n < n_terms; ++n) {
      double w;
      switch (variant) {
        case GenFunVariant::alg0: w = 1.0; break;
        case GenFunVariant::alg1: w = lambda + n; break;
        case GenFunVariant::alg2: w = (lambda + n) * (lambda + n + 1.0); break;
        default: w = ratio; break;  // gauss
      }
      last = w * tn * c[n];
      lhs += last;
      tn *= t;
      if (variant == GenFunVariant::gauss) {
        ratio *= (gamma + n) / (2.0 * lambda + n);
      }
    }
  } else {
    double coeff = 1.0;  // (2 lambda + 1)_n t^n / n!
    for (int n = 0; n < n_terms; ++n) {
      double w = 1.0;
      if (variant == GenFunVariant::p1) {
        w = lambda + n + 0.5;
      } else if (variant == GenFunVariant::p2) {
        w = (lambda + n + 0.5) * (lambda + n + 1.5);
      }
      last = w * coeff * fp(n + lambda, -lambda, x);
      lhs += last;
      coeff *= (2.0 * lambda + 1.0 + n) * t / (n + 1.0);
    }
  }
  double tail = std::abs(last) * std::abs(t) / (1.0 - std::abs(t));
  if (tail > tol * std::max(std::abs(lhs), 1.0)) {
    throw ConvergenceError("generating_function_check: tail estimate exceeds tol");
  }

  double rhs;
  switch (variant) {
    case GenFunVariant::alg0:
      rhs = std::pow(b, -lambda);
      break;
    case GenFunVariant::alg1:
      rhs = lambda * (1.0 - t * t) * std::pow(b, -lambda - 1.0);
      break;
    case GenFunVariant::alg2:
      rhs = lambda * (lambda + 1.0) * std::pow(1.0 - t * t, 2.0) *
                std::pow(b, -lambda - 2.0) -
            2.0 * lambda * t * t * std::pow(b, -lambda - 1.0);
      break;
    case GenFunVariant::p0:
      rhs = std::pow(1.0 - x * x, lambda / 2.0) /
            (std::pow(2.0, lambda) * gamma_fn(lambda + 1.0) *
             std::pow(b, lambda + 0.5));
      break;
    case GenFunVariant::p1:
      rhs = (lambda + 0.5) * (1.0 - t * t) *
            std::pow(1.0 - x * x, lambda / 2.0) /
            (std::pow(2.0, lambda) * gamma_fn(lambda + 1.0) *
             std::pow(b, lambda + 1.5));
      break;
    case GenFunVariant::p2:
      rhs = std::pow(1.0 - x * x, lambda / 2.0) * (lambda + 0.5) /
            (std::pow(2.0, lambda) * gamma_fn(lambda + 1.0)) *
            ((lambda + 1.5) * std::pow(1.0 - t * t, 2.0) *
                 std::pow(b, -lambda - 2.5) -
             2.0 * t * t * std::pow(b, -lambda - 1.5));
      break;
    case GenFunVariant::gauss: {
      p["gamma"] = gamma;
      double arg = t * t * (x * x - 1.0) / ((1.0 - x * t) * (1.0 - x * t));
      SeriesResult f = gauss_2f1(gamma / 2.0, (gamma + 1.0) / 2.0,
                                 lambda + 0.5, arg);
      rhs = std::pow(1.0 - x * t, -gamma) * f.value;
      break;
    }
    default:
      throw DomainError("generating_function_check: bad variant");
  }
  static const char* names[] = {"generating/alg0", "generating/alg1",
                                "generating/alg2", "generating/p0",
                                "generating/p1",   "generating/p2",
                                "generating/gauss"};
  return make_report(names[static_cast<int>(variant)], p, lhs, rhs, tol);
}

CheckReport definite_integral_check(
    IntegralVariant variant, const std::map<std::string, double>& params) {
  std::map<std::string, double> p(params);
  const double tol = 1e-8;

  switch (variant) {
    case IntegralVariant::askey_razban: {
      double lam = params.at("lambda"), gam = params.at("gamma");
      int n = static_cast<int>(params.at("n"));
      if (!(lam / 2.0 - gam > -1.0) || !(lam / 2.0 > -1.0)) {
        throw DomainError("definite_integral_check: non-integrable exponents");
      }
      // x = cos t with 1 -+ cos t = 2 sin^2(t/2), 2 cos^2(t/2); the grade
      // split keeps the endpoint powers exact in t.
      double lhs = integrate_theta([&](double t) {
        double s2 = 2.0 * std::pow(std::sin(0.5 * t), 2.0);
        double c2 = 2.0 * std::pow(std::cos(0.5 * t), 2.0);
        return std::pow(s2, lam / 2.0 - gam) * std::pow(c2, lam / 2.0) *
               std::pow(std::sin(t), lam + 1.0) * grade_part(n, lam, t);
      });
      SignedLogValue v = log_gamma(lam - gam + 1.0) * log_gamma(gam + n) /
                         (log_gamma(gam) * log_gamma(2.0 * lam - gam + n + 2.0));
      v.log_abs += (lam - gam + 1.0) * std::log(2.0);
      return make_report("integrals/askey_razban", p, lhs, v.value(), tol);
    }
    case IntegralVariant::power_expansion: {
      double nu = params.at("nu"), mu = params.at("mu"), z = params.at("z");
      int n = static_cast<int>(params.at("n"));
      double lhs = tanh_sinh_integrate(
                       [&](double x) {
                         return fp(n + mu, -mu, x) *
                                std::pow(1.0 - x * x, mu / 2.0) /
                                std::pow(z - x, nu);
                       },
                       -1.0, 1.0, 1e-13)
                       .value;
      SeriesResult q = legendre_q({n + mu, nu - mu - 1.0, z,
                                   Normalization::olver});
      double rhs = 2.0 * pochhammer(nu, n) * q.value /
                   std::pow(z * z - 1.0, (nu - mu - 1.0) / 2.0);
      return make_report("integrals/power_expansion", p, lhs, rhs, tol);
    }
    case IntegralVariant::genfun_integral: {
      double alpha = params.at("alpha"), gam = params.at("gamma");
      double t = params.at("t");
      int l = static_cast<int>(params.at("l"));
      int k = static_cast<int>(params.at("k"));
      if (near_integer(gam)) {
        throw DomainError(
            "definite_integral_check: gamma in Z requires special care");
      }
      auto f = [&](double x) {
        double bb = 1.0 + t * t - 2.0 * x * t;
        double u = (1.0 - x * t) / std::sqrt(bb);
        // u -> 1 as x -> +-1 and can round onto the boundary; the factor
        // (1-u^2)^{(l+alpha)/2} inside P kills the integrand there anyway.
        if (u >= 1.0 - 1e-14) return 0.0;
        return std::pow(bb, (alpha - gam + l) / 2.0) *
               fp(l + alpha - gam, -(l + alpha), u) *
               fp(k + alpha, -(l + alpha), x);
      };
      double lhs = tanh_sinh_integrate(f, -1.0, 1.0, 1e-13).value;
      SignedLogValue v = log_pochhammer(gam - l, k) /
                         (log_pochhammer(1.0 - gam, l) *
                          log_gamma(2.0 * alpha + l + k + 1.0));
      v.log_abs += (alpha + k) * std::log(t);
      double rhs = ((l % 2) == 0 ? 1.0 : -1.0) * v.value() /
                   (alpha + k + 0.5);
      return make_report("integrals/genfun_integral", p, lhs, rhs, tol);
    }
  }
  throw DomainError("definite_integral_check: unknown variant");
}

double mehler_heine_residual(double lambda, double z, int n) {
  double j = bessel_j(lambda, z).value;
  if (z == 0.0) {
    return std::abs((lambda == 0.0 ? 1.0 : 0.0) - j);
  }
  double x = 1.0 - z * z / (2.0 * n * n);
  double lhs = std::pow(n, lambda) * fp(n + lambda, -lambda, x);
  return std::abs(lhs - j);
}

double hermite_limit_residual(int n, double x, double lambda) {
  double lph = lambda + 0.5;
  SignedLogValue scale{lambda * std::log(2.0) +
                           log_gamma(lambda + 1.0).log_abs -
                           0.5 * n * std::log(lph) -
                           0.5 * lambda * std::log1p(-x * x / lph),
                       1};
  scale = scale * log_pochhammer(2.0 * lambda + 1.0, n);
  SignedLogValue pv = ferrers_p_poly_log(n, lambda, x / std::sqrt(lph));
  return std::abs((scale * pv).value() - hermite_h(n, x));
}

double gegenbauer_large_lambda_residual(int n, double x, double lambda) {
  SignedLogValue scale{lambda * std::log(2.0) +
                           log_gamma(lambda + 1.0).log_abs -
                           0.5 * lambda * std::log1p(-x * x),
                       1};
  double lhs = (scale * ferrers_p_poly_log(n, lambda, x)).value();
  double rhs = std::pow(x, n) *
               (1.0 - n * (n - 1.0) * (1.0 - x * x) / (4.0 * x * x * lambda));
  return std::abs(lhs - rhs);
}

CheckReport sobolev_bilinear_form(int N, int k, int kp) {
  if (N < 1 || N > 4 || k > 40 || kp > 40) {
    throw DomainError("sobolev_bilinear_form: coefficient-algebra caps exceeded");
  }
  std::map<std::string, double> p{{"N", static_cast<double>(N)},
                                  {"k", static_cast<double>(k)},
                                  {"k_prime", static_cast<double>(kp)}};
  const double tol = 1e-8;

  // (1-x^2)^{N/2} P_k^N materializes (with the theorem's normalization) as
  // the non-classical Gegenbauer polynomial C_k^{1/2-N}.
  PolynomialCoeffs F = gegenbauer_coeffs(k, 0.5 - N);
  PolynomialCoeffs G = gegenbauer_coeffs(kp, 0.5 - N);

  // Boundary form (f, g)_1.
  PolynomialCoeffs H = F.multiply(G);
  double boundary = 0.0;
  for (int j = 0; j < N; ++j) {
    double w = binom(N - 1, j) * std::pow(2.0, j - 1) /
               pochhammer(2.0 - 2.0 * N, j);
    boundary += w * (H.eval(1.0) + ((j % 2) == 0 ? 1.0 : -1.0) * H.eval(-1.0));
    H = H.derivative();
  }

  // Integral term on the exact (2N)-th derivative pair.
  PolynomialCoeffs F2 = F, G2 = G;
  for (int j = 0; j < 2 * N; ++j) {
    F2 = F2.derivative();
    G2 = G2.derivative();
  }
  PolynomialCoeffs w2{{1.0, 0.0, -1.0}};
  PolynomialCoeffs weight{{1.0}};
  for (int j = 0; j < N; ++j) weight = weight.multiply(w2);
  PolynomialCoeffs integrand = F2.multiply(G2).multiply(weight);
  double integral =
      gauss_legendre_rule(integrand.degree() / 2 + 4)
          .integrate([&](double x) { return integrand.eval(x); });

  double lhs = boundary + integral;
  double rhs = 0.0;
  if (k == kp) {
    if (k < 2 * N) {
      rhs = ((k % 2) == 0 ? 1.0 : -1.0) * (2.0 * N - 1.0) *
            factorial(2 * N - 1) /
            (factorial(k) * (2.0 * N - 2.0 * k - 1.0) * factorial(2 * N - k - 1));
    } else {
      double dfact = factorial(2 * N) / (std::pow(2.0, N) * factorial(N));
      rhs = 2.0 * factorial(k) * dfact * dfact /
            ((1.0 + 2.0 * k - 2.0 * N) * factorial(k - 2 * N));
    }
  }
  return make_report("sobolev/bilinear_form", p, lhs, rhs, tol,
                     0.1 * std::max(std::abs(rhs), 1.0));
}

CheckReport closure_projection_check(double mu, const PolynomialCoeffs& f,
                                     double x_eval, int n_max, double tol) {
  if (!(mu > -1.0)) {
    throw DomainError("closure_projection_check: mu out of range");
  }
  std::map<std::string, double> p{{"mu", mu},
                                  {"degree", static_cast<double>(f.degree())},
                                  {"x_eval", x_eval},
                                  {"n_max", static_cast<double>(n_max)}};

  double mr = std::round(mu);
  bool poly_weight = mr >= 0.0 && std::abs(mu - mr) < 1e-12;
  double recon = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    // (mu + 1/2) Gamma(2mu + 1) = Gamma(2mu + 2) / 2, so the n = 0 norm
    // stays finite as mu -> -1/2.
    double hn = n == 0 ? 2.0 / gamma_fn(2.0 * mu + 2.0)
                       : (log_gamma(n + 1.0) / log_gamma(2.0 * mu + n + 1.0))
                                 .value() /
                             (mu + n + 0.5);
    double num;
    if (poly_weight) {
      auto integrand = [&](double x) {
        return f.eval(x) * std::pow(1.0 - x * x, mu / 2.0) *
               fp(n + mu, -mu, x);
      };
      num = integrate_weighted(integrand, mu,
                               f.degree() + n + 2 * (int)mr);
    } else {
      num = integrate_theta([&](double t) {
        return f.eval(std::cos(t)) * std::pow(std::sin(t), 2.0 * mu + 1.0) *
               grade_part(n, mu, t);
      });
    }
    recon += num / hn * fp(n + mu, -mu, x_eval);
  }
  double lhs = recon / std::pow(1.0 - x_eval * x_eval, mu / 2.0);
  double rhs = f.eval(x_eval);
  CheckReport r = make_report("closure/projection", p, lhs, rhs, tol);
  if (!r.passed && n_max >= f.degree() + 2) {
    throw ConvergenceError(
        "closure_projection_check: finite-rank reconstruction failed");
  }
  return r;
}

CheckReport closure_series_check(double lambda, double gamma, double x,
                                 int n_max) {
  std::map<std::string, double> p{{"lambda", lambda},
                                  {"gamma", gamma},
                                  {"x", x},
                                  {"n_max", static_cast<double>(n_max)}};
  const double tol = 1e-3;

  double base = 1.0;  // (gamma)_n (2 lambda + 1)_n / (n! (2 lambda - gamma + 2)_n)
  double sum = 0.0;
  double tail_avg = 0.0;
  double early_mag = 0.0, late_mag = 0.0;
  int window = std::min(10, n_max / 2);
  for (int n = 0; n < n_max; ++n) {
    double term = (lambda + n + 0.5) * base * fp(n + lambda, -lambda, x);
    sum += term;
    base *= (gamma + n) * (2.0 * lambda + 1.0 + n) /
            ((n + 1.0) * (2.0 * lambda - gamma + 2.0 + n));
    if (n >= n_max / 2 - window && n < n_max / 2) early_mag += std::abs(term);
    if (n >= n_max - window) {
      late_mag += std::abs(term);
      tail_avg += sum;
    }
  }
  if (!(late_mag < early_mag)) {
    throw ConvergenceError("closure_series_check: terms do not decay");
  }
  double lhs = tail_avg / window;

  SignedLogValue v = log_gamma(2.0 * lambda - gamma + 2.0) /
                     (log_gamma(2.0 * lambda + 1.0) *
                      log_gamma(lambda - gamma + 1.0));
  v.log_abs += (lambda / 2.0 - gamma) * std::log1p(-x) +
               (lambda / 2.0) * std::log1p(x) -
               (lambda - gamma + 1.0) * std::log(2.0);
  return make_report("closure/series", p, lhs, v.value(), tol);
}

}  // namespace ferrex
