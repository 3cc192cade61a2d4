#include <cmath>
#include <functional>

#include "ferrex/checks.hpp"
#include "ferrex/errors.hpp"

namespace ferrex {

namespace {

void append(std::vector<CheckReport>& out, std::vector<CheckReport> more) {
  for (auto& r : more) out.push_back(std::move(r));
}

std::vector<CheckReport> suite_orthogonality() {
  std::vector<CheckReport> out;
  for (double mu : {-0.4, 0.0, 0.5, 1.0, 2.3}) {
    for (int k = 0; k <= 8; ++k) {
      for (int kp = k; kp <= 8; ++kp) {
        out.push_back(orthogonality_check(OrthFamily::ferrers_p_mu,
                                          {{"mu", mu}}, k, kp));
      }
    }
  }
  for (int n : {0, 1, 2}) {
    for (int k = 0; k <= 6; ++k) {
      for (int kp = k; kp <= 6; ++kp) {
        double dn = n;
        out.push_back(orthogonality_check(OrthFamily::ferrers_p_pos,
                                          {{"n", dn}}, k, kp));
        out.push_back(orthogonality_check(OrthFamily::ferrers_mixed,
                                          {{"n", dn}}, k, kp));
        if (n > 0 || (k >= 1 && kp >= 1)) {
          out.push_back(orthogonality_check(OrthFamily::ferrers_q,
                                            {{"n", dn}}, k, kp));
        }
      }
    }
  }
  for (double mu : {0.25, 1.0, 1.75}) {
    for (int k = 0; k <= 5; ++k) {
      for (int kp = k; kp <= 5; ++kp) {
        out.push_back(orthogonality_check(OrthFamily::gegenbauer, {{"mu", mu}},
                                          k, kp));
      }
    }
  }
  for (int kind : {1, 2}) {
    for (int k = 0; k <= 4; ++k) {
      for (int kp = k; kp <= 4; ++kp) {
        out.push_back(orthogonality_check(OrthFamily::chebyshev_trig,
                                          {{"kind", (double)kind}}, k, kp));
      }
    }
  }
  return out;
}

std::vector<CheckReport> suite_christoffel_darboux() {
  std::vector<CheckReport> out;
  const double xs[][2] = {{-0.8, -0.3}, {-0.8, 0.4}, {-0.8, 0.9},
                          {-0.25, 0.1}, {-0.25, 0.65}, {0.05, 0.5},
                          {0.05, 0.95}, {0.35, 0.7},  {0.6, 0.9}};
  for (double mu : {0.0, 0.75, 1.5}) {
    for (int n = 1; n <= 6; ++n) {
      for (const auto& pr : xs) {
        out.push_back(
            christoffel_darboux_check(mu, n, pr[0], pr[1], false, false));
      }
      for (double x : {-0.6, 0.2, 0.85}) {
        out.push_back(christoffel_darboux_check(mu, n, x, x, true, false));
      }
    }
  }
  for (int n : {1, 2}) {
    for (const auto& pr : xs) {
      out.push_back(
          christoffel_darboux_check(0.0, n, pr[0], pr[1], false, true));
    }
    for (double x : {-0.6, 0.2, 0.85}) {
      out.push_back(christoffel_darboux_check(0.0, n, x, x, true, true));
    }
  }
  return out;
}

std::vector<CheckReport> suite_poisson() {
  std::vector<CheckReport> out;
  const double th = 1.1, thp = 1.9;
  for (double lam : {0.5, 1.0, 1.7}) {
    for (double t : {0.2, 0.35, 0.5}) {
      PoissonKernelInstance inst = make_poisson_instance(lam, t, th, thp);
      int n = t <= 0.2 ? 80 : (t <= 0.35 ? 120 : 200);
      out.push_back(poisson_kernel_check(inst, PoissonVariant::k0, n));
      out.push_back(poisson_kernel_check(inst, PoissonVariant::k1, n));
      out.push_back(poisson_kernel_check(inst, PoissonVariant::k2, n));
    }
    PoissonKernelInstance inst2 = make_poisson_instance(lam, 0.4, 0.7, 2.2);
    out.push_back(poisson_kernel_check(inst2, PoissonVariant::k0, 160));
  }
  for (double t : {0.25, 0.5}) {
    PoissonKernelInstance inst = make_poisson_instance(1.0, t, th, thp);
    out.push_back(poisson_kernel_check(inst, PoissonVariant::addition, 200));
  }
  return out;
}

std::vector<CheckReport> suite_generating() {
  std::vector<CheckReport> out;
  const GenFunVariant vs[] = {GenFunVariant::alg0, GenFunVariant::alg1,
                              GenFunVariant::alg2, GenFunVariant::p0,
                              GenFunVariant::p1,   GenFunVariant::p2};
  for (double lam : {0.5, 1.0, 1.7}) {
    for (double t : {-0.5, -0.2, 0.3, 0.5}) {
      for (double x : {-0.7, 0.1, 0.8}) {
        for (GenFunVariant v : vs) {
          out.push_back(generating_function_check(lam, t, x, v, 200));
        }
        out.push_back(generating_function_check(
            lam, t, x, GenFunVariant::gauss, 200, 0.9));
      }
    }
  }
  // Legendre specialization: all three t^n P_n sums coincide structurally;
  // spot value 1/sqrt(1 + t^2 - 2tx) at (t, x) = (0.5, 0.3).
  out.push_back(
      generating_function_check(0.5, 0.5, 0.3, GenFunVariant::alg0, 200));
  return out;
}

std::vector<CheckReport> suite_integrals() {
  std::vector<CheckReport> out;
  const double ar[][3] = {{1.0, 0.6, 0.0}, {1.0, 0.6, 2.0},  {1.5, 0.8, 1.0},
                          {2.0, 1.25, 3.0}, {0.5, 0.3, 4.0}, {2.5, 2.1, 1.0}};
  for (const auto& c : ar) {
    out.push_back(definite_integral_check(
        IntegralVariant::askey_razban,
        {{"lambda", c[0]}, {"gamma", c[1]}, {"n", c[2]}}));
  }
  const double pe[][4] = {{1.5, 0.5, 0.0, 1.3}, {1.5, 0.5, 2.0, 1.3},
                          {2.0, 0.0, 1.0, 2.0}, {2.5, 1.0, 3.0, 1.6},
                          {0.7, 0.3, 2.0, 3.0}, {1.2, 0.8, 4.0, 1.8}};
  for (const auto& c : pe) {
    out.push_back(definite_integral_check(
        IntegralVariant::power_expansion,
        {{"nu", c[0]}, {"mu", c[1]}, {"n", c[2]}, {"z", c[3]}}));
  }
  const double gi[][5] = {{1.0, 0.4, 0.0, 0.0, 0.3},
                          {1.0, 0.4, 1.0, 1.0, 0.3},
                          {1.5, 0.7, 0.0, 2.0, 0.45},
                          {0.8, 0.25, 1.0, 2.0, 0.2}};
  for (const auto& c : gi) {
    out.push_back(definite_integral_check(IntegralVariant::genfun_integral,
                                          {{"alpha", c[0]},
                                           {"gamma", c[1]},
                                           {"l", c[2]},
                                           {"k", c[3]},
                                           {"t", c[4]}}));
  }
  return out;
}

CheckReport ratio_report(const std::string& name,
                         std::map<std::string, double> params, double ratio,
                         double lo, double hi) {
  CheckReport r;
  r.check_name = name;
  r.params = std::move(params);
  r.lhs = ratio;
  r.rhs = 0.5 * (lo + hi);
  r.abs_err = std::abs(ratio - r.rhs);
  r.rel_err = r.abs_err / std::abs(r.rhs);
  r.tol = 0.5 * (hi - lo) / std::abs(r.rhs);
  r.passed = ratio >= lo && ratio <= hi;
  return r;
}

std::vector<CheckReport> suite_asymptotics() {
  std::vector<CheckReport> out;
  // Mehler-Heine: residual ~ 1/n, so doubling n should roughly halve it.
  for (double lam : {0.3, 1.0}) {
    for (double z : {0.5, 2.0}) {
      double r1 = mehler_heine_residual(lam, z, 200);
      double r2 = mehler_heine_residual(lam, z, 400);
      out.push_back(ratio_report(
          "asymptotics/mehler_heine",
          {{"lambda", lam}, {"z", z}, {"n", 200.0}}, r2 / r1, 0.4, 0.6));
    }
  }
  // Hermite limit: residual ~ 1/lambda (slope -1 per decade).
  for (int n : {2, 3, 5}) {
    for (double x : {0.4, 1.1}) {
      double r2 = hermite_limit_residual(n, x, 1.0e2);
      double r3 = hermite_limit_residual(n, x, 1.0e3);
      double r4 = hermite_limit_residual(n, x, 1.0e4);
      out.push_back(ratio_report(
          "asymptotics/hermite_limit",
          {{"n", (double)n}, {"x", x}, {"lambda", 1.0e2}}, r3 / r2, 0.08,
          0.13));
      out.push_back(ratio_report(
          "asymptotics/hermite_limit",
          {{"n", (double)n}, {"x", x}, {"lambda", 1.0e3}}, r4 / r3, 0.08,
          0.13));
    }
  }
  // Large-lambda Gegenbauer against the first correction: residual ~ 1/lambda^2.
  for (int n : {3, 4, 6}) {
    for (double x : {0.55, 0.9}) {
      double r1 = gegenbauer_large_lambda_residual(n, x, 50.0);
      double r2 = gegenbauer_large_lambda_residual(n, x, 100.0);
      out.push_back(ratio_report(
          "asymptotics/gegenbauer_large_lambda",
          {{"n", (double)n}, {"x", x}, {"lambda", 50.0}}, r2 / r1, 0.2, 0.3));
    }
  }
  return out;
}

std::vector<CheckReport> suite_sobolev() {
  std::vector<CheckReport> out;
  for (int N : {1, 2}) {
    for (int k = 0; k <= 2 * N + 3; ++k) {
      for (int kp = k; kp <= 2 * N + 3; ++kp) {
        out.push_back(sobolev_bilinear_form(N, k, kp));
      }
    }
  }
  return out;
}

std::vector<CheckReport> suite_closure() {
  std::vector<CheckReport> out;
  for (double mu : {-0.4, 0.0, 0.4}) {
    for (int deg = 0; deg <= 6; ++deg) {
      PolynomialCoeffs f;
      f.coeffs.assign(deg + 1, 0.0);
      f.coeffs[deg] = 1.0;
      if (deg >= 2) f.coeffs[deg - 2] = -0.5;
      if (deg >= 1) f.coeffs[0] = 0.25;
      out.push_back(closure_projection_check(mu, f, 0.3, deg + 2));
    }
  }
  // Christoffel-Darboux kernel as projector: reproducing a polynomial of
  // degree < n is the same reconstruction with n_max = n - 1.
  for (double mu : {0.0, 0.6}) {
    for (int n : {3, 5, 8}) {
      PolynomialCoeffs f;
      f.coeffs.assign(n, 0.0);
      f.coeffs[n - 1] = 1.0;
      f.coeffs[0] = -0.3;
      out.push_back(closure_projection_check(mu, f, -0.45, n - 1));
    }
  }
  for (double gam : {0.4, 0.9}) {
    out.push_back(closure_series_check(2.5, gam, 0.2, 4000));
  }
  return out;
}

}  // namespace

bool parse_suite(const std::string& name, Suite* out) {
  if (name == "orthogonality") *out = Suite::orthogonality;
  else if (name == "christoffel_darboux") *out = Suite::christoffel_darboux;
  else if (name == "poisson") *out = Suite::poisson;
  else if (name == "generating") *out = Suite::generating;
  else if (name == "integrals") *out = Suite::integrals;
  else if (name == "asymptotics") *out = Suite::asymptotics;
  else if (name == "sobolev") *out = Suite::sobolev;
  else if (name == "closure") *out = Suite::closure;
  else if (name == "all") *out = Suite::all;
  else return false;
  return true;
}

std::vector<CheckReport> run_suite(Suite suite) {
  std::vector<CheckReport> out;
  switch (suite) {
    case Suite::orthogonality: return suite_orthogonality();
    case Suite::christoffel_darboux: return suite_christoffel_darboux();
    case Suite::poisson: return suite_poisson();
    case Suite::generating: return suite_generating();
    case Suite::integrals: return suite_integrals();
    case Suite::asymptotics: return suite_asymptotics();
    case Suite::sobolev: return suite_sobolev();
    case Suite::closure: return suite_closure();
    case Suite::all:
      append(out, suite_orthogonality());
      append(out, suite_christoffel_darboux());
      append(out, suite_poisson());
      append(out, suite_generating());
      append(out, suite_integrals());
      append(out, suite_asymptotics());
      append(out, suite_sobolev());
      append(out, suite_closure());
      return out;
  }
  return out;
}

}  // namespace ferrex
