#include <cmath>

#include "doctest.h"
#include "json.hpp"

#include "ferrex/checks.hpp"
#include "ferrex/errors.hpp"

using namespace ferrex;

TEST_CASE("make_report error metrics") {
  CheckReport r = make_report("t", {{"a", 1.0}}, 2.0, 2.0 + 1e-12, 1e-10);
  CHECK(r.abs_err == doctest::Approx(1e-12));
  CHECK(r.rel_err == doctest::Approx(5e-13));
  CHECK(r.passed);
  CheckReport z = make_report("t", {}, 0.0, 0.0, 1e-10);
  CHECK(z.passed);
  CheckReport bad = make_report("t", {}, 1.0, 2.0, 1e-10);
  CHECK_FALSE(bad.passed);
}

TEST_CASE("report JSON field names") {
  CheckReport r = make_report("demo", {{"mu", 0.5}}, 1.0, 1.0, 1e-9);
  auto j = nlohmann::json::parse(reports_to_json({r}));
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 1);
  for (const char* key : {"check_name", "params", "lhs", "rhs", "abs_err",
                          "rel_err", "tol", "passed"}) {
    CHECK(j[0].contains(key));
  }
  CHECK(j[0]["check_name"] == "demo");
  CHECK(j[0]["params"]["mu"] == 0.5);
}

TEST_CASE("orthogonality spot values") {
  // mu = 0, k = 1 diagonal: 1!/(Gamma(2) * 3/2) = 2/3
  CheckReport r =
      orthogonality_check(OrthFamily::ferrers_p_mu, {{"mu", 0.0}}, 1, 1);
  CHECK(r.rhs == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(r.passed);
  CheckReport off =
      orthogonality_check(OrthFamily::ferrers_p_mu, {{"mu", 0.5}}, 2, 5);
  CHECK(off.rhs == 0.0);
  CHECK(off.passed);
  // first-kind Chebyshev norms pi/eps_k
  CheckReport t0 =
      orthogonality_check(OrthFamily::chebyshev_trig, {{"kind", 1.0}}, 0, 0);
  CHECK(t0.rhs == doctest::Approx(M_PI));
  CHECK(t0.passed);
  CheckReport t3 =
      orthogonality_check(OrthFamily::chebyshev_trig, {{"kind", 1.0}}, 3, 3);
  CHECK(t3.rhs == doctest::Approx(M_PI / 2.0));
  CHECK(t3.passed);
  CHECK_THROWS_AS(
      orthogonality_check(OrthFamily::ferrers_p_mu, {{"mu", -1.0}}, 1, 1),
      DomainError);
  CHECK_THROWS_AS(
      orthogonality_check(OrthFamily::ferrers_q, {{"n", 0.0}}, 0, 1),
      DomainError);
}

TEST_CASE("christoffel-darboux guards") {
  CHECK_THROWS_AS(christoffel_darboux_check(0.5, 3, 0.4, 0.4, false, false),
                  DomainError);
  CHECK(christoffel_darboux_check(0.5, 3, 0.4, 0.4, true, false).passed);
  CHECK(christoffel_darboux_check(0.0, 2, -0.3, 0.6, false, true).passed);
}

TEST_CASE("poisson kernel construction") {
  PoissonKernelInstance inst = make_poisson_instance(1.0, 0.3, 1.1, 1.9);
  double x = std::cos(1.1), y = std::cos(1.9);
  double chi_expected = (1.0 + 0.09 - 2.0 * 0.3 * x * y) /
                        (2.0 * 0.3 * std::sin(1.1) * std::sin(1.9));
  CHECK(inst.chi == doctest::Approx(chi_expected).epsilon(1e-15));
  CHECK(inst.chi > 1.0);
  PoissonKernelInstance tight =
      make_poisson_instance(1.0, 1.0 - 1e-9, 1.2, 1.2);
  CHECK_THROWS_AS(poisson_kernel_check(tight, PoissonVariant::k0, 10),
                  DomainError);
  CHECK(poisson_kernel_check(inst, PoissonVariant::k0, 120).passed);
}

TEST_CASE("generating function guards and gauss variant") {
  CHECK_THROWS_AS(
      generating_function_check(1.0, 1.0, 0.3, GenFunVariant::alg0, 50),
      ConvergenceError);
  CHECK(generating_function_check(1.0, 0.4, 0.2, GenFunVariant::gauss, 150,
                                  0.8)
            .passed);
}

TEST_CASE("definite integral variants") {
  CheckReport spot = definite_integral_check(
      IntegralVariant::askey_razban,
      {{"lambda", 0.0}, {"gamma", 0.5}, {"n", 1.0}});
  CHECK(spot.rhs ==
        doctest::Approx(2.0 * std::sqrt(2.0) / 3.0).epsilon(1e-13));
  CHECK(spot.passed);
  CHECK_THROWS_AS(
      definite_integral_check(IntegralVariant::askey_razban,
                              {{"lambda", 0.0}, {"gamma", 2.0}, {"n", 1.0}}),
      DomainError);
  CHECK_THROWS_WITH_AS(
      definite_integral_check(IntegralVariant::genfun_integral,
                              {{"alpha", 1.0},
                               {"gamma", 2.0},
                               {"l", 1.0},
                               {"k", 0.0},
                               {"t", 0.3}}),
      doctest::Contains("special care"), DomainError);
}

TEST_CASE("sobolev spot values") {
  // N = 1: h^I_0 = 1, h^II_2 = 4/3
  CheckReport d0 = sobolev_bilinear_form(1, 0, 0);
  CHECK(d0.rhs == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(d0.passed);
  CheckReport d2 = sobolev_bilinear_form(1, 2, 2);
  CHECK(d2.rhs == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
  CHECK(d2.passed);
  CHECK(sobolev_bilinear_form(2, 1, 4).passed);  // off-diagonal zero
  CHECK_THROWS_AS(sobolev_bilinear_form(5, 0, 0), DomainError);
  CHECK_THROWS_AS(sobolev_bilinear_form(1, 50, 0), DomainError);
}

TEST_CASE("closure projection reproduces polynomials") {
  PolynomialCoeffs f{{0.0, 0.0, 1.0}};  // x^2
  CheckReport r = closure_projection_check(-0.5, f, 0.5, 4);
  CHECK(r.rhs == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(r.lhs == doctest::Approx(0.25).epsilon(1e-10));
  CHECK(r.passed);
  CHECK_THROWS_AS(closure_projection_check(-1.2, f, 0.5, 4), DomainError);
}

TEST_CASE("suite registry") {
  Suite s;
  CHECK(parse_suite("orthogonality", &s));
  CHECK(s == Suite::orthogonality);
  CHECK(parse_suite("all", &s));
  CHECK_FALSE(parse_suite("bogus", &s));
  std::vector<CheckReport> asym = run_suite(Suite::asymptotics);
  CHECK(asym.size() > 0);
  for (const auto& r : asym) CHECK(r.passed);
}
