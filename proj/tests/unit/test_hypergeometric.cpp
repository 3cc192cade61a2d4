#include <cmath>

#include "doctest.h"
#include "ferrex/errors.hpp"
#include "ferrex/hypergeometric.hpp"

using namespace ferrex;

TEST_CASE("gauss_2f1 reference values") {
  CHECK(gauss_2f1(0.3, 1.7, 2.2, 0.65).value ==
        doctest::Approx(1.2524400547796690996).epsilon(1e-13));
  CHECK(gauss_2f1(0.5, 0.75, 1.25, -0.95, kDefaultTol, 200000).value ==
        doctest::Approx(0.81122603448253697212).epsilon(1e-13));
}

TEST_CASE("terminating series are summed exactly") {
  SeriesResult r = gauss_2f1(-3.0, 1.7, 2.2, 0.65);
  CHECK(r.value == doctest::Approx(0.16184079494724025974).epsilon(1e-14));
  CHECK(r.converged);
  CHECK(r.terms_used == 4);
  CHECK(r.last_term_magnitude == 0.0);
}

TEST_CASE("hyp_pfq 3F2") {
  HypergeometricSpec spec{{-2.0, 1.1, 0.4}, {0.9, 1.3}, 0.8};
  CHECK(termination_index(spec) == 2);
  CHECK(hyp_pfq(spec).value ==
        doctest::Approx(0.56021514209157229752).epsilon(1e-14));
}

TEST_CASE("gauss_2f1 argument guards") {
  CHECK_THROWS_AS(gauss_2f1(0.3, 1.7, 2.2, 1.0), DomainError);
  CHECK_THROWS_AS(gauss_2f1(0.3, 1.7, 2.2, -1.2), DomainError);
  // non-terminating series close to the circle needs an enlarged budget
  CHECK_THROWS_AS(gauss_2f1(0.3, 1.7, 2.2, 0.95), DomainError);
  CHECK(gauss_2f1(0.3, 1.7, 2.2, 0.95, kDefaultTol, 200000).converged);
}

TEST_CASE("bessel_j") {
  CHECK(bessel_j(0.7, 1.9).value ==
        doctest::Approx(0.58497810302373622498).epsilon(1e-13));
  CHECK(bessel_j(0.0, 0.0).value == 1.0);
  CHECK(bessel_j(1.5, 0.0).value == 0.0);
  // first zero of J_0
  CHECK(std::abs(bessel_j(0.0, 2.404825557695773).value) < 1e-13);
}
