#include <cmath>

#include "doctest.h"
#include "ferrex/errors.hpp"
#include "ferrex/gamma.hpp"

using namespace ferrex;

TEST_CASE("gamma_fn known values") {
  CHECK(gamma_fn(1.0) == 1.0);
  CHECK(gamma_fn(5.0) == 24.0);
  CHECK(gamma_fn(12.0) == 39916800.0);
  CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-14));
  CHECK(gamma_fn(-0.5) ==
        doctest::Approx(-2.0 * std::sqrt(M_PI)).epsilon(1e-13));
  CHECK(gamma_fn(7.3) == doctest::Approx(1271.4236336639093).epsilon(1e-13));
}

TEST_CASE("log_gamma poles and signs") {
  CHECK_THROWS_AS(log_gamma(0.0), PoleError);
  CHECK_THROWS_AS(log_gamma(-3.0), PoleError);
  CHECK(log_gamma(-1.5).sign == 1);   // Gamma(-1.5) > 0
  CHECK(log_gamma(-0.5).sign == -1);  // Gamma(-0.5) < 0
  CHECK(log_gamma(171.0).log_abs ==
        doctest::Approx(std::lgamma(171.0)).epsilon(1e-14));
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(2.0, 3) == 24.0);
  CHECK(pochhammer(0.5, 2) == 0.75);
  CHECK(pochhammer(-3.0, 5) == 0.0);  // crosses zero exactly
  CHECK(pochhammer(1.0, 0) == 1.0);
  CHECK_THROWS_AS(pochhammer(1.0, -1), DomainError);
  SignedLogValue lp = log_pochhammer(-3.0, 5);
  CHECK(lp.sign == 0);
  CHECK(log_pochhammer(2.0, 3).value() == doctest::Approx(24.0));
}

TEST_CASE("signed log arithmetic") {
  SignedLogValue a = signed_log(-3.0);
  SignedLogValue b = signed_log(0.5);
  CHECK((a * b).value() == doctest::Approx(-1.5).epsilon(1e-15));
  CHECK((a / b).value() == doctest::Approx(-6.0).epsilon(1e-15));
  CHECK(signed_log(0.0).sign == 0);
  // ratio far beyond double overflow still combines finitely
  SignedLogValue big = log_gamma(300.0) / log_gamma(299.0);
  CHECK(big.value() == doctest::Approx(299.0).epsilon(1e-12));
}

TEST_CASE("integer classification") {
  int k = 0;
  CHECK(is_nonpositive_integer(-4.0 + 5e-13, &k));
  CHECK(k == 4);
  CHECK_FALSE(is_nonpositive_integer(0.3));
  CHECK_FALSE(is_nonpositive_integer(2.0));
  CHECK(near_integer(7.0 - 1e-13));
  CHECK_FALSE(near_integer(7.4));
}
