#include <cmath>

#include "doctest.h"
#include "ferrex/gamma.hpp"
#include "ferrex/polynomials.hpp"

using namespace ferrex;

TEST_CASE("classical polynomial reference values") {
  CHECK(jacobi_p(4, 0.3, -0.4, 0.6) ==
        doctest::Approx(-0.49916416).epsilon(1e-13));
  CHECK(gegenbauer_c(5, 1.3, -0.42) ==
        doctest::Approx(-0.7366131696059136).epsilon(1e-13));
  CHECK(gegenbauer_c(4, -0.7, 0.3) ==
        doctest::Approx(-0.05925066).epsilon(1e-12));
  CHECK(hermite_h(6, 1.3) == doctest::Approx(34.787776).epsilon(1e-13));
  CHECK(hermite_h(5, -0.4) == doctest::Approx(-38.08768).epsilon(1e-13));
  CHECK(meixner_m(3, 5.0, 1.2, 0.4) ==
        doctest::Approx(9.416193181818181271).epsilon(1e-13));
  CHECK(meixner_m(2, 0.7, 2.0, 0.25) ==
        doctest::Approx(-1.415).epsilon(1e-13));
  CHECK(legendre_p(7, 0.3) ==
        doctest::Approx(-0.22407298125).epsilon(1e-13));
  CHECK(chebyshev_t(6, -0.8) == doctest::Approx(-0.752192).epsilon(1e-13));
  CHECK(chebyshev_u(5, 0.45) == doctest::Approx(0.37449).epsilon(1e-12));
}

TEST_CASE("gegenbauer special points") {
  // C_n^lambda(1) = (2 lambda)_n / n!
  for (int n = 0; n <= 6; ++n) {
    CHECK(gegenbauer_c(n, 1.0, 1.0) ==
          doctest::Approx(pochhammer(2.0, n) / gamma_fn(n + 1.0))
              .epsilon(1e-13));
  }
  // parity
  CHECK(gegenbauer_c(5, 0.8, -0.37) ==
        doctest::Approx(-gegenbauer_c(5, 0.8, 0.37)).epsilon(1e-13));
  std::vector<double> all = gegenbauer_c_all(6, 1.3, -0.42);
  CHECK(all.size() == 7);
  CHECK(all[5] == doctest::Approx(gegenbauer_c(5, 1.3, -0.42)));
}

TEST_CASE("gegenbauer_coeffs matches recurrence evaluation") {
  for (double lam : {1.5, -0.5, -1.5, 0.25}) {
    for (int n : {0, 1, 4, 7}) {
      PolynomialCoeffs c = gegenbauer_coeffs(n, lam);
      for (double x : {-0.9, -0.2, 0.6}) {
        CHECK(c.eval(x) ==
              doctest::Approx(gegenbauer_c(n, lam, x)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("polynomial coefficient algebra") {
  PolynomialCoeffs p{{1.0, 0.0, -2.0}};   // 1 - 2x^2
  PolynomialCoeffs q{{0.0, 3.0}};         // 3x
  PolynomialCoeffs r = p.multiply(q);     // 3x - 6x^3
  CHECK(r.degree() == 3);
  CHECK(r.eval(0.5) == doctest::Approx(3 * 0.5 - 6 * 0.125));
  PolynomialCoeffs d = r.derivative();    // 3 - 18x^2
  CHECK(d.eval(2.0) == doctest::Approx(3.0 - 72.0));
  CHECK(p.plus(q).eval(1.0) == doctest::Approx(2.0));
  CHECK(p.scaled(-2.0).eval(1.0) == doctest::Approx(2.0));
}

TEST_CASE("connection expansion reconstructs C_n^nu from C^mu") {
  for (int n : {2, 5, 8}) {
    ConnectionExpansion ce = connection_expand(n, 1.2, 0.4);
    for (double x : {-0.7, 0.15, 0.8}) {
      double rec = 0.0;
      for (size_t k = 0; k < ce.coefficients.size(); ++k) {
        rec += ce.coefficients[k] *
               gegenbauer_c(n - 2 * static_cast<int>(k), 0.4, x);
      }
      CHECK(rec ==
            doctest::Approx(gegenbauer_c(n, 1.2, x)).epsilon(1e-11));
    }
  }
  // C_2^2 = 3 C_2^1 + C_0^1
  ConnectionExpansion spot = connection_expand(2, 2.0, 1.0);
  REQUIRE(spot.coefficients.size() == 2);
  CHECK(spot.coefficients[0] == doctest::Approx(3.0).epsilon(1e-13));
  CHECK(spot.coefficients[1] == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("linearization expansion reconstructs products") {
  for (int m : {1, 3, 4}) {
    for (int n : {2, 5, 6}) {
      if (m > n) continue;
      LinearizationExpansion le = linearization_expand(m, n, 0.7);
      for (double x : {-0.55, 0.3}) {
        double rec = 0.0;
        for (size_t k = 0; k < le.coefficients.size(); ++k) {
          rec += le.coefficients[k] *
                 gegenbauer_c(m + n - 2 * static_cast<int>(k), 0.7, x);
        }
        CHECK(rec == doctest::Approx(gegenbauer_c(m, 0.7, x) *
                                     gegenbauer_c(n, 0.7, x))
                         .epsilon(1e-11));
      }
    }
  }
}
