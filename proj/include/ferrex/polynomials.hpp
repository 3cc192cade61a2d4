#ifndef FERREX_POLYNOMIALS_HPP
#define FERREX_POLYNOMIALS_HPP

#include <vector>

namespace ferrex {

// Dense monomial coefficients, coeffs[j] multiplying x^j.
struct PolynomialCoeffs {
  std::vector<double> coeffs;

  int degree() const;
  double eval(double x) const;  // Horner
  PolynomialCoeffs derivative() const;
  PolynomialCoeffs multiply(const PolynomialCoeffs& o) const;
  PolynomialCoeffs scaled(double s) const;
  PolynomialCoeffs plus(const PolynomialCoeffs& o) const;
  void trim();  // drop trailing (near-)zero leading coefficients
};

struct GegenbauerParams {
  double lambda = 0.0;
  int n = 0;
};

// Jacobi polynomial P_n^{(alpha,beta)}(x) via its terminating 2F1.
double jacobi_p(int n, double alpha, double beta, double x);

// Gegenbauer C_n^lambda(x) by the three-term recurrence
//   n C_n = 2(n+lambda-1) x C_{n-1} - (n+2lambda-2) C_{n-2},
// valid for all real lambda including lambda <= 0.
double gegenbauer_c(int n, double lambda, double x);

// All of C_0..C_n at once (the recurrence produces them anyway).
std::vector<double> gegenbauer_c_all(int n, double lambda, double x);

// Hermite polynomial H_n(x): terminating 2F0 for x != 0, recurrence at 0.
double hermite_h(int n, double x);

// Meixner polynomial M_n(x; beta, c) = 2F1(-n, -x; beta; 1 - 1/c).
double meixner_m(int n, double x, double beta, double c);

double legendre_p(int n, double x);
double chebyshev_t(int n, double x);
double chebyshev_u(int n, double x);

// Monomial coefficients of C_n^lambda by the same recurrence on vectors.
PolynomialCoeffs gegenbauer_coeffs(int n, double lambda);

// C_n^nu(x) = sum_k coefficients[k] C_{n-2k}^mu(x).
struct ConnectionExpansion {
  int n;
  double nu, mu;
  std::vector<double> coefficients;  // k = 0 .. floor(n/2)
};
ConnectionExpansion connection_expand(int n, double nu, double mu);

// C_m^lambda(x) C_n^lambda(x) = sum_k coefficients[k] C_{m+n-2k}^lambda(x).
struct LinearizationExpansion {
  int m, n;
  double lambda;
  std::vector<double> coefficients;  // k = 0 .. m
};
LinearizationExpansion linearization_expand(int m, int n, double lambda);

}  // namespace ferrex

#endif
