#include "ferrex/polynomials.hpp"

#include <cmath>
#include <cstddef>

#include "ferrex/errors.hpp"
#include "ferrex/gamma.hpp"
#include "ferrex/hypergeometric.hpp"

namespace ferrex {

int PolynomialCoeffs::degree() const {
  return coeffs.empty() ? 0 : static_cast<int>(coeffs.size()) - 1;
}

double PolynomialCoeffs::eval(double x) const {
  double v = 0.0;
  for (std::size_t i = coeffs.size(); i-- > 0;) v = v * x + coeffs[i];
  return v;
}

PolynomialCoeffs PolynomialCoeffs::derivative() const {
  PolynomialCoeffs d;
  if (coeffs.size() <= 1) {
    d.coeffs = {0.0};
    return d;
  }
  d.coeffs.resize(coeffs.size() - 1);
  for (std::size_t j = 1; j < coeffs.size(); ++j)
    d.coeffs[j - 1] = coeffs[j] * static_cast<double>(j);
  return d;
}

PolynomialCoeffs PolynomialCoeffs::multiply(const PolynomialCoeffs& o) const {
  PolynomialCoeffs p;
  if (coeffs.empty() || o.coeffs.empty()) return p;
  p.coeffs.assign(coeffs.size() + o.coeffs.size() - 1, 0.0);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs.size(); ++j)
      p.coeffs[i + j] += coeffs[i] * o.coeffs[j];
  return p;
}

PolynomialCoeffs PolynomialCoeffs::scaled(double s) const {
  PolynomialCoeffs p = *this;
  for (double& c : p.coeffs) c *= s;
  return p;
}

PolynomialCoeffs PolynomialCoeffs::plus(const PolynomialCoeffs& o) const {
  PolynomialCoeffs p;
  p.coeffs.assign(std::max(coeffs.size(), o.coeffs.size()), 0.0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) p.coeffs[i] += coeffs[i];
  for (std::size_t i = 0; i < o.coeffs.size(); ++i) p.coeffs[i] += o.coeffs[i];
  return p;
}

void PolynomialCoeffs::trim() {
  while (coeffs.size() > 1 && coeffs.back() == 0.0) coeffs.pop_back();
}

double jacobi_p(int n, double alpha, double beta, double x) {
  if (n < 0) throw DomainError("jacobi_p: n < 0");
  int k;
  if (is_nonpositive_integer(alpha + 1.0, &k) && k < n)
    throw DomainError("jacobi_p: alpha+1 pole not rescued by termination");
  const double pre = pochhammer(alpha + 1.0, n) / pochhammer(1.0, n);
  const SeriesResult f = gauss_2f1(static_cast<double>(-n),
                                   n + alpha + beta + 1.0, alpha + 1.0,
                                   (1.0 - x) / 2.0);
  return pre * f.value;
}

std::vector<double> gegenbauer_c_all(int n, double lambda, double x) {
  if (n < 0) throw DomainError("gegenbauer_c: n < 0");
  std::vector<double> c(static_cast<std::size_t>(n) + 1);
  c[0] = 1.0;
  if (n >= 1) c[1] = 2.0 * lambda * x;
  for (int k = 2; k <= n; ++k)
    c[k] = (2.0 * (k + lambda - 1.0) * x * c[k - 1] -
            (k + 2.0 * lambda - 2.0) * c[k - 2]) /
           k;
  return c;
}

double gegenbauer_c(int n, double lambda, double x) {
  return gegenbauer_c_all(n, lambda, x).back();
}

double hermite_h(int n, double x) {
  if (n < 0) throw DomainError("hermite_h: n < 0");
  if (x == 0.0) {
    double hm1 = 0.0, h = 1.0;
    for (int k = 0; k < n; ++k) {
      const double next = 2.0 * x * h - 2.0 * k * hm1;
      hm1 = h;
      h = next;
    }
    return h;
  }
  const SeriesResult f =
      hyp_pfq({{-n / 2.0, (1.0 - n) / 2.0}, {}, -1.0 / (x * x)});
  return std::pow(2.0 * x, n) * f.value;
}

double meixner_m(int n, double x, double beta, double c) {
  if (n < 0) throw DomainError("meixner_m: n < 0");
  if (c == 0.0 || c == 1.0) throw DomainError("meixner_m: c in {0, 1}");
  int k;
  if (is_nonpositive_integer(beta, &k) && k < n)
    throw DomainError("meixner_m: beta pole not rescued by termination");
  return gauss_2f1(static_cast<double>(-n), -x, beta, 1.0 - 1.0 / c).value;
}

double legendre_p(int n, double x) {
  if (n < 0) throw DomainError("legendre_p: n < 0");
  double pm1 = 0.0, p = 1.0;
  for (int k = 0; k < n; ++k) {
    const double next = ((2.0 * k + 1.0) * x * p - k * pm1) / (k + 1.0);
    pm1 = p;
    p = next;
  }
  return p;
}

double chebyshev_t(int n, double x) {
  if (n < 0) throw DomainError("chebyshev_t: n < 0");
  double tm1 = 1.0, t = x;
  if (n == 0) return 1.0;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * t - tm1;
    tm1 = t;
    t = next;
  }
  return t;
}

double chebyshev_u(int n, double x) {
  if (n < 0) throw DomainError("chebyshev_u: n < 0");
  double um1 = 1.0, u = 2.0 * x;
  if (n == 0) return 1.0;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * u - um1;
    um1 = u;
    u = next;
  }
  return u;
}

PolynomialCoeffs gegenbauer_coeffs(int n, double lambda) {
  if (n < 0) throw DomainError("gegenbauer_coeffs: n < 0");
  if (n > 40) throw DomainError("gegenbauer_coeffs: degree cap 40 exceeded");
  PolynomialCoeffs cm2{{1.0}};
  if (n == 0) return cm2;
  PolynomialCoeffs cm1{{0.0, 2.0 * lambda}};
  if (n == 1) return cm1;
  for (int k = 2; k <= n; ++k) {
    PolynomialCoeffs c;
    c.coeffs.assign(static_cast<std::size_t>(k) + 1, 0.0);
    for (std::size_t j = 0; j < cm1.coeffs.size(); ++j)
      c.coeffs[j + 1] += 2.0 * (k + lambda - 1.0) * cm1.coeffs[j] / k;
    for (std::size_t j = 0; j < cm2.coeffs.size(); ++j)
      c.coeffs[j] -= (k + 2.0 * lambda - 2.0) * cm2.coeffs[j] / k;
    cm2 = cm1;
    cm1 = c;
  }
  return cm1;
}

ConnectionExpansion connection_expand(int n, double nu, double mu) {
  if (n < 0) throw DomainError("connection_expand: n < 0");
  if (mu == 0.0) throw DomainError("connection_expand: mu = 0");
  ConnectionExpansion e{n, nu, mu, {}};
  for (int k = 0; k <= n / 2; ++k) {
    const double denom =
        pochhammer(1.0, k) * pochhammer(mu + 1.0, n - k);
    if (denom == 0.0)
      throw DomainError("connection_expand: denominator Pochhammer zero");
    e.coefficients.push_back((mu + n - 2.0 * k) / mu * pochhammer(nu - mu, k) *
                             pochhammer(nu, n - k) / denom);
  }
  return e;
}

LinearizationExpansion linearization_expand(int m, int n, double lambda) {
  if (m < 0 || n < m) throw DomainError("linearization_expand: need n >= m >= 0");
  LinearizationExpansion e{m, n, lambda, {}};
  for (int k = 0; k <= m; ++k) {
    const double denom = (m + n + lambda - k) * pochhammer(1.0, k) *
                         pochhammer(1.0, m - k) * pochhammer(1.0, n - k) *
                         pochhammer(lambda, m + n - k) *
                         pochhammer(2.0 * lambda, m + n - 2 * k);
    if (denom == 0.0)
      throw DomainError("linearization_expand: denominator Pochhammer zero");
    const double num = (m + n + lambda - 2.0 * k) *
                       pochhammer(1.0, m + n - 2 * k) * pochhammer(lambda, k) *
                       pochhammer(lambda, m - k) * pochhammer(lambda, n - k) *
                       pochhammer(2.0 * lambda, m + n - k);
    e.coefficients.push_back(num / denom);
  }
  return e;
}

}  // namespace ferrex
