#ifndef FERREX_GAMMA_HPP
#define FERREX_GAMMA_HPP

namespace ferrex {

// Value carried as sign * exp(log_abs); sign == 0 iff the value is exactly 0.
// Keeps gamma ratios like Gamma(2*mu+n+1)/n! representable far beyond the
// double overflow threshold.
struct SignedLogValue {
  double log_abs = 0.0;
  int sign = 1;

  double value() const;

  SignedLogValue operator*(const SignedLogValue& o) const;
  SignedLogValue operator/(const SignedLogValue& o) const;
};

SignedLogValue signed_log(double v);

// log |Gamma(x)| and the sign of Gamma(x).  Lanczos approximation with
// reflection for x < 0.5.  Throws PoleError for x in {0, -1, -2, ...}.
SignedLogValue log_gamma(double x);

// Gamma(x) as a double (overflow produces +/-inf).
double gamma_fn(double x);

// Rising factorial a(a+1)...(a+n-1), computed as a plain product so that
// negative-integer parameters give exact zeros.
double pochhammer(double a, int n);

// Rising factorial in signed-log form (sign 0 on an exact zero).
SignedLogValue log_pochhammer(double a, int n);

// True when x is within tol of a non-positive integer; *k receives -round(x).
bool is_nonpositive_integer(double x, int* k = nullptr, double tol = 1e-12);

// Nearest-integer snap used throughout for parameter classification.
bool near_integer(double x, double tol = 1e-12);

}  // namespace ferrex

#endif
