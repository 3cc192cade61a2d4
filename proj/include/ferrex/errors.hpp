#ifndef FERREX_ERRORS_HPP
#define FERREX_ERRORS_HPP

#include <stdexcept>

namespace ferrex {

// Argument outside the domain of the requested evaluation.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// A gamma-function pole (or equivalent) was hit with no alternate route.
struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

// An infinite series or iteration failed to reach the requested tolerance.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ferrex

#endif
