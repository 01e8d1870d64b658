#ifndef LERCH_GAMMA_HPP
#define LERCH_GAMMA_HPP

#include <complex>

namespace lerch {

// Gamma function on the positive real axis and on the right half plane,
// via the Lanczos approximation (N=13, g=6.024680040776729583740234375,
// the standard double-precision coefficient set). Relative accuracy is a
// few ulps for moderate arguments and better than 1e-13 throughout the
// non-overflowing range.

// log Gamma(x), x > 0. Overflow-safe for large x.
double log_gamma(double x);

// Gamma(x), x > 0. Returns +inf once the result exceeds double range.
double gamma_fn(double x);

// log Gamma(s), Re(s) > 0 (principal branch).
std::complex<double> log_gamma(std::complex<double> s);

// Gamma(s), Re(s) > 0.
std::complex<double> gamma_fn(std::complex<double> s);

}  // namespace lerch

#endif  // LERCH_GAMMA_HPP
