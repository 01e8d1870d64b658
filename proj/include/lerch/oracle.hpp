#ifndef LERCH_ORACLE_HPP
#define LERCH_ORACLE_HPP

#include <complex>
#include <string>
#include <vector>

#include "lerch/error_model.hpp"

namespace lerch {
namespace oracle {

enum class Method {
  kDirectSeries,
  kAcceleratedSeries,
  kAdaptiveQuadrature,
  kClosedForm,
};

const char* method_name(Method m);

// A reference value together with the method that produced it and a
// conservative estimate of its own accuracy.
struct OracleResult {
  Complex value;
  Method method = Method::kClosedForm;
  double est_accuracy = 0.0;
};

// Compensated summation of the defining series sum z^j/(j+a)^s, stopped by
// the geometric tail bound |z|^{J+1} / ((J+a)^s (1-|z|)). Requires |z| <= 0.9
// (or |z| = 1 with s large enough for the algebraic tail to close).
OracleResult series_direct(Complex z, double s, double a, double tol);

// Euler-transformed alternating series for z = -r, 0 < r <= 1.5:
// sum (-r)^j / (j+a)^s. est_accuracy is the last increment with a 10x
// safety factor.
OracleResult series_alternating(double r, double s, double a, double tol);

// Tuning knobs for the adaptive integrator; tests use the tail override to
// verify tail-bound soundness.
struct AdaptiveOptions {
  double upper_limit_override = 0.0;  // > 0 forces the tail cut T
  int max_panels = 40000;
};

// Adaptive Gauss-Legendre panel quadrature of
//   int_0^inf x^{s-1} e^{-a x} / (1 - z e^{-x}) dx / Gamma(s),
// with a geometrically graded mesh toward 0 (ratio 1/4, depth 40) closing
// the x^{s-1} endpoint. tol >= 1e-13.
OracleResult adaptive_quadrature(Complex z, double s, double a, double tol,
                                 const AdaptiveOptions& options = {});

// Same integrator with complex s, a (Re > 0); reference for the
// experimental complex path.
OracleResult adaptive_quadrature_complex(Complex z, Complex s, Complex a,
                                         double tol,
                                         const AdaptiveOptions& options = {});

// Euler-accelerated alternating series with complex exponent, z = -r.
OracleResult series_alternating_complex(double r, Complex s, Complex a,
                                        double tol);

// Outcome of running every applicable oracle on one parameter triple.
struct CrossValidation {
  std::vector<OracleResult> results;
  std::vector<std::string> notes;  // per-method failures and remarks
  double max_pairwise = 0.0;
  bool converged = true;  // false if an applicable method stalled

  [[nodiscard]] bool ok() const {
    return converged && max_pairwise <= 1e-11;
  }
};

// Runs every oracle applicable to (z, s, a) and reports pairwise deviations.
CrossValidation cross_validate(Complex z, double s, double a,
                               double tol = 1e-13);

// Picks the preferred reference for (z, s, a): closed form at z = 0, the
// direct series for |z| <= 0.9, the accelerated series for z = -r with
// r <= 1.5, adaptive quadrature otherwise.
OracleResult best_reference(Complex z, double s, double a, double tol = 1e-13);

}  // namespace oracle
}  // namespace lerch

#endif  // LERCH_ORACLE_HPP
