#ifndef LERCH_CORE_HPP
#define LERCH_CORE_HPP

#include <complex>

#include "lerch/error_model.hpp"

namespace lerch {

// Result record of an evaluation through the truncated Laguerre rule.
struct Evaluation {
  Complex value;            // Phi(z, s, a) approximation
  int n = 0;                // full rule order chosen by the sizing stage
  int kn = 0;               // nodes actually used (f_evals == kn)
  double est_error = 0.0;   // a priori Lerch-level estimate, 2 eps_n/(Gamma(s) a^s)
  int f_evals = 0;
  bool experimental = false;         // set by the complex-(s, a) path
  bool tol_clamped = false;          // requested tolerance clamped into range
  bool oscillation_warning = false;  // complex path: integrand oscillates
};

// Parameters with complex s and a (experimental path, real part positive).
struct ComplexLerchParams {
  Complex z;
  Complex s{1.0, 0.0};
  Complex a{1.0, 0.0};
};

// The bounded factor of the integrand, 1/(1 - z e^{-t/a}).
Complex f_z(double t, Complex z, double a);

// Phi(z, s, a) to a priori accuracy tol_E via the truncated generalized
// Gauss-Laguerre rule. tol_E is clamped to [1e-15, 1e-1]. Special case
// z = 0 returns a^{-s} exactly with n = kn = 0.
// Throws DomainError / SizingOverflow.
Evaluation evaluate(const LerchParams& params, double tol_E);

// Li_s(z) = z Phi(z, s, 1); the internal tolerance is tightened by
// max(|z|, 1) so the final product meets tol_E.
Evaluation polylog(double s, Complex z, double tol_E);

// beta(s) = 2^{-s} Phi(-1, s, 1/2).
Evaluation dirichlet_beta(double s, double tol_E);

// eta(s) = Phi(-1, s, 1).
Evaluation dirichlet_eta(double s, double tol_E);

// Experimental complex-(s, a) path: full n-point rule with alpha = Re(s)-1
// applied to the oscillatory integrand obtained from the change of variable
// x = t/Re(a). No a priori sizing exists for this case; the caller supplies
// n and est_error is reported as NaN.
Evaluation evaluate_complex(const ComplexLerchParams& params, int n);

// Integral-level sums of the n-point rule and its kn-node prefix, with the
// order pinned by the caller. Used by error sweeps and truncation checks.
struct FixedOrderSums {
  Complex i_full;   // I_n(z)
  Complex i_trunc;  // I_kn(z)
};
FixedOrderSums fixed_order_sums(const LerchParams& params, int n, int kn);

}  // namespace lerch

#endif  // LERCH_CORE_HPP
