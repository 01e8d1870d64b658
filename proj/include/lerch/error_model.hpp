#ifndef LERCH_ERROR_MODEL_HPP
#define LERCH_ERROR_MODEL_HPP

#include <complex>

namespace lerch {

using Complex = std::complex<double>;

// Parameters of Phi(z, s, a) in the real-(s, a) case. Valid iff s > 0,
// a > 0 and z is off the cut [1, +inf) on the real axis.
struct LerchParams {
  Complex z;
  double s = 1.0;
  double a = 1.0;
};

// Throws DomainError if the parameters violate the domain of the integral
// representation.
void validate(const LerchParams& params);

// Everything the sizing stage computes before touching nodes.
struct SizingPlan {
  double kz = 1.0;        // uniform bound on |f_z| over [0, inf)
  Complex t0;             // principal pole of f_z
  double r0 = 1.0;        // parabola parameter, ln R0 = Re sqrt(-t0)
  double eps_target = 0;  // integral-level tolerance, a^s Gamma(s) E/2
  double c_amp = 0.0;     // amplitude C = 4 pi a^s |z|^{-a} |ln_0 z|^{s-1}
  double m = 0.0;         // shifted order of the chosen rule, n + s/2
  int n = 0;              // rule order
  double gn = 1.0;        // truncation threshold g_n(s)
  int kn = 0;             // retained nodes, <= n
};

// Pole t_k = a (ln|z| + i(arg z + 2 k pi)) of f_z, arg z in (-pi, pi].
// Throws InvalidParameter for z = 0.
Complex pole(Complex z, double a, int k);

// Parabola parameter R solving Re sqrt(-t0) = ln R (principal root).
// Requires t0 off the nonnegative real axis; the result is > 1.
double r_zero(Complex t0);

// Uniform bound K_z on |1/(1 - z e^{-t/a})| over t in [0, inf):
//   1            for Re(z) <= 0,
//   |z|/|Im(z)|  for Re(z) > 0, Re(z) <= |z|^2,
//   1/|1-z|      for Re(z) > 0, Re(z) >  |z|^2.
// Throws InvalidParameter for z on [1, +inf).
double kz(Complex z);

// A priori estimate of the integral-level quadrature error at shifted
// order m:  4 pi a^s |z|^{-a} |ln_0 z|^{s-1} exp(-4 sqrt(m) Re sqrt(-t0)).
double epsilon_n(const LerchParams& params, double m);

// Lerch-level counterpart, epsilon_n / (Gamma(s) a^s).
double big_e_n(const LerchParams& params, double m);

// Result of the order solve: continuous m, rounded rule order n and the
// integral-level tolerance eps_target = a^s Gamma(s) tol_E / 2.
struct OrderSolve {
  double m = 0.0;
  int n = 0;
  double eps_target = 0.0;
};

// Solves epsilon_n(m) = eps_target for m and rounds n = ceil(m - s/2) up
// (floored at 1). Throws SizingOverflow when n would exceed kMaxRuleOrder.
OrderSolve solve_n(const LerchParams& params, double tol_E);

// Truncation threshold g_n(s) = -ln(eps/K_z) + (s-1) ln|1-s| (the s = 1
// singularity is removable). Clamped below at 1.0.
double gn_threshold(double s, double eps_target, double kz_bound);

// Number of retained nodes: min(n, ceil((2/pi) sqrt(m g_n)) + safety).
int solve_kn(double m, int n, double gn, int safety = 2);

// Large-n speedup diagnostics: predicted k_n = (4/pi) m^{3/4} sqrt(ln R0)
// and the decay constant d = (2 pi ln R0)^{2/3} in eps ~ C exp(-d k^{2/3}).
std::pair<double, double> kn_decay_diagnostic(double m, double r0);

// Algorithm steps 1-5 in one call: tolerance split, K_z, R0, order solve
// and truncation estimate. plan.m is the shifted order n + s/2 of the rule
// actually used.
SizingPlan make_plan(const LerchParams& params, double tol_E, int safety = 2);

}  // namespace lerch

#endif  // LERCH_ERROR_MODEL_HPP
