#include "lerch/core.hpp"

#include <cmath>
#include <limits>

#include "lerch/errors.hpp"
#include "lerch/gamma.hpp"
#include "lerch/quadrature.hpp"

namespace lerch {

namespace {

constexpr double kTolFloor = 1e-15;
constexpr double kTolCeiling = 1e-1;

double clamp_tolerance(double tol_E, bool* clamped) {
  if (!(tol_E > 0.0) || !std::isfinite(tol_E)) {
    throw InvalidParameter("evaluate: tolerance must be positive and finite");
  }
  if (tol_E < kTolFloor) {
    *clamped = true;
    return kTolFloor;
  }
  if (tol_E > kTolCeiling) {
    *clamped = true;
    return kTolCeiling;
  }
  return tol_E;
}

}  // namespace

Complex f_z(double t, Complex z, double a) {
  return 1.0 / (1.0 - z * std::exp(-t / a));
}

Evaluation evaluate(const LerchParams& params, double tol_E) {
  validate(params);
  Evaluation out;
  const double tol = clamp_tolerance(tol_E, &out.tol_clamped);

  if (params.z == Complex(0.0, 0.0)) {
    out.value = std::pow(params.a, -params.s);
    return out;  // Phi(0, s, a) = a^{-s}, only the j = 0 term survives
  }

  const SizingPlan plan = make_plan(params, tol);
  const auto rule = gauss_laguerre_cached(params.s - 1.0, plan.n);

  Complex sum{0.0, 0.0};
  for (int j = 0; j < plan.kn; ++j) {
    const auto uj = static_cast<std::size_t>(j);
    sum += rule->weights[uj] * f_z(rule->nodes[uj], params.z, params.a);
  }

  const double norm = gamma_fn(params.s) * std::pow(params.a, params.s);
  out.value = sum / norm;
  out.n = plan.n;
  out.kn = plan.kn;
  out.f_evals = plan.kn;
  out.est_error = 2.0 * epsilon_n(params, plan.m) / norm;
  return out;
}

Evaluation polylog(double s, Complex z, double tol_E) {
  const double scale = std::max(std::abs(z), 1.0);
  Evaluation ev = evaluate({z, s, 1.0}, tol_E / scale);
  ev.value *= z;
  ev.est_error *= std::abs(z);
  return ev;
}

Evaluation dirichlet_beta(double s, double tol_E) {
  const double scale = std::pow(2.0, s);
  Evaluation ev = evaluate({Complex(-1.0, 0.0), s, 0.5}, scale * tol_E);
  ev.value /= scale;
  ev.est_error /= scale;
  return ev;
}

Evaluation dirichlet_eta(double s, double tol_E) {
  return evaluate({Complex(-1.0, 0.0), s, 1.0}, tol_E);
}

FixedOrderSums fixed_order_sums(const LerchParams& params, int n, int kn) {
  validate(params);
  if (n < 1 || n > kMaxRuleOrder || kn < 1 || kn > n) {
    throw InvalidParameter("fixed_order_sums: need 1 <= kn <= n <= N_MAX");
  }
  const auto rule = gauss_laguerre_cached(params.s - 1.0, n);
  FixedOrderSums out;
  Complex sum{0.0, 0.0};
  for (int j = 0; j < n; ++j) {
    const auto uj = static_cast<std::size_t>(j);
    sum += rule->weights[uj] * f_z(rule->nodes[uj], params.z, params.a);
    if (j + 1 == kn) out.i_trunc = sum;
  }
  out.i_full = sum;
  return out;
}

Evaluation evaluate_complex(const ComplexLerchParams& params, int n) {
  if (!(params.s.real() > 0.0)) {
    throw DomainError("evaluate_complex: Re(s) must be positive");
  }
  if (!(params.a.real() > 0.0)) {
    throw DomainError("evaluate_complex: Re(a) must be positive");
  }
  if (params.z.imag() == 0.0 && params.z.real() >= 1.0) {
    throw DomainError("evaluate_complex: z lies on the cut [1, +inf)");
  }
  if (n < 1 || n > kMaxRuleOrder) {
    throw InvalidParameter("evaluate_complex: n out of range");
  }

  const double rho = params.a.real();
  const double sigma = params.a.imag();
  const double im_s = params.s.imag();

  const auto rule = gauss_laguerre_cached(params.s.real() - 1.0, n);

  // Phi = e^{-i Im(s) ln rho} / (rho^{Re s} Gamma(s))
  //       * int_0^inf t^{Re(s)-1} e^{-t} h(t) dt,
  // h(t) = e^{i(Im(s) ln t - (sigma/rho) t)} / (1 - z e^{-t/rho}).
  Complex sum{0.0, 0.0};
  for (int j = 0; j < n; ++j) {
    const auto uj = static_cast<std::size_t>(j);
    const double t = rule->nodes[uj];
    const Complex osc =
        std::exp(Complex(0.0, im_s * std::log(t) - sigma / rho * t));
    sum += rule->weights[uj] * osc / (1.0 - params.z * std::exp(-t / rho));
  }

  const Complex prefactor =
      std::exp(Complex(0.0, -im_s * std::log(rho))) /
      (std::pow(rho, params.s.real()) * gamma_fn(params.s));

  Evaluation out;
  out.value = prefactor * sum;
  out.n = n;
  out.kn = n;
  out.f_evals = n;
  out.est_error = std::numeric_limits<double>::quiet_NaN();
  out.experimental = true;
  out.oscillation_warning =
      im_s != 0.0 || std::abs(sigma) / rho > 10.0;
  return out;
}

}  // namespace lerch
