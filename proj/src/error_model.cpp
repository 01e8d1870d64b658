#include "lerch/error_model.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "lerch/errors.hpp"
#include "lerch/gamma.hpp"
#include "lerch/quadrature.hpp"

namespace lerch {

namespace {

constexpr double kPi = std::numbers::pi;

// Principal log of z as ln|z| + i arg(z) with arg in (-pi, pi], so that
// z on the negative real axis gets arg = +pi regardless of signed zeros.
Complex ln0(Complex z) {
  double th = std::arg(z);
  if (th == -kPi) th = kPi;
  if (z.imag() == 0.0 && z.real() < 0.0) th = kPi;
  return {std::log(std::abs(z)), th};
}

bool on_cut(Complex z) { return z.imag() == 0.0 && z.real() >= 1.0; }

double amplitude(const LerchParams& p) {
  const Complex l0 = ln0(p.z);
  return 4.0 * kPi * std::pow(p.a, p.s) * std::pow(std::abs(p.z), -p.a) *
         std::pow(std::abs(l0), p.s - 1.0);
}

}  // namespace

void validate(const LerchParams& params) {
  if (!(params.s > 0.0) || !std::isfinite(params.s)) {
    throw DomainError("lerch: s must be positive");
  }
  if (!(params.a > 0.0) || !std::isfinite(params.a)) {
    throw DomainError("lerch: a must be positive");
  }
  if (on_cut(params.z)) {
    throw DomainError("lerch: z lies on the cut [1, +inf)");
  }
  if (!std::isfinite(params.z.real()) || !std::isfinite(params.z.imag())) {
    throw DomainError("lerch: z must be finite");
  }
}

Complex pole(Complex z, double a, int k) {
  if (z == Complex(0.0, 0.0)) {
    throw InvalidParameter("pole: z = 0 has no pole");
  }
  const Complex l0 = ln0(z);
  return a * Complex(l0.real(), l0.imag() + 2.0 * kPi * k);
}

double r_zero(Complex t0) {
  if (t0.imag() == 0.0 && t0.real() >= 0.0) {
    throw InvalidParameter("r_zero: t0 on the nonnegative real axis");
  }
  return std::exp(std::sqrt(-t0).real());
}

double kz(Complex z) {
  if (on_cut(z)) {
    throw InvalidParameter("kz: z lies on the cut [1, +inf)");
  }
  const double re = z.real();
  if (re <= 0.0) return 1.0;
  if (re <= std::norm(z)) return std::abs(z) / std::abs(z.imag());
  return 1.0 / std::abs(1.0 - z);
}

double epsilon_n(const LerchParams& params, double m) {
  if (params.z == Complex(0.0, 0.0)) {
    throw InvalidParameter("epsilon_n: undefined for z = 0");
  }
  if (!(m > 0.0)) {
    throw InvalidParameter("epsilon_n: m must be positive");
  }
  const Complex t0 = pole(params.z, params.a, 0);
  const double ln_r0 = std::sqrt(-t0).real();
  return amplitude(params) * std::exp(-4.0 * std::sqrt(m) * ln_r0);
}

double big_e_n(const LerchParams& params, double m) {
  return epsilon_n(params, m) /
         (gamma_fn(params.s) * std::pow(params.a, params.s));
}

OrderSolve solve_n(const LerchParams& params, double tol_E) {
  if (!(tol_E > 0.0)) {
    throw InvalidParameter("solve_n: tolerance must be positive");
  }
  if (params.z == Complex(0.0, 0.0)) {
    throw InvalidParameter("solve_n: z = 0 needs no quadrature");
  }
  const double s = params.s;
  OrderSolve out;
  out.eps_target =
      std::pow(params.a, s) * gamma_fn(s) * tol_E / 2.0;

  const double c = amplitude(params);
  if (c <= out.eps_target) {
    // Already below tolerance at minimal size.
    out.m = s / 2.0 + 1.0;
    out.n = 1;
    return out;
  }
  const Complex t0 = pole(params.z, params.a, 0);
  const double ln_r0 = std::sqrt(-t0).real();
  const double sqrt_m = std::log(c / out.eps_target) / (4.0 * ln_r0);
  out.m = sqrt_m * sqrt_m;
  const double n_real = std::ceil(out.m - s / 2.0);
  if (!(n_real <= static_cast<double>(kMaxRuleOrder))) {
    throw SizingOverflow("solve_n: required order n = " +
                         std::to_string(n_real) + " exceeds N_MAX = " +
                         std::to_string(kMaxRuleOrder) +
                         " (z too close to the cut [1, +inf))");
  }
  out.n = std::max(1, static_cast<int>(n_real));
  return out;
}

double gn_threshold(double s, double eps_target, double kz_bound) {
  if (!(s > 0.0) || !(eps_target > 0.0) || !(kz_bound > 0.0)) {
    throw InvalidParameter("gn_threshold: s, eps and K_z must be positive");
  }
  double g = -std::log(eps_target / kz_bound);
  if (s != 1.0) {
    g += (s - 1.0) * std::log(std::abs(1.0 - s));
  }
  return std::max(g, 1.0);
}

int solve_kn(double m, int n, double gn, int safety) {
  if (!(m > 0.0) || !(gn > 0.0) || n < 1) {
    throw InvalidParameter("solve_kn: need m > 0, gn > 0, n >= 1");
  }
  if (safety < 0 || safety > 3) {
    throw InvalidParameter("solve_kn: safety must be in {0,1,2,3}");
  }
  const double k_raw = std::ceil(2.0 / kPi * std::sqrt(m * gn));
  const double k = k_raw + safety;
  if (k >= static_cast<double>(n)) return n;
  return std::max(1, static_cast<int>(k));
}

std::pair<double, double> kn_decay_diagnostic(double m, double r0) {
  if (!(m > 0.0) || !(r0 > 1.0)) {
    throw InvalidParameter("kn_decay_diagnostic: need m > 0, r0 > 1");
  }
  const double ln_r0 = std::log(r0);
  const double kn_pred = 4.0 / kPi * std::pow(m, 0.75) * std::sqrt(ln_r0);
  const double d = std::pow(2.0 * kPi * ln_r0, 2.0 / 3.0);
  return {kn_pred, d};
}

SizingPlan make_plan(const LerchParams& params, double tol_E, int safety) {
  validate(params);
  SizingPlan plan;
  plan.kz = kz(params.z);
  plan.t0 = pole(params.z, params.a, 0);
  plan.r0 = r_zero(plan.t0);
  plan.c_amp = amplitude(params);

  const OrderSolve solved = solve_n(params, tol_E);
  plan.eps_target = solved.eps_target;
  plan.n = solved.n;
  plan.m = solved.n + params.s / 2.0;  // shifted order of the rule in use
  plan.gn = gn_threshold(params.s, plan.eps_target, plan.kz);
  plan.kn = solve_kn(plan.m, plan.n, plan.gn, safety);
  return plan;
}

}  // namespace lerch
