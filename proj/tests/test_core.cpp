#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "lerch/core.hpp"
#include "lerch/errors.hpp"
#include "lerch/gamma.hpp"
#include "lerch/oracle.hpp"
#include "lerch/quadrature.hpp"

using lerch::Complex;
using lerch::LerchParams;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = 0.6931471805599453;
}

TEST_CASE("f_z special values") {
  CHECK(lerch::f_z(3.7, Complex(0.0, 0.0), 1.0) == Complex(1.0, 0.0));
  CHECK(lerch::f_z(0.0, Complex(-1.0, 0.0), 1.0) == Complex(0.5, 0.0));
  CHECK(std::abs(lerch::f_z(1e3, Complex(0.9, 0.3), 1.0) - 1.0) <= 1e-300);
}

TEST_CASE("z = 0 short circuit") {
  const auto ev = lerch::evaluate({Complex(0.0, 0.0), 2.0, 3.0}, 1e-10);
  CHECK(ev.value.real() == doctest::Approx(1.0 / 9.0).epsilon(1e-16));
  CHECK(ev.value.imag() == 0.0);
  CHECK(ev.n == 0);
  CHECK(ev.kn == 0);
  CHECK(ev.f_evals == 0);
  CHECK(ev.est_error == 0.0);
}

TEST_CASE("eta(1) through the evaluator is ln 2") {
  const auto ev = lerch::evaluate({Complex(-1.0, 0.0), 1.0, 1.0}, 1e-12);
  CHECK(std::abs(ev.value.real() - kLn2) <= 1e-12);
  CHECK(std::abs(ev.value.imag()) <= 1e-15);
  CHECK(ev.est_error <= 1e-12);
  CHECK(ev.kn <= ev.n);
  CHECK(ev.f_evals == ev.kn);
}

TEST_CASE("polylogarithm table row: z = -0.5, s = 1.5, tol 1e-10") {
  const auto ev = lerch::evaluate({Complex(-0.5, 0.0), 1.5, 1.0}, 1e-10);
  const auto ref = lerch::oracle::series_alternating(0.5, 1.5, 1.0, 1e-14);
  CHECK(std::abs(ev.value - ref.value) <= 5e-10);
  CHECK(std::abs(ev.n - 25) <= 2);
  CHECK(std::abs(ev.kn - 18) <= 3);
  CHECK(ev.est_error <= 1e-10);
}

TEST_CASE("polylog wrapper") {
  {
    const auto ev = lerch::polylog(2.7, Complex(0.0, 0.0), 1e-12);
    CHECK(ev.value == Complex(0.0, 0.0));
  }
  {
    // Li_2(1/2) = pi^2/12 - ln^2(2)/2
    const auto ev = lerch::polylog(2.0, Complex(0.5, 0.0), 1e-13);
    const double want = kPi * kPi / 12.0 - 0.5 * kLn2 * kLn2;
    CHECK(std::abs(ev.value.real() - want) <= 1e-12);
  }
  {
    // Li_{3/2}(-1) = -eta(3/2)
    const auto ev = lerch::polylog(1.5, Complex(-1.0, 0.0), 1e-13);
    CHECK(std::abs(ev.value.real() - (-0.7651470246254080)) <= 1e-12);
  }
}

TEST_CASE("dirichlet beta wrapper") {
  CHECK(std::abs(lerch::dirichlet_beta(1.0, 1e-13).value.real() - kPi / 4.0) <=
        1e-12);
  CHECK(std::abs(lerch::dirichlet_beta(2.0, 1e-13).value.real() -
                 0.9159655941772190) <= 1e-12);  // Catalan
  CHECK(std::abs(lerch::dirichlet_beta(3.0, 1e-13).value.real() -
                 kPi * kPi * kPi / 32.0) <= 1e-12);
}

TEST_CASE("dirichlet eta wrapper") {
  CHECK(std::abs(lerch::dirichlet_eta(1.0, 1e-13).value.real() - kLn2) <=
        1e-12);
  CHECK(std::abs(lerch::dirichlet_eta(2.0, 1e-13).value.real() -
                 kPi * kPi / 12.0) <= 1e-12);
  const auto ev = lerch::dirichlet_eta(0.5, 1e-13);
  const auto ref = lerch::oracle::series_alternating(1.0, 0.5, 1.0, 1e-14);
  CHECK(std::abs(ev.value - ref.value) <= 1e-12);
  CHECK(std::abs(ev.value.real() - 0.6048986434216304) <= 1e-12);
}

TEST_CASE("identity chain Li_s(z) = z Phi(z, s, 1)") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> ss(0.2, 5.0);
  std::uniform_real_distribution<double> mag(0.05, 0.85);
  std::uniform_real_distribution<double> arg(-kPi, kPi);
  for (int i = 0; i < 8; ++i) {
    const double s = ss(rng);
    const Complex z = std::polar(mag(rng), arg(rng));
    const auto li = lerch::polylog(s, z, 1e-11);
    const auto phi = lerch::evaluate({z, s, 1.0}, 1e-11 / std::max(std::abs(z), 1.0));
    CHECK(li.value == z * phi.value);  // exact by construction
    const auto ref = lerch::oracle::series_direct(z, s, 1.0, 1e-14);
    CHECK(std::abs(li.value - z * ref.value) <= 1e-11);
  }
}

TEST_CASE("series consistency on the small-|z| grid") {
  for (double zr : {-0.6, -0.3, 0.25, 0.6}) {
    for (double s : {0.5, 1.5, 3.0}) {
      for (double a : {0.7, 1.0, 2.5}) {
        for (double tol : {1e-8, 1e-12}) {
          const auto ev = lerch::evaluate({Complex(zr, 0.0), s, a}, tol);
          const auto ref =
              lerch::oracle::series_direct(Complex(zr, 0.0), s, a, 1e-14);
          CHECK(std::abs(ev.value - ref.value) <= tol * 10.0);
        }
      }
    }
  }
}

TEST_CASE("partial sums stay inside the K_z ball") {
  const LerchParams params{Complex(0.5, 0.5), 1.5, 1.0};
  const auto plan = lerch::make_plan(params, 1e-12);
  const auto rule = lerch::gauss_laguerre(params.s - 1.0, plan.n);
  const double cap =
      lerch::kz(params.z) * lerch::gamma_fn(params.s) + 1e-9;
  Complex acc{0.0, 0.0};
  for (std::size_t j = 0; j < rule.size(); ++j) {
    acc += rule.weights[j] * lerch::f_z(rule.nodes[j], params.z, params.a);
    CHECK(std::abs(acc) <= cap);
  }
}

TEST_CASE("conjugate symmetry of the evaluator") {
  const Complex z{0.4, 0.8};
  const auto plus = lerch::evaluate({z, 1.7, 1.3}, 1e-11);
  const auto minus = lerch::evaluate({std::conj(z), 1.7, 1.3}, 1e-11);
  CHECK(std::abs(minus.value - std::conj(plus.value)) <=
        1e-14 * std::abs(plus.value));
}

TEST_CASE("tighter tolerance means tighter a priori estimate") {
  const LerchParams params{Complex(-2.0, 0.0), 1.5, 1.0};
  const auto coarse = lerch::evaluate(params, 1e-10);
  const auto fine = lerch::evaluate(params, 1e-14);
  CHECK(fine.est_error < coarse.est_error);
  CHECK(fine.n > coarse.n);
}

TEST_CASE("truncation bound against the full rule") {
  // |I_n - I_kn| <= 3 eps_n on table-style parameter sets.
  const LerchParams sets[] = {
      {Complex(-0.5, 0.0), 1.5, 1.0},
      {Complex(-1.0, 0.0), 0.5, 0.5},
      {Complex(0.0, 5.0), 0.2, 1.1},
  };
  for (const auto& params : sets) {
    for (double tol : {1e-10, 1e-14}) {
      const auto plan = lerch::make_plan(params, tol);
      const auto sums = lerch::fixed_order_sums(params, plan.n, plan.kn);
      const double eps_n = lerch::epsilon_n(params, plan.m);
      CHECK(std::abs(sums.i_full - sums.i_trunc) <= 3.0 * eps_n);
    }
  }
}

TEST_CASE("tolerance clamping") {
  const LerchParams params{Complex(-0.5, 0.0), 1.5, 1.0};
  const auto under = lerch::evaluate(params, 1e-18);
  CHECK(under.tol_clamped);
  const auto over = lerch::evaluate(params, 0.7);
  CHECK(over.tol_clamped);
  const auto normal = lerch::evaluate(params, 1e-10);
  CHECK_FALSE(normal.tol_clamped);
}

TEST_CASE("domain errors and sizing overflow") {
  CHECK_THROWS_AS(lerch::evaluate({Complex(1.5, 0.0), 1.0, 1.0}, 1e-10),
                  lerch::DomainError);
  CHECK_THROWS_AS(lerch::evaluate({Complex(1.0, 0.0), 1.0, 1.0}, 1e-10),
                  lerch::DomainError);
  CHECK_THROWS_AS(lerch::evaluate({Complex(0.5, 0.0), -1.0, 1.0}, 1e-10),
                  lerch::DomainError);
  CHECK_THROWS_AS(lerch::evaluate({Complex(0.5, 0.0), 1.0, 0.0}, 1e-10),
                  lerch::DomainError);
  CHECK_THROWS_AS(lerch::evaluate({Complex(1.0, 1e-6), 1.5, 1.0}, 1e-10),
                  lerch::SizingOverflow);
}

TEST_CASE("complex path reduces to the real one for real parameters") {
  const lerch::ComplexLerchParams params{Complex(-1.1, 0.0), Complex(2.0, 0.0),
                                         Complex(1.0, 0.0)};
  const auto cplx = lerch::evaluate_complex(params, 40);
  CHECK(cplx.experimental);
  CHECK_FALSE(cplx.oscillation_warning);
  CHECK(std::isnan(cplx.est_error));
  CHECK(cplx.f_evals == 40);

  const auto real = lerch::evaluate({Complex(-1.1, 0.0), 2.0, 1.0}, 1e-12);
  CHECK(std::abs(cplx.value - real.value) <= 1e-10);
}

TEST_CASE("complex path flags oscillatory regimes") {
  const lerch::ComplexLerchParams osc{Complex(-1.1, 0.0), Complex(2.0, 1.0),
                                      Complex(1.0, 0.0)};
  CHECK(lerch::evaluate_complex(osc, 30).oscillation_warning);

  const lerch::ComplexLerchParams wild{Complex(-1.1, 0.0), Complex(2.0, 0.0),
                                       Complex(0.1, 2.0)};
  CHECK(lerch::evaluate_complex(wild, 30).oscillation_warning);

  const lerch::ComplexLerchParams mild{Complex(-1.1, 0.0), Complex(2.0, 0.0),
                                       Complex(1.0, 0.5)};
  CHECK_FALSE(lerch::evaluate_complex(mild, 30).oscillation_warning);
}

TEST_CASE("complex path domain checks") {
  CHECK_THROWS_AS(
      lerch::evaluate_complex({Complex(2.0, 0.0), Complex(2.0, 0.0),
                               Complex(1.0, 0.0)},
                              30),
      lerch::DomainError);
  CHECK_THROWS_AS(
      lerch::evaluate_complex({Complex(-1.0, 0.0), Complex(-0.5, 1.0),
                               Complex(1.0, 0.0)},
                              30),
      lerch::DomainError);
  CHECK_THROWS_AS(
      lerch::evaluate_complex({Complex(-1.0, 0.0), Complex(2.0, 0.0),
                               Complex(1.0, 0.0)},
                              0),
      lerch::InvalidParameter);
}

TEST_CASE("complex path with Im(a) != 0 tracks the series") {
  // Moderate Im(a): the rule stays adequate per the paper's observation.
  const Complex s{2.0, 0.0};
  const Complex a{1.0, 0.4};
  const lerch::ComplexLerchParams params{Complex(-0.8, 0.0), s, a};
  const auto ev = lerch::evaluate_complex(params, 120);
  // Reference: direct series converges for |z| < 1 with complex a.
  Complex brute{0.0, 0.0};
  double zj = 1.0;
  for (int j = 0; j < 400; ++j) {
    brute += zj * std::exp(-s * std::log(Complex(static_cast<double>(j), 0.0) + a));
    zj *= -0.8;
  }
  CHECK(std::abs(ev.value - brute) <= 1e-9);
}

TEST_CASE("fixed order sums validate their arguments") {
  const LerchParams params{Complex(-0.5, 0.0), 1.5, 1.0};
  CHECK_THROWS_AS(lerch::fixed_order_sums(params, 10, 11),
                  lerch::InvalidParameter);
  CHECK_THROWS_AS(lerch::fixed_order_sums(params, 0, 0),
                  lerch::InvalidParameter);
  const auto sums = lerch::fixed_order_sums(params, 30, 30);
  CHECK(sums.i_full == sums.i_trunc);
}
