#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "lerch/errors.hpp"
#include "lerch/gamma.hpp"

using lerch::gamma_fn;
using lerch::log_gamma;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("gamma matches closed forms") {
  CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(gamma_fn(2.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-15));
  CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-15));
  CHECK(gamma_fn(1.5) == doctest::Approx(0.5 * std::sqrt(kPi)).epsilon(1e-15));
}

TEST_CASE("log_gamma agrees with std::lgamma over the working range") {
  for (double x = 0.01; x < 171.0; x *= 1.17) {
    const double got = log_gamma(x);
    const double want = std::lgamma(x);
    CHECK(std::abs(got - want) <=
          1e-13 * std::max(1.0, std::abs(want)));
  }
}

TEST_CASE("gamma recurrence z Gamma(z) = Gamma(z+1)") {
  for (double x : {0.05, 0.3, 0.99, 1.7, 3.2, 17.9, 120.4}) {
    CHECK(x * gamma_fn(x) == doctest::Approx(gamma_fn(x + 1.0)).epsilon(1e-13));
  }
}

TEST_CASE("complex gamma reduces to the real one on the real axis") {
  for (double x : {0.2, 0.7, 1.0, 2.5, 8.0, 40.0}) {
    const std::complex<double> g = gamma_fn(std::complex<double>(x, 0.0));
    CHECK(g.real() == doctest::Approx(gamma_fn(x)).epsilon(1e-13));
    CHECK(std::abs(g.imag()) <= 1e-13 * std::abs(g.real()));
  }
}

TEST_CASE("complex gamma satisfies the recurrence and conjugation") {
  const std::complex<double> s{2.3, 1.4};
  const auto lhs = s * gamma_fn(s);
  const auto rhs = gamma_fn(s + 1.0);
  CHECK(std::abs(lhs - rhs) <= 1e-13 * std::abs(rhs));

  const auto conj = gamma_fn(std::conj(s));
  CHECK(std::abs(conj - std::conj(gamma_fn(s))) <= 1e-13 * std::abs(conj));
}

TEST_CASE("|Gamma(1 + i)| has the known closed form") {
  // |Gamma(1+iy)|^2 = pi y / sinh(pi y)
  const double y = 1.0;
  const auto g = gamma_fn(std::complex<double>(1.0, y));
  const double want = std::sqrt(kPi * y / std::sinh(kPi * y));
  CHECK(std::abs(g) == doctest::Approx(want).epsilon(1e-13));
}

TEST_CASE("invalid arguments are rejected") {
  CHECK_THROWS_AS(gamma_fn(0.0), lerch::InvalidParameter);
  CHECK_THROWS_AS(gamma_fn(-1.5), lerch::InvalidParameter);
  CHECK_THROWS_AS(log_gamma(std::complex<double>(-0.5, 1.0)),
                  lerch::InvalidParameter);
}
