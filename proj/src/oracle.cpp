#include "lerch/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "lerch/errors.hpp"
#include "lerch/gamma.hpp"

namespace lerch {
namespace oracle {

namespace {

constexpr double kPi = std::numbers::pi;

// ---------------------------------------------------------------------------
// 30-point Gauss-Legendre panel rule on [-1, 1], nodes by Newton iteration on
// the Legendre recurrence. Independent of the Laguerre/eigensolver path.
// ---------------------------------------------------------------------------

struct PanelRule {
  std::array<double, 30> x{};
  std::array<double, 30> w{};
};

PanelRule make_panel_rule() {
  constexpr int n = 30;
  PanelRule rule;
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0;
      double p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double dz = -p1 / pp;
      z += dz;
      if (std::abs(dz) < 1e-16) break;
    }
    rule.x[static_cast<std::size_t>(i)] = -z;
    rule.x[static_cast<std::size_t>(n - 1 - i)] = z;
    const double w = 2.0 / ((1.0 - z * z) * pp * pp);
    rule.w[static_cast<std::size_t>(i)] = w;
    rule.w[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  return rule;
}

const PanelRule& panel_rule() {
  static const PanelRule rule = make_panel_rule();
  return rule;
}

// ---------------------------------------------------------------------------
// Adaptive integrator core (complex s, a; the real API forwards here).
// ---------------------------------------------------------------------------

struct Integrand {
  Complex z;
  Complex s;
  Complex a;

  Complex operator()(double x) const {
    const Complex xs = std::exp((s - 1.0) * std::log(x));
    return xs * std::exp(-a * x) / (1.0 - z * std::exp(-x));
  }
};

Complex panel_integral(const Integrand& f, double lo, double hi) {
  const PanelRule& rule = panel_rule();
  const double mid = 0.5 * (lo + hi);
  const double rad = 0.5 * (hi - lo);
  Complex acc{0.0, 0.0};
  for (std::size_t i = 0; i < rule.x.size(); ++i) {
    acc += rule.w[i] * f(mid + rad * rule.x[i]);
  }
  return rad * acc;
}

struct AdaptiveState {
  const Integrand* f = nullptr;
  double panel_tol = 0.0;
  int panels_left = 0;
  double est = 0.0;
};

Complex integrate_segment(AdaptiveState& st, double lo, double hi,
                          Complex whole, int depth) {
  const double mid = 0.5 * (lo + hi);
  const Complex left = panel_integral(*st.f, lo, mid);
  const Complex right = panel_integral(*st.f, mid, hi);
  const double diff = std::abs(left + right - whole);
  if (diff <= st.panel_tol || depth >= 48) {
    st.est += diff;
    return left + right;
  }
  st.panels_left -= 2;
  if (st.panels_left <= 0) {
    throw NoConvergence("adaptive_quadrature: panel budget exhausted");
  }
  return integrate_segment(st, lo, mid, left, depth + 1) +
         integrate_segment(st, mid, hi, right, depth + 1);
}

// Graded-mesh depth toward x = 0 (panel ratio 1/4).
constexpr int kGradeDepth = 40;

OracleResult adaptive_impl(Complex z, Complex s, Complex a, double tol,
                           const AdaptiveOptions& options) {
  if (!(s.real() > 0.0) || !(a.real() > 0.0)) {
    throw InvalidParameter("adaptive_quadrature: Re(s), Re(a) must be > 0");
  }
  if (z.imag() == 0.0 && z.real() >= 1.0) {
    throw InvalidParameter("adaptive_quadrature: z on the cut [1, +inf)");
  }
  tol = std::max(tol, 1e-13);

  const double rho_s = s.real();
  const double rho_a = a.real();
  const double bound = kz(z);
  const double gamma_mod = std::abs(gamma_fn(s));
  const double tol_j = tol * gamma_mod;  // tolerance at integral level

  // Tail cut: |tail| <= K_z int_T^inf x^{rho_s-1} e^{-rho_a x} dx
  //                 <= 2 K_z T^{rho_s-1} e^{-rho_a T} / rho_a
  // once rho_a T >= 2|rho_s - 1| + 2.
  double upper = std::max(2.0, (2.0 * std::abs(rho_s - 1.0) + 2.0) / rho_a);
  const auto tail_bound = [&](double t) {
    return 2.0 * bound * std::pow(t, rho_s - 1.0) * std::exp(-rho_a * t) /
           rho_a;
  };
  while (tail_bound(upper) > 0.25 * tol_j) {
    upper *= 1.2;
    if (upper > 2e4) {
      throw NoConvergence("adaptive_quadrature: tail cut not reachable");
    }
  }
  if (options.upper_limit_override > 0.0) {
    upper = options.upper_limit_override;
  }

  const Integrand f{z, s, a};

  // Graded mesh on (0, B], B = min(1, T): panels [delta 4^j, delta 4^{j+1}],
  // the innermost stub [0, delta] closed analytically from the Taylor
  // expansion of g(x) = e^{-ax}/(1 - z e^{-x}) at 0.
  const double b = std::min(1.0, upper);
  const double delta = b * std::pow(0.25, kGradeDepth);
  const Complex g0 = 1.0 / (1.0 - z);
  const Complex g1 = -a * g0 - z * g0 * g0;  // g'(0)
  const Complex stub = g0 * std::exp(s * std::log(delta)) / s +
                       g1 * std::exp((s + 1.0) * std::log(delta)) / (s + 1.0);
  // |g''| <= |a|^2 K + 2|a||z|K^2 + |z|K^2 + 2|z|^2 K^3 on [0, delta]
  const double za = std::abs(z);
  const double m2 = std::norm(a) * bound +
                    (2.0 * std::abs(a) + 1.0) * za * bound * bound +
                    2.0 * za * za * bound * bound * bound;
  const double stub_err =
      0.5 * m2 * std::pow(delta, rho_s + 2.0) / (rho_s + 2.0);

  AdaptiveState st;
  st.f = &f;
  st.panel_tol = tol_j / 1024.0;
  st.panels_left = options.max_panels;

  Complex total = stub;
  double lo = delta;
  for (int j = 0; j < kGradeDepth && lo < b; ++j) {
    const double hi = std::min(4.0 * lo, b);
    total += integrate_segment(st, lo, hi, panel_integral(f, lo, hi), 0);
    lo = hi;
  }
  // Bulk region [B, T] in segments of length <= 2.
  while (lo < upper) {
    const double hi = std::min(lo + 2.0, upper);
    total += integrate_segment(st, lo, hi, panel_integral(f, lo, hi), 0);
    lo = hi;
  }

  const double est =
      (st.est + tail_bound(upper) + stub_err) / gamma_mod;
  if (est > tol) {
    throw NoConvergence(
        "adaptive_quadrature: accuracy estimate " + std::to_string(est) +
        " above requested tolerance");
  }

  OracleResult out;
  out.value = total / gamma_fn(s);
  out.method = Method::kAdaptiveQuadrature;
  out.est_accuracy = est;
  return out;
}

// ---------------------------------------------------------------------------
// Euler transformation of an alternating series (van Wijngaarden averaging).
// Terms are passed with their sign.
// ---------------------------------------------------------------------------

template <typename T>
class EulerAccel {
 public:
  void add(T term) {
    if (nterm_ == 0) {
      wksp_.assign(1, term);
      sum_ = 0.5 * term;
      increment_ = std::abs(sum_);
      nterm_ = 1;
      return;
    }
    T tmp = wksp_[0];
    wksp_[0] = term;
    for (std::size_t j = 0; j + 1 < static_cast<std::size_t>(nterm_); ++j) {
      const T dum = wksp_[j + 1];
      wksp_[j + 1] = 0.5 * (wksp_[j] + tmp);
      tmp = dum;
    }
    const auto last = static_cast<std::size_t>(nterm_);
    const T tail = 0.5 * (wksp_[last - 1] + tmp);
    if (wksp_.size() <= last) wksp_.resize(last + 1);
    wksp_[last] = tail;
    if (std::abs(tail) <= std::abs(wksp_[last - 1])) {
      sum_ += 0.5 * tail;
      ++nterm_;
      increment_ = std::abs(0.5 * tail);
    } else {
      sum_ += tail;
      increment_ = std::abs(tail);
    }
  }

  [[nodiscard]] T sum() const { return sum_; }
  [[nodiscard]] double last_increment() const { return increment_; }

 private:
  std::vector<T> wksp_;
  int nterm_ = 0;
  T sum_{};
  double increment_ = std::numeric_limits<double>::infinity();
};

template <typename SType, typename AType>
OracleResult alternating_impl(double r, SType s, AType a, double tol) {
  if (!(r > 0.0) || r > 1.5) {
    throw InvalidParameter("series_alternating: need z = -r with 0 < r <= 1.5");
  }
  tol = std::max(tol, 1e-15);
  constexpr int kMaxTerms = 20000;

  EulerAccel<Complex> accel;
  double log_rj = 0.0;
  const double log_r = std::log(r);
  int stable = 0;
  for (int j = 0; j < kMaxTerms; ++j) {
    // (-r)^j / (j+a)^s with magnitudes kept in log form
    const Complex denom = -s * std::log(Complex(j + 0.0, 0.0) + Complex(a));
    const Complex term =
        (j % 2 == 0 ? 1.0 : -1.0) * std::exp(log_rj + denom);
    accel.add(term);
    log_rj += log_r;
    // The averaged workspace cannot resolve increments below the rounding
    // floor of the partial sums; stop there even for tighter requests.
    const double floor_inc = 2.5e-16 * (1.0 + std::abs(accel.sum()));
    if (j >= 6 && accel.last_increment() < std::max(tol / 20.0, floor_inc)) {
      if (++stable >= 2) {
        OracleResult out;
        out.value = accel.sum();
        out.method = Method::kAcceleratedSeries;
        out.est_accuracy = std::max(10.0 * accel.last_increment(), 1e-16);
        return out;
      }
    } else {
      stable = 0;
    }
  }
  throw NoConvergence("series_alternating: increments stalled above tol");
}

}  // namespace

const char* method_name(Method m) {
  switch (m) {
    case Method::kDirectSeries:
      return "direct-series";
    case Method::kAcceleratedSeries:
      return "accelerated-series";
    case Method::kAdaptiveQuadrature:
      return "adaptive-quadrature";
    case Method::kClosedForm:
      return "closed-form";
  }
  return "unknown";
}

OracleResult series_direct(Complex z, double s, double a, double tol) {
  if (!(s > 0.0) || !(a > 0.0)) {
    throw InvalidParameter("series_direct: s, a must be positive");
  }
  const double r = std::abs(z);
  const bool unit_circle = r == 1.0 && s > 1.5;
  if (r > 0.9 && !unit_circle) {
    throw InvalidParameter("series_direct: |z| <= 0.9 required");
  }
  tol = std::max(tol, 1e-15);
  constexpr int kMaxTerms = 10'000'000;

  Complex sum{0.0, 0.0};
  Complex comp{0.0, 0.0};  // Kahan compensation
  Complex zj{1.0, 0.0};
  for (int j = 0; j < kMaxTerms; ++j) {
    const Complex term = zj / std::pow(j + a, s);
    const Complex y = term - comp;
    const Complex t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    zj *= z;

    double tail;
    if (r < 1.0) {
      tail = std::pow(r, j + 1) / (std::pow(j + a, s) * (1.0 - r));
    } else {
      tail = std::pow(j + 1 + a, 1.0 - s) / (s - 1.0);
    }
    if (tail < tol) {
      OracleResult out;
      out.value = sum;
      out.method = Method::kDirectSeries;
      out.est_accuracy = std::max(tail, 1e-16);
      return out;
    }
  }
  throw NoConvergence("series_direct: tail bound not reached (|z| near 1)");
}

OracleResult series_alternating(double r, double s, double a, double tol) {
  if (!(s > 0.0) || !(a > 0.0)) {
    throw InvalidParameter("series_alternating: s, a must be positive");
  }
  return alternating_impl(r, s, a, tol);
}

OracleResult series_alternating_complex(double r, Complex s, Complex a,
                                        double tol) {
  if (!(s.real() > 0.0) || !(a.real() > 0.0)) {
    throw InvalidParameter("series_alternating: Re(s), Re(a) must be > 0");
  }
  return alternating_impl(r, s, a, tol);
}

OracleResult adaptive_quadrature(Complex z, double s, double a, double tol,
                                 const AdaptiveOptions& options) {
  return adaptive_impl(z, Complex(s, 0.0), Complex(a, 0.0), tol, options);
}

OracleResult adaptive_quadrature_complex(Complex z, Complex s, Complex a,
                                         double tol,
                                         const AdaptiveOptions& options) {
  return adaptive_impl(z, s, a, tol, options);
}

CrossValidation cross_validate(Complex z, double s, double a, double tol) {
  CrossValidation report;

  if (z == Complex(0.0, 0.0)) {
    OracleResult closed;
    closed.value = std::pow(a, -s);
    closed.method = Method::kClosedForm;
    closed.est_accuracy = 0.0;
    report.results.push_back(closed);
  }
  const auto attempt = [&](auto&& fn, const char* name) {
    try {
      report.results.push_back(fn());
    } catch (const NoConvergence& e) {
      report.converged = false;
      report.notes.push_back(std::string(name) + ": " + e.what());
    }
  };
  if (std::abs(z) <= 0.9) {
    attempt([&] { return series_direct(z, s, a, tol); }, "direct-series");
  }
  if (z.imag() == 0.0 && z.real() < 0.0 && std::abs(z) <= 1.5) {
    attempt([&] { return series_alternating(-z.real(), s, a, tol); },
            "accelerated-series");
  }
  attempt([&] { return adaptive_quadrature(z, s, a, tol); },
          "adaptive-quadrature");

  if (report.results.size() < 2) {
    report.notes.emplace_back(
        "fewer than two applicable methods; no cross-check possible");
  }
  for (std::size_t i = 0; i < report.results.size(); ++i) {
    for (std::size_t j = i + 1; j < report.results.size(); ++j) {
      report.max_pairwise =
          std::max(report.max_pairwise,
                   std::abs(report.results[i].value - report.results[j].value));
    }
  }
  return report;
}

OracleResult best_reference(Complex z, double s, double a, double tol) {
  if (z == Complex(0.0, 0.0)) {
    OracleResult out;
    out.value = std::pow(a, -s);
    out.method = Method::kClosedForm;
    out.est_accuracy = 0.0;
    return out;
  }
  if (std::abs(z) <= 0.9) {
    return series_direct(z, s, a, tol);
  }
  if (z.imag() == 0.0 && z.real() < 0.0 && std::abs(z) <= 1.5) {
    return series_alternating(-z.real(), s, a, tol);
  }
  return adaptive_quadrature(z, s, a, tol);
}

}  // namespace oracle
}  // namespace lerch
