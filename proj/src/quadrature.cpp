#include "lerch/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <string>

#include "lerch/errors.hpp"
#include "lerch/gamma.hpp"

namespace lerch {

namespace {

// Implicit-shift QL iteration on a symmetric tridiagonal matrix.
// d: diagonal (size n), e: subdiagonal (size n, e[n-1] is workspace),
// first: a vector the accumulated rotations are applied to; seeded with
// e_1 it ends up holding the first component of each eigenvector.
// On return d holds the (unsorted) eigenvalues.
void ql_implicit_shift(std::vector<double>& d, std::vector<double>& e,
                       std::vector<double>& first) {
  const int n = static_cast<int>(d.size());
  if (n == 1) return;
  const double eps = std::numeric_limits<double>::epsilon();
  e[static_cast<std::size_t>(n) - 1] = 0.0;

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    for (;;) {
      int m = l;
      while (m < n - 1 &&
             std::abs(e[m]) > eps * (std::abs(d[m]) + std::abs(d[m + 1]))) {
        ++m;
      }
      if (m == l) break;
      if (++iter > 50) {
        throw EigensolverFailure(
            "gauss_laguerre: QL iteration limit exceeded at eigenvalue " +
            std::to_string(l));
      }
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      for (int i = m - 1; i >= l; --i) {
        double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {  // underflow recovery: skip the stalled rotation
          d[i + 1] -= p;
          e[m] = 0.0;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        f = first[i + 1];
        first[i + 1] = s * first[i] + c * f;
        first[i] = c * first[i] - s * f;
        if (i == l) {
          d[l] -= p;
          e[l] = g;
          e[m] = 0.0;
        }
      }
    }
  }
}

void validate_alpha_n(double alpha, int n, const char* who) {
  if (!(alpha > -1.0) || !std::isfinite(alpha)) {
    throw InvalidParameter(std::string(who) + ": alpha must be > -1");
  }
  if (n < 1) {
    throw InvalidParameter(std::string(who) + ": n must be >= 1");
  }
  if (n > kMaxRuleOrder) {
    throw InvalidParameter(std::string(who) + ": n exceeds N_MAX = " +
                           std::to_string(kMaxRuleOrder));
  }
}

QuadratureRule build_rule(double alpha, int n) {
  auto [d, e] = recurrence_coefficients(alpha, n);
  e.resize(static_cast<std::size_t>(n), 0.0);
  std::vector<double> first(static_cast<std::size_t>(n), 0.0);
  first[0] = 1.0;

  ql_implicit_shift(d, e, first);

  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&d](int i, int j) { return d[i] < d[j]; });

  // Overflow-safe weight normalization: mu0 = Gamma(alpha+1) directly in the
  // representable range, otherwise assembled in log space per weight.
  const double lg = log_gamma(alpha + 1.0);
  const bool direct = lg < 700.0;
  const double mu0 = direct ? gamma_fn(alpha + 1.0) : 0.0;

  QuadratureRule rule;
  rule.alpha = alpha;
  rule.order = n;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double x = d[idx[static_cast<std::size_t>(i)]];
    const double v = first[idx[static_cast<std::size_t>(i)]];
    rule.nodes[static_cast<std::size_t>(i)] = x;
    rule.weights[static_cast<std::size_t>(i)] =
        direct ? mu0 * v * v : std::exp(lg + 2.0 * std::log(std::abs(v)));
  }

  // Eigenvalues of a Jacobi matrix are simple and positive; anything else
  // indicates a failed decomposition. Weights must be positive wherever the
  // true value is representable; beyond x ~ 700 the factor e^{-x} drops under
  // the smallest double and an exact zero is the correctly rounded weight.
  for (int i = 0; i < n; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    const bool weight_ok =
        rule.weights[ui] > 0.0 ||
        (rule.weights[ui] == 0.0 && rule.nodes[ui] > 700.0);
    if (!(rule.nodes[ui] > 0.0) || !weight_ok ||
        (i > 0 && !(rule.nodes[ui] > rule.nodes[ui - 1]))) {
      throw EigensolverFailure(
          "gauss_laguerre: invalid spectrum (alpha=" + std::to_string(alpha) +
          ", n=" + std::to_string(n) + ", index=" + std::to_string(i) + ")");
    }
  }
  return rule;
}

}  // namespace

std::pair<std::vector<double>, std::vector<double>> recurrence_coefficients(
    double alpha, int n) {
  validate_alpha_n(alpha, n, "recurrence_coefficients");
  std::vector<double> diag(static_cast<std::size_t>(n));
  std::vector<double> offdiag(static_cast<std::size_t>(n > 0 ? n - 1 : 0));
  for (int k = 0; k < n; ++k) {
    diag[static_cast<std::size_t>(k)] = 2.0 * k + alpha + 1.0;
  }
  for (int k = 0; k + 1 < n; ++k) {
    offdiag[static_cast<std::size_t>(k)] =
        std::sqrt((k + 1.0) * (k + 1.0 + alpha));
  }
  return {std::move(diag), std::move(offdiag)};
}

QuadratureRule gauss_laguerre(double alpha, int n) {
  validate_alpha_n(alpha, n, "gauss_laguerre");
  return *gauss_laguerre_cached(alpha, n);
}

QuadratureRule gauss_laguerre_truncated(double alpha, int n, int k) {
  validate_alpha_n(alpha, n, "gauss_laguerre_truncated");
  if (k < 1 || k > n) {
    throw InvalidParameter("gauss_laguerre_truncated: need 1 <= k <= n");
  }
  const auto full = gauss_laguerre_cached(alpha, n);
  QuadratureRule rule;
  rule.alpha = alpha;
  rule.order = n;
  rule.nodes.assign(full->nodes.begin(), full->nodes.begin() + k);
  rule.weights.assign(full->weights.begin(), full->weights.begin() + k);
  return rule;
}

std::shared_ptr<const QuadratureRule> gauss_laguerre_cached(double alpha,
                                                            int n) {
  validate_alpha_n(alpha, n, "gauss_laguerre");
  using Key = std::pair<double, int>;
  static std::shared_mutex mutex;
  static std::map<Key, std::shared_ptr<const QuadratureRule>> cache;
  constexpr std::size_t kMaxEntries = 4096;

  const Key key{alpha, n};
  {
    std::shared_lock lock(mutex);
    if (const auto it = cache.find(key); it != cache.end()) {
      return it->second;
    }
  }
  auto rule = std::make_shared<const QuadratureRule>(build_rule(alpha, n));
  std::unique_lock lock(mutex);
  if (cache.size() >= kMaxEntries) {
    cache.clear();
  }
  const auto [it, inserted] = cache.emplace(key, std::move(rule));
  // If another thread won the race its (identical) rule is kept.
  return it->second;
}

}  // namespace lerch
