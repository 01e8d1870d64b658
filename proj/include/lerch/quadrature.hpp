#ifndef LERCH_QUADRATURE_HPP
#define LERCH_QUADRATURE_HPP

#include <memory>
#include <utility>
#include <vector>

namespace lerch {

// Largest rule order the library will generate. The table experiments never
// need n > 630; the cap stops runaway sizing as z approaches the cut [1,inf).
inline constexpr int kMaxRuleOrder = 5000;

// Nodes and weights of (a prefix of) the n-point generalized Gauss-Laguerre
// rule for the weight t^alpha e^{-t} on [0, inf).
//
// For a full rule nodes.size() == order; a truncated rule keeps only the
// first k nodes of the underlying order-n rule, bit-identical to the full
// rule's prefix.
struct QuadratureRule {
  double alpha = 0.0;
  int order = 0;                 // n of the underlying rule
  std::vector<double> nodes;     // strictly increasing, all > 0
  std::vector<double> weights;   // aligned with nodes, all > 0

  [[nodiscard]] std::size_t size() const { return nodes.size(); }
  [[nodiscard]] bool truncated() const {
    return nodes.size() < static_cast<std::size_t>(order);
  }
};

// Three-term recurrence of the generalized Laguerre polynomials in
// symmetrized (Jacobi matrix) form:
//   diag[k]    = 2k + alpha + 1,          k = 0..n-1
//   offdiag[k] = sqrt((k+1)(k+1+alpha)),  k = 0..n-2
// Requires alpha > -1, n >= 1.
std::pair<std::vector<double>, std::vector<double>> recurrence_coefficients(
    double alpha, int n);

// Full n-point rule via Golub-Welsch: nodes are the eigenvalues of the
// Jacobi matrix, weight_i = Gamma(alpha+1) * (first eigenvector component)^2.
// Throws InvalidParameter / EigensolverFailure.
QuadratureRule gauss_laguerre(double alpha, int n);

// First k nodes/weights of the n-point rule, 1 <= k <= n. Values are
// bit-identical to the corresponding prefix of gauss_laguerre(alpha, n).
QuadratureRule gauss_laguerre_truncated(double alpha, int n, int k);

// Memoized full rule, shared across threads. Safe for concurrent use and
// numerically identical to gauss_laguerre(alpha, n).
std::shared_ptr<const QuadratureRule> gauss_laguerre_cached(double alpha,
                                                            int n);

}  // namespace lerch

#endif  // LERCH_QUADRATURE_HPP
