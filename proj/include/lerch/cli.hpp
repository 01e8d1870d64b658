#ifndef LERCH_CLI_HPP
#define LERCH_CLI_HPP

#include <optional>
#include <string>
#include <string_view>

#include "lerch/core.hpp"

namespace lerch {
namespace cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitOracleDisagreement = 1,
  kExitDomainError = 2,
  kExitSizingOverflow = 3,
  kExitUsage = 64,
};

// Shortest decimal representation that round-trips the double (up to 17
// significant digits).
std::string format_double(double x);

// z = r e^{i tau pi}, with the axis cases (tau in {0, +-1/2, +-1}) exact.
Complex polar_z(double r, double tau);

// One evaluation plus echoed inputs, serializable as JSON or a CSV row.
struct OutputRecord {
  double z_re = 0.0;
  double z_im = 0.0;
  double s = 1.0;
  double a = 1.0;
  double tol = 1e-10;
  Complex value;
  int n = 0;
  int kn = 0;
  double est_error = 0.0;
  std::optional<Complex> oracle;
  std::optional<double> deviation;

  [[nodiscard]] std::string to_json() const;
  [[nodiscard]] std::string csv_header() const;
  [[nodiscard]] std::string csv_row() const;
  [[nodiscard]] std::string to_text() const;
};

enum class TableId { kTable1, kTable2, kTable3, kTable4 };

std::optional<TableId> parse_table_name(std::string_view name);

// Reproduces one of the paper-style result tables at the given tolerance:
// one CSV row per parameter set with the sizing outputs and the deviation
// from a live oracle reference.
std::string run_table(TableId id, double tol_E);

struct SweepOptions {
  Complex z;
  double s = 1.0;
  double a = 1.0;
  int n_max = 100;
  bool truncated = false;
  int safety = 2;
};

// Error-vs-order sweep: for n = 1..n_max emits n, k_n, the measured error of
// the full rule (and of the truncated rule when enabled) against an oracle
// reference, and the a priori estimate E_n.
std::string run_sweep(const SweepOptions& options);

// CSV dump of the (optionally truncated) rule.
std::string run_rule(double alpha, int n, std::optional<int> k);

}  // namespace cli
}  // namespace lerch

#endif  // LERCH_CLI_HPP
