#include "lerch/cli.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "lerch/errors.hpp"
#include "lerch/gamma.hpp"
#include "lerch/oracle.hpp"
#include "lerch/quadrature.hpp"

namespace lerch {
namespace cli {

namespace {

constexpr double kPi = std::numbers::pi;

struct TableRow {
  double r;
  double tau;
  double s;
  double a;
};

// Parameter grids of the four experiment tables. Tables 1 and 4 sweep the
// argument tau over {1, 3/4, 1/2, 1/4}; tables 2 and 3 sweep s.
std::vector<TableRow> table_rows(TableId id) {
  const std::array<double, 4> taus = {1.0, 0.75, 0.5, 0.25};
  std::vector<TableRow> rows;
  switch (id) {
    case TableId::kTable1: {
      const std::array<std::pair<double, double>, 4> rs = {
          {{0.5, 1.5}, {2.0, 1.5}, {0.7, 0.5}, {3.0, 0.5}}};
      for (const auto& [r, s] : rs) {
        for (double tau : taus) rows.push_back({r, tau, s, 1.0});
      }
      break;
    }
    case TableId::kTable2:
      for (int i = 1; i <= 10; ++i) {
        rows.push_back({1.0, 1.0, 0.5 * i, 0.5});
      }
      break;
    case TableId::kTable3:
      for (int i = 1; i <= 10; ++i) {
        rows.push_back({1.0, 1.0, 0.5 * i, 1.0});
      }
      break;
    case TableId::kTable4: {
      const std::array<std::array<double, 3>, 4> rsa = {
          {{0.5, 0.5, 0.7}, {2.0, 1.4, 2.0}, {5.0, 0.2, 1.1}, {8.0, 4.0, 3.0}}};
      for (const auto& [r, s, a] : rsa) {
        for (double tau : taus) rows.push_back({r, tau, s, a});
      }
      break;
    }
  }
  return rows;
}

// Prefactor turning Phi into the reported function (Li, beta, eta or Phi).
Complex wrap_factor(TableId id, Complex z, double s) {
  switch (id) {
    case TableId::kTable1:
      return z;
    case TableId::kTable2:
      return std::pow(2.0, -s);
    default:
      return 1.0;
  }
}

}  // namespace

std::string format_double(double x) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), ptr);
}

Complex polar_z(double r, double tau) {
  if (tau == 1.0 || tau == -1.0) return {-r, 0.0};
  if (tau == 0.0) return {r, 0.0};
  if (tau == 0.5) return {0.0, r};
  if (tau == -0.5) return {0.0, -r};
  return r * Complex(std::cos(tau * kPi), std::sin(tau * kPi));
}

std::string OutputRecord::to_json() const {
  nlohmann::json j;
  j["z_re"] = z_re;
  j["z_im"] = z_im;
  j["s"] = s;
  j["a"] = a;
  j["tol"] = tol;
  j["value_re"] = value.real();
  j["value_im"] = value.imag();
  j["n"] = n;
  j["kn"] = kn;
  j["est_error"] = est_error;
  if (oracle) {
    j["oracle_re"] = oracle->real();
    j["oracle_im"] = oracle->imag();
    j["deviation"] = *deviation;
  }
  return j.dump();
}

std::string OutputRecord::csv_header() const {
  std::string head = "z_re,z_im,s,a,tol,value_re,value_im,n,kn,est_error";
  if (oracle) head += ",oracle_re,oracle_im,deviation";
  return head;
}

std::string OutputRecord::csv_row() const {
  std::string row = format_double(z_re) + "," + format_double(z_im) + "," +
                    format_double(s) + "," + format_double(a) + "," +
                    format_double(tol) + "," + format_double(value.real()) +
                    "," + format_double(value.imag()) + "," +
                    std::to_string(n) + "," + std::to_string(kn) + "," +
                    format_double(est_error);
  if (oracle) {
    row += "," + format_double(oracle->real()) + "," +
           format_double(oracle->imag()) + "," + format_double(*deviation);
  }
  return row;
}

std::string OutputRecord::to_text() const {
  std::ostringstream os;
  os << "value_re = " << format_double(value.real()) << "\n"
     << "value_im = " << format_double(value.imag()) << "\n"
     << "n = " << n << "\n"
     << "kn = " << kn << "\n"
     << "est_error = " << format_double(est_error) << "\n";
  if (oracle) {
    os << "oracle_re = " << format_double(oracle->real()) << "\n"
       << "oracle_im = " << format_double(oracle->imag()) << "\n"
       << "deviation = " << format_double(*deviation) << "\n";
  }
  return os.str();
}

std::optional<TableId> parse_table_name(std::string_view name) {
  if (name == "table1") return TableId::kTable1;
  if (name == "table2") return TableId::kTable2;
  if (name == "table3") return TableId::kTable3;
  if (name == "table4") return TableId::kTable4;
  return std::nullopt;
}

std::string run_table(TableId id, double tol_E) {
  std::ostringstream os;
  const bool polar = id == TableId::kTable1 || id == TableId::kTable4;
  if (id == TableId::kTable1) {
    os << "r,tau,s,n,kn,error\n";
  } else if (id == TableId::kTable4) {
    os << "r,tau,s,a,n,kn,error\n";
  } else {
    os << "s,n,kn,error\n";
  }

  for (const TableRow& row : table_rows(id)) {
    const Complex z = polar_z(row.r, row.tau);
    const LerchParams params{z, row.s, row.a};
    const Evaluation ev = evaluate(params, tol_E);
    const Complex factor = wrap_factor(id, z, row.s);
    const Complex ref = oracle::best_reference(z, row.s, row.a, 1e-13).value;
    const double error = std::abs(factor * ev.value - factor * ref);

    if (polar) {
      os << format_double(row.r) << "," << format_double(row.tau) << ","
         << format_double(row.s) << ",";
      if (id == TableId::kTable4) os << format_double(row.a) << ",";
    } else {
      os << format_double(row.s) << ",";
    }
    os << ev.n << "," << ev.kn << "," << format_double(error) << "\n";
  }
  return os.str();
}

std::string run_sweep(const SweepOptions& options) {
  if (options.n_max < 1 || options.n_max > kMaxRuleOrder) {
    throw InvalidParameter("sweep: n-max out of range");
  }
  const LerchParams params{options.z, options.s, options.a};
  validate(params);

  std::ostringstream os;
  os << "n,kn,err_full,err_trunc,estimate\n";

  if (options.z == Complex(0.0, 0.0)) {
    for (int n = 1; n <= options.n_max; ++n) {
      os << n << "," << n << ",0,";
      if (options.truncated) os << "0";
      os << ",0\n";
    }
    return os.str();
  }

  const Complex ref =
      oracle::best_reference(options.z, options.s, options.a, 1e-13).value;
  const double norm = gamma_fn(options.s) * std::pow(options.a, options.s);
  const double bound = kz(options.z);

  for (int n = 1; n <= options.n_max; ++n) {
    const double m = n + options.s / 2.0;
    const double eps_n = epsilon_n(params, m);
    const double estimate = eps_n / norm;
    const double gn =
        gn_threshold(options.s, std::max(eps_n, 1e-300), bound);
    const int kn = solve_kn(m, n, gn, options.safety);

    const FixedOrderSums sums = fixed_order_sums(params, n, kn);
    const double err_full = std::abs(sums.i_full / norm - ref);

    os << n << "," << kn << "," << format_double(err_full) << ",";
    if (options.truncated) {
      os << format_double(std::abs(sums.i_trunc / norm - ref));
    }
    os << "," << format_double(estimate) << "\n";
  }
  return os.str();
}

std::string run_rule(double alpha, int n, std::optional<int> k) {
  const QuadratureRule rule = k ? gauss_laguerre_truncated(alpha, n, *k)
                                : gauss_laguerre(alpha, n);
  std::ostringstream os;
  os << "node,weight\n";
  for (std::size_t i = 0; i < rule.size(); ++i) {
    os << format_double(rule.nodes[i]) << "," << format_double(rule.weights[i])
       << "\n";
  }
  return os.str();
}

}  // namespace cli
}  // namespace lerch
