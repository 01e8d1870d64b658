// Command-line front end: single evaluations, result-table reproduction,
// error-vs-order sweeps, rule dumps and oracle cross-checks.

#include <complex>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lerch/cli.hpp"
#include "lerch/core.hpp"
#include "lerch/errors.hpp"
#include "lerch/oracle.hpp"

namespace {

using lerch::Complex;
using lerch::cli::format_double;

struct ZFlags {
  double z_re = 0.0;
  double z_im = 0.0;
  std::vector<double> polar;  // r, tau

  [[nodiscard]] Complex value() const {
    if (polar.size() == 2) return lerch::cli::polar_z(polar[0], polar[1]);
    return {z_re, z_im};
  }
};

void add_z_flags(CLI::App* cmd, ZFlags* flags) {
  auto* re = cmd->add_option("--z-re", flags->z_re, "Re(z)");
  auto* im = cmd->add_option("--z-im", flags->z_im, "Im(z)");
  auto* polar = cmd->add_option("--z-polar", flags->polar,
                                "z = R e^{i tau pi}, given as R TAU");
  polar->expected(2);
  polar->excludes(re);
  polar->excludes(im);
}

int run_eval(const ZFlags& zf, double s, double a, double tol, bool json,
             bool check) {
  const Complex z = zf.value();
  const lerch::Evaluation ev = lerch::evaluate({z, s, a}, tol);

  lerch::cli::OutputRecord rec;
  rec.z_re = z.real();
  rec.z_im = z.imag();
  rec.s = s;
  rec.a = a;
  rec.tol = tol;
  rec.value = ev.value;
  rec.n = ev.n;
  rec.kn = ev.kn;
  rec.est_error = ev.est_error;
  if (check) {
    const auto ref = lerch::oracle::best_reference(z, s, a, 1e-13);
    rec.oracle = ref.value;
    rec.deviation = std::abs(ev.value - ref.value);
  }
  std::cout << (json ? rec.to_json() + "\n" : rec.to_text());
  return lerch::cli::kExitOk;
}

int run_oracle(const ZFlags& zf, double s, double a, double tol) {
  const auto report = lerch::oracle::cross_validate(zf.value(), s, a, tol);
  for (const auto& res : report.results) {
    std::cout << lerch::oracle::method_name(res.method) << " "
              << format_double(res.value.real()) << " "
              << format_double(res.value.imag()) << " est "
              << format_double(res.est_accuracy) << "\n";
  }
  for (const auto& note : report.notes) {
    std::cout << "note: " << note << "\n";
  }
  std::cout << "max_pairwise = " << format_double(report.max_pairwise) << "\n"
            << (report.ok() ? "agreement: ok" : "agreement: FAILED") << "\n";
  return report.ok() ? lerch::cli::kExitOk
                     : lerch::cli::kExitOracleDisagreement;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lerch transcendent via the truncated Gauss-Laguerre rule"};
  app.require_subcommand(1);

  ZFlags zf;
  double s = 1.0;
  double a = 1.0;
  double tol = 1e-10;
  bool json = false;
  bool check = false;

  auto* eval = app.add_subcommand("eval", "Evaluate Phi(z, s, a)");
  add_z_flags(eval, &zf);
  eval->add_option("--s", s, "exponent s > 0")->required();
  eval->add_option("--a", a, "shift a > 0");
  eval->add_option("--tol", tol, "target accuracy");
  eval->add_flag("--json", json, "emit a JSON object");
  eval->add_flag("--check", check, "compare against the oracle");

  std::string table_name;
  double table_tol = 1e-10;
  auto* table = app.add_subcommand("table", "Reproduce a results table");
  table->add_option("name", table_name, "table1|table2|table3|table4")
      ->required();
  table->add_option("tol", table_tol, "tolerance (e.g. 1e-10, 1e-14)");

  int n_max = 100;
  bool truncated = false;
  auto* sweep = app.add_subcommand("sweep", "Error sweep over n (CSV)");
  add_z_flags(sweep, &zf);
  sweep->add_option("--s", s, "exponent s > 0")->required();
  sweep->add_option("--a", a, "shift a > 0");
  sweep->add_option("--n-max", n_max, "largest rule order")->required();
  sweep->add_flag("--truncated", truncated, "also evaluate the truncated rule");

  double alpha = 0.0;
  int rule_n = 1;
  int rule_k = 0;
  auto* rule = app.add_subcommand("rule", "Dump nodes and weights (CSV)");
  rule->add_option("--alpha", alpha, "weight exponent, > -1")->required();
  rule->add_option("--n", rule_n, "rule order")->required();
  auto* kopt = rule->add_option("--k", rule_k, "keep only the first k nodes");

  double oracle_tol = 1e-13;
  auto* oracle = app.add_subcommand("oracle", "Cross-validate the oracles");
  add_z_flags(oracle, &zf);
  oracle->add_option("--s", s, "exponent s > 0")->required();
  oracle->add_option("--a", a, "shift a > 0");
  oracle->add_option("--tol", oracle_tol, "oracle tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return lerch::cli::kExitUsage;
  }

  try {
    if (eval->parsed()) {
      return run_eval(zf, s, a, tol, json, check);
    }
    if (table->parsed()) {
      const auto id = lerch::cli::parse_table_name(table_name);
      if (!id) {
        std::cerr << "unknown table '" << table_name
                  << "' (expected table1..table4)\n";
        return lerch::cli::kExitUsage;
      }
      std::cout << lerch::cli::run_table(*id, table_tol);
      return lerch::cli::kExitOk;
    }
    if (sweep->parsed()) {
      lerch::cli::SweepOptions opt;
      opt.z = zf.value();
      opt.s = s;
      opt.a = a;
      opt.n_max = n_max;
      opt.truncated = truncated;
      std::cout << lerch::cli::run_sweep(opt);
      return lerch::cli::kExitOk;
    }
    if (rule->parsed()) {
      std::optional<int> k;
      if (kopt->count() > 0) k = rule_k;
      std::cout << lerch::cli::run_rule(alpha, rule_n, k);
      return lerch::cli::kExitOk;
    }
    if (oracle->parsed()) {
      return run_oracle(zf, s, a, oracle_tol);
    }
  } catch (const lerch::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return lerch::cli::kExitDomainError;
  } catch (const lerch::SizingOverflow& e) {
    std::cerr << "sizing overflow: " << e.what() << "\n";
    return lerch::cli::kExitSizingOverflow;
  } catch (const lerch::NoConvergence& e) {
    std::cerr << "oracle stall: " << e.what() << "\n";
    return lerch::cli::kExitOracleDisagreement;
  } catch (const lerch::InvalidParameter& e) {
    std::cerr << "invalid parameter: " << e.what() << "\n";
    return lerch::cli::kExitDomainError;
  }
  return lerch::cli::kExitOk;
}
