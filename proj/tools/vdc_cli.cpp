// Command-line front door: constants tables, bound evaluation, verification
// suites, and zeta-sum certificates.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 hypothesis violation.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vdc/vdc.hpp"

namespace {

std::string fmt_g(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

int run_constants(int table, int dmax, const std::string& format,
                  bool upward) {
  vdc::Rounding r = upward ? vdc::Rounding::upward : vdc::Rounding::nearest;
  auto rows = vdc::emit_table(
      table == 1 ? vdc::Table::table1 : vdc::Table::table2, dmax, r);
  // the limit row belongs after the published range; drop it for short tables
  if (dmax < 11 && !rows.empty() && rows.back().is_limit) rows.pop_back();
  if (format == "csv") {
    std::cout << "d,A,B,C\n";
    for (const auto& row : rows) {
      std::cout << (row.is_limit ? std::string(">21") : std::to_string(row.d))
                << "," << fmt_g(row.A) << "," << fmt_g(row.B) << ","
                << fmt_g(row.C) << "\n";
    }
  } else if (format == "json") {
    std::cout << "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& row = rows[i];
      std::cout << (i ? "," : "") << "{\"d\":"
                << (row.is_limit ? std::string("\">21\"")
                                 : std::to_string(row.d))
                << ",\"A\":" << fmt_g(row.A) << ",\"B\":" << fmt_g(row.B)
                << ",\"C\":" << fmt_g(row.C) << "}";
    }
    std::cout << "]\n";
  } else {
    for (const auto& row : rows) {
      std::printf("%4s  %10s %10s %10s\n",
                  row.is_limit ? ">21" : std::to_string(row.d).c_str(),
                  fmt_g(row.A).c_str(), fmt_g(row.B).c_str(),
                  fmt_g(row.C).c_str());
    }
  }
  return 0;
}

int run_bound(const std::string& which, int d, double lambda, double Lambda,
              double Y, double theta) {
  if (which == "kusmin") {
    std::cout << "{\"which\":\"kusmin\",\"theta\":" << fmt_g(theta)
              << ",\"value\":" << fmt_g(vdc::kusmin_landau(theta)) << "}\n";
    return 0;
  }
  vdc::DerivativeEnvelope env{d, lambda, Lambda};
  if (which == "vdc") {
    std::cout << vdc::to_json(vdc::vdc_dth_bound(env, Y)) << "\n";
  } else if (which == "d2") {
    std::cout << vdc::to_json(vdc::d2_mean_bound(env, Y)) << "\n";
  } else if (which == "titchmarsh") {
    double v = vdc::titchmarsh_bound(env, Y);
    std::cout << "{\"which\":\"titchmarsh\",\"d\":" << d
              << ",\"value\":" << fmt_g(v) << "}\n";
  } else {
    throw CLI::ValidationError("--which", "unknown bound '" + which + "'");
  }
  return 0;
}

int run_verify(const std::string& suite, int budget, std::uint64_t seed) {
  auto records = vdc::run_suite(suite, budget, seed);
  for (const auto& rec : records) {
    std::cout << vdc::to_json(rec) << "\n";
  }
  vdc::SuiteSummary summary = vdc::summarize(suite, records);
  std::cout << vdc::to_json(summary) << "\n";
  return summary.failures == 0 ? 0 : 1;
}

int run_zeta(double t, double alpha, double sigma, const std::string& d_arg,
             bool with_direct, bool critical) {
  if (critical) {
    double bound = vdc::zeta_critical_bound(t);
    std::cout << "{\"t\":" << fmt_g(t)
              << ",\"tau\":" << fmt_g(t / (2.0 * M_PI))
              << ",\"bound\":" << fmt_g(bound);
    if (with_direct) {
      double direct = vdc::zeta_critical_direct(t);
      std::cout << ",\"direct\":" << fmt_g(direct)
                << ",\"ratio\":" << fmt_g(direct / bound);
    }
    std::cout << "}\n";
    return 0;
  }
  vdc::ZetaSumSpec spec(t, alpha, sigma);
  int d = d_arg == "auto" ? vdc::optimal_d(alpha) : std::stoi(d_arg);
  double bound = d == 2 ? vdc::zeta_S_d2_bound(spec)
                        : vdc::zeta_S_bound(spec, d);
  if (sigma > 0.0) bound = vdc::partial_sigma_bound(spec, bound);
  std::cout << "{\"t\":" << fmt_g(t) << ",\"tau\":" << fmt_g(spec.tau())
            << ",\"alpha\":" << fmt_g(alpha) << ",\"sigma\":" << fmt_g(sigma)
            << ",\"d\":" << d << ",\"bound\":" << fmt_g(bound);
  if (with_direct) {
    double direct = vdc::zeta_S_direct(spec);
    std::cout << ",\"direct\":" << fmt_g(direct)
              << ",\"ratio\":" << fmt_g(direct / bound);
  }
  std::cout << "}\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Explicit van der Corput derivative estimates"};
  app.require_subcommand(1);

  auto* constants = app.add_subcommand("constants", "emit coefficient tables");
  int table = 1;
  int dmax = 11;
  std::string c_format = "text";
  bool upward = false;
  constants->add_option("--table", table, "1 or 2")
      ->check(CLI::IsMember({1, 2}));
  constants->add_option("--dmax", dmax, "largest derivative order")
      ->check(CLI::Range(2, 24));
  constants->add_option("--format", c_format)
      ->check(CLI::IsMember({"text", "csv", "json"}));
  constants->add_flag("--upward", upward, "pad coefficients upward");

  auto* bound = app.add_subcommand("bound", "evaluate one explicit bound");
  std::string which = "vdc";
  int d = 3;
  double lambda = 1e-6;
  double Lambda = 2e-6;
  double Y = 1000.0;
  double theta = 0.25;
  bound->add_option("--which", which)
      ->check(CLI::IsMember({"vdc", "titchmarsh", "d2", "kusmin"}));
  bound->add_option("--d", d);
  bound->add_option("--lambda", lambda);
  bound->add_option("--Lambda", Lambda);
  bound->add_option("--Y", Y);
  bound->add_option("--theta", theta);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  int budget = 100;
  std::uint64_t seed = 20260826;
  verify->add_option("--suite", suite)->required()->check(
      CLI::IsMember(vdc::suite_names()));
  verify->add_option("--budget", budget)->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed);

  auto* zeta = app.add_subcommand("zeta", "zeta partial-sum certificate");
  double t = 0.0;
  double alpha = 0.5;
  double sigma = 0.0;
  std::string d_arg = "auto";
  bool with_direct = false;
  bool critical = false;
  zeta->add_option("--t", t)->required();
  zeta->add_option("--alpha", alpha);
  zeta->add_option("--sigma", sigma);
  zeta->add_option("--d", d_arg, "derivative order or 'auto'");
  zeta->add_flag("--with-direct", with_direct, "also run the direct oracle");
  zeta->add_flag("--critical", critical, "critical-line bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (constants->parsed()) return run_constants(table, dmax, c_format, upward);
    if (bound->parsed()) return run_bound(which, d, lambda, Lambda, Y, theta);
    if (verify->parsed()) return run_verify(suite, budget, seed);
    return run_zeta(t, alpha, sigma, d_arg, with_direct, critical);
  } catch (const vdc::hypothesis_error& e) {
    std::cerr << "hypothesis violation: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
