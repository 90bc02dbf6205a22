#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "mnormlab/experiment.hpp"

namespace ex = mnormlab::experiment;

namespace {

void add_output_flags(CLI::App* sub, ex::ExperimentConfig& cfg,
                      std::string& format, std::string& out) {
  sub->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", out, "Write the report to PATH instead of stdout");
  sub->add_flag("--timestamp", cfg.timestamp,
                "Add a UTC timestamp to the JSON meta block");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical experiments on sampled symmetric matrices"};
  app.require_subcommand(1);

  ex::ExperimentConfig cfg;
  std::string format = "csv";
  std::string out;
  double tol = 0.0;

  auto* norm = app.add_subcommand("norm", "Normalized entrywise m-norms vs. the integral limit");
  norm->add_option("--f", cfg.integrand, "Integrand preset: exp, lngamma, identity, const1");
  norm->add_option("--m", cfg.exponent, "Norm exponent (real, >= 1)");
  norm->add_option("--orders", cfg.orders, "Matrix orders, comma separated")->delimiter(',');
  auto* norm_tol = norm->add_option("--tol", tol, "Quadrature tolerance for the predicted limit");
  add_output_flags(norm, cfg, format, out);

  auto* gamma = app.add_subcommand("gamma", "Log-Gamma identities and the Gamma integral");
  gamma->add_option("--mode", cfg.gamma_mode,
                    "integral|rowproduct|sine-odd|sine-even|reflection|duplication");
  gamma->add_option("--orders", cfg.orders, "n (integral, sine-*) or k (rowproduct)")->delimiter(',');
  gamma->add_option("--points", cfg.points, "Real grid for reflection/duplication")->delimiter(',');
  add_output_flags(gamma, cfg, format, out);

  auto* farey = app.add_subcommand("farey", "Farey averages, Phi(x) and coprime density");
  farey->add_option("--x", cfg.orders, "Farey orders, comma separated")->delimiter(',');
  farey->add_option("--f", cfg.integrand, "Integrand preset");
  auto* farey_tol = farey->add_option("--tol", tol, "Quadrature tolerance for the reference integral");
  add_output_flags(farey, cfg, format, out);

  auto* eigen = app.add_subcommand("eigen", "Jacobi spectral sums of sampled matrices");
  eigen->add_option("--f", cfg.integrand, "Integrand preset");
  eigen->add_option("--orders", cfg.orders, "Matrix orders, comma separated")->delimiter(',');
  eigen->add_option("--max-sweeps", cfg.max_sweeps, "Jacobi sweep budget");
  auto* eigen_tol = eigen->add_option("--tol", tol, "Relative off-diagonal tolerance");
  add_output_flags(eigen, cfg, format, out);

  auto* had = app.add_subcommand("hadamard", "Sylvester Hadamard matrices and the oscillation bound");
  had->add_option("--k", cfg.orders, "Sylvester exponents (order 2^k), comma separated")->delimiter(',');
  had->add_option("--check", cfg.hadamard_check, "orthogonality|oscillation|spectral");
  had->add_option("--max-sweeps", cfg.max_sweeps, "Jacobi sweep budget (spectral)");
  auto* had_tol = had->add_option("--tol", tol, "Jacobi tolerance (spectral)");
  add_output_flags(had, cfg, format, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const std::map<CLI::App*, std::pair<ex::Command, CLI::Option*>> commands = {
      {norm, {ex::Command::norm, norm_tol}},
      {gamma, {ex::Command::gamma, nullptr}},
      {farey, {ex::Command::farey, farey_tol}},
      {eigen, {ex::Command::eigen, eigen_tol}},
      {had, {ex::Command::hadamard, had_tol}},
  };
  for (const auto& [sub, entry] : commands) {
    if (sub->parsed()) {
      cfg.command = entry.first;
      if (entry.second != nullptr && entry.second->count() > 0) cfg.tol = tol;
    }
  }
  cfg.format = format == "json" ? ex::OutputFormat::json : ex::OutputFormat::csv;
  if (!out.empty()) cfg.output_path = out;

  return ex::run(cfg, std::cout, std::cerr);
}
