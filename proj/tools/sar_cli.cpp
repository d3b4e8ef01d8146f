// Command-line front end: sar <command> [--config FILE] [parameter flags] ...
//
// Exit codes: 0 success, 2 config error, 3 numeric failure, 4 I/O error.

#include <cstdio>
#include <iostream>

#include "CLI11.hpp"
#include "sar/sar.hpp"

namespace {

constexpr int exit_config = 2;
constexpr int exit_numeric = 3;
constexpr int exit_io = 4;

void print_preflight(const sar::io::RunSpec& spec) {
  const auto pf = sar::io::preflight(spec);
  std::cerr << "preflight: command=" << sar::io::to_string(spec.command)
            << " R0=" << sar::io::format_number(pf.thresholds.r0)
            << " R_phi=" << sar::io::format_number(pf.thresholds.r_phi)
            << " R_mu=" << sar::io::format_number(pf.thresholds.r_mu) << '\n';
  if (!pf.relapse_dominates)
    std::cerr << "warning: R_phi <= R0; the relapse-dominance assumption does not hold\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Susceptible-addicted-reformed model with nonlinear relapse"};
  app.require_subcommand(0, 0);

  std::string command;
  std::optional<std::string> config;
  sar::io::Overrides o;
  app.add_option("command", command, "thresholds | equilibria | simulate-ode | simulate-stoch | bifurcation")
      ->required();
  app.add_option("--config", config, "JSON run configuration");
  app.add_option("--mu", o.mu, "natural exit rate");
  app.add_option("--beta", o.beta, "recruitment rate");
  app.add_option("--gamma", o.gamma, "temporary recovery rate");
  app.add_option("--phi", o.phi, "relapse rate");
  app.add_option("--kappa", o.kappa, "cost of addiction in [0,1]");
  app.add_option("--nu", o.nu, "willingness factor in [0,1]");
  app.add_option("--seed", o.seed, "master seed of the stochastic ensemble");
  app.add_option("--out", o.out, "output file (default: stdout)");
  app.add_option("--format", o.format, "csv | json");
  app.add_option("--reproduce", o.reproduce, "figure preset: fig1 fig2 fig3a fig3b fig4 fig5 fig6 fig7");
  app.add_option("--a0", o.a0, "initial addicted share");
  app.add_option("--dt", o.dt, "time step");
  app.add_option("--t-end", o.t_end, "time horizon");
  app.add_option("--record-every", o.record_every, "record every n-th step");
  app.add_option("--population", o.population, "low | medium | high | N(0)");
  app.add_option("--n-runs", o.n_runs, "stochastic runs in the ensemble");
  app.add_option("--kappa-min", o.kappa_min, "sweep lower bound");
  app.add_option("--kappa-max", o.kappa_max, "sweep upper bound");
  app.add_option("--n-points", o.n_points, "sweep samples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : exit_config;
  }
  o.command = command;

  try {
    const auto spec = sar::io::parse_config(config ? std::optional<std::filesystem::path>(*config) : std::nullopt, o);
    print_preflight(spec);
    sar::io::emit(sar::io::execute(spec), spec);
  } catch (const sar::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_io;
  } catch (const sar::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return exit_config;
  } catch (const sar::ParameterError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return exit_config;
  } catch (const sar::DomainError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return exit_config;
  } catch (const sar::NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return exit_numeric;
  }
  return 0;
}
