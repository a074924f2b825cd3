// abex: spectra, wavefunctions and oracle verification from a JSON config.

#include <iostream>

#include <CLI11.hpp>

#include "abex/jobs.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Bound states in an Aharonov-Bohm field plus exactly solvable additional fields"};
  app.require_subcommand(1);

  abex::JobSpec job;
  std::string n_text, l_text, grid_text;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", job.config_path, "JSON run configuration")->required();
    sub->add_option("--out", job.output_path, "output file (default: stdout)");
    sub->add_option("--n", n_text, "radial quantum numbers, a:b or a,b,c (overrides sweep.n)");
    sub->add_option("--l", l_text, "angular quantum numbers, a:b or a,b,c (overrides sweep.l)");
    sub->add_option("--tol-residual", job.tol_residual, "residual tolerance")->capture_default_str();
    sub->add_option("--tol-eigen", job.tol_eigen, "relative eigenvalue tolerance")->capture_default_str();
    // test hook: scale the closed-form eigenvalue by (1 + x)
    sub->add_option("--perturb-formula", job.perturb_formula)->group("");
  };

  auto* spectrum = app.add_subcommand("spectrum", "closed-form spectrum table (CSV)");
  add_common(spectrum);
  spectrum->add_flag("--verify", job.verify, "fill the oracle column and fail on mismatch");

  auto* wave = app.add_subcommand("wavefunction", "sample the assembled solution on an r grid (CSV)");
  add_common(wave);
  wave->add_option("--grid", grid_text, "r grid MIN:MAX:N");

  auto* verify = app.add_subcommand("verify", "residual and oracle suite (JSON report, text on stderr)");
  add_common(verify);

  auto* fields = app.add_subcommand("fields", "E and H of the additional field on an r grid (CSV)");
  add_common(fields);
  fields->add_option("--grid", grid_text, "r grid MIN:MAX:N");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : abex::kExitConfig;
  }

  if (spectrum->parsed()) job.command = abex::Command::Spectrum;
  if (wave->parsed()) job.command = abex::Command::Wavefunction;
  if (verify->parsed()) job.command = abex::Command::Verify;
  if (fields->parsed()) job.command = abex::Command::Fields;

  try {
    if (!n_text.empty()) job.n = abex::parse_int_list(n_text, "--n");
    if (!l_text.empty()) job.l = abex::parse_int_list(l_text, "--l");
    if (!grid_text.empty()) job.grid = abex::parse_grid(grid_text);
  } catch (const abex::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return abex::exit_code_for(e.code());
  }
  return abex::run_job(job, std::cerr);
}
