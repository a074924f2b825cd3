#pragma once

// Job drivers behind the command-line tool. Each returns the process exit
// code: 0 ok, 1 config error, 2 verification failure, 3 open-question
// condition (UndefinedShift).

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "abex/config_io.hpp"
#include "abex/verify_suite.hpp"

namespace abex {

enum class Command { Spectrum, Wavefunction, Verify, Fields };

struct GridSpec {
  double min = 0.05;
  double max = 10.0;
  int points = 200;
};

struct JobSpec {
  Command command = Command::Spectrum;
  std::string config_path;
  std::string output_path;  // empty: stdout
  std::optional<std::vector<int>> n;  // overrides sweep.n
  std::optional<std::vector<int>> l;  // overrides sweep.l
  GridSpec grid;
  double tol_residual = 1e-6;
  double tol_eigen = 1e-6;
  bool verify = false;
  double perturb_formula = 0.0;
};

enum ExitCode { kExitOk = 0, kExitConfig = 1, kExitVerify = 2, kExitOpenQuestion = 3 };

struct SpectrumRow {
  int n = 0;
  int l = 0;
  double k0 = 0.0;  // k_perp^2 for Case II
  double E = 0.0;
  double p_s = 0.0;
  double n_s = 0.0;
  std::optional<double> oracle_k0;
  std::optional<double> rel_delta;
  std::string skipped;  // non-empty: the state does not exist, reason
};

/// Parse "MIN:MAX:N"; ConfigError on malformed text or min <= 0, max <= min, N < 2.
GridSpec parse_grid(const std::string& text);
/// Parse "a:b" (inclusive range) or "a,b,c"; ConfigError when empty.
std::vector<int> parse_int_list(const std::string& text, const std::string& what);

std::vector<SpectrumRow> spectrum_rows(const RunConfig& cfg, const JobSpec& job);

/// Full job: load config, run, write output. Messages go to `log`.
int run_job(const JobSpec& job, std::ostream& log);

/// Same with an already-parsed config (used by tests).
int run_spectrum(const RunConfig& cfg, const JobSpec& job, std::ostream& log);
int run_wavefunction(const RunConfig& cfg, const JobSpec& job, std::ostream& log);
int run_verify(const RunConfig& cfg, const JobSpec& job, std::ostream& log);
int run_fields(const RunConfig& cfg, const JobSpec& job, std::ostream& log);

/// Exit code for a library error.
int exit_code_for(ErrorCode code);

}  // namespace abex
