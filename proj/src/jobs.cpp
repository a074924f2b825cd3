#include "abex/jobs.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <numbers>
#include <sstream>

namespace abex {

namespace {

[[noreturn]] void config_error(const std::string& what) { throw Error(ErrorCode::ConfigError, what); }

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x == 0.0 ? 0.0 : x);  // no "-0"
  return buf;
}

// Output goes to a sibling temp file that is renamed into place only after
// everything was written, so a failed run never leaves a partial file.
void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) config_error("--out: cannot open " + tmp.string() + " for writing");
    out << text;
    out.close();
    if (!out) {
      std::filesystem::remove(tmp);
      config_error("--out: write to " + tmp.string() + " failed");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    config_error("--out: cannot rename into " + path + ": " + ec.message());
  }
}

std::string header(const RunConfig& cfg, const std::string& command) {
  std::string h = "# abex " + command + "\n";
  h += "# config: " + to_json(cfg).dump() + "\n";
  return h;
}

RunConfig with_overrides(RunConfig cfg, const JobSpec& job) {
  if (job.n) {
    if (job.n->empty()) config_error("--n: empty range");
    cfg.sweep.n = *job.n;
  }
  if (job.l) {
    if (job.l->empty()) config_error("--l: empty range");
    cfg.sweep.l = *job.l;
  }
  if (cfg.sweep.n.empty()) config_error("sweep.n: empty range");
  if (cfg.sweep.l.empty()) config_error("sweep.l: empty range");
  for (int n : cfg.sweep.n) {
    if (n < 0) config_error("sweep.n: quantum numbers n must be non-negative");
  }
  return cfg;
}

void check_grid(const GridSpec& g) {
  if (!(g.min > 0.0)) config_error("--grid: MIN must be > 0");
  if (!(g.max > g.min)) config_error("--grid: MAX must exceed MIN");
  if (g.points < 2) config_error("--grid: N must be >= 2");
}

struct StateKey {
  int n, l;
};

std::vector<StateKey> states(const RunConfig& cfg) {
  std::vector<StateKey> out;
  for (int n : cfg.sweep.n) {
    for (int l : cfg.sweep.l) out.push_back({n, l});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const StateKey& a, const StateKey& b) { return a.n != b.n ? a.n < b.n : a.l < b.l; });
  return out;
}

// Fan a per-state job out over threads; results come back in input order.
template <typename R, typename F>
std::vector<R> parallel_map(const std::vector<StateKey>& keys, F f) {
  std::vector<std::future<R>> fut;
  fut.reserve(keys.size());
  for (const auto& k : keys) fut.push_back(std::async(std::launch::async, f, k));
  std::vector<R> out;
  out.reserve(keys.size());
  for (auto& x : fut) out.push_back(x.get());
  return out;
}

bool state_missing(ErrorCode c) {
  return c == ErrorCode::NoBoundState || c == ErrorCode::ConditionViolated || c == ErrorCode::SubcriticalCharge ||
         c == ErrorCode::NonpositiveB || c == ErrorCode::NoRootInBracket;
}

}  // namespace

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::UndefinedShift: return kExitOpenQuestion;
    case ErrorCode::NoBoundStateFound:
    case ErrorCode::GridTooCoarse:
    case ErrorCode::Divergent: return kExitVerify;
    default: return kExitConfig;
  }
}

GridSpec parse_grid(const std::string& text) {
  GridSpec g;
  std::istringstream in(text);
  std::string a, b, c;
  if (!std::getline(in, a, ':') || !std::getline(in, b, ':') || !std::getline(in, c) || a.empty() || b.empty() ||
      c.empty()) {
    config_error("--grid: expected MIN:MAX:N, got '" + text + "'");
  }
  try {
    size_t pos = 0;
    g.min = std::stod(a, &pos);
    if (pos != a.size()) throw std::invalid_argument(a);
    g.max = std::stod(b, &pos);
    if (pos != b.size()) throw std::invalid_argument(b);
    g.points = std::stoi(c, &pos);
    if (pos != c.size()) throw std::invalid_argument(c);
  } catch (const std::logic_error&) {
    config_error("--grid: expected MIN:MAX:N, got '" + text + "'");
  }
  check_grid(g);
  return g;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  auto to_int = [&](const std::string& s) {
    size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(s, &pos);
    } catch (const std::logic_error&) {
      pos = 0;
    }
    if (s.empty() || pos != s.size()) config_error(what + ": bad integer '" + s + "'");
    return v;
  };
  const auto colon = text.find(':');
  if (colon != std::string::npos) {
    const int a = to_int(text.substr(0, colon)), b = to_int(text.substr(colon + 1));
    for (int i = a; i <= b; ++i) out.push_back(i);
  } else {
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(to_int(item));
  }
  if (out.empty()) config_error(what + ": empty range '" + text + "'");
  return out;
}

// ---- spectrum -------------------------------------------------------------

std::vector<SpectrumRow> spectrum_rows(const RunConfig& cfg_in, const JobSpec& job) {
  const RunConfig cfg = with_overrides(cfg_in, job);
  return parallel_map<SpectrumRow>(states(cfg), [&](StateKey k) {
    SpectrumRow row;
    row.n = k.n;
    row.l = k.l;
    ClosedFormState st;
    try {
      st = closed_form_state(cfg, k.l, k.n);
    } catch (const Error& e) {
      if (!state_missing(e.code())) throw;
      row.skipped = e.what();
      return row;
    }
    row.k0 = st.spec.k0 * (1.0 + job.perturb_formula);
    row.E = st.spec.scale_E;
    row.p_s = st.idx.p;
    row.n_s = st.idx.n;
    if (job.verify) {
      const double orc = oracle_eigen(cfg, st, row.k0);
      row.oracle_k0 = orc;
      row.rel_delta = std::abs(row.k0 - orc) / std::max(std::abs(row.k0), 1e-300);
    }
    return row;
  });
}

int run_spectrum(const RunConfig& cfg, const JobSpec& job, std::ostream& log) {
  const auto rows = spectrum_rows(cfg, job);
  std::string text = header(with_overrides(cfg, job), "spectrum");
  const bool kperp = cfg.field.case_tag == CaseTag::II;
  text += kperp ? "# k0 column holds k_perp^2; E is K = sqrt(gamma^2 - k_perp^2)\n" : "";
  text += "# rel_delta = |k0 - oracle_k0| / |k0|\n";
  text += "n,l,k0,E,p_s,n_s,oracle_k0,rel_delta\n";
  int code = kExitOk;
  for (const auto& r : rows) {
    if (!r.skipped.empty()) {
      text += "# skipped n=" + std::to_string(r.n) + " l=" + std::to_string(r.l) + ": " + r.skipped + "\n";
      continue;
    }
    text += std::to_string(r.n) + "," + std::to_string(r.l) + "," + num(r.k0) + "," + num(r.E) + "," + num(r.p_s) +
            "," + num(r.n_s) + "," + (r.oracle_k0 ? num(*r.oracle_k0) : "") + "," +
            (r.rel_delta ? num(*r.rel_delta) : "") + "\n";
    if (r.rel_delta && !(*r.rel_delta <= job.tol_eigen)) {
      log << "n=" << r.n << " l=" << r.l << ": oracle mismatch " << *r.rel_delta << " > " << job.tol_eigen << "\n";
      code = kExitVerify;
    }
  }
  write_output(job.output_path, text);
  return code;
}

// ---- wavefunction -----------------------------------------------------------

int run_wavefunction(const RunConfig& cfg_in, const JobSpec& job, std::ostream& log) {
  check_grid(job.grid);
  const RunConfig cfg = with_overrides(cfg_in, job);
  std::string body;
  size_t n_comp = 0;
  for (const auto& k : states(cfg)) {
    ClosedFormState st;
    try {
      st = closed_form_state(cfg, k.l, k.n);
    } catch (const Error& e) {
      if (!state_missing(e.code())) throw;
      body += "# skipped n=" + std::to_string(k.n) + " l=" + std::to_string(k.l) + ": " + e.what() + "\n";
      log << e.what() << "\n";
      continue;
    }
    for (int i = 0; i < job.grid.points; ++i) {
      const double r = job.grid.min + (job.grid.max - job.grid.min) * i / (job.grid.points - 1);
      const auto c = state_components(cfg, st, r);
      n_comp = c.size();
      body += std::to_string(k.n) + "," + std::to_string(k.l) + "," + num(r) + "," + num(st.idx.x(r));
      for (const auto& z : c) body += "," + num(z.real()) + "," + num(z.imag());
      body += "\n";
    }
  }
  std::string text = header(cfg, "wavefunction");
  text += "# A = 1, B = 0, unnormalized; grid " + num(job.grid.min) + ":" + num(job.grid.max) + ":" +
          std::to_string(job.grid.points) + "\n";
  text += "n,l,r,x";
  for (size_t i = 1; i <= n_comp; ++i) text += ",re" + std::to_string(i) + ",im" + std::to_string(i);
  text += "\n" + body;
  write_output(job.output_path, text);
  return kExitOk;
}

// ---- verify -----------------------------------------------------------------

int run_verify(const RunConfig& cfg_in, const JobSpec& job, std::ostream& log) {
  const RunConfig cfg = with_overrides(cfg_in, job);
  VerifyOptions opt;
  opt.tol_residual = job.tol_residual;
  opt.tol_eigen = job.tol_eigen;
  opt.perturb_formula = job.perturb_formula;

  struct Outcome {
    StateKey key;
    std::optional<StateCheck> check;
    std::optional<ErrorCode> error;
    std::string message;
  };
  const auto outcomes = parallel_map<Outcome>(states(cfg), [&](StateKey k) {
    Outcome o{k, std::nullopt, std::nullopt, {}};
    try {
      o.check = check_state(cfg, k.l, k.n, opt);
    } catch (const Error& e) {
      o.error = e.code();
      o.message = e.what();
    }
    return o;
  });
  const auto axial = axial_checks(cfg, job.tol_residual);

  nlohmann::json report;
  report["config"] = to_json(cfg);
  report["tol_residual"] = job.tol_residual;
  report["tol_eigen"] = job.tol_eigen;
  double worst_res = 0.0, worst_eig = 0.0;
  bool failed = false, open_question = false, config_fail = false;
  std::ostringstream human;
  auto res_json = [&](const ResidualCheck& c) {
    worst_res = std::max(worst_res, c.residual);
    if (!c.pass()) failed = true;
    human << "  " << (c.pass() ? "PASS " : "FAIL ") << c.name << " residual " << c.residual << " (tol " << c.tol
          << ", perturbed " << c.perturbed << ")\n";
    return nlohmann::json{{"name", c.name}, {"residual", c.residual}, {"perturbed", c.perturbed},
                          {"tol", c.tol}, {"pass", c.pass()}};
  };
  report["states"] = nlohmann::json::array();
  for (const auto& o : outcomes) {
    nlohmann::json s{{"n", o.key.n}, {"l", o.key.l}};
    human << "state n=" << o.key.n << " l=" << o.key.l << "\n";
    if (o.error) {
      s["error"] = std::string(to_string(*o.error));
      s["message"] = o.message;
      human << "  " << o.message << "\n";
      const int code = exit_code_for(*o.error);
      if (code == kExitOpenQuestion) open_question = true;
      else if (code == kExitVerify) failed = true;
      else if (!state_missing(*o.error)) config_fail = true;
    } else {
      const StateCheck& c = *o.check;
      worst_eig = std::max(worst_eig, c.eigen_rel);
      const bool ok = c.eigen_rel < job.tol_eigen;
      if (!ok) failed = true;
      human << "  " << (ok ? "PASS " : "FAIL ") << "eigen closed form " << num(c.closed_form) << " oracle "
            << num(c.oracle) << " rel " << c.eigen_rel << "\n";
      s["closed_form"] = c.closed_form;
      s["oracle"] = c.oracle;
      s["eigen_rel"] = c.eigen_rel;
      s["norm"] = c.norm;
      s["residuals"] = nlohmann::json::array();
      for (const auto& r : c.residuals) s["residuals"].push_back(res_json(r));
    }
    report["states"].push_back(s);
  }
  report["axial"] = nlohmann::json::array();
  if (!axial.empty()) human << "axial solutions\n";
  for (const auto& c : axial) report["axial"].push_back(res_json(c));

  report["worst_residual"] = worst_res;
  report["worst_eigen_rel"] = worst_eig;
  int code = kExitOk;
  if (config_fail) code = kExitConfig;
  else if (failed) code = kExitVerify;
  else if (open_question) code = kExitOpenQuestion;
  const char* verdict[] = {"PASS", "CONFIG ERROR", "FAIL", "OPEN QUESTION"};
  report["verdict"] = verdict[code];
  human << verdict[code] << ": worst residual " << worst_res << ", worst eigen mismatch " << worst_eig << "\n";
  log << human.str();
  write_output(job.output_path, report.dump(2) + "\n");
  return code;
}

// ---- fields -------------------------------------------------------------------

int run_fields(const RunConfig& cfg, const JobSpec& job, std::ostream&) {
  check_grid(job.grid);
  const bool sph = cfg.field.case_tag == CaseTag::Spherical;
  const double theta = std::numbers::pi / 3.0;
  std::string text = header(cfg, "fields");
  text += sph ? "# spherical, theta = pi/3\n" : "# cylindrical, z = 0, x0 = 0\n";
  text += "r,E_r,E_phi,E_z,H_r,H_phi,H_z\n";
  for (int i = 0; i < job.grid.points; ++i) {
    const double r = job.grid.min + (job.grid.max - job.grid.min) * i / (job.grid.points - 1);
    const FieldValues f = sph ? eval_sph_fields(cfg.field, r, theta) : eval_cyl_fields(cfg.field, r, 0.0, 0.0);
    text += num(r) + "," + num(f.E_r) + "," + num(f.E_phi) + "," + num(f.E_z) + "," + num(f.H_r) + "," +
            num(f.H_phi) + "," + num(f.H_z) + "\n";
  }
  write_output(job.output_path, text);
  return kExitOk;
}

int run_job(const JobSpec& job, std::ostream& log) {
  try {
    const RunConfig cfg = load_config(job.config_path);
    switch (job.command) {
      case Command::Spectrum: return run_spectrum(cfg, job, log);
      case Command::Wavefunction: return run_wavefunction(cfg, job, log);
      case Command::Verify: return run_verify(cfg, job, log);
      case Command::Fields: return run_fields(cfg, job, log);
    }
  } catch (const Error& e) {
    log << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    log << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}

}  // namespace abex
