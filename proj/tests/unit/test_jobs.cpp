#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "abex/jobs.hpp"

using namespace abex;
using nlohmann::json;

namespace {

json worked_config() {
  return json::parse(R"({
    "flux_quanta": 0.5, "charge_sign": -1, "case_tag": "I.2",
    "f0": {"shape": "Zero"},
    "f1": {"shape": "InverseR", "coeffs": {"alpha": 0.0}},
    "f2": {"shape": "Linear", "coeffs": {"gamma": 1.0}},
    "particle": {"equation": "KleinGordon", "mass": 1.0},
    "sweep": {"n": [0, 1], "l": [1]}
  })");
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::ConfigError;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("config_jobs") {
  TEST_CASE("config round trip") {
    const auto cfg = parse_config(worked_config());
    CHECK(cfg.field.case_tag == CaseTag::I2);
    CHECK(cfg.field.flux.mu == 0.5);
    CHECK(cfg.sweep.n == std::vector<int>{0, 1});
    const auto again = parse_config(to_json(cfg));
    CHECK(to_json(again) == to_json(cfg));
  }

  TEST_CASE("config errors name the problem") {
    auto j = worked_config();
    j["bogus"] = 1;
    CHECK(code_of([&] { parse_config(j); }) == ErrorCode::ConfigError);
    j = worked_config();
    j["f2"]["shape"] = "Cubic";
    CHECK(code_of([&] { parse_config(j); }) == ErrorCode::ConfigError);
    j = worked_config();
    j["f0"] = json::parse(R"({"shape": "InverseR", "coeffs": {"alpha": 0.1}})");
    CHECK(code_of([&] { parse_config(j); }) == ErrorCode::UnsupportedConfiguration);
    j = worked_config();
    j["sweep"]["n"] = json::array();
    CHECK(code_of([&] { parse_config(j); }) == ErrorCode::ConfigError);
  }

  TEST_CASE("grid and list parsing") {
    const auto g = parse_grid("0.1:5:50");
    CHECK(g.min == 0.1);
    CHECK(g.points == 50);
    CHECK(code_of([] { parse_grid("0:5:50"); }) == ErrorCode::ConfigError);
    CHECK(code_of([] { parse_grid("1:0.5:50"); }) == ErrorCode::ConfigError);
    CHECK(code_of([] { parse_grid("junk"); }) == ErrorCode::ConfigError);
    CHECK(parse_int_list("0:3", "n") == std::vector<int>{0, 1, 2, 3});
    CHECK(parse_int_list("2,5,-1", "l") == std::vector<int>{2, 5, -1});
    CHECK(code_of([] { parse_int_list("3:0", "n"); }) == ErrorCode::ConfigError);
  }

  TEST_CASE("exit codes of library errors") {
    CHECK(exit_code_for(ErrorCode::ConfigError) == kExitConfig);
    CHECK(exit_code_for(ErrorCode::UndefinedShift) == kExitOpenQuestion);
    CHECK(exit_code_for(ErrorCode::NoBoundStateFound) == kExitVerify);
    CHECK(exit_code_for(ErrorCode::NoBoundState) == kExitConfig);
  }

  TEST_CASE("spectrum rows of the worked config") {
    const auto cfg = parse_config(worked_config());
    JobSpec job;
    job.verify = true;
    const auto rows = spectrum_rows(cfg, job);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].k0 * rows[0].k0 == doctest::Approx(1.4375).epsilon(1e-14));
    REQUIRE(rows[0].rel_delta.has_value());
    CHECK(*rows[0].rel_delta < 1e-6);
  }

  TEST_CASE("spectrum output is deterministic") {
    const auto dir = std::filesystem::temp_directory_path() / "abex_unit_jobs";
    std::filesystem::create_directories(dir);
    const auto cfg = parse_config(worked_config());
    JobSpec job;
    std::ostringstream log;
    job.output_path = (dir / "a.csv").string();
    CHECK(run_spectrum(cfg, job, log) == kExitOk);
    job.output_path = (dir / "b.csv").string();
    CHECK(run_spectrum(cfg, job, log) == kExitOk);
    const auto a = slurp(dir / "a.csv");
    CHECK(a == slurp(dir / "b.csv"));
    CHECK(a.find("n,l,k0,E,p_s,n_s") != std::string::npos);
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("verify with a perturbed closed form fails") {
    const auto cfg = parse_config(worked_config());
    JobSpec job;
    job.command = Command::Verify;
    const auto out = std::filesystem::temp_directory_path() / "abex_unit_verify.json";
    job.output_path = out.string();
    job.perturb_formula = 1e-3;
    std::ostringstream log;
    CHECK(run_verify(cfg, job, log) == kExitVerify);
    CHECK(slurp(out).find("\"verdict\": \"FAIL\"") != std::string::npos);
    std::filesystem::remove(out);
  }
}
