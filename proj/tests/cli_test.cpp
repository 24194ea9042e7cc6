#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "orthoiir/cli.hpp"
#include "orthoiir/serialization.hpp"

namespace orthoiir::cli {
namespace {

namespace fs = std::filesystem;

constexpr const char* kExampleLp =
    R"("lp_spec": {"passband_edge": 2.0007, "stopband_edge": 2.3186, "passband_level": 1000, "stopband_level": 0})";

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("orthoiir_cli_" + std::to_string(rd()) + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

std::string Slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

fs::path WriteConfig(const TempDir& dir, const std::string& body, const std::string& name = "config.json") {
  const fs::path p = dir.path() / name;
  std::ofstream(p, std::ios::binary) << body;
  return p;
}

std::string ExampleConfig(const fs::path& out_dir, const std::string& extra = "") {
  return std::string("{") + kExampleLp + R"(, "hp_levels": [1, 2], "output_dir": ")" + out_dir.string() +
         "\"" + extra + "}";
}

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult Design(const fs::path& config, bool check = false) {
  std::ostringstream out, err;
  const int code = CmdDesign(config, check, true, out, err);
  return {code, out.str(), err.str()};
}

TEST(ParseConfigTest, ShorthandAndDefaults) {
  const DesignConfig c = ParseDesignConfig(std::string("{") + kExampleLp + "}");
  ASSERT_EQ(c.lp_spec.bands.size(), 2u);
  EXPECT_EQ(c.lp_spec.bands[0].omega_end, 2.0007);
  EXPECT_EQ(c.lp_spec.bands[1].omega_start, 2.3186);
  EXPECT_EQ(c.lp_spec.bands[0].level, 1000.0);
  EXPECT_EQ(c.lp_spec.bands[1].level, 0.0);
  EXPECT_EQ(c.hp_lo_level, 1.0);
  EXPECT_EQ(c.hp_hi_level, 2.0);
  EXPECT_EQ(c.num_terms_n, kDefaultNumTerms);
  EXPECT_EQ(c.kind, FilterKind::kLowPass);
  EXPECT_EQ(c.grid_points, 2048);
  EXPECT_EQ(c.output_dir, fs::path("."));
}

TEST(ParseConfigTest, ExplicitSpecAndOptions) {
  const DesignConfig c = ParseDesignConfig(R"({
    "lp_spec": {"bands": [{"omega_start": 0, "omega_end": 1, "level": 0},
                          {"omega_start": 1, "omega_end": 3.141592653589793, "level": 5}]},
    "hp_levels": {"lo_level": 3, "hi_level": 4}, "num_terms_n": 12, "num_terms_m": 9,
    "kind": "high_pass", "grid_points": 64, "reference_omega": 0.5, "output_dir": "out"})");
  EXPECT_EQ(c.lp_spec.bands[1].level, 5.0);
  EXPECT_EQ(c.hp_lo_level, 3.0);
  EXPECT_EQ(c.hp_hi_level, 4.0);
  EXPECT_EQ(c.num_terms_n, 12);
  EXPECT_EQ(c.num_terms_m, 9);
  EXPECT_EQ(c.kind, FilterKind::kHighPass);
  EXPECT_EQ(c.grid_points, 64);
  EXPECT_EQ(c.reference_omega, 0.5);
  EXPECT_EQ(c.output_dir, fs::path("out"));
}

TEST(ParseConfigTest, Errors) {
  const std::string lp = kExampleLp;
  for (const std::string& bad : {std::string("not json"), std::string("[]"), std::string("{}"),
                                 "{" + lp + R"(, "bogus": 1})", "{" + lp + R"(, "num_terms_n": 0})",
                                 "{" + lp + R"(, "num_terms_m": 121})", "{" + lp + R"(, "num_terms_n": 2.5})",
                                 "{" + lp + R"(, "grid_points": 8})", "{" + lp + R"(, "kind": "band_pass"})",
                                 "{" + lp + R"(, "reference_omega": 4})", "{" + lp + R"(, "hp_levels": [1]})",
                                 "{" + lp + R"(, "output_dir": 3})"}) {
    EXPECT_THROW(ParseDesignConfig(bad), ConfigError) << bad;
  }
}

TEST(DesignCommandTest, ExampleExampleWritesAllOutputs) {
  TempDir dir;
  const fs::path out = dir.path() / "out";
  const RunResult r = Design(WriteConfig(dir, ExampleConfig(out)));
  ASSERT_EQ(r.code, kExitOk) << r.err;
  for (const char* name : {"report.json", "model.json", "ba_coeffs.json", "response.csv", "response_raw.csv",
                           "objfn_num.csv", "objfn_den.csv"}) {
    EXPECT_TRUE(fs::exists(out / name)) << name;
  }
  const PoleZeroModel m = ModelFromJson(nlohmann::json::parse(Slurp(out / "model.json")));
  EXPECT_TRUE(m.stabilized);
  for (const Complex& p : m.poles.points) EXPECT_LT(std::abs(p), 1.0);

  const auto ba = nlohmann::json::parse(Slurp(out / "ba_coeffs.json"));
  EXPECT_EQ(ba["a"][0].get<double>(), 1.0);

  const auto report = nlohmann::json::parse(Slurp(out / "report.json"));
  EXPECT_EQ(report["kind"], "low_pass");
  EXPECT_EQ(report["numerator"]["num_terms"], 20);

  // Passband sits near the level ratio 1000 / 1.
  std::ifstream csv(out / "response.csv");
  std::string line;
  std::getline(csv, line);
  int rows = 0;
  while (std::getline(csv, line)) {
    const double w = std::stod(line);
    const double db = std::stod(line.substr(line.find(',') + 1));
    if (w > 0.05 && w < 1.9) EXPECT_NEAR(db, 60.0, 0.5) << w;
    ++rows;
  }
  EXPECT_EQ(rows, 2048);
}

TEST(DesignCommandTest, Deterministic) {
  TempDir dir;
  const fs::path a = dir.path() / "a", b = dir.path() / "b";
  ASSERT_EQ(Design(WriteConfig(dir, ExampleConfig(a), "a.json")).code, kExitOk);
  ASSERT_EQ(Design(WriteConfig(dir, ExampleConfig(b), "b.json")).code, kExitOk);
  for (const char* name : {"report.json", "model.json", "ba_coeffs.json", "response.csv", "objfn_num.csv"}) {
    EXPECT_EQ(Slurp(a / name), Slurp(b / name)) << name;
  }
}

TEST(DesignCommandTest, VanishingDenominatorIsPipelineError) {
  TempDir dir;
  const RunResult r = Design(WriteConfig(
      dir, std::string("{") + kExampleLp + R"(, "hp_levels": [0, 2], "output_dir": ")" +
               (dir.path() / "out").string() + "\"}"));
  EXPECT_EQ(r.code, kExitPipeline);
  EXPECT_NE(r.err.find("denominator"), std::string::npos) << r.err;
  EXPECT_FALSE(fs::exists(dir.path() / "out" / "model.json"));
}

TEST(DesignCommandTest, LowOrderAddsComparisonNote) {
  TempDir dir;
  const fs::path out = dir.path() / "out";
  const RunResult r = Design(WriteConfig(dir, ExampleConfig(out, R"(, "num_terms_n": 8, "num_terms_m": 8)")));
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(Slurp(out / "report.json").find("larger than"), std::string::npos);
}

TEST(DesignCommandTest, CheckWritesNothing) {
  TempDir dir;
  const fs::path out = dir.path() / "out";
  const RunResult r = Design(WriteConfig(dir, ExampleConfig(out)), true);
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_FALSE(fs::exists(out));
}

TEST(DesignCommandTest, ConfigAndIoErrors) {
  TempDir dir;
  EXPECT_EQ(Design(WriteConfig(dir, "{ nope")).code, kExitConfig);
  EXPECT_EQ(Design(dir.path() / "missing.json").code, kExitConfig);
  std::ofstream(dir.path() / "blocker") << "x";
  const RunResult r = Design(WriteConfig(dir, ExampleConfig(dir.path() / "blocker" / "out")));
  EXPECT_EQ(r.code, kExitIo) << r.err;
}

TEST(DesignCommandTest, EnvironmentOverridesOutputDir) {
  TempDir dir;
  const fs::path env_out = dir.path() / "from_env";
  ::setenv("ORTHOIIR_OUTPUT_DIR", env_out.c_str(), 1);
  const RunResult r = Design(WriteConfig(dir, ExampleConfig(dir.path() / "from_config", R"(, "num_terms_n": 6, "num_terms_m": 6)")));
  ::unsetenv("ORTHOIIR_OUTPUT_DIR");
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(fs::exists(env_out / "model.json"));
  EXPECT_FALSE(fs::exists(dir.path() / "from_config"));
}

TEST(RespondCommandTest, MatchesDesignResponse) {
  TempDir dir;
  const fs::path out = dir.path() / "out";
  ASSERT_EQ(Design(WriteConfig(dir, ExampleConfig(out))).code, kExitOk);
  std::ostringstream err;
  ASSERT_EQ(CmdRespond(out / "model.json", 2048, dir.path() / "again.csv", err), kExitOk) << err.str();
  EXPECT_EQ(Slurp(dir.path() / "again.csv"), Slurp(out / "response.csv"));
}

TEST(RespondCommandTest, Errors) {
  TempDir dir;
  std::ostringstream err;
  const fs::path grid_pole = dir.path() / "grid_pole.json";
  std::ofstream(grid_pole) << R"({"zeros": [], "poles": [[1, 0]], "gain": 1, "stabilized": false})";
  EXPECT_EQ(CmdRespond(grid_pole, 64, dir.path() / "r.csv", err), kExitPipeline);
  EXPECT_NE(err.str().find("evaluation at pole"), std::string::npos) << err.str();
  EXPECT_NE(err.str().find("grid index 0"), std::string::npos) << err.str();

  const fs::path unstable = dir.path() / "unstable.json";
  std::ofstream(unstable) << R"({"zeros": [], "poles": [[1.5, 0]], "gain": 1, "stabilized": true})";
  err.str("");
  EXPECT_EQ(CmdRespond(unstable, 64, dir.path() / "r.csv", err), kExitConfig);
  EXPECT_NE(err.str().find("invariant"), std::string::npos) << err.str();

  const fs::path ok = dir.path() / "ok.json";
  std::ofstream(ok) << R"({"zeros": [], "poles": [], "gain": 1, "stabilized": true})";
  EXPECT_EQ(CmdRespond(ok, 15, dir.path() / "r.csv", err), kExitConfig);
  EXPECT_EQ(CmdRespond(dir.path() / "nothing.json", 64, dir.path() / "r.csv", err), kExitConfig);
}

TEST(BinaryTest, SmokeRun) {
  TempDir dir;
  const fs::path out = dir.path() / "out";
  const fs::path config = WriteConfig(dir, ExampleConfig(out, R"(, "num_terms_n": 10, "num_terms_m": 10)"));
  const std::string bin = ORTHOIIR_CLI_PATH;
  EXPECT_EQ(WEXITSTATUS(std::system((bin + " design " + config.string() + " --quiet").c_str())), 0);
  EXPECT_TRUE(fs::exists(out / "model.json"));
  EXPECT_EQ(WEXITSTATUS(std::system((bin + " respond " + (out / "model.json").string() + " --points 128 --out " +
                                     (dir.path() / "r.csv").string()).c_str())), 0);
  EXPECT_TRUE(fs::exists(dir.path() / "r.csv"));
  EXPECT_EQ(WEXITSTATUS(std::system((bin + " frobnicate 2>/dev/null").c_str())), kExitConfig);
}

}  // namespace
}  // namespace orthoiir::cli
