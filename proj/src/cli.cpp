#include "orthoiir/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <set>
#include <sstream>

#include "orthoiir/error.hpp"
#include "orthoiir/response.hpp"
#include "orthoiir/serialization.hpp"

namespace orthoiir::cli {
namespace {

using nlohmann::json;

double Number(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number()) {
    throw ConfigError(std::string("config: '") + key + "' must be a number");
  }
  return j[key].get<double>();
}

int Integer(const json& j, const char* key) {
  if (!j[key].is_number_integer()) {
    throw ConfigError(std::string("config: '") + key + "' must be an integer");
  }
  return j[key].get<int>();
}

FilterSpec ParseLpSpec(const json& j) {
  if (!j.is_object()) throw ConfigError("config: 'lp_spec' must be an object");
  if (j.contains("bands")) {
    try {
      return FilterSpecFromJson(j);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("config: ") + e.what());
    }
  }
  FilterSpec spec;
  if (j.contains("x0")) spec.x0 = Number(j, "x0");
  spec.bands = {{0.0, Number(j, "passband_edge"), Number(j, "passband_level")},
                {Number(j, "stopband_edge"), std::numbers::pi, Number(j, "stopband_level")}};
  return spec;
}

void WriteFile(const std::filesystem::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw PipelineError(Stage::kIo, "cannot open " + path.string() + " for writing");
  f << content;
  f.close();
  if (!f) throw PipelineError(Stage::kIo, "failed writing " + path.string());
}

std::string CsvOf(const ResponseCurve& curve) {
  std::ostringstream s;
  WriteResponseCsv(s, curve);
  return s.str();
}

ResponseCurve StagedSweep(const PoleZeroModel& model, int n_points) {
  try {
    return Sweep(model, n_points);
  } catch (const std::exception& e) {
    throw PipelineError(Stage::kResponse, e.what());
  }
}

// Compares the design's integrated squared error against the default order.
void NoteOrderComparison(DesignReport& report, const DesignConfig& cfg) {
  const auto compare = [&](const char* name, const FilterSpec& spec, int terms, double ise) {
    if (terms >= kDefaultNumTerms) return;
    const FirPrototype ref = SynthesizeFir(BuildObjectFunction(spec), kDefaultNumTerms);
    std::ostringstream s;
    s << name << ": " << terms << " terms gives integrated squared error " << ise
      << ", larger than " << ref.integrated_squared_error << " at the default "
      << kDefaultNumTerms << " terms";
    report.notes.push_back(s.str());
  };
  compare("numerator", report.spec_lp, cfg.num_terms_n, report.numerator.integrated_squared_error);
  compare("denominator", report.spec_hp, cfg.num_terms_m,
          report.denominator.integrated_squared_error);
}

}  // namespace

DesignConfig ParseDesignConfig(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config: top level must be an object");
  static const std::set<std::string> kKnown = {
      "lp_spec", "hp_levels", "num_terms_n", "num_terms_m", "kind",
      "grid_points", "reference_omega", "output_dir"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!kKnown.count(it.key())) throw ConfigError("config: unknown field '" + it.key() + "'");
  }

  DesignConfig cfg;
  if (!j.contains("lp_spec")) throw ConfigError("config: missing 'lp_spec'");
  cfg.lp_spec = ParseLpSpec(j["lp_spec"]);
  if (j.contains("hp_levels")) {
    const json& h = j["hp_levels"];
    if (h.is_array() && h.size() == 2 && h[0].is_number() && h[1].is_number()) {
      cfg.hp_lo_level = h[0].get<double>();
      cfg.hp_hi_level = h[1].get<double>();
    } else if (h.is_object()) {
      cfg.hp_lo_level = Number(h, "lo_level");
      cfg.hp_hi_level = Number(h, "hi_level");
    } else {
      throw ConfigError("config: 'hp_levels' must be [lo, hi] or {lo_level, hi_level}");
    }
  }
  if (j.contains("num_terms_n")) cfg.num_terms_n = Integer(j, "num_terms_n");
  if (j.contains("num_terms_m")) cfg.num_terms_m = Integer(j, "num_terms_m");
  if (j.contains("grid_points")) cfg.grid_points = Integer(j, "grid_points");
  if (j.contains("reference_omega")) cfg.reference_omega = Number(j, "reference_omega");
  if (j.contains("kind")) {
    const json& k = j["kind"];
    if (k == "low_pass") {
      cfg.kind = FilterKind::kLowPass;
    } else if (k == "high_pass") {
      cfg.kind = FilterKind::kHighPass;
    } else {
      throw ConfigError("config: 'kind' must be \"low_pass\" or \"high_pass\"");
    }
  }
  if (j.contains("output_dir")) {
    if (!j["output_dir"].is_string()) throw ConfigError("config: 'output_dir' must be a string");
    cfg.output_dir = j["output_dir"].get<std::string>();
  }

  if (cfg.num_terms_n < 1 || cfg.num_terms_m < 1) throw ConfigError("config: num_terms must be >= 1");
  // Projection rule size is capped at kMaxQuadratureOrder = 4 * num_terms + 32.
  if (cfg.num_terms_n > 120 || cfg.num_terms_m > 120) {
    throw ConfigError("config: num_terms must be <= 120");
  }
  if (cfg.grid_points < 16) throw ConfigError("config: grid_points must be >= 16");
  if (!(cfg.reference_omega >= 0.0 && cfg.reference_omega <= std::numbers::pi)) {
    throw ConfigError("config: reference_omega must lie in [0, pi]");
  }
  return cfg;
}

DesignConfig LoadDesignConfig(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ConfigError("config: cannot read " + path.string());
  std::stringstream buf;
  buf << f.rdbuf();
  DesignConfig cfg = ParseDesignConfig(buf.str());
  if (const char* env = std::getenv("ORTHOIIR_OUTPUT_DIR"); env != nullptr && *env != '\0') {
    cfg.output_dir = env;
  }
  return cfg;
}

int CmdDesign(const std::filesystem::path& config_path, bool check_only, bool quiet,
              std::ostream& out, std::ostream& err) {
  DesignConfig cfg;
  try {
    cfg = LoadDesignConfig(config_path);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    const FilterSpec hp = [&] {
      try {
        ValidateFilterSpec(cfg.lp_spec);
        return HpLpComplement(cfg.lp_spec, cfg.hp_lo_level, cfg.hp_hi_level);
      } catch (const std::exception& e) {
        throw PipelineError(Stage::kSpec, e.what());
      }
    }();
    if (check_only) {
      if (!quiet) out << "config ok: " << config_path.string() << "\n";
      return kExitOk;
    }

    if (!quiet) out << "designing " << FilterKindName(cfg.kind) << " filter, N=" << cfg.num_terms_n
                    << " M=" << cfg.num_terms_m << "\n";
    DesignReport report =
        Design(cfg.lp_spec, hp, cfg.num_terms_n, cfg.num_terms_m, cfg.kind, cfg.reference_omega);
    NoteOrderComparison(report, cfg);
    if (!quiet) {
      out << "stabilized: shifted " << report.model_stable.shifted_pole_count << " of "
          << report.model_stable.poles.size() << " poles to the origin\n";
    }

    const ResponseCurve stable = StagedSweep(report.model_stable, cfg.grid_points);
    const ResponseCurve raw = StagedSweep(report.model_raw, cfg.grid_points);

    std::error_code ec;
    std::filesystem::create_directories(cfg.output_dir, ec);
    if (ec) {
      throw PipelineError(Stage::kIo, "cannot create output directory " +
                                          cfg.output_dir.string() + ": " + ec.message());
    }
    const auto& dir = cfg.output_dir;
    WriteFile(dir / "report.json", DumpCanonical(ReportToJson(report)));
    WriteFile(dir / "model.json", DumpCanonical(ModelToJson(report.model_stable)));
    WriteFile(dir / "ba_coeffs.json",
              DumpCanonical(TransferToJson(ToTransferCoefficients(report.model_stable))));
    WriteFile(dir / "response.csv", CsvOf(stable));
    WriteFile(dir / "response_raw.csv", CsvOf(raw));
    std::ostringstream num_csv;
    std::ostringstream den_csv;
    WriteObjectFunctionCsv(num_csv, report.numerator, cfg.grid_points);
    WriteObjectFunctionCsv(den_csv, report.denominator, cfg.grid_points);
    WriteFile(dir / "objfn_num.csv", num_csv.str());
    WriteFile(dir / "objfn_den.csv", den_csv.str());
    if (!quiet) out << "wrote outputs to " << dir.string() << "\n";
    return kExitOk;
  } catch (const PipelineError& e) {
    err << "error: " << e.what() << "\n";
    return e.stage() == Stage::kIo ? kExitIo : kExitPipeline;
  } catch (const std::exception& e) {
    err << "error: [internal] " << e.what() << "\n";
    return kExitPipeline;
  }
}

int CmdRespond(const std::filesystem::path& model_path, int n_points,
               const std::filesystem::path& out_path, std::ostream& err) {
  PoleZeroModel model;
  try {
    std::ifstream f(model_path, std::ios::binary);
    if (!f) throw ConfigError("cannot read " + model_path.string());
    std::stringstream buf;
    buf << f.rdbuf();
    json j;
    try {
      j = json::parse(buf.str());
    } catch (const json::parse_error& e) {
      throw ConfigError(std::string("invalid JSON: ") + e.what());
    }
    try {
      model = ModelFromJson(j);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("invariant violation on load: ") + e.what());
    }
    if (n_points < 16) throw ConfigError("--points must be >= 16");
  } catch (const ConfigError& e) {
    err << "error: model: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    const ResponseCurve curve = StagedSweep(model, n_points);
    if (out_path.has_parent_path()) {
      std::error_code ec;
      std::filesystem::create_directories(out_path.parent_path(), ec);
    }
    WriteFile(out_path, CsvOf(curve));
    return kExitOk;
  } catch (const PipelineError& e) {
    err << "error: " << e.what() << "\n";
    return e.stage() == Stage::kIo ? kExitIo : kExitPipeline;
  }
}

}  // namespace orthoiir::cli
