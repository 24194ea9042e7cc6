#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "orthoiir/filter_spec.hpp"
#include "orthoiir/iir.hpp"

namespace orthoiir::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitPipeline = 3;
inline constexpr int kExitIo = 4;

inline constexpr int kDefaultNumTerms = 20;

struct DesignConfig {
  FilterSpec lp_spec;
  double hp_lo_level = 1.0;
  double hp_hi_level = 2.0;
  int num_terms_n = kDefaultNumTerms;
  int num_terms_m = kDefaultNumTerms;
  FilterKind kind = FilterKind::kLowPass;
  int grid_points = 2048;
  double reference_omega = 0.0;
  std::filesystem::path output_dir = ".";
};

/// Malformed or out-of-range configuration (exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses JSON config text. `lp_spec` is either a FilterSpec object or the
/// band-edge shorthand {passband_edge, stopband_edge, passband_level,
/// stopband_level}. Band invariants are checked later, by the pipeline.
DesignConfig ParseDesignConfig(const std::string& text);

/// Reads the config file, applying ORTHOIIR_OUTPUT_DIR when set.
DesignConfig LoadDesignConfig(const std::filesystem::path& path);

/// `design <config.json> [--check] [--quiet]`.
int CmdDesign(const std::filesystem::path& config_path, bool check_only, bool quiet,
              std::ostream& out, std::ostream& err);

/// `respond <model.json> --points N --out <csv>`.
int CmdRespond(const std::filesystem::path& model_path, int n_points,
               const std::filesystem::path& out_path, std::ostream& err);

}  // namespace orthoiir::cli
