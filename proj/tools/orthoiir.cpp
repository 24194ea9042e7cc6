#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "orthoiir/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"orthoiir: linear-phase IIR design from Legendre object-function approximations"};
  app.require_subcommand(1);

  std::string config_path;
  bool check = false;
  bool quiet = false;
  auto* design = app.add_subcommand("design", "Run the design pipeline and write all outputs");
  design->add_option("config", config_path, "Design configuration (JSON)")->required();
  design->add_flag("--check", check, "Validate the configuration without running");
  design->add_flag("--quiet", quiet, "Suppress progress lines");

  std::string model_path;
  std::string out_path;
  int points = 2048;
  auto* respond = app.add_subcommand("respond", "Sweep a saved pole-zero model");
  respond->add_option("model", model_path, "model.json from a design run")->required();
  respond->add_option("--points", points, "Number of grid points on [0, pi]")->required();
  respond->add_option("--out", out_path, "Output CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : orthoiir::cli::kExitConfig;
  }

  if (*design) return orthoiir::cli::CmdDesign(config_path, check, quiet, std::cout, std::cerr);
  return orthoiir::cli::CmdRespond(model_path, points, out_path, std::cerr);
}
