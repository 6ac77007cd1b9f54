#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "rb/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Rota-Baxter algebra and bialgebra verifier"};
  app.require_subcommand(1);

  std::string file, object, check, construction, space, weight;
  std::optional<std::string> out_path, budget, target;

  auto* check_cmd = app.add_subcommand("check", "run a named check on a named object");
  check_cmd->add_option("file", file, "structure file")->required();
  check_cmd->add_option("--object", object, "object name")->required();
  check_cmd->add_option("--check", check, "check name")->required();

  auto* derive_cmd = app.add_subcommand("derive", "apply a construction and certify the result");
  derive_cmd->add_option("construction", construction, "construction name")->required();
  derive_cmd->add_option("file", file, "structure file")->required();
  derive_cmd->add_option("--out", out_path, "output path");
  derive_cmd->add_option("--object", target, "input bundle");

  auto* search_cmd = app.add_subcommand("search", "enumerate a space over a prime field");
  search_cmd->add_option("space", space, "rb-operators or antisym-aybe")->required();
  search_cmd->add_option("file", file, "structure file")->required();
  search_cmd->add_option("--weight", weight, "weight")->required();
  search_cmd->add_option("--budget", budget, "candidate budget");
  search_cmd->add_option("--object", target, "base algebra");
  search_cmd->add_option("--out", out_path, "output path");

  auto* report_cmd = app.add_subcommand("report", "summarize a file and re-verify its certificates");
  report_cmd->add_option("file", file, "structure file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : rb::cli::kError;
  }

  if (*check_cmd) return rb::cli::cmd_check(file, object, check, std::cout, std::cerr);
  if (*derive_cmd) return rb::cli::cmd_derive(construction, file, out_path, target, std::cout, std::cerr);
  if (*search_cmd)
    return rb::cli::cmd_search(space, file, weight, budget, target, out_path, std::cout, std::cerr);
  return rb::cli::cmd_report(file, std::cout, std::cerr);
}
