// hermlab: classify model manifolds and verify the two Schur-type theorems
// on them, with seeded, reproducible reports.

#include <CLI11.hpp>

#include <exception>
#include <iostream>
#include <numbers>
#include <string>

#include "hermlab/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"numerical laboratory for almost-Hermitian curvature"};
  app.require_subcommand(1);

  hermlab::RunConfig cfg;
  cfg.tols = hermlab::tolerances_from_env();
  std::string config_path;

  auto add_model_flags = [&](CLI::App* sub) {
    sub->add_option("--model", cfg.model, "catalog model name");
    sub->add_option("--config", config_path,
                    "JSON file with {\"model\": ..., \"params\": {...}}");
    sub->add_option_function<double>(
        "--m", [&](double v) { cfg.params["m"] = v; }, "complex dimension m");
    sub->add_option_function<double>(
        "--c", [&](double v) { cfg.params["c"] = v; },
        "holomorphic sectional curvature");
    sub->add_option_function<double>(
        "--c1", [&](double v) { cfg.params["c1"] = v; }, "first factor curvature");
    sub->add_option_function<double>(
        "--c2", [&](double v) { cfg.params["c2"] = v; }, "second factor curvature");
    sub->add_option_function<double>(
        "--eps", [&](double v) { cfg.params["eps"] = v; }, "perturbation size");
    sub->add_option("--seed", cfg.plan.seed, "sampling seed (default 0)");
    sub->add_option("--points", cfg.plan.grid_points,
                    "low-discrepancy grid points (default 16)");
    sub->add_option("--random-points", cfg.plan.random_points,
                    "extra seeded random points (default 8)");
    sub->add_option("--planes", cfg.plan.plane_samples,
                    "plane samples per constancy check (default 64)");
    sub->add_option("--tol", cfg.tol, "verdict tolerance (default 1e-4)");
    sub->add_option("--out", cfg.out_path, "output path (default stdout)");
    sub->add_option("--format", cfg.format, "json | text (default json)")
        ->check(CLI::IsMember({"json", "text"}));
  };

  CLI::App* list = app.add_subcommand("list", "list the model catalog");
  list->add_option("--out", cfg.out_path, "output path (default stdout)");
  list->add_option("--format", cfg.format, "json | text (default json)")
      ->check(CLI::IsMember({"json", "text"}));

  CLI::App* classify =
      app.add_subcommand("classify", "Kaehler/RK/constancy classification");
  add_model_flags(classify);

  CLI::App* verify = app.add_subcommand("verify", "run a theorem verifier");
  add_model_flags(verify);
  verify->add_option("--theorem", cfg.theorem, "1 or 2")->required();
  verify->add_option("--theta", cfg.theta,
                     "Kaehler angle for theorem 1 (default pi/4)");

  CLI::App* scan =
      app.add_subcommand("scan", "tabulate c(p), mu(p), nu(p) over the chart");
  add_model_flags(scan);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  try {
    if (!config_path.empty()) hermlab::load_model_config(config_path, cfg);
    if (cfg.command != "list" && cfg.model.empty())
      throw std::invalid_argument("--model (or --config) is required");
    return hermlab::run(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
