#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "weylkit/scenario.hpp"

namespace {

struct CommonOpts {
  std::string format = "json";
  std::string out_path;
  std::uint64_t seed = weylkit::scenario::kDefaultSeed;
  bool timing = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--format", opts.format, "Output format: json, dot, or text")
      ->check(CLI::IsMember({"json", "dot", "text"}))
      ->capture_default_str();
  cmd->add_option("--out", opts.out_path,
                  "Write the report to this file instead of stdout");
  cmd->add_option("--seed", opts.seed, "Seed used by random map specs")
      ->capture_default_str();
  cmd->add_flag("--timing", opts.timing,
                "Record wall-clock milliseconds in the report");
}

// 0: all verdicts pass; 2: some verdict failed; 3: bad input or unwritable out.
int emit(const weylkit::scenario::Report& report, const CommonOpts& opts) {
  std::string body = report.render(opts.format);
  if (opts.out_path.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(opts.out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot open " << opts.out_path << " for writing\n";
      return 3;
    }
    out << body;
  }
  return report.all_pass() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Finite Weyl-group scenarios: flag buildings, closed sublattice "
      "correspondences, and embedding obstructions"};
  app.require_subcommand(1);
  CommonOpts opts;

  int fb_n = 0, fb_q = 0;
  auto* fb = app.add_subcommand(
      "flag-building", "Closed lattice of the flag building over F_q^n");
  fb->add_option("--n", fb_n, "Ambient dimension")->required();
  fb->add_option("--q", fb_q, "Field size (prime)")->required();
  add_common(fb, opts);

  int pr_m1 = 0, pr_m2 = 0;
  auto* pr = app.add_subcommand(
      "product", "Two-factor product model with coordinate-swap action");
  pr->add_option("--m1", pr_m1, "Size of the first factor")->required();
  pr->add_option("--m2", pr_m2, "Size of the second factor")->required();
  add_common(pr, opts);

  std::string ob_source, ob_target;
  auto* ob = app.add_subcommand(
      "obstruct", "Enumerate flip-pinned homomorphisms between Weyl groups");
  ob->add_option("--source", ob_source, "Source group, S<n> or Z2^<r>")
      ->required();
  ob->add_option("--target", ob_target, "Target group, S<n> or Z2^<r>")
      ->required();
  add_common(ob, opts);

  int em_n = 0, em_q = 0;
  std::string em_map = "identity";
  auto* em = app.add_subcommand(
      "embed-check",
      "Check a chamber self-map: opposition, equivariance, face descent");
  em->add_option("--n", em_n, "Ambient dimension")->required();
  em->add_option("--q", em_q, "Field size (prime)")->required();
  em->add_option("--map", em_map,
                 "identity | matrix:<n*n entries> | random[:<seed>]")
      ->capture_default_str();
  add_common(em, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }

  try {
    weylkit::scenario::Report report;
    if (*fb) {
      report = weylkit::scenario::run_flag_building(fb_n, fb_q, opts.timing);
    } else if (*pr) {
      report = weylkit::scenario::run_product(pr_m1, pr_m2, opts.timing);
    } else if (*ob) {
      report = weylkit::scenario::run_obstruction(ob_source, ob_target,
                                                  opts.timing);
    } else {
      report = weylkit::scenario::run_embed_check(em_n, em_q, em_map,
                                                  opts.seed, opts.timing);
    }
    return emit(report, opts);
  } catch (const weylkit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
