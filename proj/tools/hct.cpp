// SPDX-License-Identifier: Apache-2.0
// hct: experiment runner. Exit status 0 on success, 2 on a configuration
// error, 3 when strict validity is requested and flags were raised.
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "hct/config.hpp"
#include "hct/errors.hpp"
#include "hct/experiments.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitValidity = 3;

struct Options {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::size_t threads = 0;
  std::optional<std::string> out;
  bool paper_scale = false;
};

int run(hct::Experiment e, const Options& opt) {
  hct::ExperimentConfig cfg = opt.config.empty() ? hct::default_config(e, opt.paper_scale)
                                                 : hct::load_config(opt.config, e, opt.paper_scale);
  if (opt.seed) cfg.seed = *opt.seed;
  if (opt.out) cfg.output_dir = *opt.out;
  const hct::RunContext ctx{opt.threads, &std::cout};
  const hct::RunOutput out = hct::run_experiment(cfg, ctx);
  for (const auto& f : out.files) std::cerr << "wrote " << f.string() << '\n';
  if (out.validity_flags > 0) {
    std::cerr << "warning: " << out.validity_flags << " numerical-validity flags\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Higher criticism and bootstrap-t simulation harness"};
  app.require_subcommand(1);
  Options opt;
  std::optional<hct::Experiment> chosen;
  for (const auto e : {hct::Experiment::TailCompare, hct::Experiment::BootQuantiles,
                       hct::Experiment::HcHist, hct::Experiment::DepCdf,
                       hct::Experiment::PhasePlot, hct::Experiment::Calibrate}) {
    auto* sub = app.add_subcommand(std::string(hct::to_string(e)));
    sub->add_option("--config", opt.config, "experiment config JSON (defaults when omitted)")
        ->check(CLI::ExistingFile);
    sub->add_option("--seed", opt.seed, "master seed (overrides the config)");
    sub->add_option("--threads", opt.threads, "worker threads, 0 = all cores");
    sub->add_option("--out", opt.out, "output directory (overrides the config)");
    sub->add_flag("--paper-scale", opt.paper_scale, "start from the full-size design");
    sub->callback([&chosen, e] { chosen = e; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    return run(*chosen, opt);
  } catch (const hct::ValidityError& e) {
    std::cerr << "validity: " << e.what() << '\n';
    return kExitValidity;
  } catch (const hct::ConfigError& e) {
    std::cerr << "config: " << e.what() << '\n';
    return kExitConfig;
  } catch (const hct::InsufficientResamples& e) {
    std::cerr << "config: " << e.what() << '\n';
    return kExitConfig;
  } catch (const hct::EmptyGrid& e) {
    std::cerr << "config: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
