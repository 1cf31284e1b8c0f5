// SPDX-License-Identifier: Apache-2.0
// Acceptance suite: one PASS/FAIL line per criterion.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hct/bootstrap.hpp"
#include "hct/config.hpp"
#include "hct/experiments.hpp"
#include "hct/hc.hpp"
#include "hct/normal.hpp"
#include "hct/phase.hpp"
#include "hct/stats_core.hpp"
#include "hct/tail_approx.hpp"

using namespace hct;
namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kSeed = 20100101;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::size_t worker_threads() {
  if (const char* env = std::getenv("HCT_THREADS")) return std::strtoul(env, nullptr, 10);
  return 0;
}

// 50 x 9 grid with beta in (1/2, 1] and theta in (0, 1).
template <class Fn>
void phase_grid(Fn&& fn) {
  for (int i = 1; i <= 50; ++i) {
    for (int k = 1; k <= 9; ++k) fn(0.5 + 0.5 * i / 50.0, k / 10.0);
  }
}

Outcome ac1_phase_algebra() {
  double worst_zero = 0.0;
  double worst_jump = 0.0;
  phase_grid([&](double beta, double theta) {
    worst_zero = std::max(worst_zero, std::abs(delta_formula(beta, rho_theta(beta, theta), theta)));
  });
  for (int k = 1; k <= 9; ++k) {
    const double theta = k / 10.0;
    for (const double b : {0.5 + (1.0 - theta) / 4.0, 0.75}) {
      worst_jump = std::max(worst_jump, std::abs(rho_theta(b, theta) -
                                                 rho_theta(std::nextafter(b, 2.0), theta)));
    }
    for (int i = 1; i <= 50; ++i) {
      const double beta = 0.5 + 0.5 * i / 50.0;
      for (const double r : {(1.0 - theta) / 4.0, 0.25}) {
        worst_jump = std::max(worst_jump, std::abs(delta_formula(beta, r, theta) -
                                                   delta_formula(beta, std::nextafter(r, 0.0), theta)));
      }
    }
  }
  return {worst_zero <= 1e-12 && worst_jump <= 1e-12,
          "max |delta(rho)| = " + num(worst_zero) + ", max boundary jump = " + num(worst_jump)};
}

Outcome ac2_theta_limit() {
  double worst = 0.0;
  for (int i = 0; i <= 50; ++i) {
    const double beta = 0.5 + 0.5 * i / 50.0;
    worst = std::max(worst, std::abs(rho_theta(beta, 1e-3) - std::pow(1.0 - std::sqrt(1.0 - beta), 2)));
  }
  return {worst <= 1e-3, "max deviation at theta = 1e-3: " + num(worst)};
}

Outcome ac3_round_trip() {
  double worst = 0.0;
  for (double e = -12.0; e <= std::log10(0.5) + 1e-12; e += 0.05) {
    const double a = std::pow(10.0, e);
    worst = std::max(worst, std::abs(std_normal_sf(std_normal_quantile(a)) - a) / a);
  }
  const double half = std::abs(std_normal_sf(std_normal_quantile(0.5)) - 0.5) / 0.5;
  worst = std::max(worst, half);
  return {worst <= 1e-9, "max relative error " + num(worst)};
}

Outcome ac4_enumeration() {
  // All 27 resamples of the centred sample {-1, 0, 1}, constant ones dropped.
  std::vector<double> atoms;
  const double c[3] = {-1.0, 0.0, 1.0};
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      for (int d = 0; d < 3; ++d) {
        if (a == b && b == d) continue;
        atoms.push_back(t_statistic(std::vector<double>{c[a], c[b], c[d]}));
      }
    }
  }
  std::sort(atoms.begin(), atoms.end());
  std::vector<std::pair<double, double>> exact;
  for (const double t : atoms) {
    if (exact.empty() || std::abs(exact.back().first - t) > 1e-9) exact.push_back({t, 0.0});
    exact.back().second += 1.0 / static_cast<double>(atoms.size());
  }
  Generator g = derive_stream({kSeed, {4}});
  const BootstrapDraws d = bootstrap_t_draws(std::vector<double>{0, 1, 2}, 1'000'000, g);
  const double m = static_cast<double>(d.effective());
  double worst = 0.0;
  for (const auto& [t, q] : exact) {
    const auto lo = std::lower_bound(d.sorted_t.begin(), d.sorted_t.end(), t - 1e-9);
    const auto hi = std::upper_bound(d.sorted_t.begin(), d.sorted_t.end(), t + 1e-9);
    const double z = std::abs(static_cast<double>(hi - lo) / m - q) / std::sqrt(q * (1 - q) / m);
    worst = std::max(worst, z);
  }
  return {worst <= 4.0 && exact.size() == 7,
          std::to_string(exact.size()) + " atoms, worst deviation " + num(worst) + " sigma"};
}

Outcome ac5_skewness_signs() {
  const DistSpec chi{ChiSquared{10}, true};
  const std::size_t n = 400;
  const double x = 2.0;
  const std::size_t m = 1'000'000;
  const Generator root = derive_stream({kSeed, {5}});
  const McEstimate t0 = estimate_exceedance({StatKind::T0}, chi, n, x, m, root.child(1), worker_threads());
  const McEstimate z0 = estimate_exceedance({StatKind::Z0}, chi, n, x, m, root.child(2), worker_threads());
  const double q = std_normal_sf(x);
  const double gamma = standardized_skewness(chi);
  const double at = studentized_tail_approx({x, n, gamma, 0.0}).value;
  const double az = standardized_tail_approx({x, n, gamma, 0.0}).value;
  const bool signs = q - t0.estimate > 3 * t0.se && z0.estimate - q > 3 * z0.se;
  const bool close_t = std::abs(t0.estimate - at) <= std::max(3 * t0.se, 0.25 * std::abs(at - q));
  const bool close_z = std::abs(z0.estimate - az) <= std::max(3 * z0.se, 0.25 * std::abs(az - q));
  return {signs && close_t && close_z,
          "P(T0>2) = " + num(t0.estimate) + " (approx " + num(at) + "), 1-Phi(2) = " + num(q) +
              ", P(Z0>2) = " + num(z0.estimate) + " (approx " + num(az) + "), SE " + num(t0.se) +
              "/" + num(z0.se)};
}

Outcome ac6_calibration() {
  const DistSpec f55{FisherF{5, 5}, true};
  const std::vector<double> alphas{0.05};
  const CalibrationResult r = calibration_study(f55, 50, alphas, 2000, 20'000, true,
                                                derive_stream({kSeed, {6}}), worker_threads());
  const CalibrationRow& row = r.rows.at(0);
  const double eb = std::abs(row.boot.estimate - 0.05);
  const double en = std::abs(row.normal.estimate - 0.05);
  const double se = std::hypot(row.boot.se, row.normal.se);
  const double rel = eb / 0.05;
  const bool pass = eb < en && en - eb > 3 * se && rel <= 0.20;
  return {pass, "p_boot = " + num(row.boot.estimate) + ", p_norm = " + num(row.normal.estimate) +
                    ", error gap " + num(en - eb) + " vs 3 SE " + num(3 * se) +
                    ", bootstrap relative error " + num(100 * rel) + "%"};
}

struct HcRuns {
  std::vector<double> h0_boot, h0_norm, h0_oracle, h1_boot;
  std::size_t p = 0;
  double r = 0.0;
  std::size_t k = 0;
};

const HcRuns& hc_runs() {
  static const HcRuns runs = [] {
    ExperimentConfig cfg = default_config(Experiment::HcHist);
    cfg.seed = kSeed;
    const Generator root = derive_stream({kSeed, {7}});
    const HcStudySetup setup = make_hc_setup(cfg, root.child(0), worker_threads());
    HcRuns out;
    out.p = setup.p;
    SignalConfig null_signal;
    const auto h0 = hc_study(setup, Hypothesis::H0, null_signal, 200, root.child(1), worker_threads());
    out.r = std::min(1.0, 1.5 * rho_theta(0.75, setup.theta));
    const SignalConfig sc = make_signal_config_with_p(setup.n, setup.p, setup.theta, 0.75, out.r);
    out.k = sc.k;
    const auto h1 = hc_study(setup, Hypothesis::H1, sc, 200, root.child(2), worker_threads());
    for (const auto& rep : h0) {
      out.h0_boot.push_back(rep.bootstrap.value);
      out.h0_norm.push_back(rep.normal.value);
      out.h0_oracle.push_back(rep.oracle.value);
    }
    for (const auto& rep : h1) out.h1_boot.push_back(rep.bootstrap.value);
    return out;
  }();
  return runs;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

Outcome ac7_null_bound() {
  const HcRuns& h = hc_runs();
  std::vector<double> ratio;
  for (const double v : h.h0_boot) ratio.push_back(v / std::log(static_cast<double>(h.p)));
  std::sort(ratio.begin(), ratio.end());
  return {ratio.back() <= 10.0, "hc_n/log p over 200 H0 reps: min " + num(ratio.front()) +
                                    ", median " + num(median(ratio)) + ", max " + num(ratio.back())};
}

Outcome ac8_separation() {
  const HcRuns& h = hc_runs();
  std::vector<double> h0 = h.h0_boot;
  std::sort(h0.begin(), h0.end());
  const double q95 = upper_quantile(h0, 0.05);
  const double med1 = median(h.h1_boot);
  const double ks_boot = ks_distance(h.h0_boot, h.h0_oracle);
  const double ks_norm = ks_distance(h.h0_norm, h.h0_oracle);
  return {med1 > q95 && ks_boot < ks_norm,
          "r = " + num(h.r) + ", k = " + std::to_string(h.k) + ": median H1 " + num(med1) +
              " vs H0 95th percentile " + num(q95) + "; KS(hc_n, hc) " + num(ks_boot) +
              " vs KS(hc_norm, hc) " + num(ks_norm)};
}

Outcome ac9_dependence() {
  const MaStreamSpec base{0.5, 10, DistSpec{ParetoShapeScale{5.0, 5.0}, true}};
  const std::vector<double> x = linear_grid(0.0, 6.0, 0.05);
  const Generator root = derive_stream({kSeed, {9}});
  MaStreamSpec strong = base;
  MaStreamSpec weak = base;
  weak.theta = 0.2;
  const DepCdfCurves a = dep_cdf_study(strong, 50, 100, 5000, 1'000'000, x, root.child(0), worker_threads());
  const DepCdfCurves b = dep_cdf_study(weak, 50, 100, 5000, 1'000'000, x, root.child(1), worker_threads());
  const double se = std::hypot(a.sup_gap_se, b.sup_gap_se);
  return {a.sup_gap - b.sup_gap > 3 * se,
          "sup gap theta=0.5: " + num(a.sup_gap) + " (x=" + num(a.sup_gap_x) + "), theta=0.2: " +
              num(b.sup_gap) + " (x=" + num(b.sup_gap_x) + "), 3 SE " + num(3 * se)};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome ac10_determinism() {
  const fs::path work = fs::temp_directory_path() / "hct_acceptance_determinism";
  fs::remove_all(work);
  fs::create_directories(work);
  using nlohmann::json;
  const std::vector<std::pair<std::string, json>> configs{
      {"tail-compare", {{"experiment", "tail-compare"}, {"replicates", 2000}, {"sizes", {20}}}},
      {"boot-quantiles",
       {{"experiment", "boot-quantiles"}, {"sizes", {20}}, {"replicates", 4},
        {"oracle_draws", 5000}, {"alphas", {0.05, 0.1}}}},
      {"hc-hist",
       {{"experiment", "hc-hist"}, {"sizes", {12}}, {"p", 60}, {"replicates", 3},
        {"oracle_draws", 5000}, {"grid", {{"i_min", 2}}}, {"betas", {0.75}}}},
      {"dep-cdf",
       {{"experiment", "dep-cdf"}, {"replicates", 200}, {"marginal_columns", 2000},
        {"dep_settings", {{{"p", 20}, {"theta", 0.5}}}}}},
      {"phase-plot", {{"experiment", "phase-plot"}}},
      {"calibrate", {{"experiment", "calibrate"}, {"replicates", 200}, {"B", 500}}},
  };
  std::size_t files = 0;
  std::vector<std::string> mismatched;
  for (const auto& [name, cfg] : configs) {
    json j = cfg;
    j["schema"] = kConfigSchema;
    j["output_dir"] = (work / name).string();
    const fs::path cfg_path = work / (name + ".json");
    std::ofstream(cfg_path) << j.dump(2);
    std::vector<std::string> outputs;
    for (const int threads : {1, 8}) {
      const std::string cmd = std::string(HCT_CLI_PATH) + " " + name + " --config " +
                              cfg_path.string() + " --seed 7 --threads " + std::to_string(threads) +
                              " > /dev/null 2>&1";
      if (std::system(cmd.c_str()) != 0) return {false, name + " exited with an error"};
      std::string all;
      std::vector<fs::path> paths;
      for (const auto& e : fs::directory_iterator(work / name)) paths.push_back(e.path());
      std::sort(paths.begin(), paths.end());
      for (const auto& p : paths) all += p.filename().string() + '\n' + slurp(p);
      outputs.push_back(all);
      if (threads == 1) files += paths.size();
      fs::remove_all(work / name);
    }
    if (outputs[0] != outputs[1] || outputs[0].empty()) mismatched.push_back(name);
  }
  std::string detail = std::to_string(files) + " CSV files from 6 subcommands compared at 1 and 8 threads";
  if (!mismatched.empty()) {
    detail += "; differing:";
    for (const auto& m : mismatched) detail += " " + m;
  }
  return {mismatched.empty() && files >= 6, detail};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"phase algebra", ac1_phase_algebra},
      {"theta -> 0 reduction", ac2_theta_limit},
      {"normal quantile round trip", ac3_round_trip},
      {"bootstrap enumeration oracle", ac4_enumeration},
      {"skewness signs", ac5_skewness_signs},
      {"bootstrap calibration", ac6_calibration},
      {"HC null bound", ac7_null_bound},
      {"HC separation", ac8_separation},
      {"dependence study", ac9_dependence},
      {"determinism across thread counts", ac10_determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << " AC" << i + 1 << " " << criteria[i].first << ": "
              << o.detail << " [" << num(secs) << " s]" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
