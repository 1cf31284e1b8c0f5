// SPDX-License-Identifier: Apache-2.0
#include "hct/config.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include "hct/errors.hpp"

namespace hct {

using nlohmann::json;

namespace {

constexpr std::pair<Experiment, std::string_view> kExperimentNames[] = {
    {Experiment::TailCompare, "tail-compare"}, {Experiment::BootQuantiles, "boot-quantiles"},
    {Experiment::HcHist, "hc-hist"},           {Experiment::DepCdf, "dep-cdf"},
    {Experiment::PhasePlot, "phase-plot"},     {Experiment::Calibrate, "calibrate"},
};

DistSpec standardized(DistKind kind) { return DistSpec{kind, true}; }

template <class T>
T get_as(const json& j, std::string_view key) {
  try {
    return j.get<T>();
  } catch (const json::exception& e) {
    throw ConfigError("config field '" + std::string(key) + "': " + e.what());
  }
}

std::vector<double> number_list(const json& j, std::string_view key) {
  return get_as<std::vector<double>>(j, key);
}

}  // namespace

std::string_view to_string(Experiment e) {
  for (const auto& [value, name] : kExperimentNames) {
    if (value == e) return name;
  }
  return "?";
}

Experiment experiment_from_string(std::string_view name) {
  for (const auto& [value, label] : kExperimentNames) {
    if (label == name) return value;
  }
  throw ConfigError("unknown experiment '" + std::string(name) + "'");
}

std::vector<double> linear_grid(double from, double to, double step) {
  if (!(step > 0.0) || to < from) throw DomainError("linear_grid: need step > 0 and to >= from");
  const auto count = static_cast<std::size_t>(std::floor((to - from) / step + 1e-9)) + 1;
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = from + static_cast<double>(i) * step;
  return out;
}

ExperimentConfig default_config(Experiment e, bool paper_scale) {
  ExperimentConfig cfg;
  cfg.experiment = e;
  const DistSpec f55 = standardized(FisherF{5, 5});
  switch (e) {
    case Experiment::TailCompare:
      cfg.sizes = {50, 100};
      cfg.dists = {standardized(NormalAbsPow{1}), standardized(NormalAbsPow{5})};
      cfg.replicates = paper_scale ? 1'000'000 : 200'000;
      cfg.x_grid = linear_grid(-2.0, 4.0, 0.1);
      cfg.alphas = {0.2, 0.1, 0.05, 0.02, 0.01, 0.005, 0.001};
      break;
    case Experiment::BootQuantiles:
      cfg.sizes = {50, 100, 250};
      cfg.dists = {f55};
      cfg.replicates = 200;
      cfg.alphas = {0.01, 0.02, 0.05, 0.1, 0.15, 0.2};
      cfg.oracle_draws = paper_scale ? 10'000'000 : 2'000'000;
      break;
    case Experiment::HcHist:
      cfg.sizes = {paper_scale ? std::size_t{100} : std::size_t{30}};
      cfg.theta = 0.5;
      cfg.dists = {f55};
      cfg.replicates = paper_scale ? 1000 : 200;
      cfg.betas = {0.5, 0.5 + (1.0 - cfg.theta) / 4.0, 0.75, 1.0};
      cfg.grid.i_min = paper_scale ? 1 : 10;
      cfg.oracle_draws = 10'000'000;
      break;
    case Experiment::DepCdf:
      cfg.sizes = {50};
      cfg.ma = MaStreamSpec{0.5, 10, standardized(ParetoShapeScale{5.0, 5.0})};
      cfg.dep_settings = {{100, 0.5}, {100, 0.2}, {10000, 0.2}};
      cfg.replicates = 5000;
      cfg.x_grid = linear_grid(0.0, 6.0, 0.05);
      cfg.marginal_columns = 1'000'000;
      break;
    case Experiment::PhasePlot:
      cfg.thetas = {0.25, 0.5, 0.75};
      cfg.betas = linear_grid(0.5, 1.0, 0.01);
      cfg.r_values = {0.05, 0.1, 0.15, 0.2, 0.3, 0.5, 0.8};
      cfg.replicates = 0;
      break;
    case Experiment::Calibrate:
      cfg.sizes = {50};
      cfg.dists = {f55};
      cfg.alphas = {0.05};
      cfg.replicates = 20'000;
      cfg.independent = true;
      break;
  }
  return cfg;
}

json dist_to_json(const DistSpec& d) {
  json j;
  std::visit(
      [&j](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, ParetoShapeScale>) {
          j = {{"kind", "Pareto"}, {"params", {k.shape, k.scale}}};
        } else if constexpr (std::is_same_v<K, FisherF>) {
          j = {{"kind", "FisherF"}, {"params", {k.d1, k.d2}}};
        } else if constexpr (std::is_same_v<K, ChiSquared>) {
          j = {{"kind", "ChiSquared"}, {"params", {k.k}}};
        } else if constexpr (std::is_same_v<K, NormalAbsPow>) {
          j = {{"kind", "NormalAbsPow"}, {"params", {k.m}}};
        } else {
          j = {{"kind", "StdNormal"}, {"params", json::array()}};
        }
      },
      d.kind);
  j["standardized"] = d.standardized;
  return j;
}

DistSpec dist_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind")) throw ConfigError("distribution needs a \"kind\"");
  const auto kind = get_as<std::string>(j.at("kind"), "kind");
  const std::vector<double> params =
      j.contains("params") ? number_list(j.at("params"), "params") : std::vector<double>{};
  auto need = [&](std::size_t count) {
    if (params.size() != count) {
      throw ConfigError("distribution " + kind + " takes " + std::to_string(count) + " params");
    }
  };
  auto integer = [&](double v) {
    if (v != std::floor(v) || v < 0 || v > 1e6) {
      throw ConfigError("distribution " + kind + ": parameter must be a non-negative integer");
    }
    return static_cast<int>(v);
  };
  DistSpec d;
  d.standardized = j.contains("standardized") ? get_as<bool>(j.at("standardized"), "standardized") : true;
  if (kind == "Pareto") {
    need(2);
    d.kind = ParetoShapeScale{params[0], params[1]};
  } else if (kind == "FisherF") {
    need(2);
    d.kind = FisherF{integer(params[0]), integer(params[1])};
  } else if (kind == "ChiSquared") {
    need(1);
    d.kind = ChiSquared{integer(params[0])};
  } else if (kind == "NormalAbsPow") {
    need(1);
    d.kind = NormalAbsPow{integer(params[0])};
  } else if (kind == "StdNormal") {
    need(0);
    d.kind = StdNormal{};
  } else {
    throw ConfigError("unknown distribution kind '" + kind + "'");
  }
  return d;
}

json to_json(const ExperimentConfig& cfg) {
  json j;
  j["schema"] = cfg.schema;
  j["experiment"] = std::string(to_string(cfg.experiment));
  j["seed"] = cfg.seed;
  j["sizes"] = cfg.sizes;
  j["theta"] = cfg.theta;
  j["p"] = cfg.p;
  j["B"] = cfg.B;
  j["replicates"] = cfg.replicates;
  j["dists"] = json::array();
  for (const auto& d : cfg.dists) j["dists"].push_back(dist_to_json(d));
  if (cfg.ma) {
    j["ma"] = {{"theta", cfg.ma->theta}, {"lag", cfg.ma->lag},
               {"innovation", dist_to_json(cfg.ma->innovation)}};
  } else {
    j["ma"] = nullptr;
  }
  j["dep_settings"] = json::array();
  for (const auto& s : cfg.dep_settings) j["dep_settings"].push_back({{"p", s.p}, {"theta", s.theta}});
  j["marginal_columns"] = cfg.marginal_columns;
  j["betas"] = cfg.betas;
  j["r_factor"] = cfg.r_factor;
  j["grid"] = {{"alpha0", cfg.grid.alpha0 ? json(*cfg.grid.alpha0) : json(nullptr)},
               {"i_min", cfg.grid.i_min}};
  j["x_grid"] = cfg.x_grid;
  j["alphas"] = cfg.alphas;
  j["thetas"] = cfg.thetas;
  j["r_values"] = cfg.r_values;
  j["oracle_draws"] = cfg.oracle_draws;
  j["tail_form"] = std::string(to_string(cfg.tail_form));
  j["independent"] = cfg.independent;
  j["strict_validity"] = cfg.strict_validity;
  j["output_dir"] = cfg.output_dir;
  return j;
}

ExperimentConfig config_from_json(const json& j, ExperimentConfig cfg) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  static const std::set<std::string> kKnown = {
      "schema",   "experiment", "seed",     "sizes",       "theta",        "p",
      "B",        "replicates", "dists",    "ma",          "dep_settings", "marginal_columns",
      "betas",    "r_factor",   "grid",     "x_grid",      "alphas",       "thetas",
      "r_values", "oracle_draws", "tail_form", "independent", "strict_validity", "output_dir"};
  for (const auto& [key, value] : j.items()) {
    if (!kKnown.contains(key)) throw ConfigError("unknown config field '" + key + "'");
  }
  if (j.contains("schema")) {
    const int schema = get_as<int>(j.at("schema"), "schema");
    if (schema != kConfigSchema) {
      throw ConfigError("unsupported config schema " + std::to_string(schema));
    }
  }
  if (j.contains("experiment")) {
    cfg.experiment = experiment_from_string(get_as<std::string>(j.at("experiment"), "experiment"));
  }
  if (j.contains("seed")) cfg.seed = get_as<std::uint64_t>(j.at("seed"), "seed");
  if (j.contains("sizes")) cfg.sizes = get_as<std::vector<std::size_t>>(j.at("sizes"), "sizes");
  if (j.contains("theta")) cfg.theta = get_as<double>(j.at("theta"), "theta");
  if (j.contains("p")) cfg.p = get_as<std::size_t>(j.at("p"), "p");
  if (j.contains("B")) cfg.B = get_as<std::size_t>(j.at("B"), "B");
  if (j.contains("replicates")) cfg.replicates = get_as<std::size_t>(j.at("replicates"), "replicates");
  if (j.contains("dists")) {
    cfg.dists.clear();
    for (const auto& d : j.at("dists")) cfg.dists.push_back(dist_from_json(d));
  }
  if (j.contains("ma")) {
    const json& m = j.at("ma");
    if (m.is_null()) {
      cfg.ma.reset();
    } else {
      MaStreamSpec spec = cfg.ma.value_or(MaStreamSpec{});
      if (m.contains("theta")) spec.theta = get_as<double>(m.at("theta"), "ma.theta");
      if (m.contains("lag")) spec.lag = get_as<int>(m.at("lag"), "ma.lag");
      if (m.contains("innovation")) spec.innovation = dist_from_json(m.at("innovation"));
      cfg.ma = spec;
    }
  }
  if (j.contains("dep_settings")) {
    cfg.dep_settings.clear();
    for (const auto& s : j.at("dep_settings")) {
      if (!s.contains("p") || !s.contains("theta")) throw ConfigError("dep_settings entries need p and theta");
      cfg.dep_settings.push_back({get_as<std::size_t>(s.at("p"), "dep_settings.p"),
                                  get_as<double>(s.at("theta"), "dep_settings.theta")});
    }
  }
  if (j.contains("marginal_columns")) {
    cfg.marginal_columns = get_as<std::size_t>(j.at("marginal_columns"), "marginal_columns");
  }
  if (j.contains("betas")) cfg.betas = number_list(j.at("betas"), "betas");
  if (j.contains("r_factor")) cfg.r_factor = get_as<double>(j.at("r_factor"), "r_factor");
  if (j.contains("grid")) {
    const json& g = j.at("grid");
    if (g.contains("alpha0")) {
      if (g.at("alpha0").is_null()) {
        cfg.grid.alpha0.reset();
      } else {
        cfg.grid.alpha0 = get_as<double>(g.at("alpha0"), "grid.alpha0");
      }
    }
    if (g.contains("i_min")) cfg.grid.i_min = get_as<std::size_t>(g.at("i_min"), "grid.i_min");
  }
  if (j.contains("x_grid")) cfg.x_grid = number_list(j.at("x_grid"), "x_grid");
  if (j.contains("alphas")) cfg.alphas = number_list(j.at("alphas"), "alphas");
  if (j.contains("thetas")) cfg.thetas = number_list(j.at("thetas"), "thetas");
  if (j.contains("r_values")) cfg.r_values = number_list(j.at("r_values"), "r_values");
  if (j.contains("oracle_draws")) cfg.oracle_draws = get_as<std::size_t>(j.at("oracle_draws"), "oracle_draws");
  if (j.contains("tail_form")) {
    cfg.tail_form = tail_form_from_string(get_as<std::string>(j.at("tail_form"), "tail_form"));
  }
  if (j.contains("independent")) cfg.independent = get_as<bool>(j.at("independent"), "independent");
  if (j.contains("strict_validity")) {
    cfg.strict_validity = get_as<bool>(j.at("strict_validity"), "strict_validity");
  }
  if (j.contains("output_dir")) cfg.output_dir = get_as<std::string>(j.at("output_dir"), "output_dir");
  return cfg;
}

ExperimentConfig load_config(const std::string& path, std::optional<Experiment> expected,
                             bool paper_scale) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  std::optional<Experiment> named;
  if (j.is_object() && j.contains("experiment")) {
    named = experiment_from_string(get_as<std::string>(j.at("experiment"), "experiment"));
  }
  if (expected && named && *expected != *named) {
    throw ConfigError("config file is for '" + std::string(to_string(*named)) +
                      "', not '" + std::string(to_string(*expected)) + "'");
  }
  const Experiment e = expected ? *expected : named.value_or(Experiment::TailCompare);
  if (!expected && !named) throw ConfigError("config file does not name an experiment");
  return config_from_json(j, default_config(e, paper_scale));
}

void validate(const ExperimentConfig& cfg) {
  auto fail = [](const std::string& msg) { throw ConfigError(msg); };
  if (cfg.schema != kConfigSchema) fail("unsupported schema");
  for (const auto n : cfg.sizes) {
    if (n < 2) fail("every sample size must be at least 2");
  }
  for (const double a : cfg.alphas) {
    if (!(a > 0.0 && a <= 0.5)) fail("alphas must lie in (0, 1/2]");
  }
  if (!(cfg.r_factor > 0.0)) fail("r_factor must be positive");
  if (cfg.grid.alpha0 && !(*cfg.grid.alpha0 > 0.0 && *cfg.grid.alpha0 < 1.0)) {
    fail("grid.alpha0 must lie in (0,1)");
  }
  if (cfg.grid.i_min < 1) fail("grid.i_min must be >= 1");
  switch (cfg.experiment) {
    case Experiment::TailCompare:
      if (cfg.dists.empty() || cfg.sizes.empty()) fail("tail-compare needs dists and sizes");
      if (cfg.replicates < 100) fail("tail-compare needs at least 100 replicates");
      if (cfg.x_grid.empty()) fail("tail-compare needs an x_grid");
      break;
    case Experiment::BootQuantiles:
      if (cfg.dists.size() != 1 || cfg.sizes.empty() || cfg.alphas.empty()) {
        fail("boot-quantiles needs one dist, sizes and alphas");
      }
      if (cfg.replicates < 1 || cfg.oracle_draws < 100) fail("boot-quantiles needs replicates and oracle_draws");
      break;
    case Experiment::HcHist:
      if (cfg.dists.size() != 1 || cfg.sizes.size() != 1) fail("hc-hist needs exactly one dist and one size");
      if (!(cfg.theta > 0.0 && cfg.theta <= 1.0)) fail("hc-hist: theta must lie in (0,1]");
      if (cfg.replicates < 1 || cfg.oracle_draws < 100) fail("hc-hist needs replicates and oracle_draws");
      for (const double b : cfg.betas) {
        if (!(b >= 0.5 && b <= 1.0)) fail("hc-hist: betas must lie in [1/2, 1]");
      }
      break;
    case Experiment::DepCdf:
      if (!cfg.ma || cfg.sizes.size() != 1 || cfg.dep_settings.empty()) {
        fail("dep-cdf needs ma, one size and dep_settings");
      }
      if (cfg.replicates < 100 || cfg.marginal_columns < 100) fail("dep-cdf needs at least 100 replicates");
      for (const auto& s : cfg.dep_settings) {
        if (s.p < 1 || !(s.theta >= 0.0 && s.theta < 1.0)) fail("dep-cdf: need p >= 1 and theta in [0,1)");
      }
      if (cfg.x_grid.empty()) fail("dep-cdf needs an x_grid");
      break;
    case Experiment::PhasePlot:
      if (cfg.thetas.empty() || cfg.betas.empty()) fail("phase-plot needs thetas and betas");
      for (const double r : cfg.r_values) {
        if (!(r > 0.0 && r <= 1.0)) fail("phase-plot: r_values must lie in (0,1]");
      }
      break;
    case Experiment::Calibrate:
      if (cfg.dists.size() != 1 || cfg.sizes.size() != 1 || cfg.alphas.empty()) {
        fail("calibrate needs one dist, one size and alphas");
      }
      if (cfg.replicates < 100) fail("calibrate needs at least 100 replicates");
      break;
  }
}

}  // namespace hct
