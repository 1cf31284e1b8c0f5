// SPDX-License-Identifier: Apache-2.0
#include "hct/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>

#include "hct/bootstrap.hpp"
#include "hct/csv.hpp"
#include "hct/errors.hpp"
#include "hct/normal.hpp"
#include "hct/parallel.hpp"
#include "hct/phase.hpp"
#include "hct/stats_core.hpp"
#include "hct/tail_approx.hpp"

namespace hct {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Root stream labels, one per experiment.
std::uint64_t experiment_label(Experiment e) {
  return static_cast<std::uint64_t>(e) + 1;
}

Generator root_stream(const ExperimentConfig& cfg) {
  return derive_stream({cfg.seed, {experiment_label(cfg.experiment)}});
}

void log_line(const RunContext& ctx, const std::string& msg) {
  if (ctx.log != nullptr) *ctx.log << msg << '\n' << std::flush;
}

std::vector<double>& scratch(std::size_t n) {
  thread_local std::vector<double> buf;
  buf.resize(n);
  return buf;
}

struct CalibrationDraw {
  double t = 0.0;
  BootstrapRank rank;
};

// One outer replicate of the bootstrap-t level study.
CalibrationDraw calibration_draw(const Sampler& sampler, std::size_t n, std::size_t B,
                                 bool independent, const Generator& g) {
  std::vector<double> x(n);
  Generator gx = g.child(1);
  sampler.fill(x, gx);
  CalibrationDraw out;
  if (independent) {
    std::vector<double>& y = scratch(n);
    Generator gy = g.child(3);
    sampler.fill(y, gy);
    out.t = t_statistic(y);
  } else {
    out.t = t_statistic(x);
  }
  Generator gb = g.child(2);
  out.rank = bootstrap_rank(x, B, out.t, gb);
  return out;
}

std::string fmt(double v) { return format_double(v); }

}  // namespace

McEstimate binomial_estimate(std::size_t hits, std::size_t m) {
  if (m == 0) throw DomainError("binomial_estimate: m must be positive");
  const double p = static_cast<double>(hits) / static_cast<double>(m);
  return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(m)), m};
}

McEstimate estimate_exceedance(const StatSelector& stat, const DistSpec& dist, std::size_t n,
                               double x, std::size_t m, const Generator& g, std::size_t threads) {
  if (m < 100) throw DomainError("estimate_exceedance: m must be at least 100");
  if (n < 2) throw DomainError("estimate_exceedance: n must be at least 2");
  if (!dist.standardized) throw DomainError("estimate_exceedance: the law must be standardised");
  const Sampler sampler(dist);
  std::size_t B = stat.B;
  if (stat.kind == StatKind::T0VsBootQuantile) {
    if (B == 0) B = min_resamples(stat.alpha);
    (void)quantile_rank(B, stat.alpha);  // rejects B < 1/alpha up front
  }
  const double z_alpha =
      stat.kind == StatKind::T0VsNormalQuantile ? std_normal_quantile(stat.alpha) : 0.0;

  std::vector<std::uint8_t> hit(m, 0);
  parallel_for(m, threads, [&](std::size_t i) {
    const Generator gi = g.child(i);
    if (stat.kind == StatKind::T0VsBootQuantile) {
      const CalibrationDraw d = calibration_draw(sampler, n, B, stat.independent, gi);
      hit[i] = d.rank.exceeds(quantile_rank(d.rank.effective, stat.alpha)) ? 1 : 0;
      return;
    }
    std::vector<double>& buf = scratch(n);
    Generator gs = gi.child(1);
    sampler.fill(buf, gs);
    double value = 0.0;
    double threshold = x;
    switch (stat.kind) {
      case StatKind::T0: value = t_statistic(buf); break;
      case StatKind::Z0: value = z_statistic(buf, 1.0); break;
      case StatKind::Tc: value = shifted_t_statistic(buf, stat.c); break;
      case StatKind::T0VsNormalQuantile:
        value = t_statistic(buf);
        threshold = z_alpha;
        break;
      case StatKind::T0VsBootQuantile: break;
    }
    hit[i] = value > threshold ? 1 : 0;
  });
  std::size_t hits = 0;
  for (const auto h : hit) hits += h;
  return binomial_estimate(hits, m);
}

double ecdf_at(std::span<const double> sorted, double x) {
  if (sorted.empty()) throw DomainError("ecdf_at: empty sample");
  const auto it = std::upper_bound(sorted.begin(), sorted.end(), x);
  return static_cast<double>(it - sorted.begin()) / static_cast<double>(sorted.size());
}

double upper_quantile(std::span<const double> sorted, double alpha) {
  const std::size_t k = quantile_rank(sorted.size(), alpha);
  return sorted[k - 1];
}

double ks_distance(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw DomainError("ks_distance: empty sample");
  std::vector<double> sa(a.begin(), a.end());
  std::vector<double> sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  const double na = static_cast<double>(sa.size());
  const double nb = static_cast<double>(sb.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < sa.size() && j < sb.size()) {
    const double v = std::min(sa[i], sb[j]);
    while (i < sa.size() && sa[i] == v) ++i;
    while (j < sb.size() && sb[j] == v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return d;
}

std::vector<double> simulate_t0(const DistSpec& dist, std::size_t n, std::size_t m,
                                const Generator& g, std::size_t threads) {
  const Sampler sampler(dist);
  std::vector<double> t(m);
  parallel_for(m, threads, [&](std::size_t i) {
    std::vector<double>& buf = scratch(n);
    Generator gi = g.child(i);
    sampler.fill(buf, gi);
    t[i] = t_statistic(buf);
  });
  std::sort(t.begin(), t.end());
  return t;
}

std::vector<double> oracle_quantiles(const DistSpec& dist, std::size_t n,
                                     std::span<const double> alphas, std::size_t draws,
                                     const Generator& g, std::size_t threads) {
  const std::vector<double> t = simulate_t0(dist, n, draws, g, threads);
  std::vector<double> q;
  q.reserve(alphas.size());
  for (const double a : alphas) q.push_back(upper_quantile(t, a));
  return q;
}

CalibrationResult calibration_study(const DistSpec& dist, std::size_t n,
                                    std::span<const double> alphas, std::size_t B, std::size_t m,
                                    bool independent, const Generator& g, std::size_t threads) {
  if (m < 100) throw DomainError("calibration_study: m must be at least 100");
  if (alphas.empty()) throw DomainError("calibration_study: no alphas");
  const double alpha_min = *std::min_element(alphas.begin(), alphas.end());
  if (B == 0) B = min_resamples(alpha_min);
  (void)quantile_rank(B, alpha_min);
  const Sampler sampler(dist);
  std::vector<CalibrationDraw> draws(m);
  parallel_for(m, threads, [&](std::size_t i) {
    draws[i] = calibration_draw(sampler, n, B, independent, g.child(i));
  });

  CalibrationResult out;
  out.B = B;
  for (const auto& d : draws) {
    out.degenerate += d.rank.n_degenerate;
    if (d.rank.n_degenerate * 100 > B) ++out.unreliable;
  }
  for (const double a : alphas) {
    const double z = std_normal_quantile(a);
    std::size_t boot_hits = 0;
    std::size_t norm_hits = 0;
    for (const auto& d : draws) {
      boot_hits += d.rank.exceeds(quantile_rank(d.rank.effective, a)) ? 1 : 0;
      norm_hits += d.t > z ? 1 : 0;
    }
    out.rows.push_back({a, binomial_estimate(boot_hits, m), binomial_estimate(norm_hits, m)});
  }
  return out;
}

HcStudySetup make_hc_setup(const ExperimentConfig& cfg, const Generator& g, std::size_t threads) {
  HcStudySetup s;
  s.n = cfg.sizes.at(0);
  s.theta = cfg.theta;
  s.dist = cfg.dists.at(0);
  if (cfg.p != 0) {
    s.p = cfg.p;
  } else {
    const double p = std::round(std::pow(static_cast<double>(s.n), 1.0 / cfg.theta));
    if (!(p <= 0x1.0p40)) throw ConfigError("hc-hist: p = n^(1/theta) is too large");
    s.p = static_cast<std::size_t>(p);
  }
  if (s.p < 2) throw ConfigError("hc-hist: p must be at least 2");
  const double alpha0 = cfg.grid.alpha0 ? *cfg.grid.alpha0 : default_alpha0(s.n, s.p);
  if (!(alpha0 > 0.0 && alpha0 < 1.0)) {
    throw ConfigError("hc-hist: alpha0 = n log p / p is not below 1; set grid.alpha0");
  }
  s.grid = alpha_grid(s.p, alpha0, cfg.grid.i_min);
  const std::size_t needed = min_resamples(s.grid.min_alpha());
  s.B = cfg.B == 0 ? needed : cfg.B;
  if (s.B < needed) {
    throw InsufficientResamples("hc-hist: B = " + std::to_string(s.B) +
                                " is below 100/alpha_min = " + std::to_string(needed));
  }
  s.sample_split = cfg.independent;
  // With a split, each statistic sees only the first half of the rows.
  const std::size_t stat_n = s.sample_split ? s.n / 2 : s.n;
  s.oracle = QuantileTable::shared(
      oracle_quantiles(s.dist, stat_n, s.grid.alphas, cfg.oracle_draws, g, threads));
  return s;
}

std::vector<HcReplicate> hc_study(const HcStudySetup& setup, Hypothesis h,
                                  const SignalConfig& signal, std::size_t replicates,
                                  const Generator& g, std::size_t threads) {
  SignalConfig sc = signal;
  sc.n = setup.n;
  sc.p = setup.p;
  if (h == Hypothesis::H0) sc.k = 0;
  const HcOptions opts{1, setup.sample_split};
  std::vector<HcReplicate> out(replicates);
  parallel_for(replicates, threads, [&](std::size_t r) {
    const Generator gr = g.child(r);
    const SignalMatrix sm = sample_signal_matrix(sc, setup.dist, h, gr.child(1));
    const auto features = calibrate_features(sm.data, setup.B, gr.child(2), opts);
    std::vector<double> t(features.size());
    HcReplicate& rep = out[r];
    for (std::size_t j = 0; j < features.size(); ++j) {
      t[j] = features[j].t;
      rep.boot_degenerate += features[j].boot_degenerate;
      if (features[j].boot_degenerate * 100 > setup.B) rep.reliable = false;
    }
    rep.bootstrap = hc_bootstrap_from(features, setup.grid);
    rep.normal = hc_normal_from(t, setup.grid);
    rep.oracle = hc_oracle_from(t, setup.grid, setup.oracle);
  });
  return out;
}

DepCdfCurves dep_cdf_study(const MaStreamSpec& ma, std::size_t n, std::size_t p,
                           std::size_t replicates, std::size_t marginal_columns,
                           std::span<const double> x_grid, const Generator& g,
                           std::size_t threads) {
  if (replicates < 2 || marginal_columns < 2) throw DomainError("dep_cdf_study: too few replicates");
  std::vector<double> joint_max(replicates);
  parallel_for(replicates, threads, [&](std::size_t r) {
    const FeatureMatrix m = sample_ma_matrix(ma, n, p, g.child({0, r}));
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < p; ++j) best = std::max(best, t_statistic(m.column(j)));
    joint_max[r] = best;
  });
  std::vector<double> marginal(marginal_columns);
  parallel_for(marginal_columns, threads, [&](std::size_t c) {
    std::vector<double>& buf = scratch(n);
    Generator gc = g.child({1, c});
    sample_ma_column(ma, buf, gc);
    marginal[c] = t_statistic(buf);
  });
  std::sort(joint_max.begin(), joint_max.end());
  std::sort(marginal.begin(), marginal.end());

  DepCdfCurves out;
  out.p = p;
  out.theta = ma.theta;
  const double pd = static_cast<double>(p);
  const double mj = static_cast<double>(replicates);
  const double mm = static_cast<double>(marginal_columns);
  for (const double x : x_grid) {
    const double j = ecdf_at(joint_max, x);
    const double f = ecdf_at(marginal, x);
    const double prod = std::pow(f, pd);
    // Delta method: d(F^p) = p F^(p-1) dF.
    const double prod_se = f > 0.0 ? pd * std::pow(f, pd - 1.0) * std::sqrt(f * (1.0 - f) / mm) : 0.0;
    out.x.push_back(x);
    out.joint.push_back(j);
    out.joint_se.push_back(std::sqrt(j * (1.0 - j) / mj));
    out.product.push_back(prod);
    out.product_se.push_back(prod_se);
    const double gap = std::abs(j - prod);
    if (out.x.size() == 1 || gap > out.sup_gap) {
      out.sup_gap = gap;
      out.sup_gap_x = x;
      out.sup_gap_se = std::hypot(out.joint_se.back(), prod_se);
    }
  }
  return out;
}

std::vector<std::string> output_header(const ExperimentConfig& cfg) {
  return {"hct " + std::string(kLibraryVersion), "config: " + to_json(cfg).dump()};
}

RunOutput run_tail_compare(const ExperimentConfig& cfg, const RunContext& ctx) {
  const std::filesystem::path dir(cfg.output_dir);
  CsvWriter cdf(dir / "tail_compare.csv", output_header(cfg),
                {"dist", "n", "x", "emp_cdf_T0", "emp_cdf_Z0", "normal_cdf", "approx_T0",
                 "approx_Z0", "mc_se", "approx_valid"});
  CsvWriter inv(dir / "tail_compare_quantiles.csv", output_header(cfg),
                {"dist", "n", "alpha", "emp_q_T0", "emp_q_Z0", "normal_q", "approx_q_T0"});
  const Generator root = root_stream(cfg);
  const double m = static_cast<double>(cfg.replicates);
  RunOutput out;
  for (std::size_t d = 0; d < cfg.dists.size(); ++d) {
    const DistSpec& dist = cfg.dists[d];
    const Sampler sampler(dist);
    double gamma = kNaN;
    try {
      gamma = standardized_skewness(dist);
    } catch (const InfiniteMoment&) {
    }
    for (const std::size_t n : cfg.sizes) {
      log_line(ctx, "tail-compare: " + describe(dist) + " n=" + std::to_string(n));
      const Generator gen = root.child({d, n});
      std::vector<double> t0(cfg.replicates);
      std::vector<double> z0(cfg.replicates);
      parallel_for(cfg.replicates, ctx.threads, [&](std::size_t i) {
        std::vector<double>& buf = scratch(n);
        Generator gi = gen.child(i);
        sampler.fill(buf, gi);
        t0[i] = t_statistic(buf);
        z0[i] = z_statistic(buf, 1.0);
      });
      std::sort(t0.begin(), t0.end());
      std::sort(z0.begin(), z0.end());
      const std::string name = describe(dist);
      for (const double x : cfg.x_grid) {
        const double ft = ecdf_at(t0, x);
        const double fz = ecdf_at(z0, x);
        double approx_t = kNaN;
        double approx_z = kNaN;
        bool valid = false;
        if (!std::isnan(gamma)) {
          // Lower tail at x < 0 is the upper tail of -X at -x.
          const bool upper = x >= 0.0;
          const ApproxInput in{upper ? x : -x, n, upper ? gamma : -gamma, 0.0};
          const TailApprox at = studentized_tail_approx(in, cfg.tail_form);
          const TailApprox az = standardized_tail_approx(in);
          approx_t = upper ? 1.0 - at.value : at.value;
          approx_z = upper ? 1.0 - az.value : az.value;
          valid = at.valid && az.valid;
        }
        cdf.row({cell(name), cell(n), cell(x), cell(ft), cell(fz), cell(std_normal_cdf(x)),
                 cell(approx_t), cell(approx_z), cell(std::sqrt(ft * (1.0 - ft) / m)),
                 cell(valid ? 1 : 0)});
      }
      for (const double a : cfg.alphas) {
        const double approx_q = std::isnan(gamma) ? kNaN : skew_corrected_quantile(a, n, gamma);
        inv.row({cell(name), cell(n), cell(a), cell(upper_quantile(t0, a)),
                 cell(upper_quantile(z0, a)), cell(std_normal_quantile(a)), cell(approx_q)});
      }
    }
  }
  out.files = {cdf.path(), inv.path()};
  return out;
}

RunOutput run_boot_quantiles(const ExperimentConfig& cfg, const RunContext& ctx) {
  const DistSpec& dist = cfg.dists.at(0);
  const double alpha_min = *std::min_element(cfg.alphas.begin(), cfg.alphas.end());
  const std::size_t needed = min_resamples(alpha_min);
  const std::size_t B = cfg.B == 0 ? needed : cfg.B;
  if (B < needed) {
    throw InsufficientResamples("boot-quantiles: B = " + std::to_string(B) +
                                " is below 100/alpha_min = " + std::to_string(needed));
  }
  CsvWriter csv(std::filesystem::path(cfg.output_dir) / "boot_quantiles.csv", output_header(cfg),
                {"n", "rep_id", "alpha", "boot_q", "oracle_q", "normal_q", "n_degenerate"});
  const Generator root = root_stream(cfg);
  const Sampler sampler(dist);
  RunOutput out;
  for (const std::size_t n : cfg.sizes) {
    log_line(ctx, "boot-quantiles: n=" + std::to_string(n) + " oracle");
    const Generator gen = root.child(n);
    const std::vector<double> oracle =
        oracle_quantiles(dist, n, cfg.alphas, cfg.oracle_draws, gen.child(0), ctx.threads);
    log_line(ctx, "boot-quantiles: n=" + std::to_string(n) + " replicates");
    std::vector<std::vector<double>> q(cfg.replicates);
    std::vector<std::size_t> degenerate(cfg.replicates);
    const Generator reps = gen.child(1);
    parallel_for(cfg.replicates, ctx.threads, [&](std::size_t r) {
      const Generator gr = reps.child(r);
      std::vector<double> x(n);
      Generator gx = gr.child(1);
      sampler.fill(x, gx);
      Generator gb = gr.child(2);
      const BootstrapDraws d = bootstrap_t_draws(x, B, gb);
      degenerate[r] = d.n_degenerate;
      for (const double a : cfg.alphas) q[r].push_back(bootstrap_quantile(d, a));
    });
    for (std::size_t r = 0; r < cfg.replicates; ++r) {
      if (degenerate[r] * 100 > B) ++out.validity_flags;
      for (std::size_t a = 0; a < cfg.alphas.size(); ++a) {
        csv.row({cell(n), cell(r), cell(cfg.alphas[a]), cell(q[r][a]), cell(oracle[a]),
                 cell(std_normal_quantile(cfg.alphas[a])), cell(degenerate[r])});
      }
    }
  }
  out.files = {csv.path()};
  return out;
}

RunOutput run_hc_hist(const ExperimentConfig& cfg, const RunContext& ctx) {
  const Generator root = root_stream(cfg);
  log_line(ctx, "hc-hist: oracle quantile table");
  const HcStudySetup setup = make_hc_setup(cfg, root.child(0), ctx.threads);
  CsvWriter csv(std::filesystem::path(cfg.output_dir) / "hc_hist.csv", output_header(cfg),
                {"variant", "hypothesis", "beta", "r", "replicate", "hc_value", "argmax_alpha"});
  RunOutput out;
  auto emit = [&](const std::vector<HcReplicate>& reps, const char* hyp, CsvCell beta, CsvCell r) {
    for (std::size_t i = 0; i < reps.size(); ++i) {
      if (!reps[i].reliable) ++out.validity_flags;
      for (const HcResult* res : {&reps[i].oracle, &reps[i].bootstrap, &reps[i].normal}) {
        csv.row({cell(to_string(res->variant)), cell(hyp), beta, r, cell(i), cell(res->value),
                 cell(res->argmax_alpha)});
      }
    }
  };
  SignalConfig null_signal;
  null_signal.n = setup.n;
  null_signal.p = setup.p;
  null_signal.theta = setup.theta;
  log_line(ctx, "hc-hist: H0");
  emit(hc_study(setup, Hypothesis::H0, null_signal, cfg.replicates, root.child({1, 0}), ctx.threads),
       "H0", blank(), blank());
  for (std::size_t b = 0; b < cfg.betas.size(); ++b) {
    const double beta = cfg.betas[b];
    const double r = std::min(1.0, cfg.r_factor * rho_theta(beta, setup.theta));
    const SignalConfig sc = make_signal_config_with_p(setup.n, setup.p, setup.theta, beta, r);
    log_line(ctx, "hc-hist: H1 beta=" + fmt(beta) + " r=" + fmt(r) + " k=" + std::to_string(sc.k));
    emit(hc_study(setup, Hypothesis::H1, sc, cfg.replicates, root.child({1, b + 1}), ctx.threads),
         "H1", cell(beta), cell(r));
  }
  out.files = {csv.path()};
  return out;
}

RunOutput run_dep_cdf(const ExperimentConfig& cfg, const RunContext& ctx) {
  const std::filesystem::path dir(cfg.output_dir);
  CsvWriter curves(dir / "dep_cdf.csv", output_header(cfg),
                   {"p", "theta", "x", "joint_cdf", "joint_se", "product_cdf", "product_se"});
  CsvWriter summary(dir / "dep_cdf_summary.csv", output_header(cfg),
                    {"p", "theta", "sup_gap", "sup_gap_se", "sup_gap_x"});
  const Generator root = root_stream(cfg);
  const std::size_t n = cfg.sizes.at(0);
  for (std::size_t s = 0; s < cfg.dep_settings.size(); ++s) {
    const DepSetting& setting = cfg.dep_settings[s];
    log_line(ctx, "dep-cdf: p=" + std::to_string(setting.p) + " theta=" + fmt(setting.theta));
    MaStreamSpec ma = *cfg.ma;
    ma.theta = setting.theta;
    const DepCdfCurves c = dep_cdf_study(ma, n, setting.p, cfg.replicates, cfg.marginal_columns,
                                         cfg.x_grid, root.child(s), ctx.threads);
    for (std::size_t i = 0; i < c.x.size(); ++i) {
      curves.row({cell(c.p), cell(c.theta), cell(c.x[i]), cell(c.joint[i]), cell(c.joint_se[i]),
                  cell(c.product[i]), cell(c.product_se[i])});
    }
    summary.row({cell(c.p), cell(c.theta), cell(c.sup_gap), cell(c.sup_gap_se), cell(c.sup_gap_x)});
  }
  return {{curves.path(), summary.path()}, 0};
}

RunOutput run_phase_plot(const ExperimentConfig& cfg, const RunContext& /*ctx*/) {
  CsvWriter csv(std::filesystem::path(cfg.output_dir) / "phase_plot.csv", output_header(cfg),
                {"theta", "beta", "rho_std", "rho_theta", "r_boundary_I_II", "r_boundary_II_III", "r",
                 "region", "delta"});
  for (const double theta : cfg.thetas) {
    for (const double beta : cfg.betas) {
      const double rs = rho_std(beta);
      const double rt = rho_theta(beta, theta);
      const double b1 = (1.0 - theta) / 4.0;
      auto base = [&](CsvCell r, CsvCell region, CsvCell delta) {
        csv.row({cell(theta), cell(beta), cell(rs), cell(rt), cell(b1), cell(0.25), std::move(r),
                 std::move(region), std::move(delta)});
      };
      if (cfg.r_values.empty()) base(blank(), blank(), blank());
      for (const double r : cfg.r_values) {
        const PhaseRegion region = classify_region(beta, r, theta);
        const bool detectable = region == PhaseRegion::I || region == PhaseRegion::II ||
                                region == PhaseRegion::III;
        base(cell(r), cell(to_string(region)),
             detectable ? cell(delta_exponent(beta, r, theta)) : blank());
      }
    }
  }
  return {{csv.path()}, 0};
}

RunOutput run_calibrate(const ExperimentConfig& cfg, const RunContext& ctx) {
  const DistSpec& dist = cfg.dists.at(0);
  const std::size_t n = cfg.sizes.at(0);
  const Generator root = root_stream(cfg);
  log_line(ctx, "calibrate: " + describe(dist) + " n=" + std::to_string(n) +
                    " replicates=" + std::to_string(cfg.replicates));
  const CalibrationResult res = calibration_study(dist, n, cfg.alphas, cfg.B, cfg.replicates,
                                                  cfg.independent, root, ctx.threads);
  CsvWriter csv(std::filesystem::path(cfg.output_dir) / "calibrate.csv", output_header(cfg),
                {"alpha", "p_hat_boot", "se_boot", "p_hat_norm", "se_norm", "replicates", "B"});
  if (ctx.log != nullptr) *ctx.log << "alpha,p_hat_boot,p_hat_norm,se\n";
  for (const auto& row : res.rows) {
    csv.row({cell(row.alpha), cell(row.boot.estimate), cell(row.boot.se), cell(row.normal.estimate),
             cell(row.normal.se), cell(cfg.replicates), cell(res.B)});
    if (ctx.log != nullptr) {
      *ctx.log << fmt(row.alpha) << ',' << fmt(row.boot.estimate) << ','
               << fmt(row.normal.estimate) << ',' << fmt(std::max(row.boot.se, row.normal.se))
               << '\n';
    }
  }
  return {{csv.path()}, res.unreliable};
}

RunOutput run_experiment(const ExperimentConfig& cfg, const RunContext& ctx) {
  validate(cfg);
  RunOutput out;
  switch (cfg.experiment) {
    case Experiment::TailCompare: out = run_tail_compare(cfg, ctx); break;
    case Experiment::BootQuantiles: out = run_boot_quantiles(cfg, ctx); break;
    case Experiment::HcHist: out = run_hc_hist(cfg, ctx); break;
    case Experiment::DepCdf: out = run_dep_cdf(cfg, ctx); break;
    case Experiment::PhasePlot: out = run_phase_plot(cfg, ctx); break;
    case Experiment::Calibrate: out = run_calibrate(cfg, ctx); break;
  }
  if (cfg.strict_validity && out.validity_flags > 0) {
    throw ValidityError(std::to_string(out.validity_flags) +
                        " numerical-validity flags raised (more than 1% degenerate resamples)");
  }
  return out;
}

}  // namespace hct
