#include "secgraph/percolation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "secgraph/rng.hpp"

namespace secgraph {

double default_eaves_padding(double lambda_e) {
  if (!(lambda_e > 0.0)) return 0.0;
  return std::sqrt(std::log(1000.0) / (std::numbers::pi * lambda_e));
}

double resolved_eaves_padding(const TrialConfig& config) {
  return config.eaves_padding >= 0.0 ? config.eaves_padding
                                     : default_eaves_padding(config.lambda_e);
}

PercolationEstimate wilson_estimate(std::int64_t successes,
                                    std::int64_t trials) {
  if (trials <= 0 || successes < 0 || successes > trials)
    throw std::invalid_argument("wilson_estimate: bad counts");
  constexpr double z = 1.96;
  constexpr double z2 = z * z;
  double n = static_cast<double>(trials);
  double p = static_cast<double>(successes) / n;
  double denom = 1.0 + z2 / n;
  double center = (p + z2 / (2.0 * n)) / denom;
  double half =
      z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  PercolationEstimate est;
  est.p_hat = p;
  est.ci_low = std::max(0.0, center - half);
  est.ci_high = std::min(1.0, center + half);
  est.trials = trials;
  est.successes = successes;
  return est;
}

namespace {

void validate_config(const TrialConfig& config) {
  if (!(config.lambda_l >= 0.0) || !(config.lambda_e >= 0.0))
    throw std::invalid_argument("densities must be >= 0");
  if (!(config.half_width > 0.0))
    throw std::invalid_argument("window half-width must be positive");
  if (!(config.reach_radius > 0.0 &&
        config.reach_radius <= config.half_width))
    throw std::invalid_argument("reach radius must satisfy 0 < R <= L");
  if (config.trials < 1)
    throw std::invalid_argument("at least one trial required");
}

void validate_grid(std::span<const double> grid, const char* what) {
  if (grid.empty()) throw std::invalid_argument(std::string(what) + " empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] >= 0.0) || !std::isfinite(grid[i]))
      throw std::invalid_argument(std::string(what) + " has invalid value");
    if (i > 0 && !(grid[i] > grid[i - 1]))
      throw std::invalid_argument(std::string(what) +
                                  " must be strictly increasing");
  }
}

int resolve_workers(int workers) {
  if (workers > 0) return workers;
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

std::array<bool, 4> evaluate_sample(const TrialRealization& sample,
                                    const std::vector<Point>& legit_subset,
                                    const ChannelParams& channel,
                                    const GainModel& model, double reach) {
  NetworkRealization r;
  r.window = sample.window;
  r.eaves = sample.eaves;
  r.legit = legit_subset;
  r = condition_origin(std::move(r));
  SecrecyGraph graph = build_secrecy_graph(r, channel, model);
  auto reached = component_reach_all(graph, 0);
  std::array<bool, 4> success;
  for (int m = 0; m < 4; ++m) success[m] = reached[m] > reach;
  return success;
}

// successes[column][mode] summed over completed trials.
struct Tally {
  std::vector<std::array<std::int64_t, 4>> successes;
  std::int64_t completed = 0;
};

template <typename TrialFn>
Tally run_trials(const TrialConfig& config, std::size_t columns,
                 const std::atomic<bool>* stop, TrialFn&& trial_fn) {
  int workers = resolve_workers(config.workers);
  std::vector<Tally> per_worker(workers);
  auto work = [&](int w) {
    Tally& tally = per_worker[w];
    tally.successes.assign(columns, {});
    for (std::int64_t t = w; t < config.trials; t += workers) {
      // Each worker finishes at least one trial so interrupted runs still
      // carry data for every grid column.
      if (t != w && stop != nullptr && stop->load(std::memory_order_relaxed))
        break;
      std::vector<std::array<bool, 4>> outcome = trial_fn(t);
      for (std::size_t c = 0; c < columns; ++c)
        for (int m = 0; m < 4; ++m)
          tally.successes[c][m] += outcome[c][m] ? 1 : 0;
      ++tally.completed;
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (int w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& th : threads) th.join();
  }
  Tally total;
  total.successes.assign(columns, {});
  for (const Tally& tally : per_worker) {
    total.completed += tally.completed;
    for (std::size_t c = 0; c < columns; ++c)
      for (int m = 0; m < 4; ++m)
        total.successes[c][m] += tally.successes[c][m];
  }
  return total;
}

}  // namespace

TrialRealization sample_trial_realization(const TrialConfig& config,
                                          double lambda_top,
                                          std::int64_t trial_index) {
  Rng rng(derive_seed(config.master_seed,
                      {kStreamTrial, static_cast<std::uint64_t>(trial_index)}));
  TrialRealization s;
  s.window = Window::centered(config.half_width);
  s.legit = sample_poisson(lambda_top, s.window, rng);
  s.marks.resize(s.legit.size());
  for (double& m : s.marks) m = rng.uniform();
  double pad = resolved_eaves_padding(config);
  s.eaves = sample_poisson(config.lambda_e, s.window.inflated(pad), rng);
  return s;
}

std::vector<Point> thin_to_density(const TrialRealization& sample,
                                   double lambda_top, double lambda) {
  std::vector<Point> subset;
  for (std::size_t i = 0; i < sample.legit.size(); ++i)
    if (sample.marks[i] * lambda_top < lambda)
      subset.push_back(sample.legit[i]);
  return subset;
}

std::vector<std::array<bool, 4>> run_sweep_trial(
    const TrialConfig& config, std::span<const double> lambda_grid,
    std::int64_t trial_index) {
  validate_grid(lambda_grid, "lambda grid");
  double lambda_top = lambda_grid.back();
  TrialRealization sample =
      sample_trial_realization(config, lambda_top, trial_index);
  std::vector<std::array<bool, 4>> out;
  out.reserve(lambda_grid.size());
  for (double lambda : lambda_grid) {
    out.push_back(evaluate_sample(sample, thin_to_density(sample, lambda_top, lambda),
                                  config.channel, config.model,
                                  config.reach_radius));
  }
  return out;
}

bool run_trial(const TrialConfig& config, std::int64_t trial_index) {
  validate_config(config);
  double grid[1] = {config.lambda_l};
  auto outcome = run_sweep_trial(config, grid, trial_index);
  return outcome[0][static_cast<int>(config.mode)];
}

std::array<PercolationEstimate, 4> estimate_all_modes(
    const TrialConfig& config) {
  validate_config(config);
  double grid[1] = {config.lambda_l};
  Tally tally = run_trials(config, 1, nullptr, [&](std::int64_t t) {
    return run_sweep_trial(config, grid, t);
  });
  std::array<PercolationEstimate, 4> est;
  for (int m = 0; m < 4; ++m)
    est[m] = wilson_estimate(tally.successes[0][m], tally.completed);
  return est;
}

PercolationEstimate estimate_p_inf(const TrialConfig& config) {
  return estimate_all_modes(config)[static_cast<int>(config.mode)];
}

SweepResult sweep_lambda_l(const TrialConfig& base,
                           std::span<const double> lambda_grid,
                           const std::atomic<bool>* stop) {
  validate_config(base);
  validate_grid(lambda_grid, "lambda grid");
  Tally tally = run_trials(base, lambda_grid.size(), stop,
                           [&](std::int64_t t) {
                             return run_sweep_trial(base, lambda_grid, t);
                           });
  SweepResult result;
  result.lambda_grid.assign(lambda_grid.begin(), lambda_grid.end());
  result.completed_trials = tally.completed;
  if (tally.completed == 0)
    throw std::runtime_error("sweep stopped before completing any trial");
  for (int m = 0; m < 4; ++m) {
    result.estimates[m].reserve(lambda_grid.size());
    for (std::size_t c = 0; c < lambda_grid.size(); ++c)
      result.estimates[m].push_back(
          wilson_estimate(tally.successes[c][m], tally.completed));
  }
  return result;
}

RhoSweepResult sweep_rho(const TrialConfig& base,
                         std::span<const double> rho_grid,
                         const std::atomic<bool>* stop) {
  validate_config(base);
  if (rho_grid.empty()) throw std::invalid_argument("rho grid empty");
  for (std::size_t i = 1; i < rho_grid.size(); ++i)
    if (!(rho_grid[i] > rho_grid[i - 1]))
      throw std::invalid_argument("rho grid must be strictly increasing");
  if (!(rho_grid.front() >= 0.0))
    throw std::invalid_argument("rho must be >= 0");

  Tally tally =
      run_trials(base, rho_grid.size(), stop, [&](std::int64_t t) {
        // Shared realization across the whole rho grid: identical draw
        // order to a single-density trial (marks included), so the
        // rho_grid[i] column reproduces a standalone run at that
        // threshold.
        TrialRealization sample =
            sample_trial_realization(base, base.lambda_l, t);
        const std::vector<Point>& subset = sample.legit;
        std::vector<std::array<bool, 4>> out;
        out.reserve(rho_grid.size());
        for (double rho : rho_grid) {
          ChannelParams channel = base.channel;
          channel.rho = rho;
          out.push_back(evaluate_sample(sample, subset, channel, base.model,
                                        base.reach_radius));
        }
        return out;
      });
  RhoSweepResult result;
  result.rho_grid.assign(rho_grid.begin(), rho_grid.end());
  result.completed_trials = tally.completed;
  if (tally.completed == 0)
    throw std::runtime_error("sweep stopped before completing any trial");
  for (int m = 0; m < 4; ++m) {
    result.estimates[m].reserve(rho_grid.size());
    for (std::size_t c = 0; c < rho_grid.size(); ++c)
      result.estimates[m].push_back(
          wilson_estimate(tally.successes[c][m], tally.completed));
  }
  return result;
}

std::optional<double> extract_critical_density(
    std::span<const double> lambda_grid, std::span<const double> p_hat,
    double crossing) {
  if (!(crossing > 0.0 && crossing < 1.0))
    throw std::invalid_argument("crossing must lie in (0,1)");
  if (lambda_grid.size() != p_hat.size() || lambda_grid.empty())
    throw std::invalid_argument("curve and grid sizes differ");
  if (p_hat[0] >= crossing) return lambda_grid[0];
  for (std::size_t k = 1; k < p_hat.size(); ++k) {
    if (p_hat[k] >= crossing && p_hat[k - 1] < crossing) {
      double t = (crossing - p_hat[k - 1]) / (p_hat[k] - p_hat[k - 1]);
      return lambda_grid[k - 1] + t * (lambda_grid[k] - lambda_grid[k - 1]);
    }
  }
  return std::nullopt;
}

}  // namespace secgraph
