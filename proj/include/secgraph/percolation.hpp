#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "secgraph/graph.hpp"

namespace secgraph {

// One Monte Carlo experiment point. The percolation proxy is "the origin
// component contains a node farther than reach_radius from the origin",
// evaluated in the window [-half_width, half_width]^2. Eavesdroppers are
// sampled in the window inflated by eaves_padding so nearest-eavesdropper
// distances near the boundary are unbiased.
struct TrialConfig {
  double lambda_l = 1.0;
  double lambda_e = 1.0;
  ChannelParams channel;
  GainModel model = GainModel::power_law(4.0);
  double half_width = 10.0;    // L
  double reach_radius = 4.0;   // R, 0 < R <= L
  std::int64_t trials = 400;
  std::uint64_t master_seed = 0;
  Mode mode = Mode::kWeak;
  double eaves_padding = -1.0; // < 0 derives the 99.9th-percentile default
  int workers = 0;             // 0 picks hardware concurrency
};

// 99.9th percentile of the nearest-eavesdropper distance at density
// lambda_e, used as the default sampling margin.
double default_eaves_padding(double lambda_e);
double resolved_eaves_padding(const TrialConfig& config);

struct PercolationEstimate {
  double p_hat = 0.0;
  double ci_low = 0.0;   // 95% Wilson score interval
  double ci_high = 0.0;
  std::int64_t trials = 0;
  std::int64_t successes = 0;
};

// Wilson score interval at z = 1.96.
PercolationEstimate wilson_estimate(std::int64_t successes,
                                    std::int64_t trials);

// One trial's shared randomness: legitimate nodes sampled at the top
// density of a sweep grid together with per-point thinning marks, plus
// the eavesdropper process in the padded window. Deterministic in
// (config.master_seed, trial_index) with a fixed draw order.
struct TrialRealization {
  std::vector<Point> legit;
  std::vector<double> marks;
  std::vector<Point> eaves;
  Window window;
};

TrialRealization sample_trial_realization(const TrialConfig& config,
                                          double lambda_top,
                                          std::int64_t trial_index);

// Points of the realization surviving the thinning to `lambda`: the mark
// rule keeps nested subsets as lambda grows toward lambda_top.
std::vector<Point> thin_to_density(const TrialRealization& sample,
                                   double lambda_top, double lambda);

// Per-trial success flags for every mode at every grid density, computed
// from one shared realization: legitimate nodes are sampled once at the
// largest grid density and thinned downward with per-point uniform marks,
// and the eavesdropper set is shared across the grid. This realizes the
// monotone coupling exactly: for fixed trial_index the node set at a
// smaller density is a subset of the one at a larger density.
// success[g][mode] indexes grid point g and Mode as an integer.
std::vector<std::array<bool, 4>> run_sweep_trial(
    const TrialConfig& config, std::span<const double> lambda_grid,
    std::int64_t trial_index);

// Success of one trial at config.lambda_l for config.mode. Deterministic
// in (master_seed, trial_index).
bool run_trial(const TrialConfig& config, std::int64_t trial_index);

// Aggregates run_trial over config.trials for all four modes in parallel.
// Bit-identical for any worker count.
std::array<PercolationEstimate, 4> estimate_all_modes(
    const TrialConfig& config);
PercolationEstimate estimate_p_inf(const TrialConfig& config);

struct SweepResult {
  std::vector<double> lambda_grid;
  // estimates[mode][grid point], mode indexed per Mode
  std::array<std::vector<PercolationEstimate>, 4> estimates;
  std::int64_t completed_trials = 0;  // < config trials when stopped early
};

// Density sweep with shared per-trial randomness across grid points.
// stop, when set, is polled between trials so partial results can be
// flushed on interruption (every grid point then carries the reduced
// trial count).
SweepResult sweep_lambda_l(const TrialConfig& base,
                           std::span<const double> lambda_grid,
                           const std::atomic<bool>* stop = nullptr);

struct RhoSweepResult {
  std::vector<double> rho_grid;
  std::array<std::vector<PercolationEstimate>, 4> estimates;
  std::int64_t completed_trials = 0;
};

// Threshold sweep on a fixed density, one realization per trial shared
// across the whole rho grid.
RhoSweepResult sweep_rho(const TrialConfig& base,
                         std::span<const double> rho_grid,
                         const std::atomic<bool>* stop = nullptr);

// First upward crossing of the curve p(lambda) through `crossing`,
// linearly interpolated. Returns the first grid value when the curve
// starts at or above the crossing, and nothing when it never reaches it.
std::optional<double> extract_critical_density(
    std::span<const double> lambda_grid, std::span<const double> p_hat,
    double crossing);

}  // namespace secgraph
