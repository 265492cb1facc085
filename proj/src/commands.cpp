#include "secgraph/commands.hpp"

#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "secgraph/bounds.hpp"
#include "secgraph/percolation.hpp"
#include "secgraph/report.hpp"

namespace secgraph {

namespace {

using ordered_json = nlohmann::ordered_json;

const std::set<std::string> kChannelKeys = {"gain", "gamma", "snr0",
                                            "snr0_db", "rho"};

struct ResolvedChannel {
  ChannelParams params;
  GainModel model = GainModel::power_law(4.0);
};

ResolvedChannel resolve_channel(const KeyValueConfig& cfg) {
  ResolvedChannel rc;
  std::string gain = cfg.get_string("gain", "power_law");
  double gamma = cfg.get_double("gamma", 4.0);
  if (!(gamma > 0.0)) throw ConfigError("gamma must be > 0");
  if (gain == "power_law") {
    rc.model = GainModel::power_law(gamma);
  } else if (gain == "bounded_power_law") {
    rc.model = GainModel::bounded_power_law(gamma);
  } else {
    throw ConfigError("gain must be power_law or bounded_power_law");
  }
  if (cfg.has("snr0") && cfg.has("snr0_db"))
    throw ConfigError("give snr0 or snr0_db, not both");
  if (cfg.has("snr0_db")) {
    rc.params.snr0 = std::pow(10.0, cfg.get_double("snr0_db") / 10.0);
  } else {
    rc.params.snr0 = cfg.get_double("snr0", 10.0);
  }
  if (!(rc.params.snr0 > 0.0)) throw ConfigError("snr0 must be > 0");
  rc.params.rho = cfg.get_double("rho", 0.0);
  if (!(rc.params.rho >= 0.0)) throw ConfigError("rho must be >= 0");
  return rc;
}

double require_density(const KeyValueConfig& cfg, const std::string& key) {
  double v = cfg.get_double(key);
  if (!(v >= 0.0) || !std::isfinite(v))
    throw ConfigError("key '" + key + "': density must be finite and >= 0");
  return v;
}

std::vector<Mode> resolve_modes(const KeyValueConfig& cfg,
                                const std::string& fallback) {
  std::string mode = cfg.get_string("mode", fallback);
  if (mode == "all")
    return {Mode::kOut, Mode::kIn, Mode::kWeak, Mode::kStrong};
  try {
    return {parse_mode(mode)};
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

TrialConfig resolve_trial(const KeyValueConfig& cfg, bool need_lambda_l) {
  TrialConfig tc;
  ResolvedChannel rc = resolve_channel(cfg);
  tc.channel = rc.params;
  tc.model = rc.model;
  tc.lambda_l = need_lambda_l ? require_density(cfg, "lambda_l") : 0.0;
  tc.lambda_e = require_density(cfg, "lambda_e");
  tc.half_width = cfg.get_double("L", 10.0);
  if (!(tc.half_width > 0.0)) throw ConfigError("L must be > 0");
  tc.reach_radius = cfg.get_double("R", 0.4 * tc.half_width);
  if (!(tc.reach_radius > 0.0 && tc.reach_radius <= tc.half_width))
    throw ConfigError("R must satisfy 0 < R <= L");
  tc.trials = cfg.get_int("trials", 400);
  if (tc.trials < 1) throw ConfigError("trials must be >= 1");
  tc.master_seed = cfg.get_u64("seed");
  tc.eaves_padding = cfg.get_double("eaves_padding", -1.0);
  tc.workers = static_cast<int>(cfg.get_int("workers", 0));
  if (tc.workers < 0) throw ConfigError("workers must be >= 0");
  return tc;
}

// Full resolved configuration, echoed into every JSON report.
ordered_json echo_config(const std::string& command,
                         const std::map<std::string, std::string>& resolved) {
  ordered_json j = ordered_json::object();
  j["command"] = command;
  for (const auto& [k, v] : resolved) j[k] = v;
  return j;
}

std::map<std::string, std::string> resolved_map(const KeyValueConfig& cfg) {
  return cfg.values();
}

void echo_trial_defaults(std::map<std::string, std::string>& m,
                         const TrialConfig& tc) {
  m["gain"] = tc.model.name();
  m["gamma"] = fmt_sig(tc.model.gamma());
  m["snr0"] = fmt_sig(tc.channel.snr0);
  m.erase("snr0_db");
  m["rho"] = fmt_sig(tc.channel.rho);
  m["L"] = fmt_sig(tc.half_width);
  m["R"] = fmt_sig(tc.reach_radius);
  m["trials"] = std::to_string(tc.trials);
  m["eaves_padding"] = fmt_sig(resolved_eaves_padding(tc));
  m["lambda_e"] = fmt_sig(tc.lambda_e);
}

void append_csv_row(std::string& csv, double lambda_l, Mode mode,
                    const PercolationEstimate& est, const TrialConfig& tc,
                    double rho) {
  csv += fmt_sig(lambda_l);
  csv += ',';
  csv += mode_name(mode);
  csv += ',';
  csv += fmt_sig(est.p_hat);
  csv += ',';
  csv += fmt_sig(est.ci_low);
  csv += ',';
  csv += fmt_sig(est.ci_high);
  csv += ',';
  csv += std::to_string(est.trials);
  csv += ',';
  csv += std::to_string(est.successes);
  csv += ',';
  csv += fmt_sig(tc.half_width);
  csv += ',';
  csv += fmt_sig(tc.reach_radius);
  csv += ',';
  csv += fmt_sig(rho);
  csv += ',';
  csv += fmt_sig(tc.lambda_e);
  csv += ',';
  csv += std::to_string(tc.master_seed);
  csv += '\n';
}

ordered_json estimate_json(double lambda_l, Mode mode,
                           const PercolationEstimate& est, double rho) {
  ordered_json j = ordered_json::object();
  j["lambda_l"] = json_num(lambda_l);
  j["mode"] = mode_name(mode);
  j["rho"] = json_num(rho);
  j["p_hat"] = json_num(est.p_hat);
  j["ci_low"] = json_num(est.ci_low);
  j["ci_high"] = json_num(est.ci_high);
  j["trials"] = est.trials;
  j["successes"] = est.successes;
  return j;
}

ordered_json proxy_json(const TrialConfig& tc) {
  ordered_json j = ordered_json::object();
  j["type"] = "radial_reach";
  j["L"] = json_num(tc.half_width);
  j["R"] = json_num(tc.reach_radius);
  j["note"] =
      "success = origin component reaches beyond R in the 2L x 2L window; "
      "finite-size bias relative to the infinite-plane limit is not "
      "corrected";
  return j;
}

// ---------------------------------------------------------------- graph

const std::set<std::string> kGraphKeys = {
    "seed",   "out",           "lambda_l",  "lambda_e", "gain",
    "gamma",  "snr0",          "snr0_db",   "rho",      "L",
    "eaves_padding", "cell_size", "torus",  "svg_edges"};

std::string dump_header(const std::string& columns,
                        const std::map<std::string, std::string>& resolved) {
  std::string head = "# " + std::string(kVersion) + "\n";
  for (const auto& [k, v] : resolved) head += "# " + k + " = " + v + "\n";
  head += "# " + columns + "\n";
  return head;
}

std::string render_svg(const SecrecyGraph& graph,
                       const std::vector<Point>& eaves, const std::string& edges,
                       const std::map<std::string, std::string>& resolved) {
  const Window& w = graph.window();
  const double size = 720.0, margin = 24.0;
  double scale = (size - 2 * margin) / std::max(w.width(), w.height());
  auto sx = [&](double x) { return margin + (x - w.lo.x) * scale; };
  auto sy = [&](double y) { return margin + (w.hi.y - y) * scale; };
  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"720\" "
         "height=\"720\" viewBox=\"0 0 720 720\">\n";
  svg += "<!-- " + std::string(kVersion);
  for (const auto& [k, v] : resolved) svg += " " + k + "=" + v;
  svg += " -->\n";
  svg += "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" "
         "refY=\"5\" markerWidth=\"5\" markerHeight=\"5\" "
         "orient=\"auto\"><path d=\"M 0 0 L 10 5 L 0 10 z\" "
         "fill=\"#888888\"/></marker></defs>\n";
  svg += "<rect x=\"" + fmt_sig(sx(w.lo.x)) + "\" y=\"" + fmt_sig(sy(w.hi.y)) +
         "\" width=\"" + fmt_sig(w.width() * scale) + "\" height=\"" +
         fmt_sig(w.height() * scale) +
         "\" fill=\"white\" stroke=\"#333333\"/>\n";
  const auto& nodes = graph.nodes();
  auto line = [&](NodeId i, NodeId j, bool arrow) {
    svg += "<line x1=\"" + fmt_sig(sx(nodes[i].x)) + "\" y1=\"" +
           fmt_sig(sy(nodes[i].y)) + "\" x2=\"" + fmt_sig(sx(nodes[j].x)) +
           "\" y2=\"" + fmt_sig(sy(nodes[j].y)) +
           "\" stroke=\"#888888\" stroke-width=\"0.8\"";
    if (arrow) svg += " marker-end=\"url(#arrow)\"";
    svg += "/>\n";
  };
  if (edges == "out") {
    for (NodeId i = 0; i < graph.num_nodes(); ++i)
      for (NodeId j : graph.out_adj()[i]) line(i, j, true);
  } else {
    Mode m = edges == "strong" ? Mode::kStrong : Mode::kWeak;
    for (NodeId i = 0; i < graph.num_nodes(); ++i)
      for (NodeId j : graph.out_adj()[i])
        if (j > i && graph.edge_exists(i, j, m)) line(i, j, false);
  }
  for (const Point& e : eaves) {
    if (!w.contains(e)) continue;
    double cx = sx(e.x), cy = sy(e.y), r = 3.2;
    svg += "<path d=\"M " + fmt_sig(cx - r) + " " + fmt_sig(cy - r) + " L " +
           fmt_sig(cx + r) + " " + fmt_sig(cy + r) + " M " + fmt_sig(cx - r) +
           " " + fmt_sig(cy + r) + " L " + fmt_sig(cx + r) + " " +
           fmt_sig(cy - r) +
           "\" stroke=\"#d62728\" stroke-width=\"1.6\" fill=\"none\"/>\n";
  }
  for (NodeId i = 0; i < graph.num_nodes(); ++i) {
    svg += "<circle cx=\"" + fmt_sig(sx(nodes[i].x)) + "\" cy=\"" +
           fmt_sig(sy(nodes[i].y)) +
           "\" r=\"2.6\" fill=\"#1f77b4\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

int cmd_graph(const KeyValueConfig& cfg) {
  cfg.require_known(kGraphKeys);
  TrialConfig tc;  // reuse the trial sampler for the single realization
  ResolvedChannel rc = resolve_channel(cfg);
  tc.channel = rc.params;
  tc.model = rc.model;
  tc.lambda_l = require_density(cfg, "lambda_l");
  tc.lambda_e = require_density(cfg, "lambda_e");
  tc.half_width = cfg.get_double("L", 10.0);
  if (!(tc.half_width > 0.0)) throw ConfigError("L must be > 0");
  tc.reach_radius = 0.4 * tc.half_width;
  tc.master_seed = cfg.get_u64("seed");
  bool torus = cfg.get_bool("torus", false);
  // Wrapping is only consistent when both processes live in the same
  // window, so the torus variant samples eavesdroppers without padding.
  tc.eaves_padding = cfg.get_double("eaves_padding", torus ? 0.0 : -1.0);
  std::string svg_edges = cfg.get_string("svg_edges", "weak");
  if (svg_edges != "out" && svg_edges != "weak" && svg_edges != "strong")
    throw ConfigError("svg_edges must be out, weak or strong");
  std::string out = cfg.get_string("out");

  TrialRealization sample =
      sample_trial_realization(tc, tc.lambda_l, /*trial_index=*/0);
  NetworkRealization r;
  r.window = sample.window;
  r.legit = sample.legit;
  r.eaves = sample.eaves;
  r = condition_origin(std::move(r));
  BuildOptions opts;
  opts.torus = torus;
  opts.cell_size = cfg.get_double("cell_size", 0.0);
  SecrecyGraph graph = build_secrecy_graph(r, tc.channel, tc.model, opts);

  auto resolved = resolved_map(cfg);
  echo_trial_defaults(resolved, tc);
  resolved.erase("trials");
  resolved.erase("R");
  resolved["lambda_l"] = fmt_sig(tc.lambda_l);
  resolved["torus"] = torus ? "1" : "0";
  resolved["svg_edges"] = svg_edges;

  std::string nodes = dump_header("id x y rho_e r_out", resolved);
  for (NodeId i = 0; i < graph.num_nodes(); ++i) {
    nodes += std::to_string(i) + " " + fmt_sig(graph.nodes()[i].x) + " " +
             fmt_sig(graph.nodes()[i].y) + " " +
             fmt_sig(graph.nearest_eave()[i]) + " " +
             fmt_sig(graph.out_radius()[i]) + "\n";
  }
  write_file(out + ".nodes.txt", nodes);

  std::string edges = dump_header("i j", resolved);
  for (NodeId i = 0; i < graph.num_nodes(); ++i)
    for (NodeId j : graph.out_adj()[i])
      edges += std::to_string(i) + " " + std::to_string(j) + "\n";
  write_file(out + ".edges.txt", edges);

  std::string eaves = dump_header("id x y", resolved);
  for (std::size_t k = 0; k < r.eaves.size(); ++k)
    eaves += std::to_string(k) + " " + fmt_sig(r.eaves[k].x) + " " +
             fmt_sig(r.eaves[k].y) + "\n";
  write_file(out + ".eaves.txt", eaves);

  write_file(out + ".svg", render_svg(graph, r.eaves, svg_edges, resolved));
  return 0;
}

// ------------------------------------------------- simulate / sweeps

const std::set<std::string> kSimulateKeys = {
    "seed", "out",  "lambda_l", "lambda_e", "gain",    "gamma",
    "snr0", "snr0_db", "rho",   "L",        "R",       "trials",
    "mode", "workers", "eaves_padding"};

int cmd_simulate(const KeyValueConfig& cfg) {
  cfg.require_known(kSimulateKeys);
  TrialConfig tc = resolve_trial(cfg, /*need_lambda_l=*/true);
  std::vector<Mode> modes = resolve_modes(cfg, "all");
  std::string out = cfg.get_string("out");

  auto estimates = estimate_all_modes(tc);

  auto resolved = resolved_map(cfg);
  echo_trial_defaults(resolved, tc);
  resolved["lambda_l"] = fmt_sig(tc.lambda_l);
  resolved["mode"] = cfg.get_string("mode", "all");

  std::string csv = std::string(kCsvHeader) + "\n";
  ordered_json results = ordered_json::array();
  for (Mode m : modes) {
    const auto& est = estimates[static_cast<int>(m)];
    append_csv_row(csv, tc.lambda_l, m, est, tc, tc.channel.rho);
    results.push_back(estimate_json(tc.lambda_l, m, est, tc.channel.rho));
  }
  write_file(out + ".csv", csv);

  ordered_json j = ordered_json::object();
  j["version"] = kVersion;
  j["config"] = echo_config("simulate", resolved);
  j["proxy"] = proxy_json(tc);
  j["results"] = results;
  j["truncated"] = false;
  write_file(out + ".json", j.dump(2) + "\n");
  return 0;
}

const std::set<std::string> kSweepKeys = {
    "seed", "out",  "lambda_grid", "lambda_e", "gain",    "gamma",
    "snr0", "snr0_db", "rho",      "L",        "R",       "trials",
    "mode", "workers", "eaves_padding", "crossing"};

int cmd_sweep(const KeyValueConfig& cfg, const std::atomic<bool>* stop) {
  cfg.require_known(kSweepKeys);
  TrialConfig tc = resolve_trial(cfg, /*need_lambda_l=*/false);
  std::vector<Mode> modes = resolve_modes(cfg, "all");
  std::vector<double> grid = cfg.get_grid("lambda_grid");
  double crossing = cfg.get_double("crossing", 0.5);
  if (!(crossing > 0.0 && crossing < 1.0))
    throw ConfigError("crossing must lie in (0,1)");
  std::string out = cfg.get_string("out");

  SweepResult sweep = sweep_lambda_l(tc, grid, stop);
  bool truncated = sweep.completed_trials < tc.trials;

  auto resolved = resolved_map(cfg);
  echo_trial_defaults(resolved, tc);
  resolved["mode"] = cfg.get_string("mode", "all");
  resolved["crossing"] = fmt_sig(crossing);

  std::string csv = std::string(kCsvHeader) + "\n";
  ordered_json results = ordered_json::array();
  for (std::size_t g = 0; g < sweep.lambda_grid.size(); ++g) {
    for (Mode m : modes) {
      const auto& est = sweep.estimates[static_cast<int>(m)][g];
      append_csv_row(csv, sweep.lambda_grid[g], m, est, tc, tc.channel.rho);
      results.push_back(
          estimate_json(sweep.lambda_grid[g], m, est, tc.channel.rho));
    }
  }
  write_file(out + ".csv", csv);

  ordered_json lambda_c = ordered_json::object();
  for (Mode m : modes) {
    ordered_json per_mode = ordered_json::object();
    std::vector<double> p;
    for (const auto& est : sweep.estimates[static_cast<int>(m)])
      p.push_back(est.p_hat);
    for (double c : {crossing, 0.05, 0.95}) {
      char key[32];
      std::snprintf(key, sizeof(key), "%g", c);
      auto lc = extract_critical_density(sweep.lambda_grid, p, c);
      per_mode[key] = lc ? json_num(*lc) : ordered_json(nullptr);
    }
    lambda_c[mode_name(m)] = per_mode;
  }

  ordered_json j = ordered_json::object();
  j["version"] = kVersion;
  j["config"] = echo_config("sweep", resolved);
  j["proxy"] = proxy_json(tc);
  j["completed_trials"] = sweep.completed_trials;
  j["results"] = results;
  j["lambda_c"] = lambda_c;
  j["truncated"] = truncated;
  write_file(out + ".json", j.dump(2) + "\n");
  return 0;
}

const std::set<std::string> kSweepRhoKeys = {
    "seed", "out",  "rho_grid", "lambda_l", "lambda_e", "gain",  "gamma",
    "snr0", "snr0_db", "L",     "R",        "trials",   "mode",  "workers",
    "eaves_padding"};

int cmd_sweep_rho(const KeyValueConfig& cfg, const std::atomic<bool>* stop) {
  cfg.require_known(kSweepRhoKeys);
  TrialConfig tc = resolve_trial(cfg, /*need_lambda_l=*/true);
  std::vector<Mode> modes = resolve_modes(cfg, "weak");
  std::vector<double> grid = cfg.get_grid("rho_grid");
  if (!(grid.front() >= 0.0)) throw ConfigError("rho grid must be >= 0");
  std::string out = cfg.get_string("out");

  RhoSweepResult sweep = sweep_rho(tc, grid, stop);
  bool truncated = sweep.completed_trials < tc.trials;

  auto resolved = resolved_map(cfg);
  echo_trial_defaults(resolved, tc);
  resolved.erase("rho");
  resolved["lambda_l"] = fmt_sig(tc.lambda_l);
  resolved["mode"] = cfg.get_string("mode", "weak");

  std::string csv = std::string(kCsvHeader) + "\n";
  ordered_json results = ordered_json::array();
  for (std::size_t g = 0; g < sweep.rho_grid.size(); ++g) {
    for (Mode m : modes) {
      const auto& est = sweep.estimates[static_cast<int>(m)][g];
      append_csv_row(csv, tc.lambda_l, m, est, tc, sweep.rho_grid[g]);
      results.push_back(
          estimate_json(tc.lambda_l, m, est, sweep.rho_grid[g]));
    }
  }
  write_file(out + ".csv", csv);

  ordered_json j = ordered_json::object();
  j["version"] = kVersion;
  j["config"] = echo_config("sweep-rho", resolved);
  j["proxy"] = proxy_json(tc);
  j["completed_trials"] = sweep.completed_trials;
  j["results"] = results;
  j["truncated"] = truncated;
  write_file(out + ".json", j.dump(2) + "\n");
  return 0;
}

// --------------------------------------------------------------- bounds

const std::set<std::string> kBoundsKeys = {
    "seed",         "out",           "lambda_l", "lambda_l_grid",
    "lambda_e",     "lambda_e_grid", "gain",     "gamma",
    "snr0",         "snr0_db",       "rho",      "d",
    "n_e",          "delta"};

int cmd_bounds(const KeyValueConfig& cfg) {
  cfg.require_known(kBoundsKeys);
  ResolvedChannel rc = resolve_channel(cfg);
  std::string out = cfg.get_string("out");
  cfg.get_u64("seed");  // unused by the analytics; required for provenance

  std::vector<double> ll_grid = cfg.has("lambda_l_grid")
                                    ? cfg.get_grid("lambda_l_grid")
                                    : std::vector<double>{require_density(cfg, "lambda_l")};
  std::vector<double> le_grid = cfg.has("lambda_e_grid")
                                    ? cfg.get_grid("lambda_e_grid")
                                    : std::vector<double>{require_density(cfg, "lambda_e")};
  double d = cfg.get_double("d");
  if (!(d > 0.0)) throw ConfigError("d must be > 0");
  std::optional<std::int64_t> n_e;
  if (cfg.has("n_e")) {
    n_e = cfg.get_int("n_e");
    if (*n_e < 1) throw ConfigError("n_e must be >= 1");
  }
  std::optional<double> fixed_delta;
  if (cfg.has("delta")) {
    fixed_delta = cfg.get_double("delta");
    if (!(*fixed_delta > 0.0)) throw ConfigError("delta must be > 0");
  }

  auto resolved = resolved_map(cfg);
  resolved["gain"] = rc.model.name();
  resolved["gamma"] = fmt_sig(rc.model.gamma());
  resolved["snr0"] = fmt_sig(rc.params.snr0);
  resolved.erase("snr0_db");
  resolved["rho"] = fmt_sig(rc.params.rho);

  ordered_json points = ordered_json::array();
  for (double le : le_grid) {
    for (double ll : ll_grid) {
      ordered_json pt = ordered_json::object();
      pt["lambda_l"] = json_num(ll);
      pt["lambda_e"] = json_num(le);

      ordered_json hex = ordered_json::object();
      if (fixed_delta) {
        double p = hex_closed_prob(ll, le, *fixed_delta);
        hex["delta"] = json_num(*fixed_delta);
        hex["p_closed"] = json_num(p);
        hex["condition_met"] = p > 0.5;
        hex["feasible_delta"] =
            p > 0.5 ? json_num(*fixed_delta) : ordered_json(nullptr);
      } else {
        HexBoundReport hr = hex_subcritical_search(ll, le);
        hex["delta"] = json_num(hr.delta);
        hex["p_closed"] = json_num(hr.p_closed);
        hex["condition_met"] = hr.condition_met;
        hex["feasible_delta"] = hr.feasible_delta
                                    ? json_num(*hr.feasible_delta)
                                    : ordered_json(nullptr);
      }
      pt["hex"] = hex;

      ordered_json sq = ordered_json::object();
      try {
        SquareBoundReport sr =
            square_supercritical_check(ll, le, rc.params, rc.model, d, n_e);
        sq["d"] = json_num(sr.d);
        sq["r_free"] = json_num(sr.r_free);
        sq["m"] = sr.margin;
        sq["n_s"] = sr.n_s;
        sq["n_e"] = sr.n_e;
        sq["q"] = json_num(sr.q);
        sq["peierls_threshold"] = json_num(sr.threshold);
        sq["condition_met"] = sr.condition_met;
        sq["circuit_bound"] = json_num(sr.circuit_bound);
      } catch (const std::domain_error& e) {
        // A bad edge length poisons one grid point, not the whole run.
        sq["error"] = e.what();
      }
      pt["square"] = sq;
      points.push_back(pt);
    }
  }

  ordered_json j = ordered_json::object();
  j["version"] = kVersion;
  j["config"] = echo_config("bounds", resolved);
  j["points"] = points;
  write_file(out + ".json", j.dump(2) + "\n");
  return 0;
}

}  // namespace

int run_command(const std::string& command, const KeyValueConfig& config,
                const std::atomic<bool>* stop) {
  try {
    if (command == "graph") return cmd_graph(config);
    if (command == "simulate") return cmd_simulate(config);
    if (command == "sweep") return cmd_sweep(config, stop);
    if (command == "sweep-rho") return cmd_sweep_rho(config, stop);
    if (command == "bounds") return cmd_bounds(config);
    std::cerr << "unknown command: " << command << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 3;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace secgraph
