#include <atomic>
#include <csignal>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "secgraph/commands.hpp"
#include "secgraph/config.hpp"
#include "secgraph/report.hpp"

namespace {

std::atomic<bool> g_stop{false};

void handle_signal(int) { g_stop.store(true); }

struct SubArgs {
  std::string config_path;
  std::vector<std::string> overrides;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(secgraph::kVersion) +
               " - secure-connectivity graph percolation toolkit"};
  app.require_subcommand(1);

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"graph", "dump one realization of the secrecy graph (text + SVG)"},
      {"simulate", "estimate percolation probability at a single point"},
      {"sweep", "percolation probability versus legitimate-node density"},
      {"sweep-rho", "percolation probability versus the secrecy threshold"},
      {"bounds", "evaluate analytical sub/supercritical certificates"},
  };

  std::vector<SubArgs> args(commands.size());
  std::vector<CLI::App*> subs;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    CLI::App* sub = app.add_subcommand(commands[i].first, commands[i].second);
    sub->add_option("-c,--config", args[i].config_path,
                    "flat key = value config file");
    sub->add_option("overrides", args[i].overrides,
                    "key=value overrides (win over the config file)");
    subs.push_back(sub);
  }

  CLI11_PARSE(app, argc, argv);

  std::signal(SIGINT, handle_signal);
  std::signal(SIGTERM, handle_signal);

  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (!subs[i]->parsed()) continue;
    try {
      secgraph::KeyValueConfig cfg;
      if (!args[i].config_path.empty())
        cfg = secgraph::KeyValueConfig::from_file(args[i].config_path);
      for (const std::string& token : args[i].overrides)
        cfg.apply_override(token);
      return secgraph::run_command(commands[i].first, cfg, &g_stop);
    } catch (const secgraph::IoError& e) {
      std::cerr << "io error: " << e.what() << "\n";
      return 3;
    } catch (const secgraph::ConfigError& e) {
      std::cerr << "config error: " << e.what() << "\n";
      return 2;
    }
  }
  return 2;
}
