#include "secgraph/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace secgraph {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("key '" + key + "': not a number: '" + value + "'");
  }
}

}  // namespace

KeyValueConfig KeyValueConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path);
  KeyValueConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path + ":" + std::to_string(lineno) +
                        ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw ConfigError(path + ":" + std::to_string(lineno) + ": empty key");
    cfg.values_[key] = value;
  }
  return cfg;
}

void KeyValueConfig::apply_override(const std::string& token) {
  std::size_t eq = token.find('=');
  if (eq == std::string::npos || eq == 0)
    throw ConfigError("override must look like key=value: '" + token + "'");
  values_[trim(token.substr(0, eq))] = trim(token.substr(eq + 1));
}

void KeyValueConfig::set(const std::string& key, const std::string& value) {
  values_[key] = value;
}

bool KeyValueConfig::has(const std::string& key) const {
  return values_.count(key) != 0;
}

std::string KeyValueConfig::get_string(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError("missing required key '" + key + "'");
  return it->second;
}

std::string KeyValueConfig::get_string(const std::string& key,
                                       const std::string& fallback) const {
  auto it = values_.find(key);
  return it == values_.end() ? fallback : it->second;
}

double KeyValueConfig::get_double(const std::string& key) const {
  return parse_double(key, get_string(key));
}

double KeyValueConfig::get_double(const std::string& key,
                                  double fallback) const {
  auto it = values_.find(key);
  return it == values_.end() ? fallback : parse_double(key, it->second);
}

std::int64_t KeyValueConfig::get_int(const std::string& key) const {
  double v = get_double(key);
  auto n = static_cast<std::int64_t>(v);
  if (static_cast<double>(n) != v)
    throw ConfigError("key '" + key + "': expected an integer");
  return n;
}

std::int64_t KeyValueConfig::get_int(const std::string& key,
                                     std::int64_t fallback) const {
  return has(key) ? get_int(key) : fallback;
}

std::uint64_t KeyValueConfig::get_u64(const std::string& key) const {
  std::string value = get_string(key);
  try {
    std::size_t pos = 0;
    unsigned long long v = std::stoull(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("key '" + key + "': not an unsigned integer: '" + value +
                      "'");
  }
}

bool KeyValueConfig::get_bool(const std::string& key, bool fallback) const {
  if (!has(key)) return fallback;
  std::string v = get_string(key);
  if (v == "1" || v == "true" || v == "yes") return true;
  if (v == "0" || v == "false" || v == "no") return false;
  throw ConfigError("key '" + key + "': expected a boolean, got '" + v + "'");
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> grid;
  if (text.find(':') != std::string::npos) {
    std::istringstream ss(text);
    std::string part;
    std::vector<double> abc;
    while (std::getline(ss, part, ':'))
      abc.push_back(parse_double("grid", part));
    if (abc.size() != 3) throw ConfigError("range grid must be lo:hi:step");
    double lo = abc[0], hi = abc[1], step = abc[2];
    if (!(step > 0.0) || !(hi >= lo))
      throw ConfigError("range grid must satisfy lo <= hi, step > 0");
    long count = std::lround(std::floor((hi - lo) / step + 1e-9));
    for (long i = 0; i <= count; ++i) grid.push_back(lo + i * step);
  } else {
    std::istringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ','))
      grid.push_back(parse_double("grid", part));
  }
  if (grid.empty()) throw ConfigError("grid is empty");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1]))
      throw ConfigError("grid must be strictly increasing");
  return grid;
}

std::vector<double> KeyValueConfig::get_grid(const std::string& key) const {
  try {
    return parse_grid(get_string(key));
  } catch (const ConfigError& e) {
    throw ConfigError("key '" + key + "': " + e.what());
  }
}

void KeyValueConfig::require_known(
    const std::set<std::string>& allowed) const {
  for (const auto& [key, value] : values_)
    if (allowed.count(key) == 0)
      throw ConfigError("unknown config key '" + key + "'");
}

}  // namespace secgraph
