#include "secgraph/report.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "secgraph/config.hpp"

namespace secgraph {

std::string fmt_sig(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";
  constexpr int kSig = 9;
  int exponent = static_cast<int>(std::floor(std::log10(std::fabs(x))));
  int decimals = kSig - 1 - exponent;
  char buf[512];
  if (decimals >= 0) {
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, x);
  } else {
    // Magnitude larger than the precision: round to 9 significant digits
    // first, then print without a fractional part.
    double scale = std::pow(10.0, -decimals);
    std::snprintf(buf, sizeof(buf), "%.0f", std::round(x / scale) * scale);
  }
  return buf;
}

nlohmann::ordered_json json_num(double x) {
  if (!std::isfinite(x)) return fmt_sig(x);
  return std::stod(fmt_sig(x));
}

void write_file(const std::string& path, const std::string& contents) {
  std::filesystem::path p(path);
  std::error_code ec;
  if (p.has_parent_path())
    std::filesystem::create_directories(p.parent_path(), ec);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open output file: " + path);
  out.write(contents.data(),
            static_cast<std::streamsize>(contents.size()));
  out.flush();
  if (!out) throw IoError("failed writing output file: " + path);
}

}  // namespace secgraph
