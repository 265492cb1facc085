#pragma once

#include <string>

#include "json.hpp"

namespace secgraph {

inline constexpr const char* kVersion = "secgraph 0.1.0";

// Exact CSV header shared by simulate / sweep / sweep-rho outputs.
inline constexpr const char* kCsvHeader =
    "lambda_l,mode,p_hat,ci_low,ci_high,trials,successes,L,R,rho,lambda_e,"
    "seed";

// Fixed-notation formatting with 9 significant digits; "inf"/"-inf" for
// infinities. Every float written to an output file goes through this so
// outputs are byte-stable.
std::string fmt_sig(double x);

// Nearest double to fmt_sig(x), used for numeric JSON fields so they
// carry the same 9-significant-digit precision as the text outputs.
nlohmann::ordered_json json_num(double x);

// Writes the whole buffer, creating parent directories; throws IoError
// with the path on failure.
void write_file(const std::string& path, const std::string& contents);

}  // namespace secgraph
