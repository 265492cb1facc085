#include "secgraph/channel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace secgraph {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

GainModel::GainModel(Kind kind, double gamma) : kind_(kind), gamma_(gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma))
    throw std::invalid_argument("gain model requires gamma > 0");
}

double GainModel::gain(double r) const {
  if (!(r >= 0.0)) throw std::invalid_argument("gain requires r >= 0");
  switch (kind_) {
    case Kind::kPowerLaw:
      if (r == 0.0) return kInf;
      return std::pow(r, -gamma_);
    case Kind::kBoundedPowerLaw:
      return 1.0 / (1.0 + std::pow(r, gamma_));
  }
  return 0.0;
}

double GainModel::gain_inverse(double y) const {
  if (y <= 0.0) return kInf;
  switch (kind_) {
    case Kind::kPowerLaw:
      if (y == kInf) return 0.0;
      return std::pow(y, -1.0 / gamma_);
    case Kind::kBoundedPowerLaw: {
      if (y >= 1.0) return 0.0;
      return std::pow(1.0 / y - 1.0, 1.0 / gamma_);
    }
  }
  return 0.0;
}

double GainModel::gain_at_zero() const {
  return kind_ == Kind::kPowerLaw ? kInf : 1.0;
}

std::string GainModel::name() const {
  return kind_ == Kind::kPowerLaw ? "power_law" : "bounded_power_law";
}

double msr(const ChannelParams& params, const GainModel& model, double d_link,
           double d_eve) {
  double g_link = d_link == kInf ? 0.0 : model.gain(d_link);
  double g_eve = d_eve == kInf ? 0.0 : model.gain(d_eve);
  double rate = std::log2(1.0 + params.snr0 * g_link) -
                std::log2(1.0 + params.snr0 * g_eve);
  return rate > 0.0 ? rate : 0.0;
}

double rho_max(const ChannelParams& params, const GainModel& model) {
  double g0 = model.gain_at_zero();
  if (g0 == kInf) return kInf;
  return std::log2(1.0 + params.snr0 * g0);
}

double out_radius(const ChannelParams& params, const GainModel& model,
                  double rho_e) {
  // rho == 0 collapses to |x_i - x_j| < rho_e for every gain model; keep
  // that identity exact rather than routing through pow and its inverse.
  if (params.rho == 0.0) return rho_e;
  double scale = std::exp2(params.rho);
  double g_eve = rho_e == kInf ? 0.0 : model.gain(rho_e);
  double threshold = scale * g_eve + (scale - 1.0) / params.snr0;
  return model.gain_inverse(threshold);
}

std::optional<double> required_free_radius(const ChannelParams& params,
                                           const GainModel& model, double d) {
  if (!(d > 0.0)) throw std::invalid_argument("edge length must be positive");
  double diag = std::sqrt(5.0) * d;
  if (params.rho == 0.0) return diag;
  double inv_scale = std::exp2(-params.rho);
  double arg = inv_scale * model.gain(diag) - (1.0 - inv_scale) / params.snr0;
  if (arg <= 0.0) return std::nullopt;
  return model.gain_inverse(arg);
}

double valid_edge_length(const ChannelParams& params, const GainModel& model) {
  double arg = (std::exp2(params.rho) - 1.0) / params.snr0;
  return model.gain_inverse(arg) / std::sqrt(5.0);
}

}  // namespace secgraph
