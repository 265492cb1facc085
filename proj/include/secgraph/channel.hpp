#pragma once

#include <optional>
#include <string>

namespace secgraph {

// Distance-dependent power gain g(r): continuous, strictly decreasing,
// vanishing as r grows. Two built-in variants, both with closed-form
// inverses:
//   power_law          g(r) = r^-gamma          (g(0) = infinity)
//   bounded_power_law  g(r) = 1 / (1 + r^gamma) (g(0) = 1)
class GainModel {
 public:
  enum class Kind { kPowerLaw, kBoundedPowerLaw };

  GainModel(Kind kind, double gamma);

  static GainModel power_law(double gamma) {
    return GainModel(Kind::kPowerLaw, gamma);
  }
  static GainModel bounded_power_law(double gamma) {
    return GainModel(Kind::kBoundedPowerLaw, gamma);
  }

  double gain(double r) const;

  // Largest r with g(r) >= y, i.e. the inverse of gain on its range.
  // y <= 0 maps to +infinity, y > g(0) maps to 0.
  double gain_inverse(double y) const;

  double gain_at_zero() const;

  Kind kind() const { return kind_; }
  double gamma() const { return gamma_; }
  bool bounded() const { return kind_ == Kind::kBoundedPowerLaw; }
  std::string name() const;

 private:
  Kind kind_;
  double gamma_;
};

struct ChannelParams {
  double snr0 = 10.0;  // transmit power over noise power, linear
  double rho = 0.0;    // secrecy-rate threshold, bits per complex dimension
};

// Maximum secrecy rate of a link of length d_link whose transmitter sees
// its nearest eavesdropper at distance d_eve (+infinity for none):
//   [log2(1 + snr0 g(d_link)) - log2(1 + snr0 g(d_eve))]^+
double msr(const ChannelParams& params, const GainModel& model, double d_link,
           double d_eve);

// Supremum of achievable secrecy rates, log2(1 + snr0 g(0)); +infinity
// for the unbounded power law.
double rho_max(const ChannelParams& params, const GainModel& model);

// Secure out-radius of a transmitter whose nearest eavesdropper is at
// distance rho_e: a directed edge to a receiver at distance d exists iff
// d < out_radius(...). Zero whenever rho >= rho_max. For rho == 0 this is
// exactly rho_e, independent of the gain model.
double out_radius(const ChannelParams& params, const GainModel& model,
                  double rho_e);

// Radius that must be eavesdropper-free around both endpoints so that the
// worst-placed node pair at separation sqrt(5) d still connects in both
// directions. Empty when d is too large for the expression to be defined
// (see valid_edge_length).
std::optional<double> required_free_radius(const ChannelParams& params,
                                           const GainModel& model, double d);

// Supremum of square-lattice edge lengths d for which required_free_radius
// is defined; +infinity at rho == 0.
double valid_edge_length(const ChannelParams& params, const GainModel& model);

}  // namespace secgraph
