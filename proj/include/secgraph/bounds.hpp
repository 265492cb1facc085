#pragma once

#include <cstdint>
#include <optional>

#include "secgraph/channel.hpp"

namespace secgraph {

// Analytical certification of sub/supercritical parameter regions via
// lattice coupling. The hexagonal construction certifies that the weak
// graph does not percolate; the square-lattice construction certifies
// that the strong graph does.

// Probability that a hexagonal face of side delta is "closed": each of
// its six center triangles holds at least one eavesdropper and the
// hexagon holds no legitimate node,
//   (1 - exp(-lambda_e (sqrt(3)/4) delta^2))^6
//     * exp(-lambda_l (3 sqrt(3)/2) delta^2).
double hex_closed_prob(double lambda_l, double lambda_e, double delta);

struct HexBoundReport {
  double delta = 0.0;     // maximizer of hex_closed_prob
  double p_closed = 0.0;  // value at the maximizer
  bool condition_met = false;             // p_closed > 1/2
  std::optional<double> feasible_delta;   // delta when condition_met
};

// Maximizes hex_closed_prob over delta by golden-section search on
// log(delta) in [1e-3, 1e3] m. condition_met certifies that the weak
// graph is subcritical at (lambda_l, lambda_e).
HexBoundReport hex_subcritical_search(double lambda_l, double lambda_e);

// Margin of whole squares needed around the 2x1 edge rectangle so the
// four corner balls of radius r_free fit: ceil(r_free / d).
int square_margin(double d, double r_free);

// Number of squares in the lattice-aligned free rectangle: with
// m = square_margin, (2 + 2m) * (1 + 2m).
std::int64_t square_n_s(double d, double r_free);

// Probability that a square-lattice edge of length d is closed:
//   1 - (1 - exp(-lambda_l d^2))^2 * exp(-lambda_e n_s d^2).
double square_q(double lambda_l, double lambda_e, double d, std::int64_t n_s);

// Dependence span used when the caller does not supply one: along any
// lattice path, at least one edge in every 2*(2m+3) consecutive edges has
// a free rectangle disjoint from the others'.
std::int64_t default_dependence_span(int margin);

// Circuit-enumeration bound sum_{n>=1} 4 n 3^(n-2) q^(n/n_e) in closed
// form, 4 x / (3 (1 - 3x)^2) with x = q^(1/n_e). Throws std::domain_error
// when x >= 1/3 (divergent).
double peierls_circuit_bound(double q, std::int64_t n_e);

// ((11 - 2 sqrt(10)) / 27)^n_e, the exact value below which the circuit
// bound stays under 1.
double peierls_threshold(std::int64_t n_e);

struct SquareBoundReport {
  double d = 0.0;
  double r_free = 0.0;
  int margin = 0;
  std::int64_t n_s = 0;
  std::int64_t n_e = 1;
  double q = 0.0;
  double threshold = 0.0;       // peierls_threshold(n_e)
  bool condition_met = false;   // q < threshold
  double circuit_bound = 0.0;   // +infinity when the series diverges
};

// Evaluates the supercritical condition for the strong graph at edge
// length d. n_e defaults to default_dependence_span(margin). Throws
// std::domain_error when d is not below valid_edge_length.
SquareBoundReport square_supercritical_check(
    double lambda_l, double lambda_e, const ChannelParams& params,
    const GainModel& model, double d,
    std::optional<std::int64_t> n_e = std::nullopt);

}  // namespace secgraph
