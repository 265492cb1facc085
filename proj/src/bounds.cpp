#include "secgraph/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace secgraph {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
const double kSqrt3 = std::sqrt(3.0);
}  // namespace

double hex_closed_prob(double lambda_l, double lambda_e, double delta) {
  if (!(delta > 0.0)) throw std::invalid_argument("hexagon side must be > 0");
  if (!(lambda_l >= 0.0) || !(lambda_e >= 0.0))
    throw std::invalid_argument("densities must be >= 0");
  double d2 = delta * delta;
  double triangle = 1.0 - std::exp(-lambda_e * (kSqrt3 / 4.0) * d2);
  double empty = std::exp(-lambda_l * (3.0 * kSqrt3 / 2.0) * d2);
  double t2 = triangle * triangle;
  return t2 * t2 * t2 * empty;
}

HexBoundReport hex_subcritical_search(double lambda_l, double lambda_e) {
  HexBoundReport report;
  if (!(lambda_e > 0.0)) {
    report.delta = 1.0;
    report.p_closed = 0.0;
    return report;
  }
  // p_closed is unimodal in delta (increasing eavesdropper factor times a
  // decreasing vacancy factor), so golden-section on log(delta) finds the
  // maximum.
  const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = std::log(1e-3), hi = std::log(1e3);
  double a = hi - golden * (hi - lo);
  double b = lo + golden * (hi - lo);
  double fa = hex_closed_prob(lambda_l, lambda_e, std::exp(a));
  double fb = hex_closed_prob(lambda_l, lambda_e, std::exp(b));
  for (int iter = 0; iter < 200 && (hi - lo) > 1e-7; ++iter) {
    if (fa < fb) {
      lo = a;
      a = b;
      fa = fb;
      b = lo + golden * (hi - lo);
      fb = hex_closed_prob(lambda_l, lambda_e, std::exp(b));
    } else {
      hi = b;
      b = a;
      fb = fa;
      a = hi - golden * (hi - lo);
      fa = hex_closed_prob(lambda_l, lambda_e, std::exp(a));
    }
  }
  report.delta = std::exp(0.5 * (lo + hi));
  report.p_closed = hex_closed_prob(lambda_l, lambda_e, report.delta);
  report.condition_met = report.p_closed > 0.5;
  if (report.condition_met) report.feasible_delta = report.delta;
  return report;
}

int square_margin(double d, double r_free) {
  if (!(d > 0.0)) throw std::invalid_argument("edge length must be > 0");
  if (!(r_free >= 0.0)) throw std::invalid_argument("r_free must be >= 0");
  return static_cast<int>(std::ceil(r_free / d));
}

std::int64_t square_n_s(double d, double r_free) {
  std::int64_t m = square_margin(d, r_free);
  return (2 + 2 * m) * (1 + 2 * m);
}

double square_q(double lambda_l, double lambda_e, double d, std::int64_t n_s) {
  if (!(d > 0.0)) throw std::invalid_argument("edge length must be > 0");
  double d2 = d * d;
  double occupied = 1.0 - std::exp(-lambda_l * d2);
  double free = std::exp(-lambda_e * static_cast<double>(n_s) * d2);
  return 1.0 - occupied * occupied * free;
}

std::int64_t default_dependence_span(int margin) {
  return 2 * (2 * static_cast<std::int64_t>(margin) + 3);
}

double peierls_circuit_bound(double q, std::int64_t n_e) {
  if (!(q >= 0.0 && q <= 1.0))
    throw std::invalid_argument("q must be a probability");
  if (n_e < 1) throw std::invalid_argument("n_e must be >= 1");
  double x = std::pow(q, 1.0 / static_cast<double>(n_e));
  if (x >= 1.0 / 3.0)
    throw std::domain_error("circuit series diverges: q^(1/n_e) >= 1/3");
  double r = 1.0 - 3.0 * x;
  return 4.0 * x / (3.0 * r * r);
}

double peierls_threshold(std::int64_t n_e) {
  if (n_e < 1) throw std::invalid_argument("n_e must be >= 1");
  double base = (11.0 - 2.0 * std::sqrt(10.0)) / 27.0;
  return std::pow(base, static_cast<double>(n_e));
}

SquareBoundReport square_supercritical_check(
    double lambda_l, double lambda_e, const ChannelParams& params,
    const GainModel& model, double d, std::optional<std::int64_t> n_e) {
  if (!(d > 0.0)) throw std::invalid_argument("edge length must be > 0");
  if (!(d < valid_edge_length(params, model)))
    throw std::domain_error("edge length not below valid_edge_length");
  auto r_free = required_free_radius(params, model, d);
  if (!r_free)
    throw std::domain_error("free radius undefined at this edge length");
  SquareBoundReport report;
  report.d = d;
  report.r_free = *r_free;
  report.margin = square_margin(d, *r_free);
  report.n_s = square_n_s(d, *r_free);
  report.n_e = n_e.value_or(default_dependence_span(report.margin));
  if (report.n_e < 1) throw std::invalid_argument("n_e must be >= 1");
  report.q = square_q(lambda_l, lambda_e, d, report.n_s);
  report.threshold = peierls_threshold(report.n_e);
  report.condition_met = report.q < report.threshold;
  double x = std::pow(report.q, 1.0 / static_cast<double>(report.n_e));
  report.circuit_bound =
      x < 1.0 / 3.0 ? peierls_circuit_bound(report.q, report.n_e) : kInf;
  return report;
}

}  // namespace secgraph
