#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "secgraph/bounds.hpp"
#include "secgraph/percolation.hpp"
#include "secgraph/rng.hpp"

using namespace secgraph;
using oracles::hex_event_frequency;
using oracles::square_closed_frequency;

namespace {
constexpr double kPi = std::numbers::pi;
}  // namespace

TEST_CASE("hex closed probability: limits and formula") {
  CHECK(hex_closed_prob(0.0, 1.0, 50.0) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(hex_closed_prob(1.0, 1.0, 1e-4) == doctest::Approx(0.0));
  CHECK_THROWS_AS(hex_closed_prob(1.0, 1.0, 0.0), std::invalid_argument);

  // Spot value against a hand-expanded product.
  double delta = 3.0, ll = 0.05, le = 1.0;
  double tri = 1.0 - std::exp(-le * std::sqrt(3.0) / 4.0 * 9.0);
  double expect = std::pow(tri, 6.0) * std::exp(-ll * 1.5 * std::sqrt(3.0) * 9.0);
  CHECK(hex_closed_prob(ll, le, delta) == doctest::Approx(expect).epsilon(1e-14));
}

TEST_CASE("hex closed probability matches the point-process event frequency") {
  const int samples = 100000;
  double p = hex_closed_prob(0.05, 1.0, 3.0);
  double freq = hex_event_frequency(0.05, 1.0, 3.0, samples, 8675309);
  double sigma = std::sqrt(p * (1.0 - p) / samples);
  CHECK(std::fabs(freq - p) < 3.0 * sigma);
}

TEST_CASE("hex condition is scale-free in the density ratio") {
  // p depends on (lambda_e delta^2, lambda_l delta^2) only, so
  // feasibility is a function of lambda_l / lambda_e.
  auto a = hex_subcritical_search(0.02, 1.0);
  auto b = hex_subcritical_search(0.08, 4.0);
  CHECK(a.condition_met == b.condition_met);
  CHECK(a.p_closed == doctest::Approx(b.p_closed).epsilon(1e-6));
}

TEST_CASE("hex search: feasibility endpoints and self-consistency") {
  auto free_case = hex_subcritical_search(0.0, 1.0);
  CHECK(free_case.condition_met);
  CHECK(free_case.p_closed > 0.999);
  REQUIRE(free_case.feasible_delta.has_value());

  auto dense_case = hex_subcritical_search(1000.0, 1.0);
  CHECK_FALSE(dense_case.condition_met);
  CHECK_FALSE(dense_case.feasible_delta.has_value());

  auto feasible = hex_subcritical_search(0.02, 1.0);
  CHECK(feasible.condition_met);
  REQUIRE(feasible.feasible_delta.has_value());
  CHECK(hex_closed_prob(0.02, 1.0, *feasible.feasible_delta) > 0.5);

  auto zero_eaves = hex_subcritical_search(0.5, 0.0);
  CHECK_FALSE(zero_eaves.condition_met);
}

TEST_CASE("hex search maximum agrees with a dense grid scan") {
  for (double ll : {0.01, 0.05, 0.2}) {
    double best = 0.0;
    for (int i = 0; i <= 6000; ++i) {
      double delta = std::pow(10.0, -3.0 + i * 0.001);
      best = std::max(best, hex_closed_prob(ll, 1.0, delta));
    }
    auto found = hex_subcritical_search(ll, 1.0);
    // The scan maximum is a lower bound on the true maximum; the search
    // must match it to within the scan's own granularity.
    CHECK(found.p_closed >= best - 1e-12);
    CHECK(found.p_closed == doctest::Approx(best).epsilon(1e-4));
    CHECK(found.condition_met == (best > 0.5));
  }
}

TEST_CASE("hex closed probability monotone in both densities") {
  std::mt19937_64 eng(12);
  std::uniform_real_distribution<double> u(0.05, 3.0);
  for (int rep = 0; rep < 200; ++rep) {
    double ll = u(eng), le = u(eng), delta = u(eng);
    CHECK(hex_closed_prob(ll, le + 0.5, delta) >= hex_closed_prob(ll, le, delta));
    CHECK(hex_closed_prob(ll + 0.5, le, delta) <= hex_closed_prob(ll, le, delta));
  }
}

TEST_CASE("free rectangle size: margins and counts") {
  CHECK(square_n_s(1.0, 0.0) == 2);
  CHECK(square_margin(1.0, 0.0) == 0);
  CHECK(square_n_s(1.0, 1.0) == 12);
  CHECK(square_margin(1.0, 1.0) == 1);
  CHECK(square_n_s(0.5, std::sqrt(5.0) * 0.5) == 56);  // m = 3
}

TEST_CASE("free rectangle contains the corner balls, minimally") {
  std::mt19937_64 eng(33);
  std::uniform_real_distribution<double> ud(0.2, 2.0);
  std::uniform_real_distribution<double> ur(0.0, 5.0);
  for (int rep = 0; rep < 50; ++rep) {
    double d = ud(eng), r = ur(eng);
    int m = square_margin(d, r);
    double x0 = -m * d, x1 = (2 + m) * d;
    double y0 = -m * d, y1 = (1 + m) * d;
    const double corners[4][2] = {
        {0.0, 0.0}, {2.0 * d, 0.0}, {0.0, d}, {2.0 * d, d}};
    for (const auto& v : corners) {
      for (int k = 0; k < 256; ++k) {
        double a = 2.0 * kPi * k / 256.0;
        double px = v[0] + r * std::cos(a), py = v[1] + r * std::sin(a);
        CHECK(px >= x0 - 1e-12);
        CHECK(px <= x1 + 1e-12);
        CHECK(py >= y0 - 1e-12);
        CHECK(py <= y1 + 1e-12);
      }
    }
    if (m >= 1) {
      // One less margin row/column loses the leftmost ball point.
      double shrunk_x0 = -(m - 1) * d;
      CHECK(0.0 - r < shrunk_x0);
    }
  }
}

TEST_CASE("square edge-closed probability: limits and event frequency") {
  CHECK(square_q(1e9, 0.0, 0.5, 2) == doctest::Approx(0.0));
  CHECK(square_q(0.0, 1.0, 0.5, 2) == 1.0);

  const int samples = 100000;
  for (double le : {1.0, 0.1}) {
    std::int64_t n_s = square_n_s(0.5, std::sqrt(5.0) * 0.5);
    double q = square_q(5.0, le, 0.5, n_s);
    double freq = square_closed_frequency(5.0, le, 0.5, n_s, samples, 1337);
    double sigma = std::sqrt(q * (1.0 - q) / samples) + 1e-12;
    CHECK(std::fabs(freq - q) < 3.0 * sigma);
  }
}

TEST_CASE("square edge-closed probability monotonicities") {
  std::mt19937_64 eng(21);
  std::uniform_real_distribution<double> u(0.1, 4.0);
  for (int rep = 0; rep < 200; ++rep) {
    double ll = u(eng), le = u(eng), d = 0.1 + 0.2 * u(eng);
    CHECK(square_q(ll + 1.0, le, d, 12) <= square_q(ll, le, d, 12));
    CHECK(square_q(ll, le + 1.0, d, 12) >= square_q(ll, le, d, 12));
    CHECK(square_q(ll, le, d, 20) >= square_q(ll, le, d, 12));
  }
}

TEST_CASE("circuit bound: closed form equals the series") {
  CHECK(peierls_circuit_bound(0.0, 1) == 0.0);

  // x = q^(1/n_e) = 0.1: 0.4 / (3 * 0.49).
  double bound = peierls_circuit_bound(0.1, 1);
  CHECK(bound == doctest::Approx(0.4 / 1.47).epsilon(1e-14));

  for (double x : {0.1, 0.05, 0.3, 0.32}) {
    for (std::int64_t n_e : {1, 2, 5}) {
      double q = std::pow(x, static_cast<double>(n_e));
      double closed = peierls_circuit_bound(q, n_e);
      double sum = 0.0;
      double term = 4.0 / 9.0 * 3.0 * x;  // n = 1
      double ratio = 3.0 * x;
      for (int n = 1; n <= 10000; ++n) {
        sum += term * n;
        term *= ratio;
      }
      CHECK(std::fabs(closed - sum) <= 1e-9 * std::max(1.0, closed));
    }
  }

  // x = q^(1/n_e) exactly 1/3 sits on the divergence boundary.
  CHECK_THROWS_AS(peierls_circuit_bound(1.0 / 3.0, 1), std::domain_error);
  CHECK_THROWS_AS(peierls_circuit_bound(0.04, 3), std::domain_error);
  CHECK_THROWS_AS(peierls_circuit_bound(0.5, 1), std::domain_error);
}

TEST_CASE("peierls threshold: exact constant and defining property") {
  double x = peierls_threshold(1);
  CHECK(x == doctest::Approx((11.0 - 2.0 * std::sqrt(10.0)) / 27.0)
                 .epsilon(1e-15));
  CHECK(x == doctest::Approx(0.17316461776530523).epsilon(1e-12));
  // The threshold is exactly where the circuit bound reaches one.
  CHECK(peierls_circuit_bound(x, 1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(peierls_threshold(2) == doctest::Approx(x * x).epsilon(1e-14));
}

TEST_CASE("circuit bound stays below one whenever the condition holds") {
  std::mt19937_64 eng(55);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int rep = 0; rep < 500; ++rep) {
    std::int64_t n_e = 1 + static_cast<std::int64_t>(u(eng) * 6.0);
    double q = u(eng) * peierls_threshold(n_e);
    if (q == 0.0) continue;
    CHECK(peierls_circuit_bound(q, n_e) < 1.0);
  }
}

TEST_CASE("square supercritical check: reports and errors") {
  ChannelParams p0{10.0, 0.0};
  GainModel pl4 = GainModel::power_law(4.0);

  auto report = square_supercritical_check(400.0, 0.25, p0, pl4, 0.1, 1);
  CHECK(report.r_free == doctest::Approx(std::sqrt(5.0) * 0.1));
  CHECK(report.margin == 3);
  CHECK(report.n_s == 56);
  CHECK(report.n_e == 1);
  CHECK(report.condition_met);
  CHECK(report.circuit_bound < 1.0);
  CHECK(report.q ==
        doctest::Approx(square_q(400.0, 0.25, 0.1, 56)).epsilon(1e-15));

  auto conservative = square_supercritical_check(400.0, 0.25, p0, pl4, 0.1);
  CHECK(conservative.n_e == default_dependence_span(3));
  CHECK(conservative.n_e == 18);
  CHECK_FALSE(conservative.condition_met);  // threshold^18 is tiny

  // Sparse legitimate nodes: q near 1, certainly not certified.
  auto sparse = square_supercritical_check(0.5, 1.0, p0, pl4, 0.1, 1);
  CHECK_FALSE(sparse.condition_met);
  CHECK(sparse.circuit_bound == kInf);

  // Edge length above the footnote constraint must throw.
  ChannelParams p1{10.0, 2.0};
  GainModel b2 = GainModel::bounded_power_law(2.0);
  double dmax = valid_edge_length(p1, b2);
  CHECK_THROWS_AS(square_supercritical_check(1.0, 1.0, p1, b2, dmax * 1.1, 1),
                  std::domain_error);
  CHECK_NOTHROW(square_supercritical_check(1.0, 1.0, p1, b2, dmax * 0.5, 1));
}

TEST_CASE("certified supercritical point percolates in simulation") {
  // lambda_l = 160, lambda_e = 0.1, d = 0.15, n_e = 1 certifies the
  // strong graph; the Monte Carlo estimate at the same point must be
  // bounded away from zero.
  ChannelParams p0{10.0, 0.0};
  GainModel pl4 = GainModel::power_law(4.0);
  auto report = square_supercritical_check(160.0, 0.1, p0, pl4, 0.15, 1);
  REQUIRE(report.condition_met);

  TrialConfig tc;
  tc.lambda_l = 160.0;
  tc.lambda_e = 0.1;
  tc.half_width = 1.5;
  tc.reach_radius = 0.6;
  tc.trials = 20;
  tc.master_seed = 77;
  tc.mode = Mode::kStrong;
  auto est = estimate_p_inf(tc);
  CHECK(est.ci_low > 0.0);
}
