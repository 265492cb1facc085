#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "secgraph/channel.hpp"

using namespace secgraph;

namespace {
const GainModel kUnbounded4 = GainModel::power_law(4.0);
const GainModel kBounded4 = GainModel::bounded_power_law(4.0);
const GainModel kBounded2 = GainModel::bounded_power_law(2.0);
}  // namespace

TEST_CASE("gain: closed forms and endpoint behaviour") {
  CHECK(kUnbounded4.gain(2.0) == doctest::Approx(1.0 / 16.0).epsilon(1e-15));
  CHECK(kUnbounded4.gain(0.0) == kInf);
  CHECK(kBounded4.gain(0.0) == 1.0);
  CHECK(kBounded4.gain(1.0) == doctest::Approx(0.5));
  CHECK_THROWS_AS(kBounded4.gain(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(GainModel::power_law(0.0), std::invalid_argument);
}

TEST_CASE("gain is strictly decreasing") {
  std::mt19937_64 eng(5);
  std::uniform_real_distribution<double> u(1e-3, 50.0);
  for (int rep = 0; rep < 500; ++rep) {
    double r1 = u(eng), r2 = u(eng);
    if (r1 == r2) continue;
    if (r1 > r2) std::swap(r1, r2);
    for (const auto& m : {kUnbounded4, kBounded4, kBounded2})
      CHECK(m.gain(r1) > m.gain(r2));
  }
}

TEST_CASE("gain_inverse: examples and range clamping") {
  CHECK(kUnbounded4.gain_inverse(1.0 / 16.0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(kBounded2.gain_inverse(0.2) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(kUnbounded4.gain_inverse(0.0) == kInf);
  CHECK(kUnbounded4.gain_inverse(-3.0) == kInf);
  CHECK(kBounded4.gain_inverse(2.0) == 0.0);  // above g(0)
  CHECK(kBounded4.gain_inverse(1.0) == 0.0);
  CHECK(kUnbounded4.gain_inverse(kInf) == 0.0);
}

TEST_CASE("gain round trip over random radii") {
  std::mt19937_64 eng(11);
  std::uniform_real_distribution<double> ur(1e-3, 1e3);
  std::uniform_real_distribution<double> ug(0.5, 6.0);
  for (int rep = 0; rep < 1000; ++rep) {
    GainModel m = rep % 2 == 0 ? GainModel::power_law(ug(eng))
                               : GainModel::bounded_power_law(ug(eng));
    double r = ur(eng);
    double rt = m.gain_inverse(m.gain(r));
    CHECK(std::fabs(rt - r) <= 1e-9 * (1.0 + r));
    double y = m.gain(r);
    CHECK(std::fabs(m.gain(m.gain_inverse(y)) - y) <= 1e-12 * y);
  }
}

TEST_CASE("msr: clamping, no-eavesdropper limit, direct value") {
  ChannelParams p{10.0, 0.0};
  CHECK(msr(p, kUnbounded4, 1.5, 1.5) == 0.0);
  CHECK(msr(p, kUnbounded4, 2.0, kInf) ==
        doctest::Approx(std::log2(1.0 + 10.0 / 16.0)).epsilon(1e-15));
  // Independent evaluation of the rate difference.
  double expected = std::log2(11.0 / (1.0 + 10.0 / 16.0));
  CHECK(msr(p, kUnbounded4, 1.0, 2.0) ==
        doctest::Approx(expected).epsilon(1e-12));
  CHECK(msr(p, kUnbounded4, 5.0, 1.0) == 0.0);  // eavesdropper closer
}

TEST_CASE("rho_max: bounded value, unbounded infinity, small-snr limit") {
  CHECK(rho_max({10.0, 0.0}, kBounded4) ==
        doctest::Approx(std::log2(11.0)).epsilon(1e-15));
  CHECK(rho_max({10.0, 0.0}, kBounded4) == doctest::Approx(3.4594).epsilon(1e-4));
  CHECK(rho_max({10.0, 0.0}, kUnbounded4) == kInf);
  CHECK(rho_max({1e-12, 0.0}, kBounded4) ==
        doctest::Approx(0.0).epsilon(1e-10));
  CHECK(rho_max({1e-12, 0.0}, kBounded4) > 0.0);
}

TEST_CASE("out_radius: rho=0 identity is exact for every model") {
  std::mt19937_64 eng(17);
  std::uniform_real_distribution<double> ur(1e-3, 100.0);
  std::uniform_real_distribution<double> us(0.01, 1000.0);
  for (int rep = 0; rep < 500; ++rep) {
    double rho_e = ur(eng);
    ChannelParams p{us(eng), 0.0};
    CHECK(out_radius(p, kUnbounded4, rho_e) == rho_e);
    CHECK(out_radius(p, kBounded2, rho_e) == rho_e);
  }
  CHECK(out_radius({10.0, 0.0}, kBounded4, kInf) == kInf);
}

TEST_CASE("out_radius: direct value and rho_max cutoff") {
  ChannelParams p{10.0, 1.0};
  CHECK(out_radius(p, kUnbounded4, 1.0) ==
        doctest::Approx(std::pow(2.1, -0.25)).epsilon(1e-14));
  double rm = rho_max({10.0, 0.0}, kBounded4);
  CHECK(out_radius({10.0, rm}, kBounded4, 5.0) == 0.0);
  CHECK(out_radius({10.0, rm + 0.1}, kBounded4, 5.0) == 0.0);
  CHECK(out_radius({10.0, rm - 1e-6}, kBounded4, kInf) > 0.0);
}

TEST_CASE("out_radius monotone: non-increasing in rho, non-decreasing in rho_e") {
  std::mt19937_64 eng(23);
  std::uniform_real_distribution<double> u(0.05, 5.0);
  for (int rep = 0; rep < 300; ++rep) {
    double snr = 1.0 + 20.0 * u(eng);
    double rho1 = u(eng) * 0.4, rho2 = rho1 + u(eng) * 0.4;
    double re1 = u(eng), re2 = re1 + u(eng);
    for (const auto& m : {kUnbounded4, kBounded2}) {
      CHECK(out_radius({snr, rho1}, m, re1) >= out_radius({snr, rho2}, m, re1));
      CHECK(out_radius({snr, rho1}, m, re1) <= out_radius({snr, rho1}, m, re2));
    }
  }
}

TEST_CASE("edge rule: msr threshold and out_radius are the same predicate") {
  std::mt19937_64 eng(31);
  std::uniform_real_distribution<double> ud(1e-2, 10.0);
  std::uniform_real_distribution<double> urho(0.0, 2.0);
  std::uniform_real_distribution<double> usnr(0.1, 100.0);
  int checked = 0;
  for (int rep = 0; rep < 100000; ++rep) {
    GainModel m = rep % 2 == 0 ? kUnbounded4 : kBounded2;
    ChannelParams p{usnr(eng), urho(eng)};
    double d_link = ud(eng), d_eve = ud(eng);
    bool via_rate = oracles::msr_edge(p, m, d_link, d_eve);
    bool via_radius = d_link < out_radius(p, m, d_eve);
    CHECK(via_rate == via_radius);
    ++checked;
  }
  CHECK(checked == 100000);
}

TEST_CASE("required_free_radius: rho=0 collapse and direct value") {
  ChannelParams p0{10.0, 0.0};
  CHECK(required_free_radius(p0, kUnbounded4, 1.0) == std::sqrt(5.0));
  CHECK(required_free_radius(p0, kBounded2, 2.0) == 2.0 * std::sqrt(5.0));

  ChannelParams p1{10.0, 1.0};
  double arg = 0.5 * std::pow(std::sqrt(5.0) * 0.1, -4.0) - 0.05;
  auto rf = required_free_radius(p1, kUnbounded4, 0.1);
  REQUIRE(rf.has_value());
  CHECK(*rf == doctest::Approx(std::pow(arg, -0.25)).epsilon(1e-13));
  // Round trip back through the gain.
  CHECK(kUnbounded4.gain(*rf) == doctest::Approx(arg).epsilon(1e-12));
}

TEST_CASE("required_free_radius: signals an over-long edge") {
  ChannelParams p{10.0, 2.0};
  double dmax = valid_edge_length(p, kBounded2);
  CHECK_FALSE(required_free_radius(p, kBounded2, dmax * 1.01).has_value());
  CHECK(required_free_radius(p, kBounded2, dmax * 0.5).has_value());
}

TEST_CASE("valid_edge_length: examples") {
  CHECK(valid_edge_length({10.0, 0.0}, kUnbounded4) == kInf);
  CHECK(valid_edge_length({10.0, 0.0}, kBounded2) == kInf);
  double rm = rho_max({10.0, 0.0}, kBounded4);
  CHECK(valid_edge_length({10.0, rm}, kBounded4) == 0.0);
  CHECK(valid_edge_length({10.0, 1.0}, kUnbounded4) ==
        doctest::Approx(std::pow(0.1, -0.25) / std::sqrt(5.0)).epsilon(1e-14));
}
