#include <limits>
#include <random>
#include <vector>

#include "doctest.h"
#include "secgraph/kernels.hpp"

using namespace secgraph;

namespace {

struct Batch {
  std::vector<double> xs, ys;
};

Batch random_batch(std::mt19937_64& eng, int n) {
  std::uniform_real_distribution<double> u(-50.0, 50.0);
  Batch b;
  for (int i = 0; i < n; ++i) {
    b.xs.push_back(u(eng));
    b.ys.push_back(u(eng));
  }
  return b;
}

void check_lane_equivalence(const kernels::Ops& lane) {
  std::mt19937_64 eng(42);
  std::uniform_real_distribution<double> u(-50.0, 50.0);
  const auto& ref = kernels::scalar();
  for (int n : {0, 1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 31, 100, 257}) {
    for (int rep = 0; rep < 20; ++rep) {
      Batch b = random_batch(eng, n);
      double qx = u(eng), qy = u(eng);

      double m_ref = ref.min_dist2(qx, qy, b.xs.data(), b.ys.data(), n);
      double m_lane = lane.min_dist2(qx, qy, b.xs.data(), b.ys.data(), n);
      if (n == 0) {
        CHECK(m_ref == std::numeric_limits<double>::infinity());
        CHECK(m_lane == std::numeric_limits<double>::infinity());
      } else {
        // Bit-exact agreement, not approximate.
        CHECK(m_ref == m_lane);
      }

      // Radius chosen so a nontrivial subset matches.
      double r2 = m_ref * (1.0 + rep * 0.35) + 1.0;
      std::vector<std::int32_t> hit_ref(n), hit_lane(n);
      int c_ref = ref.collect_within(qx, qy, r2, b.xs.data(), b.ys.data(), n,
                                     hit_ref.data());
      int c_lane = lane.collect_within(qx, qy, r2, b.xs.data(), b.ys.data(), n,
                                       hit_lane.data());
      REQUIRE(c_ref == c_lane);
      for (int k = 0; k < c_ref; ++k) CHECK(hit_ref[k] == hit_lane[k]);
    }
  }
}

}  // namespace

TEST_CASE("scalar kernels agree with plain loops") {
  std::mt19937_64 eng(7);
  Batch b = random_batch(eng, 33);
  double qx = 1.25, qy = -3.5;
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 33; ++i) {
    double dx = b.xs[i] - qx, dy = b.ys[i] - qy;
    best = std::min(best, dx * dx + dy * dy);
  }
  CHECK(kernels::scalar().min_dist2(qx, qy, b.xs.data(), b.ys.data(), 33) ==
        best);
}

TEST_CASE("active lane is bit-exact with the scalar reference") {
  check_lane_equivalence(kernels::active());
}

#if defined(SECGRAPH_HAVE_AVX2)
TEST_CASE("avx2 lane is bit-exact with the scalar reference") {
  if (!kernels::avx2_supported()) return;
  check_lane_equivalence(kernels::avx2());
}
#endif

#if defined(SECGRAPH_HAVE_NEON)
TEST_CASE("neon lane is bit-exact with the scalar reference") {
  check_lane_equivalence(kernels::neon());
}
#endif
