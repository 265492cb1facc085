// AVX2 lane of the distance kernels. Squared distances use vsubpd/vmulpd/
// vaddpd (no FMA), so every element matches the scalar lane bit for bit.

#include <immintrin.h>

#include <limits>

#include "secgraph/kernels.hpp"

namespace secgraph::kernels {

namespace {

double avx2_min_dist2(double qx, double qy, const double* xs, const double* ys,
                      int n) {
  __m256d vqx = _mm256_set1_pd(qx);
  __m256d vqy = _mm256_set1_pd(qy);
  __m256d vbest = _mm256_set1_pd(std::numeric_limits<double>::infinity());
  int i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(xs + i), vqx);
    __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(ys + i), vqy);
    __m256d d2 = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
    vbest = _mm256_min_pd(vbest, d2);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, vbest);
  double best = lanes[0];
  for (int k = 1; k < 4; ++k)
    if (lanes[k] < best) best = lanes[k];
  for (; i < n; ++i) {
    double dx = xs[i] - qx;
    double dy = ys[i] - qy;
    double d2 = dx * dx + dy * dy;
    if (d2 < best) best = d2;
  }
  return best;
}

int avx2_collect_within(double qx, double qy, double r2, const double* xs,
                        const double* ys, int n, std::int32_t* out) {
  __m256d vqx = _mm256_set1_pd(qx);
  __m256d vqy = _mm256_set1_pd(qy);
  __m256d vr2 = _mm256_set1_pd(r2);
  int count = 0;
  int i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(xs + i), vqx);
    __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(ys + i), vqy);
    __m256d d2 = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
    int mask = _mm256_movemask_pd(_mm256_cmp_pd(d2, vr2, _CMP_LT_OQ));
    while (mask != 0) {
      int lane = __builtin_ctz(mask);
      out[count++] = i + lane;
      mask &= mask - 1;
    }
  }
  for (; i < n; ++i) {
    double dx = xs[i] - qx;
    double dy = ys[i] - qy;
    double d2 = dx * dx + dy * dy;
    if (d2 < r2) out[count++] = i;
  }
  return count;
}

const Ops kAvx2Ops = {avx2_min_dist2, avx2_collect_within, "avx2"};

}  // namespace

const Ops& avx2() { return kAvx2Ops; }

bool avx2_supported() { return __builtin_cpu_supports("avx2") != 0; }

}  // namespace secgraph::kernels
