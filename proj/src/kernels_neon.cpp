// NEON (AArch64) lane of the distance kernels. Uses separate multiply and
// add so results stay bit-identical to the scalar lane.

#include <arm_neon.h>

#include <limits>

#include "secgraph/kernels.hpp"

namespace secgraph::kernels {

namespace {

double neon_min_dist2(double qx, double qy, const double* xs, const double* ys,
                      int n) {
  float64x2_t vqx = vdupq_n_f64(qx);
  float64x2_t vqy = vdupq_n_f64(qy);
  float64x2_t vbest = vdupq_n_f64(std::numeric_limits<double>::infinity());
  int i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t dx = vsubq_f64(vld1q_f64(xs + i), vqx);
    float64x2_t dy = vsubq_f64(vld1q_f64(ys + i), vqy);
    float64x2_t d2 = vaddq_f64(vmulq_f64(dx, dx), vmulq_f64(dy, dy));
    vbest = vminq_f64(vbest, d2);
  }
  double best = vminvq_f64(vbest);
  for (; i < n; ++i) {
    double dx = xs[i] - qx;
    double dy = ys[i] - qy;
    double d2 = dx * dx + dy * dy;
    if (d2 < best) best = d2;
  }
  return best;
}

int neon_collect_within(double qx, double qy, double r2, const double* xs,
                        const double* ys, int n, std::int32_t* out) {
  float64x2_t vqx = vdupq_n_f64(qx);
  float64x2_t vqy = vdupq_n_f64(qy);
  float64x2_t vr2 = vdupq_n_f64(r2);
  int count = 0;
  int i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t dx = vsubq_f64(vld1q_f64(xs + i), vqx);
    float64x2_t dy = vsubq_f64(vld1q_f64(ys + i), vqy);
    float64x2_t d2 = vaddq_f64(vmulq_f64(dx, dx), vmulq_f64(dy, dy));
    uint64x2_t lt = vcltq_f64(d2, vr2);
    if (vgetq_lane_u64(lt, 0) != 0) out[count++] = i;
    if (vgetq_lane_u64(lt, 1) != 0) out[count++] = i + 1;
  }
  for (; i < n; ++i) {
    double dx = xs[i] - qx;
    double dy = ys[i] - qy;
    double d2 = dx * dx + dy * dy;
    if (d2 < r2) out[count++] = i;
  }
  return count;
}

const Ops kNeonOps = {neon_min_dist2, neon_collect_within, "neon"};

}  // namespace

const Ops& neon() { return kNeonOps; }

}  // namespace secgraph::kernels
