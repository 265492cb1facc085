#include "secgraph/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <limits>

namespace secgraph::kernels {

namespace {

double scalar_min_dist2(double qx, double qy, const double* xs,
                        const double* ys, int n) {
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    double dx = xs[i] - qx;
    double dy = ys[i] - qy;
    double d2 = dx * dx + dy * dy;
    if (d2 < best) best = d2;
  }
  return best;
}

int scalar_collect_within(double qx, double qy, double r2, const double* xs,
                          const double* ys, int n, std::int32_t* out) {
  int count = 0;
  for (int i = 0; i < n; ++i) {
    double dx = xs[i] - qx;
    double dy = ys[i] - qy;
    double d2 = dx * dx + dy * dy;
    if (d2 < r2) out[count++] = i;
  }
  return count;
}

const Ops kScalarOps = {scalar_min_dist2, scalar_collect_within, "scalar"};

const Ops& resolve() {
  const char* forced = std::getenv("SECGRAPH_KERNELS");
#if defined(SECGRAPH_HAVE_AVX2)
  if (forced != nullptr) {
    if (std::strcmp(forced, "avx2") == 0 && avx2_supported()) return avx2();
    if (std::strcmp(forced, "scalar") == 0) return scalar();
  }
  if (avx2_supported()) return avx2();
#elif defined(SECGRAPH_HAVE_NEON)
  if (forced != nullptr && std::strcmp(forced, "scalar") == 0) return scalar();
  return neon();
#else
  (void)forced;
#endif
  return scalar();
}

}  // namespace

const Ops& scalar() { return kScalarOps; }

const Ops& active() {
  static const Ops& ops = resolve();
  return ops;
}

}  // namespace secgraph::kernels
