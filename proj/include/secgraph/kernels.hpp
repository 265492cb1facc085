#pragma once

#include <cstdint>

// Batched point-distance kernels, the arithmetic inner loop of every
// spatial query. A scalar reference implementation always exists; AVX2
// (x86-64) and NEON (aarch64) variants are selected at runtime. All
// variants are bit-exact equivalents of the scalar kernel: squared
// distances are evaluated as (x-qx)*(x-qx) + (y-qy)*(y-qy) with each
// operation correctly rounded and never contracted into an FMA, so the
// choice of lane never changes a result.
namespace secgraph::kernels {

struct Ops {
  // Minimum squared distance from (qx,qy) to the n points (xs[i],ys[i]).
  // Returns +infinity for n == 0.
  double (*min_dist2)(double qx, double qy, const double* xs, const double* ys,
                      int n);

  // Writes the ascending local indices i with dist2(q, p_i) < r2 into out
  // (caller provides room for n entries) and returns how many were written.
  // The comparison is strict.
  int (*collect_within)(double qx, double qy, double r2, const double* xs,
                        const double* ys, int n, std::int32_t* out);

  const char* name;
};

const Ops& scalar();

#if defined(SECGRAPH_HAVE_AVX2)
const Ops& avx2();
bool avx2_supported();
#endif
#if defined(SECGRAPH_HAVE_NEON)
const Ops& neon();
#endif

// Best lane for this CPU, resolved once. The SECGRAPH_KERNELS environment
// variable ("scalar", "avx2", "neon") overrides the choice when the named
// lane exists.
const Ops& active();

}  // namespace secgraph::kernels
