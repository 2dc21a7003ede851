#include "mcst/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

#include <cstdint>

namespace mcst::kernels {

namespace {

void relax_row_neon(const double* w_row, const double* d_right, double add, int src,
                    double* dist, int* pred, int n) {
  const float64x2_t vadd = vdupq_n_f64(add);
  int j = 0;
  for (; j + 2 <= n; j += 2) {
    const float64x2_t nd = vsubq_f64(vaddq_f64(vadd, vld1q_f64(d_right + j)), vld1q_f64(w_row + j));
    const float64x2_t cur = vld1q_f64(dist + j);
    const uint64x2_t lt = vcltq_f64(nd, cur);
    if (vgetq_lane_u64(lt, 0) == 0 && vgetq_lane_u64(lt, 1) == 0) continue;
    vst1q_f64(dist + j, vbslq_f64(lt, nd, cur));
    if (vgetq_lane_u64(lt, 0)) pred[j] = src;
    if (vgetq_lane_u64(lt, 1)) pred[j + 1] = src;
  }
  for (; j < n; ++j) {
    const double nd = add + d_right[j] - w_row[j];
    if (nd < dist[j]) {
      dist[j] = nd;
      pred[j] = src;
    }
  }
}

int argmin_masked_neon(const double* dist, const unsigned char* dead, int n) {
  int best = -1;
  for (int j = 0; j < n; ++j) {
    if (dead[j]) continue;
    if (best < 0 || dist[j] < dist[best]) best = j;
  }
  return best;
}

void gather_add_neon(const double* a_base, const int* a_idx, const double* b_base,
                     const int* b_idx, double* out, int n) {
  for (int j = 0; j < n; ++j) out[j] = a_base[a_idx[j]] + b_base[b_idx[j]];
}

}  // namespace

const Ops* neon_ops() {
  static const Ops ops{"neon", relax_row_neon, argmin_masked_neon, gather_add_neon};
  return &ops;
}

}  // namespace mcst::kernels

#endif  // aarch64
