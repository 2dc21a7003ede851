#include "mcst/kernels.hpp"

namespace mcst::kernels {

namespace {

void relax_row_scalar(const double* w_row, const double* d_right, double add, int src,
                      double* dist, int* pred, int n) {
  for (int j = 0; j < n; ++j) {
    // w_row[j] == -inf yields nd == +inf and never improves.
    const double nd = add + d_right[j] - w_row[j];
    if (nd < dist[j]) {
      dist[j] = nd;
      pred[j] = src;
    }
  }
}

int argmin_masked_scalar(const double* dist, const unsigned char* dead, int n) {
  int best = -1;
  for (int j = 0; j < n; ++j) {
    if (dead[j]) continue;
    if (best < 0 || dist[j] < dist[best]) best = j;
  }
  return best;
}

void gather_add_scalar(const double* a_base, const int* a_idx, const double* b_base,
                       const int* b_idx, double* out, int n) {
  for (int j = 0; j < n; ++j) out[j] = a_base[a_idx[j]] + b_base[b_idx[j]];
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops{"scalar", relax_row_scalar, argmin_masked_scalar, gather_add_scalar};
  return ops;
}

}  // namespace mcst::kernels
