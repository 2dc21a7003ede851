#include "mcst/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cstdint>

namespace mcst::kernels {

namespace {

void relax_row_avx2(const double* w_row, const double* d_right, double add, int src,
                    double* dist, int* pred, int n) {
  const __m256d vadd = _mm256_set1_pd(add);
  const __m128i vsrc = _mm_set1_epi32(src);
  // Compresses the four 64-bit compare lanes into the low four 32-bit lanes.
  const __m256i compress = _mm256_setr_epi32(0, 2, 4, 6, 0, 0, 0, 0);
  int j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d nd = _mm256_sub_pd(_mm256_add_pd(vadd, _mm256_loadu_pd(d_right + j)),
                                     _mm256_loadu_pd(w_row + j));
    const __m256d cur = _mm256_loadu_pd(dist + j);
    const __m256d lt = _mm256_cmp_pd(nd, cur, _CMP_LT_OQ);
    if (_mm256_movemask_pd(lt) == 0) continue;
    _mm256_storeu_pd(dist + j, _mm256_blendv_pd(cur, nd, lt));
    const __m128i m32 = _mm256_castsi256_si128(
        _mm256_permutevar8x32_epi32(_mm256_castpd_si256(lt), compress));
    const __m128i curp = _mm_loadu_si128(reinterpret_cast<const __m128i*>(pred + j));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(pred + j), _mm_blendv_epi8(curp, vsrc, m32));
  }
  for (; j < n; ++j) {
    const double nd = add + d_right[j] - w_row[j];
    if (nd < dist[j]) {
      dist[j] = nd;
      pred[j] = src;
    }
  }
}

int argmin_masked_avx2(const double* dist, const unsigned char* dead, int n) {
  constexpr int64_t kNone = INT64_MAX;
  const __m256d vinf = _mm256_set1_pd(__builtin_inf());
  const __m256i vnone = _mm256_set1_epi64x(kNone);
  __m256d best_v = vinf;
  __m256i best_i = vnone;
  __m256i cur = _mm256_setr_epi64x(0, 1, 2, 3);
  const __m256i step = _mm256_set1_epi64x(4);
  int j = 0;
  for (; j + 4 <= n; j += 4, cur = _mm256_add_epi64(cur, step)) {
    int dead4;
    __builtin_memcpy(&dead4, dead + j, 4);
    const __m256i dead64 = _mm256_cvtepi8_epi64(_mm_cvtsi32_si128(dead4));
    const __m256i alive = _mm256_cmpeq_epi64(dead64, _mm256_setzero_si256());
    const __m256d v =
        _mm256_blendv_pd(vinf, _mm256_loadu_pd(dist + j), _mm256_castsi256_pd(alive));
    const __m256i idx = _mm256_blendv_epi8(vnone, cur, alive);
    // Update where (v < best) or (v == best and idx < best_idx): keeps the
    // lowest index on ties, matching the scalar reference.
    const __m256d lt = _mm256_cmp_pd(v, best_v, _CMP_LT_OQ);
    const __m256d eq = _mm256_cmp_pd(v, best_v, _CMP_EQ_OQ);
    const __m256i idx_lt = _mm256_cmpgt_epi64(best_i, idx);
    const __m256d take =
        _mm256_or_pd(lt, _mm256_and_pd(eq, _mm256_castsi256_pd(idx_lt)));
    best_v = _mm256_blendv_pd(best_v, v, take);
    best_i = _mm256_castpd_si256(
        _mm256_blendv_pd(_mm256_castsi256_pd(best_i), _mm256_castsi256_pd(cur), take));
  }
  alignas(32) double vals[4];
  alignas(32) int64_t idxs[4];
  _mm256_store_pd(vals, best_v);
  _mm256_store_si256(reinterpret_cast<__m256i*>(idxs), best_i);
  double bv = vals[0];
  int64_t bi = idxs[0];
  for (int lane = 1; lane < 4; ++lane) {
    if (vals[lane] < bv || (vals[lane] == bv && idxs[lane] < bi)) {
      bv = vals[lane];
      bi = idxs[lane];
    }
  }
  for (; j < n; ++j) {
    if (dead[j]) continue;
    if (bi == kNone || dist[j] < bv) {
      bv = dist[j];
      bi = j;
    }
  }
  return bi == kNone ? -1 : static_cast<int>(bi);
}

void gather_add_avx2(const double* a_base, const int* a_idx, const double* b_base,
                     const int* b_idx, double* out, int n) {
  int j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m128i ia = _mm_loadu_si128(reinterpret_cast<const __m128i*>(a_idx + j));
    const __m128i ib = _mm_loadu_si128(reinterpret_cast<const __m128i*>(b_idx + j));
    const __m256d a = _mm256_i32gather_pd(a_base, ia, 8);
    const __m256d b = _mm256_i32gather_pd(b_base, ib, 8);
    _mm256_storeu_pd(out + j, _mm256_add_pd(a, b));
  }
  for (; j < n; ++j) out[j] = a_base[a_idx[j]] + b_base[b_idx[j]];
}

}  // namespace

const Ops* avx2_ops_if_supported() {
  if (!__builtin_cpu_supports("avx2")) return nullptr;
  static const Ops ops{"avx2", relax_row_avx2, argmin_masked_avx2, gather_add_avx2};
  return &ops;
}

}  // namespace mcst::kernels

#endif  // x86_64
