#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace mcst::kernels {

// Dense inner loops of the matching engine. Every backend must be bit-exact
// against the scalar reference, including tie handling: relax_row updates on
// strictly-smaller only, argmin returns the lowest index attaining the
// minimum. Weights may be -inf (dropped edges); the arithmetic never produces
// NaN because +inf never appears as an input.
struct Ops {
  const char* name;

  // For j in [0,n): nd = add + d_right[j] - w_row[j];
  // if nd < dist[j] then dist[j] = nd, pred[j] = src.
  void (*relax_row)(const double* w_row, const double* d_right, double add, int src,
                    double* dist, int* pred, int n);

  // Lowest index minimizing dist[j] over j with dead[j] == 0; -1 if all dead.
  int (*argmin_masked)(const double* dist, const unsigned char* dead, int n);

  // out[j] = a_base[a_idx[j]] + b_base[b_idx[j]].
  void (*gather_add)(const double* a_base, const int* a_idx, const double* b_base,
                     const int* b_idx, double* out, int n);
};

const Ops& scalar_ops();

// Active backend: picked once from CPU features, overridable with the
// MCST_KERNEL environment variable ("scalar", "avx2", "neon", "auto").
const Ops& ops();

// Force a backend by name; throws on unknown or unavailable names. Returns the
// previously active backend name. Intended for tests and the CLI.
std::string force_backend(const std::string& name);

// Backends compiled in and usable on this CPU (always includes "scalar").
std::vector<std::string> available_backends();

#if defined(__x86_64__) || defined(_M_X64)
const Ops* avx2_ops_if_supported();
#endif
#if defined(__aarch64__)
const Ops* neon_ops();
#endif

}  // namespace mcst::kernels
