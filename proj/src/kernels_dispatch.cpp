#include "mcst/kernels.hpp"

#include <cstdlib>

#include "mcst/errors.hpp"

namespace mcst::kernels {

namespace {

const Ops* lookup(const std::string& name) {
  if (name == "scalar") return &scalar_ops();
  if (name == "auto" || name.empty()) {
#if defined(__x86_64__) || defined(_M_X64)
    if (const Ops* a = avx2_ops_if_supported()) return a;
#endif
#if defined(__aarch64__)
    return neon_ops();
#endif
    return &scalar_ops();
  }
#if defined(__x86_64__) || defined(_M_X64)
  if (name == "avx2") return avx2_ops_if_supported();
#endif
#if defined(__aarch64__)
  if (name == "neon") return neon_ops();
#endif
  return nullptr;
}

const Ops*& active() {
  static const Ops* ops = [] {
    const char* env = std::getenv("MCST_KERNEL");
    const Ops* chosen = lookup(env ? env : "auto");
    // A bad environment value falls back to auto rather than failing startup.
    return chosen ? chosen : lookup("auto");
  }();
  return ops;
}

}  // namespace

const Ops& ops() { return *active(); }

std::string force_backend(const std::string& name) {
  const Ops* chosen = lookup(name);
  if (!chosen)
    fail(ErrorKind::UsageError, "kernel backend '" + name + "' is unknown or unsupported here");
  std::string previous = active()->name;
  active() = chosen;
  return previous;
}

std::vector<std::string> available_backends() {
  std::vector<std::string> names{"scalar"};
#if defined(__x86_64__) || defined(_M_X64)
  if (avx2_ops_if_supported()) names.emplace_back("avx2");
#endif
#if defined(__aarch64__)
  names.emplace_back("neon");
#endif
  return names;
}

}  // namespace mcst::kernels
