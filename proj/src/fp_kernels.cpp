#include "rescat/fp_kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace rescat::kernels {

#ifdef RESCAT_WITH_AVX2
const RowKernels& avx2_kernels_impl();
#endif

namespace {

void axpy_scalar(std::span<uint32_t> dst, std::span<const uint32_t> src, uint32_t c, uint32_t p) {
  if (c == 0) return;
  const std::size_t n = dst.size();
  for (std::size_t i = 0; i < n; ++i) {
    dst[i] = static_cast<uint32_t>((dst[i] + static_cast<uint64_t>(c) * src[i]) % p);
  }
}

void scale_scalar(std::span<uint32_t> row, uint32_t c, uint32_t p) {
  for (auto& v : row) v = static_cast<uint32_t>((static_cast<uint64_t>(c) * v) % p);
}

std::size_t first_nonzero_scalar(std::span<const uint32_t> row, std::size_t from) {
  for (std::size_t i = from; i < row.size(); ++i)
    if (row[i] != 0) return i;
  return row.size();
}

constexpr RowKernels kScalar{"scalar", axpy_scalar, scale_scalar, first_nonzero_scalar};

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const RowKernels* initial_choice() {
  const char* env = std::getenv("RESCAT_KERNELS");
  std::string want = env ? env : "auto";
  if (want == "scalar") return &kScalar;
  if (const RowKernels* k = avx2_kernels()) return k;
  return &kScalar;
}

std::atomic<const RowKernels*>& slot() {
  static std::atomic<const RowKernels*> chosen{initial_choice()};
  return chosen;
}

}  // namespace

const RowKernels& scalar_kernels() { return kScalar; }

const RowKernels* avx2_kernels() {
#ifdef RESCAT_WITH_AVX2
  if (cpu_has_avx2()) return &avx2_kernels_impl();
#endif
  return nullptr;
}

const RowKernels& active_kernels() { return *slot().load(std::memory_order_acquire); }

bool select_kernels(std::string_view name) {
  const RowKernels* k = nullptr;
  if (name == "scalar") {
    k = &kScalar;
  } else if (name == "avx2") {
    k = avx2_kernels();
  } else if (name == "auto") {
    k = avx2_kernels() ? avx2_kernels() : &kScalar;
  }
  if (!k) return false;
  slot().store(k, std::memory_order_release);
  return true;
}

}  // namespace rescat::kernels
