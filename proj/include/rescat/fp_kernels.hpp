#pragma once

// Dense row primitives over Z/p for p < 2^16.
//
// Every degree-wise linear-algebra step (minimal generator selection, rank
// checks of graded components) funnels through these three routines, so
// they come in a scalar reference form and an AVX2 form chosen at runtime.
// Both variants produce bit-identical rows; tests/test_kernels.cpp checks
// that on random data.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace rescat::kernels {

struct RowKernels {
  std::string_view name;
  // dst[i] = (dst[i] + c * src[i]) mod p, entries in [0, p), c in [0, p).
  void (*axpy)(std::span<uint32_t> dst, std::span<const uint32_t> src, uint32_t c, uint32_t p);
  // row[i] = c * row[i] mod p.
  void (*scale)(std::span<uint32_t> row, uint32_t c, uint32_t p);
  // index of the first nonzero entry at or after `from`, or row.size().
  std::size_t (*first_nonzero)(std::span<const uint32_t> row, std::size_t from);
};

const RowKernels& scalar_kernels();

// nullptr when the build has no AVX2 variant or the CPU lacks AVX2.
const RowKernels* avx2_kernels();

// Selected once: RESCAT_KERNELS=scalar|avx2 overrides CPU detection.
const RowKernels& active_kernels();

// Test hook. Accepts "scalar", "avx2" or "auto"; returns false if the
// requested variant is unavailable (selection is then unchanged).
bool select_kernels(std::string_view name);

}  // namespace rescat::kernels
