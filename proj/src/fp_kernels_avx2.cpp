// AVX2 variants of the dense mod-p row kernels. Compiled with -mavx2 and
// only reached after a runtime CPU check.

#include <immintrin.h>

#include "rescat/fp_kernels.hpp"

namespace rescat::kernels {

namespace {

// Shoup multiplication: with cp = floor(c * 2^32 / p) and x < 2^32,
// q = hi32(x * cp) satisfies x*c - q*p in [0, 2p).
inline __m256i mulmod_shoup(__m256i x, __m256i cv, __m256i cpv, __m256i pv) {
  __m256i even = _mm256_mul_epu32(x, cpv);
  __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(x, 32), cpv);
  __m256i q = _mm256_blend_epi32(_mm256_srli_epi64(even, 32), odd, 0xAA);
  __m256i r = _mm256_sub_epi32(_mm256_mullo_epi32(x, cv), _mm256_mullo_epi32(q, pv));
  return _mm256_min_epu32(r, _mm256_sub_epi32(r, pv));
}

void axpy_avx2(std::span<uint32_t> dst, std::span<const uint32_t> src, uint32_t c, uint32_t p) {
  if (c == 0) return;
  const uint32_t cp = static_cast<uint32_t>((static_cast<uint64_t>(c) << 32) / p);
  const __m256i cv = _mm256_set1_epi32(static_cast<int>(c));
  const __m256i cpv = _mm256_set1_epi32(static_cast<int>(cp));
  const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
  const std::size_t n = dst.size();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src.data() + i));
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst.data() + i));
    __m256i s = _mm256_add_epi32(d, mulmod_shoup(x, cv, cpv, pv));
    s = _mm256_min_epu32(s, _mm256_sub_epi32(s, pv));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst.data() + i), s);
  }
  for (; i < n; ++i) {
    dst[i] = static_cast<uint32_t>((dst[i] + static_cast<uint64_t>(c) * src[i]) % p);
  }
}

void scale_avx2(std::span<uint32_t> row, uint32_t c, uint32_t p) {
  const uint32_t cp = static_cast<uint32_t>((static_cast<uint64_t>(c) << 32) / p);
  const __m256i cv = _mm256_set1_epi32(static_cast<int>(c));
  const __m256i cpv = _mm256_set1_epi32(static_cast<int>(cp));
  const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
  const std::size_t n = row.size();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row.data() + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(row.data() + i), mulmod_shoup(x, cv, cpv, pv));
  }
  for (; i < n; ++i) row[i] = static_cast<uint32_t>((static_cast<uint64_t>(c) * row[i]) % p);
}

std::size_t first_nonzero_avx2(std::span<const uint32_t> row, std::size_t from) {
  const std::size_t n = row.size();
  std::size_t i = from;
  const __m256i zero = _mm256_setzero_si256();
  for (; i + 8 <= n; i += 8) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row.data() + i));
    unsigned mask = static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(x, zero))));
    if (mask != 0xFFu) return i + static_cast<std::size_t>(__builtin_ctz(~mask & 0xFFu));
  }
  for (; i < n; ++i)
    if (row[i] != 0) return i;
  return n;
}

constexpr RowKernels kAvx2{"avx2", axpy_avx2, scale_avx2, first_nonzero_avx2};

}  // namespace

const RowKernels& avx2_kernels_impl() { return kAvx2; }

}  // namespace rescat::kernels
