#include <gtest/gtest.h>

#include <random>

#include "rescat/dense.hpp"
#include "rescat/fp_kernels.hpp"
#include "rescat/homological.hpp"
#include "support.hpp"

using namespace rescat;
namespace k = rescat::kernels;

namespace {

const uint32_t kPrimes[] = {2, 3, 5, 101, 257, 32003, 65521};

std::vector<uint32_t> random_row(std::mt19937& rng, std::size_t n, uint32_t p, int zero_bias) {
  std::vector<uint32_t> r(n);
  for (uint32_t& x : r) x = static_cast<int>(rng() % 4) < zero_bias ? 0 : rng() % p;
  return r;
}

// Rank by plain Gaussian elimination with 64-bit arithmetic.
std::size_t naive_rank(std::vector<std::vector<uint32_t>> a, uint32_t p) {
  std::size_t rank = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    uint64_t inv = 1;
    for (uint64_t b = a[rank][c], e = p - 2; e; e >>= 1, b = b * b % p)
      if (e & 1) inv = inv * b % p;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      uint64_t f = a[r][c] * inv % p;
      for (std::size_t j = 0; j < cols; ++j) a[r][j] = static_cast<uint32_t>((a[r][j] + (p - f) * a[rank][j]) % p);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST(Kernels, ScalarMatchesAvx2OnRandomRows) {
  const k::RowKernels* v = k::avx2_kernels();
  if (!v) GTEST_SKIP() << "no AVX2 variant on this machine";
  const k::RowKernels& s = k::scalar_kernels();
  std::mt19937 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const uint32_t p = kPrimes[trial % 7];
    const std::size_t n = rng() % 70;
    std::vector<uint32_t> dst = random_row(rng, n, p, 1), src = random_row(rng, n, p, 1);
    const uint32_t c = rng() % p;

    std::vector<uint32_t> a = dst, b = dst;
    s.axpy(a, src, c, p);
    v->axpy(b, src, c, p);
    ASSERT_EQ(a, b) << "axpy p=" << p << " n=" << n;

    a = dst;
    b = dst;
    s.scale(a, c, p);
    v->scale(b, c, p);
    ASSERT_EQ(a, b) << "scale p=" << p << " n=" << n;

    std::vector<uint32_t> sparse = random_row(rng, n, p, 3);
    const std::size_t from = n ? rng() % (n + 1) : 0;
    ASSERT_EQ(s.first_nonzero(sparse, from), v->first_nonzero(sparse, from)) << "first_nonzero n=" << n;
  }
}

TEST(Kernels, ScalarAxpyMatchesDefinition) {
  const k::RowKernels& s = k::scalar_kernels();
  std::mt19937 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const uint32_t p = kPrimes[trial % 7];
    const std::size_t n = rng() % 40;
    std::vector<uint32_t> dst = random_row(rng, n, p, 1), src = random_row(rng, n, p, 1);
    const uint32_t c = rng() % p;
    std::vector<uint32_t> got = dst;
    s.axpy(got, src, c, p);
    for (std::size_t i = 0; i < n; ++i)
      ASSERT_EQ(got[i], (dst[i] + static_cast<uint64_t>(c) * src[i]) % p);
  }
}

TEST(Kernels, RowEchelonRankMatchesNaiveElimination) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const uint32_t p = kPrimes[trial % 7];
    const std::size_t rows = rng() % 9, cols = 1 + rng() % 12;
    std::vector<std::vector<uint32_t>> a;
    for (std::size_t r = 0; r < rows; ++r) a.push_back(random_row(rng, cols, p, 2));
    // Dependent rows on purpose.
    if (rows >= 2) {
      std::vector<uint32_t> sum(cols);
      for (std::size_t j = 0; j < cols; ++j) sum[j] = (a[0][j] + 2 * a[1][j]) % p;
      a.push_back(sum);
    }
    RowEchelon e(cols, p);
    for (const auto& r : a) e.insert(r);
    ASSERT_EQ(e.rank(), naive_rank(a, p));
    EXPECT_EQ(select_independent(a, cols, p).size(), e.rank());
  }
}

TEST(Kernels, EngineOutputIndependentOfVariant) {
  if (!k::avx2_kernels()) GTEST_SKIP() << "no AVX2 variant on this machine";
  auto run = [] {
    auto R = test::ring({"x", "y", "z"}, {"x*y - z^2"});
    Module M = test::cyc(R, {"x", "z"});
    std::string out = format_betti(M.resolution(4));
    out += format_module(hom(M, test::free_mod(R)).minimized());
    out += format_module(transpose(syzygy(residue_field(R), 1)).minimized());
    return out;
  };
  ASSERT_TRUE(k::select_kernels("scalar"));
  const std::string a = run();
  ASSERT_TRUE(k::select_kernels("avx2"));
  const std::string b = run();
  k::select_kernels("auto");
  EXPECT_EQ(a, b);
}
