#include "rescat/dense.hpp"

#include <span>

#include "rescat/fp_kernels.hpp"

namespace rescat {

uint32_t inverse_mod(uint32_t a, uint32_t p) {
  int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    int64_t q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (t < 0) t += p;
  return static_cast<uint32_t>(t);
}

RowEchelon::RowEchelon(std::size_t ncols, uint32_t p) : ncols_(ncols), p_(p) {}

void RowEchelon::reduce(std::vector<uint32_t>& row) const {
  const auto& k = kernels::active_kernels();
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    uint32_t c = row[pivots_[r]];
    if (c == 0) continue;
    k.axpy(std::span<uint32_t>(row), std::span<const uint32_t>(rows_[r]), p_ - c, p_);
  }
}

bool RowEchelon::in_span(std::vector<uint32_t>& row) const {
  reduce(row);
  return kernels::active_kernels().first_nonzero(row, 0) == ncols_;
}

bool RowEchelon::insert(std::vector<uint32_t> row) {
  const auto& k = kernels::active_kernels();
  reduce(row);
  std::size_t piv = k.first_nonzero(row, 0);
  if (piv == ncols_) return false;
  k.scale(std::span<uint32_t>(row), inverse_mod(row[piv], p_), p_);
  // keep stored rows fully reduced so that reduce() can run in any order
  for (auto& other : rows_) {
    uint32_t c = other[piv];
    if (c) k.axpy(std::span<uint32_t>(other), std::span<const uint32_t>(row), p_ - c, p_);
  }
  rows_.push_back(std::move(row));
  pivots_.push_back(piv);
  return true;
}

std::vector<std::size_t> select_independent(const std::vector<std::vector<uint32_t>>& rows,
                                            std::size_t ncols, uint32_t p) {
  RowEchelon ech(ncols, p);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (ech.insert(rows[i])) out.push_back(i);
  return out;
}

}  // namespace rescat
