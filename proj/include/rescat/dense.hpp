#pragma once

// Dense row echelon bookkeeping over Z/p on top of the row kernels.

#include <cstdint>
#include <vector>

namespace rescat {

class RowEchelon {
 public:
  RowEchelon(std::size_t ncols, uint32_t p);

  // Reduces `row` against the stored rows; if something survives it is
  // normalized, stored, and true is returned.
  bool insert(std::vector<uint32_t> row);
  // Reduces in place and reports whether the row lies in the span.
  bool in_span(std::vector<uint32_t>& row) const;
  std::size_t rank() const { return rows_.size(); }

 private:
  void reduce(std::vector<uint32_t>& row) const;

  std::size_t ncols_;
  uint32_t p_;
  std::vector<std::vector<uint32_t>> rows_;
  std::vector<std::size_t> pivots_;
};

// Indices of a maximal linearly independent subfamily, chosen greedily in order.
std::vector<std::size_t> select_independent(const std::vector<std::vector<uint32_t>>& rows,
                                            std::size_t ncols, uint32_t p);

uint32_t inverse_mod(uint32_t a, uint32_t p);

}  // namespace rescat
