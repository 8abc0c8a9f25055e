#pragma once

// Graded free modules over R and homogeneous maps between them.
//
// Degree convention: a free module lists the degrees of its basis
// elements, and entry (i, j) of a map F -> G is homogeneous of degree
// deg F_j - deg G_i. Duals negate all degrees.

#include <string>
#include <vector>

#include "rescat/poly.hpp"
#include "rescat/ring.hpp"

namespace rescat {

struct FreeModule {
  std::vector<int> deg;

  std::size_t rank() const { return deg.size(); }
  FreeModule dual() const;
  bool operator==(const FreeModule& o) const = default;
};

FreeModule direct_sum(const FreeModule& a, const FreeModule& b);
FreeModule tensor(const FreeModule& a, const FreeModule& b);  // index (i, j) -> i*|b| + j

class Matrix {
 public:
  Matrix() = default;
  Matrix(FreeModule tgt, FreeModule src);

  const FreeModule& tgt() const { return tgt_; }
  const FreeModule& src() const { return src_; }
  std::size_t rows() const { return tgt_.rank(); }
  std::size_t cols() const { return src_.rank(); }

  Poly& at(std::size_t i, std::size_t j) { return a_[i * cols() + j]; }
  const Poly& at(std::size_t i, std::size_t j) const { return a_[i * cols() + j]; }

  // Column j as an element of P^rows (terms sorted by `ord`).
  Vec column(std::size_t j, const TermOrder& ord) const;
  std::vector<Vec> columns(const TermOrder& ord) const;
  static Matrix from_columns(const FreeModule& tgt, const FreeModule& src,
                             const std::vector<Vec>& cols, const PolyRing& R);

  bool is_zero() const;
  // True when every nonzero entry is a non-constant (lies in m).
  bool is_minimal() const;
  // Checks entry degrees against the convention.
  bool is_homogeneous() const;

  Matrix dual() const;
  Matrix select_columns(const std::vector<std::size_t>& idx) const;
  Matrix select_rows(const std::vector<std::size_t>& idx) const;

 private:
  FreeModule tgt_, src_;
  std::vector<Poly> a_;
};

Matrix identity(const FreeModule& F);
Matrix zero_map(const FreeModule& tgt, const FreeModule& src);
// a * b, entries reduced modulo the ring's ideal.
Matrix compose(const Matrix& a, const Matrix& b, const GradedRing& R);
Matrix reduce_entries(const Matrix& a, const GradedRing& R);
// [a | b] with a common target.
Matrix concat_columns(const Matrix& a, const Matrix& b);
// block diagonal a ⊕ b
Matrix block_sum(const Matrix& a, const Matrix& b);
// a ⊗ I_G and I_F ⊗ b in the (i, j) -> i*|second| + j indexing.
Matrix kron_left(const Matrix& a, const FreeModule& G);
Matrix kron_right(const FreeModule& F, const Matrix& b);
bool equal(const Matrix& a, const Matrix& b);

std::string format_matrix(const Matrix& m, const PolyRing& R);

}  // namespace rescat
