#pragma once

// Submodules of graded free R-modules, computed over P with I*F added.
//
// Kernels and lifts use a tagged elimination: the generator columns a_j
// are extended to a_j + e'_j in F ⊕ F' with an order where every F term
// beats every F' term. Basis elements whose leading term lies in F' have
// no F part, and they generate the syzygies.

#include <memory>
#include <optional>
#include <vector>

#include "rescat/groebner.hpp"
#include "rescat/matrix.hpp"
#include "rescat/ring.hpp"

namespace rescat {

class SubmoduleGB {
 public:
  SubmoduleGB(const GradedRing& R, const Matrix& gens, bool tagged);

  // Vectors are given in ambient coordinates (component = row of `gens`).
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const;
  // c with gens * c = v modulo I, or nothing when v is not in the submodule.
  std::optional<Vec> lift(const Vec& v) const;
  // Generators (not minimal) of the kernel of gens: R^cols -> R^rows.
  std::vector<Vec> syzygies() const;

  // Order used for ambient vectors (twists = target degrees).
  const TermOrder& ambient_order() const { return amb_ord_; }
  // Order used for coefficient vectors (twists = source degrees).
  const TermOrder& source_order() const { return src_ord_; }

 private:
  const GradedRing& R_;
  std::size_t nrows_, ncols_;
  bool tagged_;
  TermOrder ord_, amb_ord_, src_ord_;
  std::unique_ptr<GroebnerEngine> eng_;
};

TermOrder module_order(const PolyRing& P, const FreeModule& F);

// Ambient columns as Vecs sorted by module_order(P, F).
std::vector<Vec> columns_of(const Matrix& m, const PolyRing& P);

// Indices of a minimal generating subset of `elems` (homogeneous, in F),
// considered modulo I*F. Zero elements are never selected.
std::vector<std::size_t> minimal_generators(const GradedRing& R, const FreeModule& F,
                                            const std::vector<Vec>& elems);

// Degrees of homogeneous nonzero vectors; zero vectors get `fallback`.
int vec_degree(const Vec& v, const FreeModule& F, int fallback = 0);

// Minimal generators of ker(A) as columns of a map K -> src(A).
Matrix kernel(const Matrix& A, const GradedRing& R);
// Minimal generating subset of the columns of A (modulo I).
Matrix minimize_columns(const Matrix& A, const GradedRing& R);
// Is every column of B in the column space of A (modulo I)?
bool columns_contained(const Matrix& B, const Matrix& A, const GradedRing& R);
bool same_image(const Matrix& A, const Matrix& B, const GradedRing& R);
// X with A*X = B modulo I; throws InvariantError when impossible.
Matrix lift_matrix(const Matrix& A, const Matrix& B, const GradedRing& R);
// Entries reduced modulo I, column by column.
Vec reduce_mod_ideal(const Vec& v, const GradedRing& R, const TermOrder& ord);

}  // namespace rescat
